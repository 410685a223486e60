"""Shared fixtures and independent oracle helpers for the test suite."""

from __future__ import annotations

import itertools

from qpart.graphs import Graph


def complete_graph(n: int) -> Graph:
    return Graph(n, tuple((u, v) for u in range(n) for v in range(u + 1, n)))


def path_graph(n: int) -> Graph:
    return Graph(n, tuple((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    return Graph(n, tuple((i, (i + 1) % n) for i in range(n)))


def star_graph(n: int) -> Graph:
    return Graph(n, tuple((0, i) for i in range(1, n)))


def connected_graphs_up_to_iso(n: int) -> list[Graph]:
    """All isomorphism-distinct connected graphs on n vertices, by exhaustion.

    Canonicalizes each edge set as the lexicographic minimum over all
    vertex permutations; independent of any library so it doubles as an
    enumeration oracle. Practical for n <= 6.
    """
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    perms = list(itertools.permutations(range(n)))
    seen: set[tuple[tuple[int, int], ...]] = set()
    out: list[Graph] = []
    for bits in range(1 << len(pairs)):
        edges = tuple(p for i, p in enumerate(pairs) if bits >> i & 1)
        g = Graph(n, edges)
        if not g.is_connected():
            continue
        canon = min(
            tuple(sorted(tuple(sorted((perm[u], perm[v]))) for u, v in edges))
            for perm in perms
        )
        if canon in seen:
            continue
        seen.add(canon)
        out.append(g)
    return out


def brute_force_chromatic(g: Graph) -> int:
    """Minimum label count over all k^n assignments; independent of the backtracker."""
    if g.m == 0:
        return 1
    for k in range(2, g.n + 1):
        for labels in itertools.product(range(k), repeat=g.n):
            if all(labels[u] != labels[v] for u, v in g.edges):
                return k
    return g.n


def proper_label_assignments(g: Graph, num_labels: int):
    """All proper colorings with labels drawn from 0..num_labels-1."""
    for labels in itertools.product(range(num_labels), repeat=g.n):
        if all(labels[u] != labels[v] for u, v in g.edges):
            yield labels
