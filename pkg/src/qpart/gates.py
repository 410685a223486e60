"""CNOT-count estimation for one QAOA phase-separation layer.

Closed forms for both encodings are cross-checked by an oracle that
performs the Ising substitution x = (1 - Z)/2 exactly and prices each
surviving k-local Z product at 2(k-1) CNOTs. Coefficients are dyadic
rationals kept as (numerator, shift) pairs so cancellation is detected
exactly.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable

from .pbo import Bits, Polynomial

Dyadic = tuple[int, int]  # value = numerator / 2**shift, numerator odd unless zero


def _dyadic_normalize(num: int, shift: int) -> Dyadic:
    if num == 0:
        return (0, 0)
    while num % 2 == 0 and shift > 0:
        num //= 2
        shift -= 1
    return (num, shift)


def _dyadic_add(a: Dyadic, b: Dyadic) -> Dyadic:
    n1, s1 = a
    n2, s2 = b
    s = max(s1, s2)
    return _dyadic_normalize((n1 << (s - s1)) + (n2 << (s - s2)), s)


class SpinPolynomial:
    """Multilinear polynomial in spin (Z) variables with dyadic coefficients."""

    __slots__ = ("_terms",)

    def __init__(self, terms: dict[tuple[int, ...], Dyadic] | None = None):
        self._terms = {k: v for k, v in (terms or {}).items() if v[0] != 0}

    @property
    def terms(self) -> dict[tuple[int, ...], Dyadic]:
        return dict(self._terms)

    def coefficient(self, vars_: Iterable[int]) -> Fraction:
        num, shift = self._terms.get(tuple(sorted(set(vars_))), (0, 0))
        return Fraction(num, 1 << shift)

    def locality_histogram(self) -> dict[int, int]:
        """Counts of nonzero k-local terms for k >= 2 (constants and fields dropped)."""
        hist: dict[int, int] = {}
        for key in self._terms:
            k = len(key)
            if k >= 2:
                hist[k] = hist.get(k, 0) + 1
        return dict(sorted(hist.items()))

    def evaluate_bits(self, bits: Bits) -> Fraction:
        """Evaluate at Z_j = 1 - 2*x_j; must reproduce the source polynomial."""
        total = Fraction(0)
        for key, (num, shift) in self._terms.items():
            prod = 1
            for v in key:
                prod *= 1 - 2 * bits[v]
            total += Fraction(num * prod, 1 << shift)
        return total


def ising_expand(p: Polynomial) -> SpinPolynomial:
    """Exact substitution x_j = (1 - Z_j)/2 with multilinear expansion."""
    acc: dict[tuple[int, ...], Dyadic] = {}
    for key, coeff in p.items():
        t = len(key)
        for size in range(t + 1):
            sign = -1 if size % 2 else 1
            for subset in combinations(key, size):
                prev = acc.get(subset, (0, 0))
                acc[subset] = _dyadic_add(prev, _dyadic_normalize(sign * coeff, t))
    return SpinPolynomial(acc)


@dataclass(frozen=True)
class GateReport:
    cnot_count: int
    term_histogram: dict[int, int]

    def to_json(self) -> str:
        doc = {
            "cnot": self.cnot_count,
            "histogram": {str(k): v for k, v in sorted(self.term_histogram.items())},
        }
        return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def cnot_count_oracle(p: Polynomial) -> GateReport:
    """Expansion-based count: 2(k-1) CNOTs per surviving k-local Z term, k >= 2."""
    hist = ising_expand(p).locality_histogram()
    cnot = sum(count * 2 * (k - 1) for k, count in hist.items())
    return GateReport(cnot_count=cnot, term_histogram=hist)


def cnot_count_onehot_closed(n: int, m: int, c: int) -> int:
    """Closed form for the one-hot QUBO: c * (n*(c+1) + 2m)."""
    return c * (n * (c + 1) + 2 * m)


def cnot_count_log_closed(m: int, l: int) -> int:
    """Closed form for the logarithmic HUBO adjacency term: m * (2(l-1)*2^l + 2)."""
    if l < 1:
        raise ValueError(f"bit count must be >= 1, got {l}")
    return m * (2 * (l - 1) * (1 << l) + 2)
