"""Multilinear pseudo-Boolean polynomials with exact integer coefficients.

Every Hamiltonian in the package is a value of this type. Coefficients are
Python ints, so penalty weights of any magnitude are represented exactly;
no floating point enters an energy computation.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Mapping

import numpy as np

from .errors import DimensionError, ResourceLimitError

ENUMERATION_MAX_VARS = 24

Term = tuple[int, ...]
Bits = tuple[int, ...]


class Polynomial:
    """Immutable multilinear polynomial over binary variables.

    Terms map sorted tuples of variable ids to nonzero integer
    coefficients; the empty tuple holds the constant. Idempotency
    (x^2 = x) is applied whenever terms combine, so the representation
    is canonical: two polynomials that agree as functions on {0,1}^N
    have identical term maps.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Iterable[int], int] | Iterable[tuple[Iterable[int], int]] | None = None):
        canon: dict[Term, int] = {}
        if terms is not None:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for vars_, coeff in items:
                coeff = int(coeff)
                if coeff == 0:
                    continue
                key = tuple(sorted(set(int(v) for v in vars_)))
                if any(v < 0 for v in key):
                    raise ValueError(f"negative variable id in term {key}")
                new = canon.get(key, 0) + coeff
                if new == 0:
                    canon.pop(key, None)
                else:
                    canon[key] = new
        self._terms = canon

    @classmethod
    def zero(cls) -> Polynomial:
        return cls()

    @classmethod
    def constant(cls, c: int) -> Polynomial:
        return cls({(): c})

    @classmethod
    def variable(cls, v: int) -> Polynomial:
        return cls({(v,): 1})

    @property
    def terms(self) -> dict[Term, int]:
        return dict(self._terms)

    def items(self) -> Iterator[tuple[Term, int]]:
        return iter(self._terms.items())

    def coefficient(self, vars_: Iterable[int]) -> int:
        return self._terms.get(tuple(sorted(set(vars_))), 0)

    def variables(self) -> tuple[int, ...]:
        out: set[int] = set()
        for key in self._terms:
            out.update(key)
        return tuple(sorted(out))

    def num_variables(self) -> int:
        """1 + the largest variable id appearing in any term (0 for constants)."""
        top = -1
        for key in self._terms:
            if key and key[-1] > top:
                top = key[-1]
        return top + 1

    def degree(self) -> int:
        return max((len(k) for k in self._terms), default=0)

    def is_zero(self) -> bool:
        return not self._terms

    def evaluate(self, assignment: Iterable[int]) -> int:
        bits = tuple(assignment)
        if len(bits) < self.num_variables():
            raise DimensionError(
                f"assignment of length {len(bits)} does not cover {self.num_variables()} variables"
            )
        total = 0
        for key, coeff in self._terms.items():
            if all(bits[v] for v in key):
                total += coeff
        return total

    def add_scaled(self, other: Polynomial, scale: int) -> Polynomial:
        """self + scale * other, in canonical form."""
        out = dict(self._terms)
        for key, coeff in other._terms.items():
            new = out.get(key, 0) + scale * coeff
            if new == 0:
                out.pop(key, None)
            else:
                out[key] = new
        result = Polynomial.__new__(Polynomial)
        result._terms = out
        return result

    def scale(self, c: int) -> Polynomial:
        if c == 0:
            return Polynomial.zero()
        result = Polynomial.__new__(Polynomial)
        result._terms = {k: c * v for k, v in self._terms.items()}
        return result

    def __add__(self, other: Polynomial) -> Polynomial:
        return self.add_scaled(other, 1)

    def __sub__(self, other: Polynomial) -> Polynomial:
        return self.add_scaled(other, -1)

    def __neg__(self) -> Polynomial:
        return self.scale(-1)

    def __mul__(self, other: Polynomial | int) -> Polynomial:
        if isinstance(other, int):
            return self.scale(other)
        out: dict[Term, int] = {}
        for k1, c1 in self._terms.items():
            s1 = set(k1)
            for k2, c2 in other._terms.items():
                key = tuple(sorted(s1 | set(k2)))
                new = out.get(key, 0) + c1 * c2
                if new == 0:
                    out.pop(key, None)
                else:
                    out[key] = new
        result = Polynomial.__new__(Polynomial)
        result._terms = out
        return result

    def __rmul__(self, other: int) -> Polynomial:
        return self.scale(other)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Polynomial) and self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __repr__(self) -> str:
        if not self._terms:
            return "Polynomial(0)"
        parts = []
        for key in sorted(self._terms, key=lambda k: (len(k), k))[:8]:
            mono = "*".join(f"x{v}" for v in key) if key else "1"
            parts.append(f"{self._terms[key]}*{mono}")
        tail = " + ..." if len(self._terms) > 8 else ""
        return f"Polynomial({' + '.join(parts)}{tail})"


def index_to_bits(index: int, num_vars: int) -> Bits:
    """Bit v of the enumeration index is the value of variable v."""
    return tuple((index >> v) & 1 for v in range(num_vars))


def bits_to_index(bits: Iterable[int]) -> int:
    out = 0
    for v, b in enumerate(bits):
        if b:
            out |= 1 << v
    return out


def energy_vector(p: Polynomial, num_vars: int, chunk_bits: int = 22) -> np.ndarray:
    """Energies of all 2**num_vars assignments, indexed by bits_to_index.

    Uses the bitmask identity: a term contributes exactly where the index
    has all of the term's bits set. Falls back to object (big-int) dtype
    when int64 could overflow.
    """
    if num_vars > ENUMERATION_MAX_VARS:
        raise ResourceLimitError(
            f"exhaustive enumeration is limited to {ENUMERATION_MAX_VARS} variables, got {num_vars}"
        )
    size = 1 << num_vars
    const = p.coefficient(())
    bound = sum(abs(c) for c in p._terms.values())
    dtype = np.int64 if bound < 2**62 else object
    energies = np.full(size, const, dtype=dtype)
    masked = [
        (sum(1 << v for v in key), coeff) for key, coeff in p._terms.items() if key
    ]
    chunk = 1 << min(chunk_bits, num_vars)
    for start in range(0, size, chunk):
        stop = min(start + chunk, size)
        idx = np.arange(start, stop, dtype=np.int64)
        view = energies[start:stop]
        for mask, coeff in masked:
            view[(idx & mask) == mask] += coeff
    return energies


def ground_states(p: Polynomial, num_vars: int | None = None) -> tuple[int, list[Bits]]:
    """Exact minimum energy and the complete argmin set, by exhaustion."""
    nv = p.num_variables() if num_vars is None else num_vars
    if nv < p.num_variables():
        raise DimensionError(f"num_vars={nv} is smaller than the polynomial's variable span")
    if nv == 0:
        return p.coefficient(()), [()]
    energies = energy_vector(p, nv)
    emin = energies.min()
    argmin = np.flatnonzero(energies == emin)
    return int(emin), [index_to_bits(int(i), nv) for i in argmin]
