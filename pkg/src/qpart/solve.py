"""Exact solving and a seeded single-bit-flip Metropolis annealer.

The annealer is the classical stand-in for hardware sampling: one final
state per run, a geometric inverse-temperature ramp, and per-run RNG
streams derived from (seed, run index) so results are independent of
execution order.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import ParseError
from .pbo import Bits, Polynomial, ground_states


@dataclass(frozen=True)
class AnnealParams:
    runs: int = 100
    sweeps: int = 1000
    beta_start: float = 0.01
    beta_end: float = 10.0
    seed: int = 0

    def __post_init__(self):
        if self.runs < 1:
            raise ValueError(f"runs must be >= 1, got {self.runs}")
        if self.sweeps < 1:
            raise ValueError(f"sweeps must be >= 1, got {self.sweeps}")
        if not (0 < self.beta_start < self.beta_end):
            raise ValueError(
                f"need 0 < beta_start < beta_end, got {self.beta_start}, {self.beta_end}"
            )


@dataclass(frozen=True)
class Sample:
    bits: Bits
    energy: int


@dataclass(frozen=True)
class SampleSet:
    samples: tuple[Sample, ...]

    @property
    def runs(self) -> int:
        return len(self.samples)

    def energies(self) -> list[int]:
        return [s.energy for s in self.samples]

    def best(self) -> Sample:
        return min(self.samples, key=lambda s: s.energy)

    def to_json(self) -> str:
        doc = {
            "runs": self.runs,
            "samples": [
                {"bits": "".join(str(b) for b in s.bits), "energy": str(s.energy)}
                for s in self.samples
            ],
        }
        return json.dumps(doc, indent=2, sort_keys=True) + "\n"

    @staticmethod
    def from_json(text: str) -> SampleSet:
        try:
            doc = json.loads(text)
            samples = tuple(
                Sample(bits=tuple(int(ch) for ch in s["bits"]), energy=int(s["energy"]))
                for s in doc["samples"]
            )
        except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"malformed sample-set JSON: {exc}") from exc
        return SampleSet(samples)


@dataclass(frozen=True)
class SolveResult:
    min_energy: int
    argmin: tuple[Bits, ...]
    method: str


def solve_exact(p: Polynomial, num_vars: int | None = None) -> SolveResult:
    """Exhaustive optimum with the complete argmin set."""
    emin, states = ground_states(p, num_vars)
    return SolveResult(min_energy=emin, argmin=tuple(states), method="exhaustive")


def _flip_structure(p: Polynomial, num_vars: int) -> list[list[tuple[int, tuple[int, ...]]]]:
    """For each variable, the terms containing it as (coeff, other vars)."""
    by_var: list[list[tuple[int, tuple[int, ...]]]] = [[] for _ in range(num_vars)]
    for key, coeff in p.items():
        for v in key:
            others = tuple(u for u in key if u != v)
            by_var[v].append((coeff, others))
    return by_var


def anneal(p: Polynomial, params: AnnealParams, num_vars: int | None = None) -> SampleSet:
    """One final-state sample per run under Metropolis single-bit-flip dynamics."""
    nv = p.num_variables() if num_vars is None else num_vars
    if nv < 1:
        raise ValueError("annealing needs at least one variable")
    by_var = _flip_structure(p, nv)
    sweeps = params.sweeps
    denom = max(sweeps - 1, 1)
    ratio = params.beta_end / params.beta_start
    betas = [params.beta_start * ratio ** (t / denom) for t in range(sweeps)]

    samples = []
    for run in range(params.runs):
        rng = np.random.default_rng(np.random.SeedSequence(params.seed, spawn_key=(run,)))
        x = rng.integers(0, 2, size=nv).tolist()
        for beta in betas:
            targets = rng.integers(0, nv, size=nv)
            uniforms = rng.random(size=nv)
            for v, u in zip(targets.tolist(), uniforms.tolist()):
                acc = 0
                for coeff, others in by_var[v]:
                    prod = 1
                    for w in others:
                        if not x[w]:
                            prod = 0
                            break
                    if prod:
                        acc += coeff
                delta = acc if not x[v] else -acc
                if delta <= 0 or u < math.exp(-beta * delta):
                    x[v] = 1 - x[v]
        bits = tuple(x)
        samples.append(Sample(bits=bits, energy=p.evaluate(bits)))
    return SampleSet(tuple(samples))


def success_probability(samples: SampleSet, target: int) -> Fraction:
    """Exact fraction of runs at or below the target energy."""
    if samples.runs == 0:
        raise ValueError("empty sample set")
    hits = sum(1 for s in samples.samples if s.energy <= target)
    return Fraction(hits, samples.runs)
