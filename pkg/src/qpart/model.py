"""Encoded problems: a polynomial plus a variable registry and metadata.

The model JSON interchange format serializes coefficients as decimal
strings so arbitrary-size penalties survive a round trip exactly.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass
from typing import Any, Mapping

from .errors import ParseError
from .pbo import Polynomial


@dataclass(frozen=True)
class EncodedProblem:
    """A Hamiltonian together with the role of every binary variable.

    registry[i] names variable i ("x[v][c]", "y[c]", "x[v][k]", "w[e][k]",
    ...); meta records the encoding kind and enough of the source instance
    (n, edges, color bound, bit count) to decode and re-derive structure.
    """

    polynomial: Polynomial
    registry: tuple[str, ...]
    penalties: Any
    meta: Mapping[str, Any]

    def __post_init__(self):
        span = self.polynomial.num_variables()
        if span > len(self.registry):
            raise ValueError(
                f"polynomial uses {span} variables but registry has {len(self.registry)}"
            )

    @property
    def num_variables(self) -> int:
        return len(self.registry)

    @property
    def kind(self) -> str:
        return self.meta["kind"]


def to_model_json(prob: EncodedProblem) -> str:
    terms = [
        {"vars": list(key), "coeff": str(coeff)}
        for key, coeff in sorted(prob.polynomial.items(), key=lambda kv: (len(kv[0]), kv[0]))
    ]
    metadata = dict(prob.meta)
    if prob.penalties is not None:
        metadata["penalties"] = asdict(prob.penalties)
    doc = {
        "num_vars": prob.num_variables,
        "variables": [{"id": i, "role": r} for i, r in enumerate(prob.registry)],
        "terms": terms,
        "metadata": metadata,
    }
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def from_model_json(text: str) -> EncodedProblem:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid model JSON: {exc.msg}", line=exc.lineno) from exc
    try:
        num_vars = int(doc["num_vars"])
        variables = doc["variables"]
        registry = [""] * num_vars
        for entry in variables:
            registry[int(entry["id"])] = str(entry["role"])
        poly = Polynomial(
            (tuple(int(v) for v in t["vars"]), int(t["coeff"])) for t in doc["terms"]
        )
        metadata = dict(doc.get("metadata", {}))
    except (KeyError, TypeError, ValueError, IndexError) as exc:
        raise ParseError(f"malformed model JSON: {exc}") from exc
    penalties = _penalties_from_meta(metadata)
    return EncodedProblem(poly, tuple(registry), penalties, metadata)


def _penalties_from_meta(metadata: dict) -> Any:
    record = metadata.get("penalties")
    if record is None:
        return None
    kind = metadata.get("kind", "")
    # Late imports: the encoder modules depend on this one.
    if kind == "onehot_mgc":
        from .onehot import OneHotPenalties

        return OneHotPenalties(**_intify(record))
    if kind in ("log_mgc", "log_general"):
        from .logenc import LexPenalties

        return LexPenalties(p=tuple(int(x) for x in record["p"]), a_adjacency=int(record["a_adjacency"]))
    if kind == "quadratized_log":
        from .quadratize import QuadratizationPenalties

        return QuadratizationPenalties(**_intify(record))
    return record


def _intify(record: Mapping[str, Any]) -> dict[str, int]:
    return {k: int(v) for k, v in record.items()}
