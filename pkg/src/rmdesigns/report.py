from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Optional


def jsonable(v: Any) -> Any:
    if isinstance(v, Fraction):
        return str(v) if v.denominator != 1 else v.numerator
    if isinstance(v, (list, tuple)):
        return [jsonable(x) for x in v]
    if isinstance(v, dict):
        return {str(k): jsonable(x) for k, x in v.items()}
    return v


@dataclass(frozen=True)
class DesignReport:
    """Outcome of a t-design test.

    ``is_design`` holds exactly when ``lam`` is set and ``witness`` is None.
    For the counting and Jacobi methods the witness is
    ``{"sets": [T1, T2], "counts": [c1, c2]}``; for the harmonic method it
    names the offending degree and basis function.
    """

    is_design: bool
    t: int
    method: str
    lam: Optional[int | Fraction] = None
    witness: Optional[dict] = None
    note: Optional[str] = None
    extra: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.is_design != (self.lam is not None and self.witness is None):
            raise ValueError("inconsistent DesignReport")

    def to_json_obj(self) -> dict:
        out = {
            "design": self.is_design,
            "t": self.t,
            "method": self.method,
            "lambda": jsonable(self.lam),
            "witness": jsonable(self.witness),
        }
        if self.note:
            out["note"] = self.note
        out.update(jsonable(self.extra))
        return out


def vacuous(t: int, method: str) -> DesignReport:
    return DesignReport(False, t, method, note="vacuous: empty block set, no design claim")
