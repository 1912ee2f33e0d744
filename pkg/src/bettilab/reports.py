from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Optional


def fstr(x) -> str:
    """Exact rational as a string: "5" or "5/2"."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def jsonable(value):
    if isinstance(value, Fraction):
        return fstr(value)
    if isinstance(value, bool) or value is None or isinstance(value, (int, str)):
        return value
    if isinstance(value, float):
        return str(value)
    if isinstance(value, dict):
        return {str(k): jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [jsonable(v) for v in value]
    if hasattr(value, "to_json"):
        return value.to_json()
    return str(value)


@dataclass(frozen=True)
class BoundReport:
    """One evaluated inequality ``lhs <= rhs``.

    ``conditional`` marks verdicts that rest on unverified hypotheses or on
    unknown sequence entries; those never count as failures.
    """

    name: str
    lhs: Any
    rhs: Any
    holds: bool
    inputs: dict = field(default_factory=dict)
    conditional: bool = False
    note: Optional[str] = None

    @classmethod
    def le(cls, name, lhs, rhs, inputs=None, conditional=False, note=None):
        return cls(name, lhs, rhs, lhs <= rhs, dict(inputs or {}), conditional, note)

    @property
    def failed(self) -> bool:
        return not self.holds and not self.conditional

    def to_json(self):
        out = {
            "name": self.name,
            "lhs": jsonable(self.lhs),
            "rhs": jsonable(self.rhs),
            "holds": self.holds,
            "inputs": jsonable(self.inputs),
        }
        if self.conditional:
            out["conditional"] = True
        if self.note:
            out["note"] = self.note
        return out
