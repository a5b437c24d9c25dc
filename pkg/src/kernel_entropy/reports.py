from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Union

Margin = Union[float, Fraction]


@dataclass(frozen=True)
class ViolationReport:
    """One point where a checked inequality fails (negative margin)."""

    check_id: str
    params: dict
    location: Any
    margin: Margin
    conditional: bool

    def sort_key(self):
        loc = self.location
        if isinstance(loc, (list, tuple)):
            loc = tuple(float(v) for v in loc)
        else:
            loc = (float(loc),)
        n = self.params.get("n")
        c = self.params.get("c", self.params.get("family", ""))
        return (self.check_id, -1 if n is None else n, str(c), loc)

    def to_dict(self) -> dict:
        margin = str(self.margin) if isinstance(self.margin, Fraction) else self.margin
        loc = list(self.location) if isinstance(self.location, tuple) else self.location
        return {
            "check_id": self.check_id,
            "params": dict(sorted(self.params.items())),
            "location": loc,
            "margin": margin,
            "conditional": self.conditional,
        }
