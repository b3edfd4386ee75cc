"""Bound reports: an exact value plus optional certificate, JSON/CSV friendly."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from .channel import Certificate

DIRECTIONS = ("upper-on-p", "lower-on-p", "upper-on-kappa", "lower-on-kappa-star")


def frac_pair(v) -> list[int]:
    v = Fraction(v)
    return [v.numerator, v.denominator]


@dataclass(frozen=True)
class BoundReport:
    name: str
    direction: str
    exact: Fraction
    certificate: Certificate | None = None
    iterations: int | None = None
    params: dict[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        if self.direction not in DIRECTIONS:
            raise ValueError(f"unknown direction {self.direction!r}")
        object.__setattr__(self, "exact", Fraction(self.exact))

    @property
    def floor(self) -> int:
        return math.floor(self.exact)

    @property
    def ceil(self) -> int:
        return math.ceil(self.exact)

    def to_json(self) -> dict[str, Any]:
        out: dict[str, Any] = {
            "name": self.name,
            "direction": self.direction,
            "exact": frac_pair(self.exact),
            "floor": self.floor,
        }
        if "n" in self.params:
            out["n"] = self.params["n"]
        params = {k: v for k, v in self.params.items() if k != "n"}
        if params:
            out["params"] = {k: _jsonable(v) for k, v in params.items()}
        if self.iterations is not None:
            out["iterations"] = self.iterations
        if self.certificate is not None:
            from .fileio import certificate_to_json

            out["certificate"] = certificate_to_json(self.certificate)
        return out


def _jsonable(v):
    if isinstance(v, Fraction):
        return frac_pair(v)
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    return v
