"""Shared domain types, numeric conventions, and the error taxonomy."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Union


class SpectraError(Exception):
    """Base class for every failure raised by this package."""


class NonConvergence(SpectraError):
    """An iterative solver exhausted its sweep budget."""


class QuadratureFailure(SpectraError):
    """A numeric integral did not reach its requested tolerance."""


class Unsupported(SpectraError):
    """The requested quantity is undefined for the given family."""


class InternalInconsistency(SpectraError):
    """Two supposedly equivalent evaluation routes disagree."""


class DomainError(SpectraError):
    """Pointwise evaluation requested exactly at a singular point."""


def _require_finite(name: str, value: float) -> None:
    if not math.isfinite(value):
        raise ValueError(f"{name} must be a finite real number, got {value!r}")


@dataclass(frozen=True)
class RealizedTriple:
    """One draw (x, y, z) of the diagonal / superdiagonal / subdiagonal entries."""

    x: float
    y: float
    z: float

    def __post_init__(self) -> None:
        _require_finite("x", self.x)
        _require_finite("y", self.y)
        _require_finite("z", self.z)


class SpectralKind(enum.Enum):
    """Which extreme spectral quantity a SpectralExtremes pair refers to."""

    SYMMETRIC_SINGULAR = "symmetric-singular"
    NONSYMMETRIC_EIGENMODULUS = "nonsymmetric-eigenmodulus"


@dataclass(frozen=True)
class Horizon:
    """Matrix-order horizon: a finite order n, or the n -> infinity limit (n is None)."""

    n: int | None = None

    def __post_init__(self) -> None:
        if self.n is not None and self.n < 1:
            raise ValueError(f"finite horizon requires n >= 1, got {self.n}")

    @classmethod
    def finite(cls, n: int) -> "Horizon":
        return cls(n)

    @property
    def is_limit(self) -> bool:
        return self.n is None


LIMIT = Horizon()


@dataclass(frozen=True)
class SpectralExtremes:
    """A pair (lo, hi) of extreme spectral moduli, tagged finite-n or limit."""

    lo: float
    hi: float
    kind: SpectralKind
    horizon: Horizon

    def __post_init__(self) -> None:
        _require_finite("lo", self.lo)
        _require_finite("hi", self.hi)
        if not 0.0 <= self.lo <= self.hi:
            raise ValueError(f"need 0 <= lo <= hi, got lo={self.lo}, hi={self.hi}")


class NamedLaw(enum.Enum):
    """Standard entry laws used by the worked examples."""

    RADEMACHER = "rademacher"
    STANDARD_NORMAL = "gaussian"
    STANDARD_CAUCHY = "cauchy"


@dataclass(frozen=True)
class PointMass:
    """Degenerate entry law: the triple equals (x, y, z) with probability one."""

    x: float
    y: float
    z: float

    def __post_init__(self) -> None:
        _require_finite("x", self.x)
        _require_finite("y", self.y)
        _require_finite("z", self.z)

    @classmethod
    def uniform(cls, value: float) -> "PointMass":
        return cls(value, value, value)


class Assignment(enum.Enum):
    """How the three matrix entries are wired to random draws."""

    SYMMETRIC_IID = "sym"  # draw (X, Y) independently, set Z := Y
    NONSYMMETRIC_IID = "nonsym"  # draw X, Y, Z independently


Law = Union[NamedLaw, PointMass]


@dataclass(frozen=True)
class EntryDistribution:
    """Joint law of the entry triple (X, Y, Z)."""

    law: Law
    assignment: Assignment

    def __post_init__(self) -> None:
        if not isinstance(self.law, (NamedLaw, PointMass)):
            raise TypeError(f"law must be a NamedLaw or PointMass, got {self.law!r}")
        if not isinstance(self.assignment, Assignment):
            raise TypeError(f"assignment must be an Assignment, got {self.assignment!r}")


@dataclass(frozen=True)
class ConditionNumber:
    """Extended nonnegative real: hi/lo ratio, with +inf kept as math.inf, never a big float."""

    value: float

    def __post_init__(self) -> None:
        if math.isnan(self.value):
            raise ValueError("condition number cannot be NaN")
        if self.value < 1.0:
            raise ValueError(f"finite condition number must be >= 1, got {self.value}")

    @property
    def is_infinite(self) -> bool:
        return math.isinf(self.value)


def condition_number(extremes: SpectralExtremes) -> ConditionNumber:
    """Ratio hi/lo of a spectral-extremes pair.

    Conventions: +inf when lo = 0 < hi (singular matrix), 1 when lo = hi = 0
    (zero matrix; the ratio is otherwise undefined and 1 is the harmless
    identity-like choice).
    """
    if extremes.lo > 0.0:
        return ConditionNumber(extremes.hi / extremes.lo)
    if extremes.hi > 0.0:
        return ConditionNumber(math.inf)
    return ConditionNumber(1.0)
