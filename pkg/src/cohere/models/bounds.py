"""Value types for closed-form bounds and regions."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from cohere.errors import OutOfRangeError, RegionError


@dataclass(frozen=True)
class Interval:
    """A sub-interval of [0, 1]; endpoints are closed unless flagged open."""

    lo: Fraction
    hi: Fraction
    lo_open: bool = False
    hi_open: bool = False

    def __post_init__(self) -> None:
        for value in (self.lo, self.hi):
            if not 0 <= value <= 1:
                raise OutOfRangeError(value, "interval endpoint")
        if self.lo > self.hi:
            raise RegionError(f"empty interval [{self.lo}, {self.hi}]")

    def __contains__(self, value: Fraction) -> bool:
        above = value > self.lo if self.lo_open else value >= self.lo
        below = value < self.hi if self.hi_open else value <= self.hi
        return above and below

    def __str__(self) -> str:
        left = "(" if self.lo_open else "["
        right = ")" if self.hi_open else "]"
        return f"{left}{self.lo}, {self.hi}{right}"


@dataclass(frozen=True)
class LambdaWeights:
    """A probability vector over a finite point set."""

    weights: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        negative = [i + 1 for i, w in enumerate(self.weights) if w < 0]
        if negative:
            raise RegionError(f"negative weights at positions {negative}")
        if sum(self.weights) != 1:
            raise RegionError(f"weights sum to {sum(self.weights)}, not 1")

    def __len__(self) -> int:
        return len(self.weights)

    def __getitem__(self, index: int) -> Fraction:
        return self.weights[index]

    def combine(self, points: list[tuple[Fraction, ...]]) -> tuple[Fraction, ...]:
        """The convex combination sum_h w_h * points[h]."""
        if len(points) != len(self.weights):
            raise ValueError("one point per weight required")
        width = len(points[0])
        return tuple(
            sum((w * p[j] for w, p in zip(self.weights, points)), Fraction(0))
            for j in range(width)
        )


@dataclass(frozen=True)
class ThreeEventAssessment:
    """Probabilities of three conditional events, their pairwise and triple conjunctions."""

    x1: Fraction
    x2: Fraction
    x3: Fraction
    x12: Fraction
    x13: Fraction
    x23: Fraction
    x123: Fraction | None = None

    def __post_init__(self) -> None:
        for name, value in self.items():
            if value is not None and not 0 <= value <= 1:
                raise OutOfRangeError(value, name)

    def items(self) -> list[tuple[str, Fraction | None]]:
        return [
            ("x1", self.x1),
            ("x2", self.x2),
            ("x3", self.x3),
            ("x12", self.x12),
            ("x13", self.x13),
            ("x23", self.x23),
            ("x123", self.x123),
        ]

    def as_vector(self) -> tuple[Fraction, ...]:
        return tuple(value for _, value in self.items() if value is not None)
