"""Exact two-phase simplex over rationals with Bland's anti-cycling rule.

Solves ``min c.x`` (or ``max``) subject to ``A x = b, x >= 0``. Phase 1 minimizes the
sum of artificial variables; when the optimum is positive the system is infeasible
and the phase-1 duals give a Farkas certificate ``y`` with ``y.A <= 0`` and ``y.b > 0``.
"""

from __future__ import annotations

import logging
from collections.abc import Sequence
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

logger = logging.getLogger(__name__)

ZERO = Fraction(0)


class LPStatus(str, Enum):
    OPTIMAL = "optimal"
    INFEASIBLE = "infeasible"
    UNBOUNDED = "unbounded"


@dataclass(frozen=True)
class LPResult:
    status: LPStatus
    x: tuple[Fraction, ...] | None = None
    value: Fraction | None = None
    farkas: tuple[Fraction, ...] | None = None
    pivots: int = 0

    @property
    def feasible(self) -> bool:
        return self.status != LPStatus.INFEASIBLE


class SimplexTableau:
    """Dense tableau ``[A | I | b]`` with one artificial column per row."""

    def __init__(self, A: Sequence[Sequence[Fraction]], b: Sequence[Fraction]):
        self.m = len(A)
        self.n = len(A[0]) if A else 0
        self.signs = [(-1 if value < 0 else 1) for value in b]
        self.rows: list[list[Fraction]] = []
        for i, (row, rhs) in enumerate(zip(A, b)):
            s = self.signs[i]
            artificial = [Fraction(int(k == i)) for k in range(self.m)]
            self.rows.append([s * Fraction(v) for v in row] + artificial + [s * Fraction(rhs)])
        self.basis = [self.n + i for i in range(self.m)]
        self.pivots = 0

    def pivot(self, r: int, j: int) -> None:
        row = self.rows[r]
        piv = row[j]
        self.rows[r] = row = [v / piv for v in row]
        for i, other in enumerate(self.rows):
            if i != r and other[j] != 0:
                factor = other[j]
                self.rows[i] = [a - factor * p for a, p in zip(other, row)]
        self.basis[r] = j
        self.pivots += 1

    def reduced_costs(self, cost: Sequence[Fraction], columns: range) -> dict[int, Fraction]:
        cb = [cost[k] for k in self.basis]
        return {
            j: cost[j] - sum((c * row[j] for c, row in zip(cb, self.rows) if c), ZERO)
            for j in columns
        }

    def objective(self, cost: Sequence[Fraction]) -> Fraction:
        return sum((cost[k] * row[-1] for k, row in zip(self.basis, self.rows)), ZERO)

    def optimize(self, cost: Sequence[Fraction], columns: range) -> bool:
        """Minimize ``cost`` over the current basis; False when unbounded."""
        while True:
            reduced = self.reduced_costs(cost, columns)
            basic = set(self.basis)
            entering = next((j for j in columns if j not in basic and reduced[j] < 0), None)
            if entering is None:
                return True
            best: tuple[Fraction, int, int] | None = None
            for i, row in enumerate(self.rows):
                if row[entering] > 0:
                    key = (row[-1] / row[entering], self.basis[i], i)
                    if best is None or key < best:
                        best = key
            if best is None:
                return False
            self.pivot(best[2], entering)

    def drop_artificials(self) -> None:
        """Pivot zero-level artificial variables out of the basis; drop redundant rows."""
        r = 0
        while r < len(self.rows):
            if self.basis[r] >= self.n:
                j = next((j for j in range(self.n) if self.rows[r][j] != 0), None)
                if j is None:
                    del self.rows[r]
                    del self.basis[r]
                    continue
                self.pivot(r, j)
            r += 1

    def solution(self) -> tuple[Fraction, ...]:
        x = [ZERO] * self.n
        for k, row in zip(self.basis, self.rows):
            if k < self.n:
                x[k] = row[-1]
        return tuple(x)

    def farkas(self, cost: Sequence[Fraction]) -> tuple[Fraction, ...]:
        """Phase-1 duals mapped back to the unflipped rows."""
        cb = [cost[k] for k in self.basis]
        duals = []
        for i in range(self.m):
            column = self.n + i
            y = sum((c * row[column] for c, row in zip(cb, self.rows)), ZERO)
            duals.append(self.signs[i] * y)
        return tuple(duals)


def _dot(u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
    return sum((a * b for a, b in zip(u, v)), ZERO)


def solve_lp(
    A: Sequence[Sequence[Fraction]],
    b: Sequence[Fraction],
    c: Sequence[Fraction] | None = None,
    maximize: bool = False,
) -> LPResult:
    """Solve ``A x = b, x >= 0`` and optionally optimize ``c.x``.

    Without ``c`` only feasibility is decided. Every returned solution and every
    certificate is checked exactly before it is returned.
    """
    tableau = SimplexTableau(A, b)
    n, m = tableau.n, tableau.m
    phase1 = [ZERO] * n + [Fraction(1)] * m
    tableau.optimize(phase1, range(n + m))
    infeasibility = tableau.objective(phase1)
    if infeasibility > 0:
        y = tableau.farkas(phase1)
        if _dot(y, b) <= 0 or any(_dot(y, [row[j] for row in A]) > 0 for j in range(n)):
            raise RuntimeError("phase-1 certificate failed verification")
        logger.debug("infeasible after %d pivots (phase-1 value %s)", tableau.pivots, infeasibility)
        return LPResult(LPStatus.INFEASIBLE, farkas=y, pivots=tableau.pivots)

    tableau.drop_artificials()
    value = None
    if c is not None:
        cost = [(-Fraction(v) if maximize else Fraction(v)) for v in c] + [ZERO] * m
        if not tableau.optimize(cost, range(n)):
            logger.debug("unbounded after %d pivots", tableau.pivots)
            return LPResult(LPStatus.UNBOUNDED, pivots=tableau.pivots)
        value = tableau.objective(cost)
        if maximize:
            value = -value

    x = tableau.solution()
    if any(v < 0 for v in x) or any(_dot(row, x) != rhs for row, rhs in zip(A, b)):
        raise RuntimeError("simplex solution failed exact verification")
    logger.debug("optimal after %d pivots, value %s", tableau.pivots, value)
    return LPResult(LPStatus.OPTIMAL, x=x, value=value, pivots=tableau.pivots)
