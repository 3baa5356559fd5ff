"""Coherence checking by linear feasibility.

An assessment M on quantities X_1|H_1 .. X_n|H_n is coherent when M lies in the
convex hull of the points Q_h, one per constituent C_h where some H_i is true, with
``Q_h[i]`` the value of quantity i on C_h (or ``M[i]`` when C_h makes H_i false).
Zero-probability antecedents are handled by recursing on the sub-family I0 whose
antecedents get no mass in any solution.
"""

from __future__ import annotations

import logging
from collections.abc import Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from cohere.config import get_settings
from cohere.errors import (
    FamilyTooLargeError,
    IncoherentAssessmentError,
    InfeasibleSystemError,
    SymbolicValueError,
)
from cohere.models.bounds import Interval
from cohere.models.events import Constituent
from cohere.models.formula import Formula
from cohere.models.quantity import Assessment, Complement, CrqTable, PrevisionSymbol
from cohere.services.crq import (
    Quantity,
    as_table,
    instantiate,
    is_void_on,
    quantity_symbol,
    value_on,
)
from cohere.services.logic import joint_constituents
from cohere.services.simplex import solve_lp

logger = logging.getLogger(__name__)

ZERO = Fraction(0)
ONE = Fraction(1)


@dataclass(frozen=True)
class SigmaSystem:
    """Points Q_h (one per constituent in the antecedent disjunction) and target M."""

    names: tuple[str, ...]
    constituents: tuple[Constituent, ...]
    points: tuple[tuple[Fraction, ...], ...]
    targets: tuple[Fraction, ...]
    h_membership: tuple[frozenset[int], ...]

    @property
    def n(self) -> int:
        return len(self.names)

    @property
    def m(self) -> int:
        return len(self.points)

    def matrix(self) -> tuple[list[list[Fraction]], list[Fraction]]:
        """Rows sum_h lambda_h Q_h[i] = M[i] followed by sum_h lambda_h = 1."""
        rows = [[point[i] for point in self.points] for i in range(self.n)]
        rows.append([ONE] * self.m)
        return rows, [*self.targets, ONE]

    def mass(self, solution: Sequence[Fraction], i: int) -> Fraction:
        return sum((solution[h] for h in self.h_membership[i]), ZERO)


@dataclass(frozen=True)
class FeasibilityResult:
    """Outcome of solving a system; ``certificate`` holds Dutch-book stakes when infeasible."""

    feasible: bool
    solution: tuple[Fraction, ...] | None = None
    certificate: tuple[Fraction, ...] | None = None


@dataclass(frozen=True)
class TraceLevel:
    level: int
    system: SigmaSystem
    I0: frozenset[str]
    solution: tuple[Fraction, ...] | None
    certificate: tuple[Fraction, ...] | None = None


@dataclass
class CoherenceVerdict:
    coherent: bool
    trace: list[TraceLevel] = field(default_factory=list)

    @property
    def levels(self) -> int:
        return len(self.trace)

    @property
    def dutch_book(self) -> dict[str, Fraction] | None:
        """Stakes on the failing sub-family whose gain is negative on every constituent."""
        if self.coherent or not self.trace or self.trace[-1].certificate is None:
            return None
        last = self.trace[-1]
        return dict(zip(last.system.names, last.certificate))


def prepare(
    quantities: Sequence[Quantity], assessment: Assessment, constraints: Sequence[Formula] = ()
) -> list[CrqTable]:
    """Instantiated tables for every quantity."""
    return [instantiate(as_table(q, constraints), assessment) for q in quantities]


def _prevision(table: CrqTable, assessment: Assessment) -> Fraction:
    if table.symbol is None:
        raise ValueError(f"{table.name} has no prevision symbol")
    return assessment.resolve(table.symbol)


def _system(
    tables: Sequence[CrqTable],
    assessment: Assessment,
    constraints: Sequence[Formula],
    context: Sequence[CrqTable] = (),
) -> SigmaSystem:
    """Points over constituents where some antecedent of ``tables`` or ``context`` is true."""
    for table in tables:
        if not table.is_numeric:
            raise SymbolicValueError(f"{table.name} has uninstantiated entries")
    targets = tuple(_prevision(t, assessment) for t in tables)
    space = [*tables, *context]
    cells = [c for c in joint_constituents(space, constraints) if not c.is_c0]
    points = []
    membership: list[set[int]] = [set() for _ in tables]
    for h, cell in enumerate(cells):
        point = []
        for i, table in enumerate(tables):
            if is_void_on(table, cell):
                point.append(targets[i])
            else:
                point.append(value_on(table, cell))
                membership[i].add(h)
        points.append(tuple(point))
    return SigmaSystem(
        names=tuple(t.name for t in tables),
        constituents=tuple(cells),
        points=tuple(points),
        targets=targets,
        h_membership=tuple(frozenset(s) for s in membership),
    )


def build_sigma(
    quantities: Sequence[Quantity],
    assessment: Assessment,
    constraints: Sequence[Formula] = (),
) -> SigmaSystem:
    """System (Sigma) for instantiated quantities; C0 is not a point."""
    return _system(prepare(quantities, assessment, constraints), assessment, constraints)


def solve_feasible(system: SigmaSystem) -> FeasibilityResult:
    """Decide whether M lies in the convex hull of the points."""
    A, b = system.matrix()
    result = solve_lp(A, b)
    if not result.feasible:
        return FeasibilityResult(False, certificate=result.farkas[: system.n])
    return FeasibilityResult(True, solution=result.x)


def max_mass(system: SigmaSystem, i: int) -> Fraction:
    """Maximum over all solutions of the mass on constituents implying H_i."""
    A, b = system.matrix()
    objective = [ONE if h in system.h_membership[i] else ZERO for h in range(system.m)]
    result = solve_lp(A, b, objective, maximize=True)
    if not result.feasible:
        raise InfeasibleSystemError(f"no solution, cannot maximize mass on {system.names[i]}")
    return result.value


def compute_I0(system: SigmaSystem, solution: Sequence[Fraction] | None = None) -> frozenset[int]:
    """Indices whose antecedent has zero mass in every solution.

    A known solution lets indices with positive mass skip their LP.
    """
    zero = set()
    for i in range(system.n):
        if solution is not None and system.mass(solution, i) > 0:
            continue
        if max_mass(system, i) == 0:
            zero.add(i)
    return frozenset(zero)


def restricted_gains(system: SigmaSystem, stakes: Sequence[Fraction]) -> tuple[Fraction, ...]:
    """Gain sum_i s_i (Q_h[i] - M[i]) on every constituent of the system."""
    return tuple(
        sum((s * (q - mu) for s, q, mu in zip(stakes, point, system.targets)), ZERO)
        for point in system.points
    )


def check_coherence(
    quantities: Sequence[Quantity],
    assessment: Assessment,
    constraints: Sequence[Formula] = (),
) -> CoherenceVerdict:
    """Solve (Sigma); recurse on (F0, M0) while I0 is nonempty."""
    tables = prepare(quantities, assessment, constraints)
    verdict = CoherenceVerdict(coherent=False)
    current = list(range(len(tables)))
    level = 0
    while True:
        level += 1
        system = _system([tables[k] for k in current], assessment, constraints)
        result = solve_feasible(system)
        if not result.feasible:
            logger.debug("level %d: system infeasible for %s", level, system.names)
            verdict.trace.append(TraceLevel(level, system, frozenset(), None, result.certificate))
            return verdict
        zero = compute_I0(system, result.solution)
        names = frozenset(system.names[i] for i in zero)
        logger.debug("level %d: feasible, I0 = %s", level, sorted(names))
        verdict.trace.append(TraceLevel(level, system, names, result.solution))
        if not zero:
            verdict.coherent = True
            return verdict
        current = [current[i] for i in sorted(zero)]


def check_coherence_subsets(
    quantities: Sequence[Quantity],
    assessment: Assessment,
    constraints: Sequence[Formula] = (),
    limit: int | None = None,
) -> CoherenceVerdict:
    """Coherent iff (Sigma_J) is solvable for every nonempty sub-family J."""
    limit = limit if limit is not None else get_settings().oracle_limit
    if len(quantities) > limit:
        raise FamilyTooLargeError(len(quantities), limit)
    tables = prepare(quantities, assessment, constraints)
    verdict = CoherenceVerdict(coherent=True)
    level = 0
    for size in range(1, len(tables) + 1):
        for subset in combinations(tables, size):
            level += 1
            system = _system(list(subset), assessment, constraints)
            result = solve_feasible(system)
            if not result.feasible:
                verdict.coherent = False
                verdict.trace.append(
                    TraceLevel(level, system, frozenset(), None, result.certificate)
                )
                return verdict
    return verdict


def _assign(symbol: PrevisionSymbol | Complement, value: Fraction) -> dict:
    if isinstance(symbol, Complement):
        return {symbol.symbol: 1 - value}
    return {symbol: value}


def _target_points(
    target: CrqTable, cells: Sequence[Constituent], assessment: Assessment
) -> dict[int, Fraction]:
    """Target values on the cells where its antecedent is true."""
    return {
        h: assessment.resolve(value_on(target, cell))
        for h, cell in enumerate(cells)
        if not is_void_on(target, cell)
    }


def _void_target_I0(system: SigmaSystem, on_target: Sequence[Fraction]) -> frozenset[int]:
    """Indices with zero mass in every solution that puts no mass on the target antecedent."""
    A, b = system.matrix()
    A = [*A, list(on_target)]
    b = [*b, ZERO]
    zero = set()
    for i in range(system.n):
        objective = [ONE if h in system.h_membership[i] else ZERO for h in range(system.m)]
        if solve_lp(A, b, objective, maximize=True).value == 0:
            zero.add(i)
    return frozenset(zero)


def extension_interval(
    quantities: Sequence[Quantity],
    assessment: Assessment,
    target: Quantity,
    constraints: Sequence[Formula] = (),
) -> Interval:
    """Set of values z for the target that keep the extended assessment coherent.

    When every solution puts positive mass on the target antecedent, z ranges over
    the min and max of sum_h mu_h v_h subject to the base equations written
    homogeneously and sum_{C_h in H_t} mu_h = 1. When some solution leaves the target
    void, the coherent values are those of the base sub-family that stays massless in
    all such solutions, so the search repeats on it. Endpoints are re-checked with
    the full algorithm.
    """
    if quantities and not check_coherence(quantities, assessment, constraints).coherent:
        raise IncoherentAssessmentError("base assessment is not coherent")
    tables = prepare(quantities, assessment, constraints)
    target_table = as_table(target, constraints)
    current = list(range(len(tables)))

    while True:
        base = [tables[k] for k in current]
        system = _system(base, assessment, constraints, context=[target_table])
        values = _target_points(target_table, system.constituents, assessment)
        A, b = system.matrix()
        on_target = [ONE if h in values else ZERO for h in range(system.m)]
        floor = solve_lp(A, b, on_target)
        if not floor.feasible:
            raise InfeasibleSystemError("coherent base produced an infeasible system")
        if floor.value > 0:
            break
        zero = _void_target_I0(system, on_target)
        logger.debug(
            "target can be void; reducing to %s", [system.names[i] for i in sorted(zero)]
        )
        current = [current[i] for i in sorted(zero)]

    rows = [
        [point[i] - system.targets[i] for point in system.points] for i in range(system.n)
    ]
    rows.append(on_target)
    rhs = [ZERO] * system.n + [ONE]
    objective = [values.get(h, ZERO) for h in range(system.m)]
    lo = solve_lp(rows, rhs, objective).value
    hi = solve_lp(rows, rhs, objective, maximize=True).value
    logger.debug("extension candidates [%s, %s] for %s", lo, hi, target.name)

    target_symbol = quantity_symbol(target)
    extended = [*quantities, target]
    open_ends = []
    for z in (lo, hi):
        trial = assessment.with_values(_assign(target_symbol, z))
        open_ends.append(not check_coherence(extended, trial, constraints).coherent)
    if any(open_ends):
        logger.warning("extension endpoint rejected on re-verification: %s", open_ends)
    return Interval(lo, hi, lo_open=open_ends[0], hi_open=open_ends[1])
