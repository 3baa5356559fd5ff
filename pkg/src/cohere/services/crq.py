"""Conjunction, disjunction, negation and quasi conjunction of conditional events.

Every quantity is a :class:`CrqTable` over the constituents of its family. Values
are 1, 0, or a prevision symbol of the sub-family that is void on the constituent.
Tables stay symbolic until :func:`instantiate` resolves them against an assessment.
"""

from __future__ import annotations

import logging
from collections.abc import Mapping, Sequence
from fractions import Fraction
from itertools import combinations

from cohere.errors import (
    InconsistentSymbolsError,
    MissingSymbolError,
    OutOfRangeError,
    SymbolicValueError,
    UndefinedPrevisionError,
)
from cohere.models.events import ConditionalEvent, Constituent, Status, World
from cohere.models.formula import Formula, Not, conj, disj
from cohere.models.quantity import (
    Assessment,
    Complement,
    CrqTable,
    CrqValue,
    PrevisionSymbol,
    TableKind,
    conjunction_symbol,
    disjunction_symbol,
)
from cohere.services.logic import enumerate_constituents, joint_constituents

logger = logging.getLogger(__name__)

Quantity = ConditionalEvent | CrqTable

ONE = Fraction(1)
ZERO = Fraction(0)


def _void_names(constituent: Constituent) -> list[str]:
    return [n for n, s in zip(constituent.names, constituent.signature) if s == Status.VOID]


def _resolve_constituents(
    family: Sequence[ConditionalEvent],
    constituents: Sequence[Constituent] | None,
    constraints: Sequence[Formula],
) -> tuple[Constituent, ...]:
    if constituents is None:
        return tuple(enumerate_constituents(family, constraints))
    return tuple(constituents)


def conjunction_value(constituent: Constituent) -> CrqValue:
    """Value of the conjunction of the constituent's family on that constituent."""
    signature = constituent.signature
    if Status.FALSE in signature:
        return ZERO
    if Status.VOID not in signature:
        return ONE
    return conjunction_symbol(_void_names(constituent))


def disjunction_value(constituent: Constituent) -> CrqValue:
    signature = constituent.signature
    if Status.TRUE in signature:
        return ONE
    if Status.VOID not in signature:
        return ZERO
    return disjunction_symbol(_void_names(constituent))


def conjunction_table(
    family: Sequence[ConditionalEvent],
    constituents: Sequence[Constituent] | None = None,
    constraints: Sequence[Formula] = (),
) -> CrqTable:
    """C(F): 1 if every member is true, 0 if some member is false, else x of the void part."""
    cells = _resolve_constituents(family, constituents, constraints)
    return CrqTable(
        kind=TableKind.CONJUNCTION,
        family=tuple(family),
        constituents=cells,
        entries=tuple(conjunction_value(c) for c in cells),
        symbol=conjunction_symbol(e.name for e in family),
    )


def disjunction_table(
    family: Sequence[ConditionalEvent],
    constituents: Sequence[Constituent] | None = None,
    constraints: Sequence[Formula] = (),
) -> CrqTable:
    """D(F): 1 if some member is true, 0 if every member is false, else y of the void part."""
    cells = _resolve_constituents(family, constituents, constraints)
    return CrqTable(
        kind=TableKind.DISJUNCTION,
        family=tuple(family),
        constituents=cells,
        entries=tuple(disjunction_value(c) for c in cells),
        symbol=disjunction_symbol(e.name for e in family),
    )


def conditional_table(event: ConditionalEvent, constraints: Sequence[Formula] = ()) -> CrqTable:
    """A single conditional event as its one-member conjunction (1 / 0 / x)."""
    return conjunction_table([event], constraints=constraints)


def as_table(quantity: Quantity, constraints: Sequence[Formula] = ()) -> CrqTable:
    if isinstance(quantity, CrqTable):
        return quantity
    return conditional_table(quantity, constraints)


def quantity_symbol(quantity: Quantity) -> PrevisionSymbol | Complement | None:
    """The prevision symbol a quantity is assessed under."""
    if isinstance(quantity, ConditionalEvent):
        return conjunction_symbol([quantity.name])
    return quantity.symbol


def _complement(value: CrqValue) -> CrqValue:
    if isinstance(value, Fraction):
        return 1 - value
    if isinstance(value, Complement):
        return value.symbol
    return Complement(value)


def negate(table: CrqTable) -> CrqTable:
    """1 - table, with symbols turned into formal complements."""
    symbol = None if table.symbol is None else _complement(table.symbol)
    return CrqTable(
        kind=table.kind,
        family=table.family,
        constituents=table.constituents,
        entries=tuple(_complement(v) for v in table.entries),
        symbol=symbol,
        negated=not table.negated,
        dual_family=tuple(event.negated() for event in table.family),
    )


def quasi_conjunction_event(family: Sequence[ConditionalEvent]) -> ConditionalEvent:
    """The conditional event AND_i(~H_i | E_i H_i) given OR_i H_i."""
    return ConditionalEvent(
        name=f"QC({','.join(e.name for e in family)})",
        consequent=conj(
            *(disj(Not(e.antecedent), conj(e.consequent, e.antecedent)) for e in family)
        ),
        antecedent=disj(*(e.antecedent for e in family)),
    )


def quasi_conjunction(
    family: Sequence[ConditionalEvent],
    constituents: Sequence[Constituent] | None = None,
    constraints: Sequence[Formula] = (),
) -> tuple[ConditionalEvent, CrqTable]:
    """QC(F) = AND_i(~H_i | E_i H_i) given OR_i H_i, with its table over F's constituents."""
    cells = _resolve_constituents(family, constituents, constraints)
    event = quasi_conjunction_event(family)
    symbol = conjunction_symbol([event.name])
    entries: list[CrqValue] = []
    for cell in cells:
        if cell.is_c0:
            entries.append(symbol)
        elif Status.FALSE in cell.signature:
            entries.append(ZERO)
        else:
            entries.append(ONE)
    table = CrqTable(TableKind.QUASI_CONJUNCTION, tuple(family), cells, tuple(entries), symbol)
    return event, table


def instantiate(table: CrqTable, assessment: Assessment) -> CrqTable:
    """Replace every symbol by its assessed value."""
    resolved = []
    for value in table.entries:
        try:
            number = assessment.resolve(value)
        except MissingSymbolError:
            raise MissingSymbolError(value.label(table.names)) from None
        if not 0 <= number <= 1:
            raise OutOfRangeError(number)
        resolved.append(number)
    return CrqTable(
        kind=table.kind,
        family=table.family,
        constituents=table.constituents,
        entries=tuple(resolved),
        symbol=table.symbol,
        negated=table.negated,
        dual_family=table.dual_family,
    )


def value_on(table: CrqTable, constituent: Constituent) -> CrqValue:
    """Value of a table on a constituent of a larger joint family.

    When every member is void there, the value is the table's C0 entry (its prevision).
    """
    return table.value_for(constituent.project(table.names))


def is_void_on(table: CrqTable, constituent: Constituent) -> bool:
    return all(s == Status.VOID for s in constituent.project(table.names))


def dominance_witness(
    a: CrqTable, b: CrqTable, constraints: Sequence[Formula] = ()
) -> Constituent | None:
    """First joint constituent (outside the all-void cell) where a exceeds b, if any."""
    if not (a.is_numeric and b.is_numeric):
        raise SymbolicValueError("dominance needs instantiated tables")
    for cell in joint_constituents([a, b], constraints):
        if cell.is_c0:
            continue
        if value_on(a, cell) > value_on(b, cell):
            return cell
    return None


def dominates(a: CrqTable, b: CrqTable, constraints: Sequence[Formula] = ()) -> bool:
    """a <= b on every constituent where some antecedent of either family is true."""
    return dominance_witness(a, b, constraints) is None


def _complete_duality(
    pairs: list[tuple[PrevisionSymbol, PrevisionSymbol]], assessment: Assessment
) -> dict[PrevisionSymbol, Fraction]:
    """Fill each (s, s') pair so that s' = 1 - s, checking supplied pairs."""
    filled: dict[PrevisionSymbol, Fraction] = {}
    for left, right in pairs:
        lv, rv = assessment.get(left), assessment.get(right)
        if lv is not None and rv is not None and lv != 1 - rv:
            raise InconsistentSymbolsError(f"{left}={lv} and {right}={rv} are not complementary")
        if lv is None and rv is None:
            raise MissingSymbolError(f"{left} or {right}")
        filled[left] = lv if lv is not None else 1 - rv
        filled[right] = rv if rv is not None else 1 - lv
    return filled


def check_de_morgan(
    family: Sequence[ConditionalEvent],
    assessment: Assessment,
    constraints: Sequence[Formula] = (),
) -> bool:
    """Check 1 - D(F) = C(~F) and 1 - C(F) = D(~F) entrywise after instantiation.

    The assessment must supply, for every nonempty subset S, either y_S over F or
    t_S over ~F (and either x_S over F or the disjunction over ~F); missing partners
    are filled by the duality y_S = 1 - t_S.
    """
    negated = [event.negated() for event in family]
    rename = {e.name: n.name for e, n in zip(family, negated)}
    pairs_i, pairs_ii = [], []
    for size in range(1, len(family) + 1):
        for subset in combinations([e.name for e in family], size):
            mirrored = [rename[name] for name in subset]
            pairs_i.append((disjunction_symbol(subset), conjunction_symbol(mirrored)))
            pairs_ii.append((conjunction_symbol(subset), disjunction_symbol(mirrored)))
    completed = Assessment(
        {**_complete_duality(pairs_i, assessment), **_complete_duality(pairs_ii, assessment)}
    )

    cells = enumerate_constituents(family, constraints)
    mirror_cells = enumerate_constituents(negated, constraints)
    laws = [
        (disjunction_table(family, cells), conjunction_table(negated, mirror_cells)),
        (conjunction_table(family, cells), disjunction_table(negated, mirror_cells)),
    ]
    swap = {Status.TRUE: Status.FALSE, Status.FALSE: Status.TRUE, Status.VOID: Status.VOID}
    for table, mirror in laws:
        table = instantiate(table, completed)
        mirror = instantiate(mirror, completed)
        for cell, value in zip(table.constituents, table.entries):
            mirrored = mirror.value_for(tuple(swap[s] for s in cell.signature))
            if 1 - value != mirrored:
                logger.debug("De Morgan fails on %s: %s vs %s", cell.code, 1 - value, mirrored)
                return False
    return True


def iterated_prevision(z_n: Fraction, z_next: Fraction) -> Fraction:
    """mu = z_{n+1} / z_n, the prevision of the iterated conditional C_{n+1} | C_n."""
    for value in (z_n, z_next):
        if not 0 <= value <= 1:
            raise OutOfRangeError(value)
    if z_next > z_n:
        raise OutOfRangeError(z_next, f"P(C_n+1) above P(C_n)={z_n}:")
    if z_n == 0:
        raise UndefinedPrevisionError("P(C_n) = 0, the iterated prevision is undefined")
    return Fraction(z_next) / Fraction(z_n)


def iterated_table(c_n: CrqTable, c_next: CrqTable) -> CrqTable:
    """The quantity C_{n+1} + mu (1 - C_n) over the constituents of C_{n+1}.

    Both tables must be instantiated and C_{n+1}'s family must extend C_n's.
    """
    if not (c_n.is_numeric and c_next.is_numeric):
        raise SymbolicValueError("iterated table needs instantiated tables")
    if not set(c_n.names) <= set(c_next.names):
        raise ValueError("C_n+1 must extend the family of C_n")
    void_n = tuple(Status.VOID for _ in c_n.names)
    void_next = tuple(Status.VOID for _ in c_next.names)
    mu = iterated_prevision(c_n.value_for(void_n), c_next.value_for(void_next))
    entries = tuple(
        value + mu * (1 - value_on(c_n, cell))
        for cell, value in zip(c_next.constituents, c_next.entries)
    )
    return CrqTable(TableKind.ITERATED, c_next.family, c_next.constituents, entries, None)


def previsions_from_distribution(
    family: Sequence[ConditionalEvent], distribution: Mapping[World, Fraction]
) -> Assessment:
    """Coherent x_S and y_S for every nonempty subset S, induced by a world distribution.

    Every antecedent must carry positive probability. Values are computed by
    increasing subset size, since the value of C(F_S) on a world where part of S is
    void is the prevision of that part.
    """
    total = sum(distribution.values(), ZERO)
    if total <= 0:
        raise ValueError("distribution has no mass")
    weights = {w: Fraction(p) / total for w, p in distribution.items() if p > 0}
    values: dict[PrevisionSymbol, Fraction] = {}
    for size in range(1, len(family) + 1):
        for subset in combinations(family, size):
            names = [e.name for e in subset]
            mass = ZERO
            conj_sum = ZERO
            disj_sum = ZERO
            for world, p in weights.items():
                statuses = [e.status(world) for e in subset]
                if all(s == Status.VOID for s in statuses):
                    continue
                mass += p
                void = [n for n, s in zip(names, statuses) if s == Status.VOID]
                if Status.FALSE not in statuses:
                    conj_sum += p * values[conjunction_symbol(void)] if void else p
                if Status.TRUE in statuses:
                    disj_sum += p
                elif void:
                    disj_sum += p * values[disjunction_symbol(void)]
            if mass == 0:
                raise UndefinedPrevisionError(f"antecedents of {names} carry no probability")
            values[conjunction_symbol(names)] = conj_sum / mass
            values[disjunction_symbol(names)] = disj_sum / mass
    return Assessment(values)
