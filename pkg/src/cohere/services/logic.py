"""Event algebra: world enumeration, constituents and logical relations."""

from __future__ import annotations

import logging
from collections.abc import Iterable, Sequence
from itertools import product
from math import prod
from typing import TYPE_CHECKING

from cohere.config import get_settings
from cohere.errors import AtomLimitError, ImpossibleAntecedentError
from cohere.models.events import ConditionalEvent, Constituent, Status, World
from cohere.models.formula import Formula, Not, conj

if TYPE_CHECKING:
    from cohere.models.quantity import CrqTable

logger = logging.getLogger(__name__)

_STATUS_ORDER = {Status.TRUE: 0, Status.FALSE: 1, Status.VOID: 2}


def evaluate(formula: Formula, world: World) -> bool:
    """Truth value of a formula in a world (MissingAtomError if an atom is unassigned)."""
    return formula.evaluate(world)


def admissible_worlds(
    atoms: Iterable[str],
    constraints: Sequence[Formula] = (),
    max_atoms: int | None = None,
) -> list[World]:
    """All truth assignments over ``atoms`` that make no constraint true."""
    names = tuple(sorted(set(atoms)))
    limit = max_atoms if max_atoms is not None else get_settings().max_atoms
    if len(names) > limit:
        raise AtomLimitError(len(names), limit)
    worlds = []
    for bits in product((True, False), repeat=len(names)):
        world = World(names, bits)
        if not any(c.evaluate(world) for c in constraints):
            worlds.append(world)
    logger.debug("%d admissible worlds over %d atoms", len(worlds), len(names))
    return worlds


def _constraint_atoms(constraints: Sequence[Formula]) -> frozenset[str]:
    return frozenset().union(*(c.atoms() for c in constraints))


def enumerate_constituents(
    family: Sequence[ConditionalEvent],
    constraints: Sequence[Formula] = (),
    max_atoms: int | None = None,
) -> list[Constituent]:
    """Group admissible worlds by their three-valued signature over the family.

    Returns C_1..C_m in lexicographic signature order (true < false < void per
    member), followed by C_0 (index 0) when some world makes every member void.
    """
    if not family:
        raise ValueError("family must be nonempty")
    atoms = _constraint_atoms(constraints).union(*(e.atoms() for e in family))
    worlds = admissible_worlds(atoms, constraints, max_atoms)
    for event in family:
        if not any(event.antecedent.evaluate(w) for w in worlds):
            raise ImpossibleAntecedentError(event.name)

    names = tuple(event.name for event in family)
    groups: dict[tuple[Status, ...], list[World]] = {}
    for world in worlds:
        signature = tuple(event.status(world) for event in family)
        groups.setdefault(signature, []).append(world)

    ordered = sorted(groups, key=lambda sig: [_STATUS_ORDER[s] for s in sig])
    constituents = []
    index = 1
    for signature in ordered:
        if all(s == Status.VOID for s in signature):
            continue
        constituents.append(Constituent(index, names, signature, tuple(groups[signature])))
        index += 1
    c0 = tuple(Status.VOID for _ in names)
    if c0 in groups:
        constituents.append(Constituent(0, names, c0, tuple(groups[c0])))
    return constituents


def implies(f: Formula, g: Formula, constraints: Sequence[Formula] = ()) -> bool:
    """True iff no admissible world satisfies f and not g."""
    witness = conj(f, Not(g))
    atoms = witness.atoms() | _constraint_atoms(constraints)
    return not any(witness.evaluate(w) for w in admissible_worlds(atoms, constraints))


def gn_inclusion(
    p: ConditionalEvent, q: ConditionalEvent, constraints: Sequence[Formula] = ()
) -> bool:
    """Goodman-Nguyen inclusion p ⊆ q: AH implies BK and ~BK implies ~AH."""
    truth = implies(conj(p.consequent, p.antecedent), conj(q.consequent, q.antecedent), constraints)
    falsity = implies(
        conj(Not(q.consequent), q.antecedent), conj(Not(p.consequent), p.antecedent), constraints
    )
    return truth and falsity


def is_logically_independent(
    family: Sequence[Formula | ConditionalEvent], constraints: Sequence[Formula] = ()
) -> bool:
    """Whether every combination of outcomes of the family is realizable.

    Plain events (formulas, or conditionals given T) have two outcomes; proper
    conditional events have three (true, false, void). The family is independent
    when the number of realized outcome signatures equals the product of these.
    """
    events = [
        item if isinstance(item, ConditionalEvent) else ConditionalEvent(f"e{i}", item)
        for i, item in enumerate(family, 1)
    ]
    if not events:
        return True
    atoms = _constraint_atoms(constraints).union(*(e.atoms() for e in events))
    worlds = admissible_worlds(atoms, constraints)
    realized = {tuple(e.status(w) for e in events) for w in worlds}
    expected = prod(2 if e.is_plain else 3 for e in events)
    return len(realized) == expected


def joint_family(quantities: Sequence[ConditionalEvent | CrqTable]) -> tuple[ConditionalEvent, ...]:
    """Distinct basic conditional events underlying a list of quantities, in first-seen order."""
    seen: dict[str, ConditionalEvent] = {}
    for quantity in quantities:
        members = (quantity,) if isinstance(quantity, ConditionalEvent) else quantity.family
        for event in members:
            known = seen.setdefault(event.name, event)
            if known != event:
                raise ValueError(f"two different conditional events named '{event.name}'")
    return tuple(seen.values())


def joint_constituents(
    quantities: Sequence[ConditionalEvent | CrqTable],
    constraints: Sequence[Formula] = (),
    max_atoms: int | None = None,
) -> list[Constituent]:
    """Constituents of the joint family of all quantities."""
    return enumerate_constituents(joint_family(quantities), constraints, max_atoms)
