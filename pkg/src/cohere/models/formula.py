"""Boolean formula trees over named atoms.

Nodes are immutable and hashable. ``str(formula)`` is the canonical printer: it emits
the minimal parentheses for the precedence NOT > AND > OR, so that parsing the printed
text rebuilds the same tree.
"""

from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass

from cohere.errors import MissingAtomError

OR_PRECEDENCE = 1
AND_PRECEDENCE = 2
NOT_PRECEDENCE = 3
ATOM_PRECEDENCE = 4


class Formula:
    """Base class for formula nodes."""

    precedence = ATOM_PRECEDENCE

    def atoms(self) -> frozenset[str]:
        raise NotImplementedError

    def evaluate(self, world: Mapping[str, bool]) -> bool:
        raise NotImplementedError


@dataclass(frozen=True)
class Atom(Formula):
    name: str

    def atoms(self) -> frozenset[str]:
        return frozenset({self.name})

    def evaluate(self, world: Mapping[str, bool]) -> bool:
        if self.name not in world:
            raise MissingAtomError(self.name)
        return world[self.name]

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class Const(Formula):
    """The sure event (``T``) or the impossible event (``F``)."""

    value: bool

    def atoms(self) -> frozenset[str]:
        return frozenset()

    def evaluate(self, world: Mapping[str, bool]) -> bool:
        return self.value

    def __str__(self) -> str:
        return "T" if self.value else "F"


@dataclass(frozen=True)
class Not(Formula):
    child: Formula

    precedence = NOT_PRECEDENCE

    def atoms(self) -> frozenset[str]:
        return self.child.atoms()

    def evaluate(self, world: Mapping[str, bool]) -> bool:
        return not self.child.evaluate(world)

    def __str__(self) -> str:
        inner = str(self.child)
        if self.child.precedence < NOT_PRECEDENCE:
            inner = f"({inner})"
        return f"~{inner}"


@dataclass(frozen=True)
class _Junction(Formula):
    children: tuple[Formula, ...]

    symbol = ""

    def __post_init__(self) -> None:
        if len(self.children) < 2:
            raise ValueError(f"{type(self).__name__} needs at least two operands")

    def atoms(self) -> frozenset[str]:
        return frozenset().union(*(child.atoms() for child in self.children))

    def __str__(self) -> str:
        parts = []
        for child in self.children:
            text = str(child)
            # same-operator children keep their grouping
            if child.precedence <= self.precedence:
                text = f"({text})"
            parts.append(text)
        return f" {self.symbol} ".join(parts)


@dataclass(frozen=True)
class And(_Junction):
    precedence = AND_PRECEDENCE
    symbol = "&"

    def evaluate(self, world: Mapping[str, bool]) -> bool:
        # evaluate every child so a missing atom is always reported
        values = [child.evaluate(world) for child in self.children]
        return all(values)


@dataclass(frozen=True)
class Or(_Junction):
    precedence = OR_PRECEDENCE
    symbol = "|"

    def evaluate(self, world: Mapping[str, bool]) -> bool:
        values = [child.evaluate(world) for child in self.children]
        return any(values)


TRUE = Const(True)
FALSE = Const(False)


def conj(*formulas: Formula) -> Formula:
    """Conjunction of one or more formulas (a single operand is returned as is)."""
    if not formulas:
        return TRUE
    return formulas[0] if len(formulas) == 1 else And(tuple(formulas))


def disj(*formulas: Formula) -> Formula:
    if not formulas:
        return FALSE
    return formulas[0] if len(formulas) == 1 else Or(tuple(formulas))
