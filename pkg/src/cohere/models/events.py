"""Conditional events, possible worlds and constituents."""

from __future__ import annotations

from collections.abc import Iterator, Mapping
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property

from cohere.models.formula import TRUE, Atom, Const, Formula, Not


class Status(str, Enum):
    """Three-valued status of a conditional event in a world."""

    TRUE = "T"
    FALSE = "F"
    VOID = "V"


@dataclass(frozen=True)
class World(Mapping[str, bool]):
    """A total truth assignment over a fixed, ordered atom set."""

    atoms: tuple[str, ...]
    bits: tuple[bool, ...]

    def __post_init__(self) -> None:
        if len(self.atoms) != len(self.bits):
            raise ValueError("atoms and bits differ in length")

    @cached_property
    def _lookup(self) -> dict[str, bool]:
        return dict(zip(self.atoms, self.bits))

    def __getitem__(self, atom: str) -> bool:
        return self._lookup[atom]

    def __iter__(self) -> Iterator[str]:
        return iter(self.atoms)

    def __len__(self) -> int:
        return len(self.atoms)

    def __hash__(self) -> int:
        return hash((self.atoms, self.bits))

    def label(self) -> str:
        """Compact rendering such as ``A ~B C``."""
        return " ".join(a if b else f"~{a}" for a, b in zip(self.atoms, self.bits))


def _render(formula: Formula) -> str:
    if isinstance(formula, (Atom, Const)) or (
        isinstance(formula, Not) and isinstance(formula.child, Atom)
    ):
        return str(formula)
    return f"({formula})"


@dataclass(frozen=True)
class ConditionalEvent:
    """The three-valued entity E|H: true on EH, false on ~EH, void on ~H.

    A plain event E is represented as E|T.
    """

    name: str
    consequent: Formula
    antecedent: Formula = TRUE

    def status(self, world: Mapping[str, bool]) -> Status:
        if not self.antecedent.evaluate(world):
            return Status.VOID
        return Status.TRUE if self.consequent.evaluate(world) else Status.FALSE

    def atoms(self) -> frozenset[str]:
        return self.consequent.atoms() | self.antecedent.atoms()

    def negated(self, name: str | None = None) -> ConditionalEvent:
        """~E|H, named ``~name`` unless a name is given."""
        return ConditionalEvent(name or f"~{self.name}", Not(self.consequent), self.antecedent)

    @property
    def is_plain(self) -> bool:
        return self.antecedent == TRUE

    @property
    def label(self) -> str:
        if self.is_plain:
            return str(self.consequent)
        return f"{_render(self.consequent)}|{_render(self.antecedent)}"

    def __str__(self) -> str:
        return self.label


@dataclass(frozen=True)
class Constituent:
    """One cell of the partition generated by a family of conditional events.

    ``index`` 0 is reserved for C0, the cell where every member is void.
    ``signature[i]`` is the status of ``names[i]`` on every world of the cell.
    """

    index: int
    names: tuple[str, ...]
    signature: tuple[Status, ...]
    worlds: tuple[World, ...] = field(compare=False)

    def status_of(self, name: str) -> Status:
        return self.signature[self.names.index(name)]

    def project(self, names: tuple[str, ...]) -> tuple[Status, ...]:
        """Signature restricted to a sub-family, in the given order."""
        return tuple(self.status_of(name) for name in names)

    @property
    def sprime(self) -> frozenset[int]:
        """1-based indices of the members made true."""
        return self._indices(Status.TRUE)

    @property
    def sdoubleprime(self) -> frozenset[int]:
        return self._indices(Status.FALSE)

    @property
    def stripleprime(self) -> frozenset[int]:
        return self._indices(Status.VOID)

    @property
    def is_c0(self) -> bool:
        return all(s == Status.VOID for s in self.signature)

    def _indices(self, status: Status) -> frozenset[int]:
        return frozenset(i + 1 for i, s in enumerate(self.signature) if s == status)

    @property
    def code(self) -> str:
        return "".join(s.value for s in self.signature)
