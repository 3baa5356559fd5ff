"""Prevision symbols, conditional random quantity tables and assessments."""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Mapping, Sequence
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from functools import cached_property

from cohere.errors import MissingSymbolError, OutOfRangeError
from cohere.models.events import ConditionalEvent, Constituent, Status
from cohere.models.formula import Formula, disj


class Connective(str, Enum):
    AND = "and"
    OR = "or"


@dataclass(frozen=True, eq=False)
class PrevisionSymbol:
    """Placeholder x_S (conjunction) or y_S (disjunction) for a subset S of a family.

    S is a set of conditional-event names. For a singleton, conjunction and
    disjunction coincide with the event itself, so both kinds compare equal.
    """

    kind: Connective
    members: frozenset[str]

    def __post_init__(self) -> None:
        if not self.members:
            raise ValueError("prevision symbol over an empty subset")

    @property
    def key(self) -> tuple[Connective, frozenset[str]]:
        if len(self.members) == 1:
            return (Connective.AND, self.members)
        return (self.kind, self.members)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, PrevisionSymbol) and self.key == other.key

    def __hash__(self) -> int:
        return hash(self.key)

    def label(self, order: Sequence[str] | None = None) -> str:
        """``x1`` / ``y{2,3}`` against a family order, else ``x{a,b}`` by name."""
        letter = "x" if self.kind == Connective.AND else "y"
        if order is not None and self.members <= set(order):
            indices = sorted(order.index(name) + 1 for name in self.members)
            if len(indices) == 1:
                return f"{letter}{indices[0]}"
            return f"{letter}{{{','.join(map(str, indices))}}}"
        return f"{letter}{{{','.join(sorted(self.members))}}}"

    def __str__(self) -> str:
        return self.label()


def conjunction_symbol(names: Iterable[str]) -> PrevisionSymbol:
    return PrevisionSymbol(Connective.AND, frozenset(names))


def disjunction_symbol(names: Iterable[str]) -> PrevisionSymbol:
    return PrevisionSymbol(Connective.OR, frozenset(names))


@dataclass(frozen=True)
class Complement:
    """The formal quantity 1 - s."""

    symbol: PrevisionSymbol

    def label(self, order: Sequence[str] | None = None) -> str:
        return f"1-{self.symbol.label(order)}"

    def __str__(self) -> str:
        return self.label()


CrqValue = Fraction | PrevisionSymbol | Complement


def render_value(value: CrqValue, order: Sequence[str] | None = None) -> str:
    if isinstance(value, Fraction):
        return str(value)
    return value.label(order)


class TableKind(str, Enum):
    CONJUNCTION = "and"
    DISJUNCTION = "or"
    QUASI_CONJUNCTION = "qc"
    ITERATED = "iterated"


@dataclass(frozen=True)
class CrqTable:
    """A conditional random quantity given as its value on every constituent.

    ``entries[k]`` is the value on ``constituents[k]``; the value on C0 (when present)
    is ``symbol``, the prevision of the quantity itself.
    """

    kind: TableKind
    family: tuple[ConditionalEvent, ...]
    constituents: tuple[Constituent, ...]
    entries: tuple[CrqValue, ...]
    symbol: PrevisionSymbol | Complement | None
    negated: bool = False
    dual_family: tuple[ConditionalEvent, ...] = field(default=(), compare=False)

    def __post_init__(self) -> None:
        if len(self.constituents) != len(self.entries):
            raise ValueError("constituents and entries differ in length")

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(event.name for event in self.family)

    @property
    def name(self) -> str:
        if self.kind == TableKind.CONJUNCTION and len(self.family) == 1:
            label = self.family[0].name
        else:
            label = f"{self.kind.value}({','.join(self.names)})"
        return f"~{label}" if self.negated else label

    @property
    def antecedent(self) -> Formula:
        return disj(*(event.antecedent for event in self.family))

    @cached_property
    def _by_signature(self) -> dict[tuple[Status, ...], CrqValue]:
        return {c.signature: v for c, v in zip(self.constituents, self.entries)}

    def value_for(self, signature: tuple[Status, ...]) -> CrqValue:
        """Entry for a member signature (ordered like ``family``)."""
        try:
            return self._by_signature[signature]
        except KeyError:
            code = "".join(s.value for s in signature)
            raise ValueError(f"signature {code} is not a constituent of {self.name}") from None

    @property
    def is_numeric(self) -> bool:
        return all(isinstance(v, Fraction) for v in self.entries)

    def symbols(self) -> set[PrevisionSymbol]:
        found: set[PrevisionSymbol] = set()
        for value in self.entries:
            if isinstance(value, PrevisionSymbol):
                found.add(value)
            elif isinstance(value, Complement):
                found.add(value.symbol)
        return found

    def rows(self) -> Iterator[tuple[str, str, str]]:
        """(``C_h``, signature code, rendered value) per constituent."""
        for constituent, value in zip(self.constituents, self.entries):
            yield f"C_{constituent.index}", constituent.code, render_value(value, self.names)


class Assessment(Mapping[PrevisionSymbol, Fraction]):
    """Exact values for prevision symbols, every value in [0, 1]."""

    def __init__(self, values: Mapping[PrevisionSymbol, Fraction] | None = None):
        self._values: dict[PrevisionSymbol, Fraction] = {}
        for symbol, value in (values or {}).items():
            value = Fraction(value)
            if not 0 <= value <= 1:
                raise OutOfRangeError(value, f"value of {symbol}")
            self._values[symbol] = value

    @classmethod
    def of_events(cls, values: Mapping[str, Fraction]) -> Assessment:
        """Assessment of plain conditional probabilities, keyed by event name."""
        return cls({conjunction_symbol([name]): value for name, value in values.items()})

    def __getitem__(self, symbol: PrevisionSymbol) -> Fraction:
        try:
            return self._values[symbol]
        except KeyError:
            raise MissingSymbolError(str(symbol)) from None

    def __contains__(self, symbol: object) -> bool:
        return symbol in self._values

    def get(self, symbol: PrevisionSymbol, default: Fraction | None = None) -> Fraction | None:
        return self._values.get(symbol, default)

    def __iter__(self) -> Iterator[PrevisionSymbol]:
        return iter(self._values)

    def __len__(self) -> int:
        return len(self._values)

    def __repr__(self) -> str:
        inner = ", ".join(f"{s}={v}" for s, v in self._values.items())
        return f"Assessment({inner})"

    def resolve(self, value: CrqValue) -> Fraction:
        """Numeric value of a table entry under this assessment."""
        if isinstance(value, Fraction):
            return value
        if isinstance(value, Complement):
            return 1 - self[value.symbol]
        return self[value]

    def with_values(self, values: Mapping[PrevisionSymbol, Fraction]) -> Assessment:
        merged = dict(self._values)
        merged.update(values)
        return Assessment(merged)
