"""Problem-file importer: JSON text to engine objects."""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from pydantic import ValidationError

from cohere.errors import CohereError, ProblemFileError
from cohere.models.events import ConditionalEvent
from cohere.models.formula import Formula
from cohere.models.quantity import Assessment, conjunction_symbol, disjunction_symbol
from cohere.schemas.problem import AssessmentEntry, ProblemFile, QuerySpec
from cohere.services.crq import Quantity, conjunction_table, disjunction_table
from cohere.services.parser import parse_formula

logger = logging.getLogger(__name__)


@dataclass
class Problem:
    """A loaded problem, ready for the engine."""

    source: str
    events: dict[str, ConditionalEvent]
    constraints: tuple[Formula, ...]
    quantities: list[Quantity]
    assessment: Assessment
    query: QuerySpec | None = None

    def select(self, names: list[str]) -> list[ConditionalEvent]:
        return [self.events[name] for name in names]


class ProblemImporter:
    """Build a :class:`Problem` from a validated :class:`ProblemFile`."""

    def __init__(self, source: str = "<memory>"):
        self.source = source
        self.stats = {"conditionals": 0, "constraints": 0, "assessed": 0}

    def _formula(self, text: str, where: str) -> Formula:
        try:
            return parse_formula(text)
        except CohereError as exc:
            raise ProblemFileError(f"{self.source}: {where}: {exc}") from None

    def _quantity(
        self,
        entry: AssessmentEntry,
        events: dict[str, ConditionalEvent],
        constraints: tuple[Formula, ...],
    ) -> Quantity:
        members = [events[name] for name in entry.on]
        if len(members) == 1:
            return members[0]
        if entry.op == "or":
            return disjunction_table(members, constraints=constraints)
        return conjunction_table(members, constraints=constraints)

    def build(self, spec: ProblemFile) -> Problem:
        constraints = tuple(
            self._formula(text, f"constraint {i}") for i, text in enumerate(spec.constraints, 1)
        )
        events: dict[str, ConditionalEvent] = {}
        for item in spec.conditionals:
            events[item.name] = ConditionalEvent(
                item.name,
                self._formula(item.then, f"conditional {item.name}"),
                self._formula(item.given, f"conditional {item.name}"),
            )

        if spec.atoms:
            declared = set(spec.atoms)
            used = set().union(*(e.atoms() for e in events.values()))
            for formula in constraints:
                used |= formula.atoms()
            undeclared = sorted(used - declared)
            if undeclared:
                raise ProblemFileError(
                    f"{self.source}: undeclared atoms {', '.join(undeclared)}"
                )

        values: dict = {}
        quantities: list[Quantity] = []
        for entry in spec.assessment:
            maker = disjunction_symbol if entry.op == "or" else conjunction_symbol
            symbol = maker(entry.on)
            if symbol in values and values[symbol] != entry.value:
                raise ProblemFileError(f"{self.source}: {symbol} assessed twice")
            values[symbol] = Fraction(entry.value)
            quantities.append(self._quantity(entry, events, constraints))

        self.stats.update(
            conditionals=len(events), constraints=len(constraints), assessed=len(values)
        )
        logger.debug("loaded %s: %s", self.source, self.stats)
        return Problem(
            source=self.source,
            events=events,
            constraints=constraints,
            quantities=quantities,
            assessment=Assessment(values),
            query=spec.query,
        )

    def parse(self, text: str) -> Problem:
        try:
            raw = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ProblemFileError(
                f"{self.source}: invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}"
            ) from None
        try:
            spec = ProblemFile.model_validate(raw)
        except ValidationError as exc:
            details = "; ".join(
                f"{'.'.join(map(str, err['loc'])) or '<root>'}: {err['msg']}"
                for err in exc.errors()
            )
            raise ProblemFileError(f"{self.source}: {details}") from None
        return self.build(spec)


def load_problem(file_path: Path | str) -> Problem:
    """Read and validate a problem file."""
    file_path = Path(file_path)
    if not file_path.exists():
        raise ProblemFileError(f"file not found: {file_path}")
    return ProblemImporter(str(file_path)).parse(file_path.read_text(encoding="utf-8"))
