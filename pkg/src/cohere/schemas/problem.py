"""Pydantic schemas for problem files."""

from __future__ import annotations

from fractions import Fraction
from typing import Literal

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from cohere.errors import CohereError
from cohere.utils.rationals import parse_probability

_IDENTIFIER = r"^[A-Za-z_][A-Za-z0-9_]*$"


class ConditionalSpec(BaseModel):
    """A named conditional event ``then | given``."""

    model_config = ConfigDict(extra="forbid")

    name: str = Field(pattern=_IDENTIFIER)
    then: str
    given: str = "T"


class AssessmentEntry(BaseModel):
    """A prevision for the conjunction (or disjunction) of the listed conditionals."""

    model_config = ConfigDict(extra="forbid", arbitrary_types_allowed=True)

    on: list[str] = Field(min_length=1)
    op: Literal["and", "or"] = "and"
    value: Fraction

    @field_validator("on", mode="before")
    @classmethod
    def single_name(cls, value):
        return [value] if isinstance(value, str) else value

    @field_validator("value", mode="before")
    @classmethod
    def exact_value(cls, value) -> Fraction:
        try:
            return parse_probability(value)
        except CohereError as exc:
            raise ValueError(str(exc)) from None


class QuerySpec(BaseModel):
    """What the file asks for; every field but ``kind`` depends on the kind."""

    model_config = ConfigDict(extra="forbid")

    kind: Literal["check", "extend", "table", "entail"]
    target: str | None = None
    on: list[str] = Field(default_factory=list)
    op: Literal["and", "or", "qc", "iterated"] = "and"
    premises: list[str] = Field(default_factory=list)
    conclusion: str | None = None

    @model_validator(mode="after")
    def arguments_for_kind(self) -> QuerySpec:
        if self.kind == "extend" and not (self.target or self.on):
            raise ValueError("extend query needs a target or an 'on' subset")
        if self.kind == "entail" and (not self.premises or not self.conclusion):
            raise ValueError("entail query needs premises and a conclusion")
        return self


class ProblemFile(BaseModel):
    """Top-level problem: atoms, constraints, conditionals, assessment and query."""

    model_config = ConfigDict(extra="forbid")

    atoms: list[str] = Field(default_factory=list)
    constraints: list[str] = Field(default_factory=list)
    conditionals: list[ConditionalSpec] = Field(min_length=1)
    assessment: list[AssessmentEntry] = Field(default_factory=list)
    query: QuerySpec | None = None

    @model_validator(mode="after")
    def references_resolve(self) -> ProblemFile:
        names = [c.name for c in self.conditionals]
        duplicates = sorted({n for n in names if names.count(n) > 1})
        if duplicates:
            raise ValueError(f"duplicate conditional names: {', '.join(duplicates)}")
        known = set(names)

        def check(refs: list[str], where: str) -> None:
            unknown = [r for r in refs if r not in known]
            if unknown:
                raise ValueError(f"{where} references undeclared {', '.join(unknown)}")

        for entry in self.assessment:
            check(entry.on, "assessment")
        if self.query is not None:
            q = self.query
            check(q.on + q.premises, "query")
            check([n for n in (q.target, q.conclusion) if n], "query")
        return self
