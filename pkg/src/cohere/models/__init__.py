"""Immutable domain types."""

from cohere.models.bounds import Interval, LambdaWeights, ThreeEventAssessment
from cohere.models.events import ConditionalEvent, Constituent, Status, World
from cohere.models.formula import FALSE, TRUE, And, Atom, Const, Formula, Not, Or
from cohere.models.quantity import (
    Assessment,
    Complement,
    Connective,
    CrqTable,
    CrqValue,
    PrevisionSymbol,
    TableKind,
)

__all__ = [
    "And",
    "Assessment",
    "Atom",
    "Complement",
    "ConditionalEvent",
    "Connective",
    "Const",
    "Constituent",
    "CrqTable",
    "CrqValue",
    "FALSE",
    "Formula",
    "Interval",
    "LambdaWeights",
    "Not",
    "Or",
    "PrevisionSymbol",
    "Status",
    "TRUE",
    "TableKind",
    "ThreeEventAssessment",
    "World",
]
