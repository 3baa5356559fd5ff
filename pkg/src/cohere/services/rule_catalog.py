"""Named inference rules with their known verdicts."""

from __future__ import annotations

from functools import lru_cache

from cohere.errors import UnknownRuleError
from cohere.models.events import ConditionalEvent
from cohere.services.entailment import InferenceRule, generalized_or
from cohere.services.parser import parse_formula


def _event(name: str, then: str, given: str = "T") -> ConditionalEvent:
    return ConditionalEvent(name, parse_formula(then), parse_formula(given))


def _rule(
    name: str,
    premises: list[ConditionalEvent],
    conclusion: ConditionalEvent,
    valid: bool,
    description: str,
    constraints: tuple[str, ...] = (),
) -> InferenceRule:
    return InferenceRule(
        name=name,
        premises=tuple(premises),
        conclusion=conclusion,
        constraints=tuple(parse_formula(c) for c in constraints),
        expected_valid=valid,
        description=description,
    )


@lru_cache(maxsize=1)
def builtin_rules() -> tuple[InferenceRule, ...]:
    """System P rules, their classical companions and the Weak Transitivity variants."""
    c_a = _event("c_a", "C", "A")
    b_a = _event("b_a", "B", "A")
    c_b = _event("c_b", "C", "B")
    c_ab = _event("c_ab", "C", "A & B")
    return (
        _rule("And", [b_a, c_a], _event("bc_a", "B & C", "A"), True, "System P And"),
        _rule("Cut", [c_ab, b_a], c_a, True, "System P Cut"),
        _rule(
            "CCT",
            [c_ab, b_a],
            _event("bc_a", "B & C", "A"),
            True,
            "Conjunctive Cumulative Transitivity",
        ),
        _rule("CM", [c_a, b_a], c_ab, True, "Cautious Monotonicity"),
        _rule("Or", [c_a, c_b], _event("c_aorb", "C", "A | B"), True, "System P Or"),
        _rule(
            "AdamsRule5",
            [_event("c_aorb", "C", "A | B"), _event("nc_a", "~C", "A")],
            c_b,
            True,
            "from C given A or B and not-C given A infer C given B",
        ),
        generalized_or(3),
        _rule("Transitivity", [c_b, b_a], c_a, False, "Transitivity"),
        _rule(
            "DenialOfAntecedent",
            [_event("na", "~A"), c_a],
            _event("nc", "~C"),
            False,
            "from not-A and C given A infer not-C",
        ),
        _rule(
            "AffirmationOfConsequent",
            [_event("c", "C"), c_a],
            _event("a", "A"),
            False,
            "from C and C given A infer A",
        ),
        _rule("BooleCombining", [c_a, c_b], c_ab, False, "combining evidence"),
        _rule(
            "WeakTransitivityA",
            [c_b, b_a, _event("a_aorb", "A", "A | B")],
            c_a,
            True,
            "Transitivity with the extra premise A given A or B",
        ),
        _rule(
            "WeakTransitivityB",
            [c_b, b_a],
            c_a,
            True,
            "Transitivity with not-A, B, C impossible",
            constraints=("~A & B & C",),
        ),
    )


def get_rule(name: str) -> InferenceRule:
    """Catalog lookup, case-insensitive; ``GeneralizedOrN`` builds the n-ary Or."""
    for rule in builtin_rules():
        if rule.name.lower() == name.lower():
            return rule
    lowered = name.lower()
    if lowered.startswith("generalizedor") and lowered[len("generalizedor"):].isdigit():
        n = int(lowered[len("generalizedor"):])
        if 2 <= n <= 4:
            return generalized_or(n)
    raise UnknownRuleError(name)
