"""p-consistency and p-entailment of inference rules.

Two independent routes decide p-entailment: a search for a sub-family whose quasi
conjunction is Goodman-Nguyen included in the conclusion, and the lower end of the
conclusion's extension interval when every premise has probability 1. Both are run
and their agreement is logged.
"""

from __future__ import annotations

import logging
from collections.abc import Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import chain, combinations

from cohere.config import get_settings
from cohere.errors import CohereError
from cohere.models.bounds import Interval
from cohere.models.events import ConditionalEvent
from cohere.models.formula import Atom, Formula, disj
from cohere.models.quantity import Assessment, conjunction_symbol
from cohere.services.coherence import check_coherence, extension_interval
from cohere.services.crq import (
    conditional_table,
    conjunction_table,
    dominates,
    instantiate,
    quasi_conjunction_event,
    value_on,
)
from cohere.services.logic import enumerate_constituents, gn_inclusion, implies

logger = logging.getLogger(__name__)

ONE = Fraction(1)

ANTECEDENT_IMPLIES_CONSEQUENT = "antecedent-implies-consequent"


@dataclass(frozen=True)
class InferenceRule:
    """Premises E_1|H_1 .. E_n|H_n and a conclusion E_{n+1}|H_{n+1}."""

    name: str
    premises: tuple[ConditionalEvent, ...]
    conclusion: ConditionalEvent
    constraints: tuple[Formula, ...] = ()
    expected_valid: bool | None = None
    description: str = ""

    def __post_init__(self) -> None:
        if not self.premises:
            raise ValueError(f"rule '{self.name}' has no premises")
        names = [p.name for p in self.premises]
        if len(set(names)) != len(names) or self.conclusion.name in names:
            raise ValueError(f"rule '{self.name}' repeats an event name")
        # raises ImpossibleAntecedentError on an unsatisfiable antecedent
        enumerate_constituents([*self.premises, self.conclusion], self.constraints)

    @property
    def atoms(self) -> tuple[str, ...]:
        found = self.conclusion.atoms().union(*(p.atoms() for p in self.premises))
        for formula in self.constraints:
            found |= formula.atoms()
        return tuple(sorted(found))

    def __str__(self) -> str:
        premises = ", ".join(p.label for p in self.premises)
        return f"{{{premises}}} => {self.conclusion.label}"


@dataclass
class EntailmentVerdict:
    """Outcome of :func:`p_entails`."""

    rule: str
    p_consistent: bool
    p_valid: bool
    witness: tuple[str, ...] | str | None = None
    lp_lower_bound: Fraction | None = None
    notes: list[str] = field(default_factory=list)

    @property
    def lp_agrees(self) -> bool:
        """Whether the extension lower bound tells the same story as the subset search."""
        if self.lp_lower_bound is None:
            return True
        return (self.lp_lower_bound == 1) == self.p_valid

    @property
    def witness_text(self) -> str:
        if self.witness is None:
            return "-"
        if isinstance(self.witness, str):
            return self.witness
        return "{" + ", ".join(self.witness) + "}"


def _ones(events: Sequence[ConditionalEvent]) -> Assessment:
    return Assessment.of_events({e.name: ONE for e in events})


def _nonempty_subsets(items: Sequence) -> list[tuple]:
    return list(chain.from_iterable(combinations(items, k) for k in range(1, len(items) + 1)))


def _conjunction_ones_coherent(
    premises: Sequence[ConditionalEvent], constraints: Sequence[Formula]
) -> bool:
    """Coherence of P[C(F_S)] = 1 for every nonempty sub-family S."""
    quantities = [
        subset[0] if len(subset) == 1 else conjunction_table(list(subset), constraints=constraints)
        for subset in _nonempty_subsets(premises)
    ]
    values = {
        conjunction_symbol(e.name for e in subset): ONE for subset in _nonempty_subsets(premises)
    }
    return check_coherence(quantities, Assessment(values), constraints).coherent


def p_consistent(
    premises: Sequence[ConditionalEvent], constraints: Sequence[Formula] = ()
) -> bool:
    """Whether assigning probability 1 to every premise is coherent."""
    verdict = check_coherence(premises, _ones(premises), constraints).coherent
    if len(premises) <= get_settings().characterization_limit:
        through_conjunctions = _conjunction_ones_coherent(premises, constraints)
        if through_conjunctions != verdict:
            logger.error(
                "p-consistency disagrees: premises %s, conjunctions %s",
                verdict,
                through_conjunctions,
            )
            raise CohereError("p-consistency characterizations disagree")
    return verdict


def lp_lower_bound(rule: InferenceRule) -> Fraction:
    """Lowest coherent P(conclusion) when every premise has probability 1."""
    interval = extension_interval(
        rule.premises, _ones(rule.premises), rule.conclusion, rule.constraints
    )
    return interval.lo


def find_witness(rule: InferenceRule) -> tuple[str, ...] | None:
    """Lexicographically first sub-family whose quasi conjunction is included in the conclusion."""
    indices = range(len(rule.premises))
    for gamma in sorted(_nonempty_subsets(indices)):
        family = [rule.premises[i] for i in gamma]
        qc = quasi_conjunction_event(family)
        if gn_inclusion(qc, rule.conclusion, rule.constraints):
            logger.debug("witness for %s: %s", rule.name, [e.name for e in family])
            return tuple(e.name for e in family)
    return None


def p_entails(rule: InferenceRule) -> EntailmentVerdict:
    """Decide whether the premises p-entail the conclusion."""
    if not p_consistent(rule.premises, rule.constraints):
        return EntailmentVerdict(
            rule=rule.name,
            p_consistent=False,
            p_valid=False,
            notes=["premises are not p-consistent; p-entailment is undefined"],
        )

    verdict = EntailmentVerdict(rule=rule.name, p_consistent=True, p_valid=False)
    conclusion = rule.conclusion
    searched = True
    if implies(conclusion.antecedent, conclusion.consequent, rule.constraints):
        verdict.p_valid = True
        verdict.witness = ANTECEDENT_IMPLIES_CONSEQUENT
    elif len(rule.premises) <= get_settings().subset_limit:
        verdict.witness = find_witness(rule)
        verdict.p_valid = verdict.witness is not None
    else:
        searched = False
        verdict.notes.append("too many premises for the subset search; extension bound only")

    verdict.lp_lower_bound = lp_lower_bound(rule)
    if not searched:
        verdict.p_valid = verdict.lp_lower_bound == 1
    elif not verdict.lp_agrees:
        logger.warning(
            "%s: subset search says %s but the extension lower bound is %s",
            rule.name,
            verdict.p_valid,
            verdict.lp_lower_bound,
        )
        verdict.notes.append("subset search and extension bound disagree")
    return verdict


def _condition_assessment(rule: InferenceRule, lower: Fraction) -> Assessment:
    """Premise conjunctions at 1; every conjunction with the conclusion at ``lower``."""
    names = [p.name for p in rule.premises]
    values = {conjunction_symbol(s): ONE for s in _nonempty_subsets(names)}
    values[conjunction_symbol([rule.conclusion.name])] = lower
    for subset in _nonempty_subsets(names):
        values[conjunction_symbol([*subset, rule.conclusion.name])] = lower
    return Assessment(values)


def check_condition_ii(rule: InferenceRule, lower: Fraction | None = None) -> bool:
    """Whether C_{n+1} coincides with C_n wherever some antecedent is true."""
    lower = lp_lower_bound(rule) if lower is None else lower
    assessment = _condition_assessment(rule, lower)
    c_n = instantiate(conjunction_table(rule.premises, constraints=rule.constraints), assessment)
    c_next = instantiate(
        conjunction_table([*rule.premises, rule.conclusion], constraints=rule.constraints),
        assessment,
    )
    for cell in c_next.constituents:
        if cell.is_c0:
            continue
        if value_on(c_next, cell) != value_on(c_n, cell):
            logger.debug("%s: C_n+1 and C_n differ on %s", rule.name, cell.code)
            return False
    return True


def check_condition_iii(rule: InferenceRule, lower: Fraction | None = None) -> bool:
    """Whether C_n <= E_{n+1}|H_{n+1} wherever some antecedent is true."""
    lower = lp_lower_bound(rule) if lower is None else lower
    assessment = _condition_assessment(rule, lower)
    c_n = instantiate(conjunction_table(rule.premises, constraints=rule.constraints), assessment)
    target = instantiate(conditional_table(rule.conclusion, rule.constraints), assessment)
    return dominates(c_n, target, rule.constraints)


def monotone_consequence(
    premise: ConditionalEvent,
    conclusion: ConditionalEvent,
    value: Fraction,
    constraints: Sequence[Formula] = (),
) -> Interval:
    """Extension interval of the conclusion from P(premise) = value, for premise ⊆ conclusion."""
    if not gn_inclusion(premise, conclusion, constraints):
        raise ValueError(f"{premise.label} is not included in {conclusion.label}")
    interval = extension_interval(
        [premise], Assessment.of_events({premise.name: value}), conclusion, constraints
    )
    if interval.lo < value:
        logger.warning("inclusion did not propagate: %s < %s", interval.lo, value)
    return interval


def generalized_or(n: int) -> InferenceRule:
    """{C|A_1, .., C|A_n} => C|(A_1 | .. | A_n)."""
    if not 2 <= n <= 4:
        raise ValueError("generalized Or is provided for 2 <= n <= 4")
    c = Atom("C")
    antecedents = [Atom(f"A{i}") for i in range(1, n + 1)]
    return InferenceRule(
        name="GeneralizedOr" if n == 3 else f"GeneralizedOr{n}",
        premises=tuple(
            ConditionalEvent(f"c_a{i}", c, a) for i, a in enumerate(antecedents, 1)
        ),
        conclusion=ConditionalEvent("c_any", c, disj(*antecedents)),
        expected_valid=True,
        description=f"Or over {n} antecedents",
    )
