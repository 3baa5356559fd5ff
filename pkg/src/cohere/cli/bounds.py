"""Closed-form bounds and region checks on numbers given on the command line."""

from __future__ import annotations

from collections.abc import Callable
from fractions import Fraction

import typer

from cohere.cli.output import emit, guarded
from cohere.errors import ProblemFileError
from cohere.models.bounds import ThreeEventAssessment
from cohere.services import bounds
from cohere.services.export import value_report
from cohere.utils.rationals import parse_probability


def _reverse(*values: Fraction):
    if len(values) == 2:
        return bounds.reverse_region_n(*values)
    return bounds.reverse_region_contains(*values)


def _sigma_prime(*values: Fraction):
    weights = bounds.sigma_prime_weights(ThreeEventAssessment(*values))
    return tuple(weights)


# kind -> (accepted argument counts, None for one or more; computation)
KINDS: dict[str, tuple[tuple[int, ...] | None, Callable]] = {
    "frechet-two": ((2,), bounds.frechet_two),
    "frechet-and": (None, lambda *xs: bounds.frechet_conjunction_n(xs)),
    "frechet-or": (None, lambda *xs: bounds.frechet_disjunction_n(xs)),
    "step": ((2,), bounds.conj_step_bounds),
    "reverse": ((2, 3), _reverse),
    "lambda": ((3,), lambda *v: bounds.lambda_decomposition(*v).weights),
    "three-event": ((7,), lambda *v: bounds.three_event_region_check(ThreeEventAssessment(*v))),
    "three-event-extend": (
        (6,),
        lambda *v: bounds.three_event_extension_bounds(ThreeEventAssessment(*v)),
    ),
    "sigma-prime": ((7,), _sigma_prime),
}


@guarded
def compute_bounds(
    kind: str = typer.Argument(..., help=f"One of: {', '.join(KINDS)}"),
    numbers: list[str] = typer.Argument(..., help="Probabilities as p/q or decimals"),
) -> None:
    """Evaluate a closed-form bound or region membership.

    reverse takes (mu_next, mu_n) for the interval of x_{n+1}, or
    (mu_next, mu_n, x_{n+1}) for membership; lambda takes (mu_n, x_{n+1}, mu_next).
    """
    if kind not in KINDS:
        raise ProblemFileError(f"unknown kind '{kind}', expected one of {', '.join(KINDS)}")
    arities, compute = KINDS[kind]
    values = [parse_probability(n) for n in numbers]
    if arities is not None and len(values) not in arities:
        expected = " or ".join(map(str, arities))
        raise ProblemFileError(f"{kind} takes {expected} numbers, got {len(values)}")
    result = compute(*values)
    report = value_report(kind, result)
    if kind == "sigma-prime":
        inside = all(w >= 0 for w in result)
        report.add("inside", "yes" if inside else "no")
        report.status = 0 if inside else 1
    emit(report)
