"""Closed-form bounds and coherence regions for conjunctions of conditional events."""

from __future__ import annotations

from collections.abc import Sequence
from fractions import Fraction

from cohere.errors import IncoherentAssessmentError, OutOfRangeError, RegionError
from cohere.models.bounds import Interval, LambdaWeights, ThreeEventAssessment

ZERO = Fraction(0)
ONE = Fraction(1)

# Points (mu_n, x_{n+1}, mu_{n+1}) spanning the coherent step region.
STEP_POINTS: tuple[tuple[Fraction, ...], ...] = (
    (ONE, ONE, ONE),
    (ONE, ZERO, ZERO),
    (ZERO, ONE, ZERO),
    (ZERO, ZERO, ZERO),
)


def _check(*values: Fraction) -> None:
    for value in values:
        if not 0 <= value <= 1:
            raise OutOfRangeError(value)


def frechet_two(x: Fraction, y: Fraction) -> Interval:
    """Coherent values of P[(A|H) and (B|K)] given P(A|H)=x, P(B|K)=y."""
    _check(x, y)
    return Interval(max(x + y - 1, ZERO), min(x, y))


def frechet_conjunction_n(xs: Sequence[Fraction]) -> Interval:
    if not xs:
        raise ValueError("at least one probability is required")
    _check(*xs)
    return Interval(max(sum(xs, ZERO) - (len(xs) - 1), ZERO), min(xs))


def frechet_disjunction_n(xs: Sequence[Fraction]) -> Interval:
    if not xs:
        raise ValueError("at least one probability is required")
    _check(*xs)
    return Interval(max(xs), min(sum(xs, ZERO), ONE))


def conj_step_bounds(mu_n: Fraction, x_next: Fraction) -> Interval:
    """Bounds on P(C_{n+1}) from P(C_n) and P(E_{n+1}|H_{n+1})."""
    return frechet_two(mu_n, x_next)


def reverse_region_contains(mu_next: Fraction, mu_n: Fraction, x_next: Fraction) -> bool:
    """Whether (mu_n, x_next) is compatible with P(C_{n+1}) = mu_next."""
    _check(mu_next, mu_n, x_next)
    return mu_next <= mu_n <= 1 and mu_next <= x_next <= 1 + mu_next - mu_n


def reverse_region_n(mu_next: Fraction, mu_n: Fraction) -> Interval:
    """Values of x_{n+1} compatible with P(C_n) = mu_n and P(C_{n+1}) = mu_next."""
    _check(mu_next, mu_n)
    if mu_n < mu_next:
        raise RegionError(f"P(C_n)={mu_n} is below P(C_n+1)={mu_next}")
    return Interval(mu_next, 1 + mu_next - mu_n)


def lambda_decomposition(mu_n: Fraction, x_next: Fraction, mu_next: Fraction) -> LambdaWeights:
    """Unique weights on STEP_POINTS reproducing (mu_n, x_next, mu_next).

    Uses 1 - mu_n - x + mu_{n+1} for the last weight in every case, including
    mu_{n+1} = 0.
    """
    _check(mu_n, x_next, mu_next)
    return LambdaWeights(
        (mu_next, mu_n - mu_next, x_next - mu_next, 1 - mu_n - x_next + mu_next)
    )


def _slack(a: ThreeEventAssessment) -> Fraction:
    return 1 - a.x1 - a.x2 - a.x3 + a.x12 + a.x13 + a.x23


def triple_bounds(a: ThreeEventAssessment) -> tuple[Fraction, Fraction]:
    """(lo, hi) for x123; the prefix is coherent iff every prefix line holds and lo <= hi."""
    lo = max(ZERO, a.x12 + a.x13 - a.x1, a.x12 + a.x23 - a.x2, a.x13 + a.x23 - a.x3)
    hi = min(a.x12, a.x13, a.x23, _slack(a))
    return lo, hi


def prefix_lines(a: ThreeEventAssessment) -> list[bool]:
    """The conditions on (x1, x2, x3, x12, x13, x23) alone."""
    return [
        max(a.x1 + a.x2 - 1, a.x13 + a.x23 - a.x3, ZERO) <= a.x12 <= min(a.x1, a.x2),
        max(a.x1 + a.x3 - 1, a.x12 + a.x23 - a.x2, ZERO) <= a.x13 <= min(a.x1, a.x3),
        max(a.x2 + a.x3 - 1, a.x12 + a.x13 - a.x1, ZERO) <= a.x23 <= min(a.x2, a.x3),
        _slack(a) >= 0,
    ]


def three_event_prefix_coherent(a: ThreeEventAssessment) -> bool:
    lo, hi = triple_bounds(a)
    return all(prefix_lines(a)) and lo <= hi


def three_event_region_check(a: ThreeEventAssessment) -> bool:
    """Whether all seven values form a coherent assessment on the conjunction lattice."""
    if a.x123 is None:
        raise RegionError("x123 is required for the full region check")
    lo, hi = triple_bounds(a)
    return all(prefix_lines(a)) and lo <= a.x123 <= hi


def three_event_extension_bounds(a: ThreeEventAssessment) -> Interval:
    """Coherent values of x123 for a coherent six-value prefix."""
    if not three_event_prefix_coherent(a):
        raise IncoherentAssessmentError("the six-value prefix is not coherent")
    return Interval(*triple_bounds(a))


def sigma_prime_points() -> tuple[tuple[Fraction, ...], ...]:
    """The eight points over (x1, x2, x3, x12, x13, x23, x123), E1 sign most significant."""
    points = []
    for e1 in (1, 0):
        for e2 in (1, 0):
            for e3 in (1, 0):
                points.append(
                    tuple(
                        Fraction(v)
                        for v in (e1, e2, e3, e1 * e2, e1 * e3, e2 * e3, e1 * e2 * e3)
                    )
                )
    return tuple(points)


def sigma_prime_weights(a: ThreeEventAssessment) -> tuple[Fraction, ...]:
    """The closed-form weights, possibly negative outside the region."""
    if a.x123 is None:
        raise RegionError("x123 is required")
    t = a.x123
    return (
        t,
        a.x12 - t,
        a.x13 - t,
        a.x1 - a.x12 - a.x13 + t,
        a.x23 - t,
        a.x2 - a.x12 - a.x23 + t,
        a.x3 - a.x13 - a.x23 + t,
        1 - a.x1 - a.x2 - a.x3 + a.x12 + a.x13 + a.x23 - t,
    )


def sigma_prime_solution(a: ThreeEventAssessment) -> LambdaWeights:
    """Unique weights on :func:`sigma_prime_points` reproducing the assessment."""
    return LambdaWeights(sigma_prime_weights(a))
