"""Tests for the exact rational simplex."""

from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from cohere.services.simplex import LPStatus, solve_lp

F = Fraction


def dot(u, v):
    return sum((a * b for a, b in zip(u, v)), F(0))


class TestFeasibility:
    """Phase 1 on A x = b, x >= 0."""

    def test_simplex_point(self):
        """LP-1: x1 + x2 + x3 = 1 is feasible with an exact solution."""
        result = solve_lp([[F(1), F(1), F(1)]], [F(1)])
        assert result.status == LPStatus.OPTIMAL
        assert sum(result.x) == 1
        assert all(v >= 0 for v in result.x)

    def test_negative_rhs(self):
        """LP-2: rows with a negative right-hand side are flipped."""
        result = solve_lp([[F(-1), F(1)]], [F(-1, 2)])
        assert result.feasible
        assert result.x[0] - result.x[1] == F(1, 2)

    def test_infeasible_certificate(self):
        """LP-3: x1 + x2 = 1 and x1 + x2 = 2 returns a Farkas certificate."""
        A = [[F(1), F(1)], [F(1), F(1)]]
        b = [F(1), F(2)]
        result = solve_lp(A, b)
        assert result.status == LPStatus.INFEASIBLE
        y = result.farkas
        assert dot(y, b) > 0
        assert all(dot(y, [row[j] for row in A]) <= 0 for j in range(2))

    def test_nonnegativity_infeasible(self):
        """LP-4: x1 = -1 has no nonnegative solution."""
        assert not solve_lp([[F(1)]], [F(-1)]).feasible

    def test_redundant_rows(self):
        """LP-5: a duplicated equality does not break phase 2."""
        A = [[F(1), F(2)], [F(1), F(2)]]
        result = solve_lp(A, [F(2), F(2)], c=[F(1), F(1)])
        assert result.status == LPStatus.OPTIMAL
        assert result.value == 1


class TestOptimization:
    """Phase 2 objectives."""

    def test_minimize_and_maximize(self):
        """LP-6: on x1 + x2 + x3 = 1, x3 ranges over [0, 1]."""
        A, b, c = [[F(1), F(1), F(1)]], [F(1)], [F(0), F(0), F(1)]
        assert solve_lp(A, b, c).value == 0
        assert solve_lp(A, b, c, maximize=True).value == 1

    def test_fractional_optimum(self):
        """LP-7: max x1 with 3 x1 + x2 = 2 is 2/3."""
        result = solve_lp([[F(3), F(1)]], [F(2)], c=[F(1), F(0)], maximize=True)
        assert result.value == F(2, 3)
        assert result.x == (F(2, 3), F(0))

    def test_unbounded(self):
        """LP-8: max x1 with x1 - x2 = 0 is unbounded."""
        result = solve_lp([[F(1), F(-1)]], [F(0)], c=[F(1), F(0)], maximize=True)
        assert result.status == LPStatus.UNBOUNDED

    def test_degenerate_cycle_free(self):
        """LP-9: a degenerate program terminates under Bland's rule."""
        A = [
            [F(1, 4), F(-8), F(-1), F(9), F(1), F(0), F(0)],
            [F(1, 2), F(-12), F(-1, 2), F(3), F(0), F(1), F(0)],
            [F(0), F(0), F(1), F(0), F(0), F(0), F(1)],
        ]
        c = [F(-3, 4), F(20), F(-1, 2), F(6), F(0), F(0), F(0)]
        result = solve_lp(A, [F(0), F(0), F(1)], c)
        assert result.status == LPStatus.OPTIMAL
        assert result.value == F(-5, 4)


class TestProperties:
    """Random systems built around a known point."""

    @given(
        point=st.lists(st.fractions(0, 3, max_denominator=6), min_size=3, max_size=3),
        matrix=st.lists(
            st.lists(st.fractions(-2, 2, max_denominator=4), min_size=3, max_size=3),
            min_size=1,
            max_size=3,
        ),
    )
    @settings(max_examples=40, deadline=None)
    def test_feasible_by_construction(self, point, matrix):
        """LP-10: A x0 = b with x0 >= 0 is always found feasible."""
        b = [dot(row, point) for row in matrix]
        result = solve_lp(matrix, b)
        assert result.feasible
        assert all(dot(row, result.x) == rhs for row, rhs in zip(matrix, b))
