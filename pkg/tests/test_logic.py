"""Tests for worlds, constituents and event relations."""

import pytest

from cohere.errors import AtomLimitError, ImpossibleAntecedentError
from cohere.models.events import Status
from cohere.services.logic import (
    admissible_worlds,
    enumerate_constituents,
    gn_inclusion,
    implies,
    is_logically_independent,
    joint_constituents,
)
from cohere.services.parser import parse_formula
from tests.conftest import event


class TestWorlds:
    """World enumeration under constraints."""

    def test_all_assignments(self):
        """LOG-4: k atoms give 2^k worlds."""
        assert len(admissible_worlds(["A", "B", "C"])) == 8

    def test_constraint_removes_worlds(self):
        """LOG-5: worlds satisfying an impossible formula are dropped."""
        worlds = admissible_worlds(["A", "B"], [parse_formula("A & B")])
        assert len(worlds) == 3
        assert all(not (w["A"] and w["B"]) for w in worlds)

    def test_atom_limit(self):
        """LOG-6: enumeration above the limit is refused."""
        with pytest.raises(AtomLimitError):
            admissible_worlds([f"X{i}" for i in range(5)], max_atoms=4)


class TestConstituents:
    """Grouping worlds by three-valued signature."""

    def test_single_event(self):
        """LOG-7: E|H gives EH, ~EH and C0 = ~H."""
        cells = enumerate_constituents([event("e", "E", "H")])
        assert [c.code for c in cells] == ["T", "F", "V"]
        assert [c.index for c in cells] == [1, 2, 0]
        assert cells[-1].is_c0

    def test_three_independent_events(self, three_events):
        """LOG-8: three events over six atoms give 26 constituents plus C0."""
        cells = enumerate_constituents(three_events)
        assert len(cells) == 27
        assert cells[0].code == "TTT"
        assert cells[8].code == "TVV"
        assert cells[8].index == 9
        assert cells[-1].index == 0

    def test_partition_of_indices(self, three_events):
        """LOG-9: S', S'' and S''' partition {1, 2, 3}."""
        for cell in enumerate_constituents(three_events):
            parts = [cell.sprime, cell.sdoubleprime, cell.stripleprime]
            assert frozenset().union(*parts) == {1, 2, 3}
            assert sum(len(p) for p in parts) == 3

    def test_worlds_share_signature(self, three_events):
        """LOG-10: every world of a cell has the cell's signature."""
        for cell in enumerate_constituents(three_events):
            for world in cell.worlds:
                assert tuple(e.status(world) for e in three_events) == cell.signature

    def test_constraint_removes_cell(self):
        """LOG-11: with ~A & B & C impossible the cell ~A B C disappears."""
        family = [event("c_b", "C", "B"), event("b_a", "B", "A")]
        free = {c.signature for c in enumerate_constituents(family)}
        cells = enumerate_constituents(family, [parse_formula("~A & B & C")])
        assert (Status.TRUE, Status.VOID) in free
        assert (Status.TRUE, Status.VOID) not in {c.signature for c in cells}

    def test_impossible_antecedent(self):
        """LOG-12: an antecedent no world satisfies is rejected."""
        with pytest.raises(ImpossibleAntecedentError):
            enumerate_constituents([event("e", "B", "A & ~A")])

    def test_joint_family_deduplicates(self):
        """LOG-13: shared events appear once in the joint space."""
        a, b = event("a", "A", "H"), event("b", "B", "K")
        cells = joint_constituents([a, b, a])
        assert cells[0].names == ("a", "b")
        assert len(cells) == 9


class TestRelations:
    """Implication, inclusion and independence."""

    def test_implies(self):
        """LOG-14: A & B implies A, not conversely; F implies anything."""
        assert implies(parse_formula("A & B"), parse_formula("A"))
        assert not implies(parse_formula("A"), parse_formula("A & B"))
        assert implies(parse_formula("F"), parse_formula("B"))

    def test_inclusion_cm(self):
        """LOG-15: BC|A is included in C|AB."""
        assert gn_inclusion(event("p", "B & C", "A"), event("q", "C", "A & B"))

    def test_inclusion_weak_transitivity(self):
        """LOG-16: ABC|(A | B) is included in C|A."""
        assert gn_inclusion(event("p", "A & B & C", "A | B"), event("q", "C", "A"))

    def test_inclusion_fails(self):
        """LOG-17: C|B is not included in C|A."""
        assert not gn_inclusion(event("p", "C", "B"), event("q", "C", "A"))

    def test_independent_plain_events(self):
        """LOG-18: A and B are logically independent; A and A & B are not."""
        assert is_logically_independent([parse_formula("A"), parse_formula("B")])
        assert not is_logically_independent([parse_formula("A"), parse_formula("A & B")])

    def test_independent_conditionals(self):
        """LOG-19: E1|H1 and E2|H2 realize all nine signatures."""
        assert is_logically_independent([event("a", "E1", "H1"), event("b", "E2", "H2")])
