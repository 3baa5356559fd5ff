"""Tests for formula parsing and printing."""

import pytest

from cohere.errors import FormulaSyntaxError, MissingAtomError
from cohere.models.events import World
from cohere.models.formula import FALSE, TRUE, And, Atom, Not, Or
from cohere.services.logic import evaluate
from cohere.services.parser import parse_formula, tokenize


class TestPrecedence:
    """NOT binds tighter than AND, AND tighter than OR."""

    def test_negation_binds_to_atom(self):
        """PRS-1: '~A & B' is (not A) and B."""
        assert parse_formula("~A & B") == And((Not(Atom("A")), Atom("B")))

    def test_and_before_or(self):
        """PRS-2: 'A | B & C' is A or (B and C)."""
        assert parse_formula("A | B & C") == Or((Atom("A"), And((Atom("B"), Atom("C")))))

    def test_parentheses_override(self):
        """PRS-3: parentheses regroup operands."""
        assert parse_formula("(A | B) & C") == And((Or((Atom("A"), Atom("B"))), Atom("C")))

    def test_constants(self):
        """PRS-4: T and F are the sure and impossible events."""
        assert parse_formula("T") == TRUE
        assert parse_formula("F") == FALSE

    def test_chains_are_flat(self):
        """PRS-5: repeated operators build one n-ary node."""
        formula = parse_formula("A & B & C")
        assert isinstance(formula, And)
        assert len(formula.children) == 3


class TestPrinting:
    """The printer emits text that parses back to the same tree."""

    @pytest.mark.parametrize(
        "text",
        ["~A & B", "A | B & C", "(A | B) & C", "~(A & B)", "~~A", "A & (B | ~C) | D"],
    )
    def test_printed_text_reparses(self, text):
        """PRS-6: parse(str(f)) == f."""
        formula = parse_formula(text)
        assert parse_formula(str(formula)) == formula

    def test_minimal_parentheses(self):
        """PRS-7: no parentheses where precedence already groups."""
        assert str(parse_formula("(A & B) | C")) == "A & B | C"


class TestSyntaxErrors:
    """Malformed text reports the offset of the problem."""

    def test_dangling_operator(self):
        """PRS-8: 'A &' fails at offset 3."""
        with pytest.raises(FormulaSyntaxError) as info:
            parse_formula("A &")
        assert info.value.position == 3

    def test_empty_input(self):
        """PRS-9: empty text is rejected."""
        with pytest.raises(FormulaSyntaxError):
            parse_formula("   ")

    def test_bad_character(self):
        """PRS-10: characters outside the grammar are located."""
        with pytest.raises(FormulaSyntaxError) as info:
            parse_formula("A + B")
        assert info.value.position == 2

    def test_unbalanced_parenthesis(self):
        """PRS-11: a missing ')' is reported at end of input."""
        with pytest.raises(FormulaSyntaxError, match="end of input"):
            parse_formula("(A | B")

    def test_tokens_end_marker(self):
        """PRS-12: the token stream ends with an end marker at len(text)."""
        tokens = tokenize("A|B")
        assert [t.kind for t in tokens] == ["ident", "|", "ident", "end"]
        assert tokens[-1].position == 3


class TestEvaluation:
    """Truth values in a world."""

    def test_conjunction_false(self):
        """LOG-1: A & B is false when B is false."""
        world = World(("A", "B"), (True, False))
        assert evaluate(parse_formula("A & B"), world) is False

    def test_tautology(self):
        """LOG-2: ~A | A holds in every world."""
        for bit in (True, False):
            assert evaluate(parse_formula("~A | A"), World(("A",), (bit,)))
        assert evaluate(TRUE, World((), ()))

    def test_missing_atom(self):
        """LOG-3: an unassigned atom raises MissingAtomError."""
        with pytest.raises(MissingAtomError):
            evaluate(parse_formula("A & C"), World(("A", "B"), (True, True)))
