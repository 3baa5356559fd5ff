"""Shared fixtures and hypothesis strategies."""

from fractions import Fraction
from itertools import product
from pathlib import Path

import pytest
from hypothesis import strategies as st

from cohere.config import get_settings
from cohere.models.events import ConditionalEvent, World
from cohere.services.parser import parse_formula

DATA_DIR = Path(__file__).resolve().parent.parent / "data"


def event(name: str, then: str, given: str = "T") -> ConditionalEvent:
    """Conditional event from formula text."""
    return ConditionalEvent(name, parse_formula(then), parse_formula(given))


def F(text: str) -> Fraction:
    return Fraction(text)


@pytest.fixture(autouse=True)
def fresh_settings():
    """Every test starts from default settings."""
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()


@pytest.fixture
def data_dir() -> Path:
    return DATA_DIR


@pytest.fixture
def three_events() -> list[ConditionalEvent]:
    """E1|H1, E2|H2, E3|H3 over six logically independent atoms."""
    return [event(f"e{i}", f"E{i}", f"H{i}") for i in (1, 2, 3)]


def rationals(max_denominator: int = 12) -> st.SearchStrategy[Fraction]:
    """Rationals in [0, 1] with small denominators."""
    return st.integers(1, max_denominator).flatmap(
        lambda q: st.integers(0, q).map(lambda p: Fraction(p, q))
    )


@st.composite
def world_distributions(draw, atoms: tuple[str, ...], max_weight: int = 6):
    """Strictly positive weights on every world over ``atoms``."""
    atoms = tuple(sorted(atoms))
    return {
        World(atoms, bits): Fraction(draw(st.integers(1, max_weight)))
        for bits in product((True, False), repeat=len(atoms))
    }


@st.composite
def convex_weights(draw, size: int, max_weight: int = 6):
    """A rational probability vector of the given size."""
    raw = [draw(st.integers(0, max_weight)) for _ in range(size)]
    if not any(raw):
        raw[draw(st.integers(0, size - 1))] = 1
    total = sum(raw)
    return tuple(Fraction(w, total) for w in raw)
