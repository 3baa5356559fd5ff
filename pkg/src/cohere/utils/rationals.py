"""Exact parsing and formatting of rational numbers."""

from __future__ import annotations

import re
from decimal import Decimal, InvalidOperation
from fractions import Fraction

from cohere.config import get_settings
from cohere.errors import OutOfRangeError, ProblemFileError

_RATIO = re.compile(r"^\s*([+-]?\d+)\s*/\s*(\d+)\s*$")


def parse_rational(text: str | int | float | Fraction) -> Fraction:
    """Parse ``p/q`` or a finite decimal such as ``0.6`` exactly.

    Floats are taken through their shortest decimal repr, so 0.1 becomes 1/10.
    """
    if isinstance(text, Fraction):
        return text
    if isinstance(text, bool):
        raise ProblemFileError(f"not a number: {text!r}")
    if isinstance(text, int):
        return Fraction(text)
    if isinstance(text, float):
        text = repr(text)
    match = _RATIO.match(text)
    if match:
        numerator, denominator = int(match.group(1)), int(match.group(2))
        if denominator == 0:
            raise ProblemFileError(f"zero denominator in '{text.strip()}'")
        return Fraction(numerator, denominator)
    try:
        value = Decimal(text.strip())
    except InvalidOperation:
        raise ProblemFileError(f"not a rational number: '{text}'") from None
    if not value.is_finite():
        raise ProblemFileError(f"not a finite number: '{text}'")
    return Fraction(value)


def parse_probability(text: str | int | float | Fraction) -> Fraction:
    """A rational in [0, 1]."""
    value = parse_rational(text)
    if not 0 <= value <= 1:
        raise OutOfRangeError(value)
    return value


def to_decimal(value: Fraction, decimals: int | None = None) -> str:
    """Decimal approximation rounded half-even to ``decimals`` digits."""
    digits = get_settings().decimals if decimals is None else decimals
    quantized = Decimal(value.numerator) / Decimal(value.denominator)
    return f"{quantized:.{digits}f}"


def format_rational(value: Fraction, decimals: int | None = None) -> str:
    """``3/5 (0.600000)``; integers stay bare."""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value} ({to_decimal(value, decimals)})"
