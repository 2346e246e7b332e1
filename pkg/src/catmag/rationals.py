"""Exact rational scalars and their text wire format.

Every number in this package is a ``fractions.Fraction``: arbitrary
precision, always in canonical form (positive denominator, gcd-reduced,
zero stored as 0/1).  The wire format is ``p`` or ``p/q`` with an ASCII
minus sign carried by the numerator; decimal floats are never accepted.
"""

from __future__ import annotations

from fractions import Fraction

Rational = Fraction


class RationalParseError(ValueError):
    """Malformed rational text; ``position`` is the offset of the bad character."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (position {position})")
        self.position = position


def make_rational(numerator: int, denominator: int = 1) -> Fraction:
    """Canonical-form rational ``numerator/denominator``; zero denominator raises."""
    if denominator == 0:
        raise ZeroDivisionError("rational with zero denominator")
    return Fraction(numerator, denominator)


def parse_rational(text: str) -> Fraction:
    """Parse ``-?digits(/digits)?`` where the denominator is positive with no
    leading zero.  Surrounding whitespace is ignored; anything else is rejected."""
    stripped = text.strip()
    offset = text.index(stripped) if stripped else len(text)
    i = 0

    def fail(message: str):
        raise RationalParseError(message, offset + i)

    if not stripped:
        fail("empty rational")
    if stripped[i] == "-":
        i += 1
    start = i
    while i < len(stripped) and stripped[i].isdigit():
        i += 1
    if i == start:
        fail("expected digit")
    numerator = int(stripped[:i])
    if i == len(stripped):
        return Fraction(numerator)
    if stripped[i] != "/":
        fail(f"unexpected character {stripped[i]!r}")
    i += 1
    start = i
    while i < len(stripped) and stripped[i].isdigit():
        i += 1
    if i == start:
        fail("expected denominator digit")
    if i < len(stripped):
        fail(f"unexpected character {stripped[i]!r}")
    denominator = stripped[start:]
    if denominator[0] == "0":
        i = start
        fail("denominator must be a positive integer without leading zeros")
    return Fraction(numerator, int(denominator))


def format_rational(value: Fraction) -> str:
    """Render as ``p`` or ``p/q``; inverse of :func:`parse_rational`."""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def decimal_approximation(value: Fraction, digits: int) -> str:
    """Fixed-point decimal with ``digits`` places, rounded half-even."""
    if digits < 0:
        raise ValueError("digits must be nonnegative")
    scaled = round(value * 10**digits)
    sign = "-" if scaled < 0 else ""
    whole, frac = divmod(abs(scaled), 10**digits)
    if digits == 0:
        return f"{sign}{whole}"
    return f"{sign}{whole}.{frac:0{digits}d}"
