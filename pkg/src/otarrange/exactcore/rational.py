"""Rationals are ``fractions.Fraction``; this module only adds I/O helpers."""
from fractions import Fraction

Rational = Fraction


def parse_rational(value):
    """Accept ints, Fractions, or strings like ``"-3/4"`` and ``"2"``.

    Floats are refused: a float has already lost exactness.
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot read {value!r} as an exact rational")


def format_rational(q):
    """Canonical lowest-terms string: ``"p/q"`` or ``"p"``."""
    return str(Fraction(q))
