"""Exact rational scalars on the unit interval.

Every value handled by the library is a :class:`fractions.Fraction`.  Values
that must lie in [0, 1] are checked with :func:`q01`; intermediate quantities
such as slopes and intercepts are ordinary fractions.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Union

Q01 = Fraction
Rational = Union[Fraction, int, str]

ZERO = Fraction(0)
ONE = Fraction(1)

_RATIONAL_RE = re.compile(r"^([0-9]+)(?:/([0-9]+))?$")


class RangeViolation(ValueError):
    """A value left the unit interval."""


def as_fraction(value: Rational) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int) and not isinstance(value, bool):
        return Fraction(value)
    if isinstance(value, str):
        return parse_fraction(value)
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


def q01(value: Rational) -> Fraction:
    """Return ``value`` as a fraction, raising if it lies outside [0, 1]."""
    v = as_fraction(value)
    if v < 0 or v > 1:
        raise RangeViolation(f"{fmt(v)} is outside [0,1]")
    return v


def parse_fraction(text: str, signed: bool = False) -> Fraction:
    """Parse ``p`` or ``p/q`` into a fraction without the unit-interval check.

    ``signed`` allows a single leading minus sign, which generator intercepts
    need.
    """
    if not isinstance(text, str):
        raise TypeError(f"expected text, got {type(text).__name__}")
    body = text
    negative = False
    if signed and body.startswith("-"):
        negative, body = True, body[1:]
    m = _RATIONAL_RE.match(body)
    if m is None:
        raise ValueError(f"malformed rational {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ValueError(f"zero denominator in {text!r}")
    v = Fraction(num, den)
    return -v if negative else v


def parse_rational(text: str) -> Fraction:
    """Parse rational text such as ``"2/5"`` into a canonical value in [0, 1]."""
    return q01(parse_fraction(text))


def fmt(value: Fraction) -> str:
    """Rational text form: ``"p/q"``, or ``"p"`` for integers."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def add_clamped(x: Fraction, y: Fraction) -> Fraction:
    return min(x + y, ONE)


def sub_floored(x: Fraction, y: Fraction) -> Fraction:
    return max(x - y, ZERO)


def rational_arith(op: str, x: Rational, y: Rational):
    """Apply ``op`` to two unit-interval values.

    ``op`` is one of add, sub, mul, min, max, cmp.  ``cmp`` returns -1, 0 or 1;
    every other operation returns a fraction in [0, 1] or raises
    :class:`RangeViolation`.
    """
    a, b = q01(x), q01(y)
    if op == "add":
        return q01(a + b)
    if op == "sub":
        return q01(a - b)
    if op == "mul":
        return a * b
    if op == "min":
        return min(a, b)
    if op == "max":
        return max(a, b)
    if op == "cmp":
        lhs = a.numerator * b.denominator
        rhs = b.numerator * a.denominator
        return (lhs > rhs) - (lhs < rhs)
    raise ValueError(f"unknown operation {op!r}")
