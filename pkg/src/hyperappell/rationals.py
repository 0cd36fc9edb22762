"""Exact rational scalars and small combinatorial helpers.

Every coefficient in this package is an arbitrary-precision rational, so
"equals zero" is decidable and certification never depends on a floating
point tolerance.  ``Rational`` is :class:`fractions.Fraction`, which already
stores values in lowest terms with a positive denominator and serializes as
``"p/q"`` (or ``"p"`` when the denominator is 1), the wire format used by
all JSON and CSV output.
"""

from __future__ import annotations

import math
from fractions import Fraction

Rational = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


def rational(num: int, den: int = 1) -> Fraction:
    """Canonical rational num/den (reduced, positive denominator).

    Raises ZeroDivisionError when den == 0.
    """
    return Fraction(num, den)


def parse_rational(text: str) -> Fraction:
    """Parse ``"p"`` or ``"p/q"`` with integer p, q.

    Decimal or exponent notation is rejected: inputs are exact by contract.
    """
    body = text.strip()
    if "/" in body:
        num_part, den_part = body.split("/", 1)
        return Fraction(int(num_part), int(den_part))
    return Fraction(int(body))


def format_rational(value: Fraction) -> str:
    """Lowest-terms string form, ``"p/q"`` or ``"p"`` when q == 1."""
    return str(value)


def binomial(i: int, j: int) -> int:
    """Binomial coefficient C(i, j), with C(i, j) = 0 for j > i."""
    if i < 0 or j < 0:
        raise ValueError("binomial expects nonnegative arguments")
    return math.comb(i, j)


def double_factorial(k: int) -> int:
    """k!! = k (k-2) (k-4) ..., with the conventions (-1)!! = 0!! = 1.

    Extending down to k = -1 keeps ratios of double factorials well
    defined in every dimension n >= 1 that the coefficient formulas use.
    """
    if k < -1:
        raise ValueError(f"double factorial undefined for {k} < -1")
    result = 1
    while k > 1:
        result *= k
        k -= 2
    return result
