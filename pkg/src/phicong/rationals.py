"""Exact rational helpers: p-adic valuations and fraction formatting.

Rationals themselves are ``fractions.Fraction`` (always normalized, positive
denominator), which matches the storage invariants needed for exact golden
comparisons.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Optional

Rational = Fraction

#: Sentinel returned by :func:`padic_val` for zero (v_p(0) = +infinity).
INF = math.inf


def padic_val(r, p: int):
    """Normalized p-adic valuation of a rational, with v_p(p) = 1.

    Returns ``INF`` for zero.
    """
    r = Fraction(r)
    if r == 0:
        return INF
    v = 0
    n = r.numerator
    while n % p == 0:
        n //= p
        v += 1
    d = r.denominator
    while d % p == 0:
        d //= p
        v -= 1
    return v


def format_fraction(r) -> str:
    """Render a rational as ``num/den`` (or plain integer when den == 1)."""
    r = Fraction(r)
    if r.denominator == 1:
        return str(r.numerator)
    return f"{r.numerator}/{r.denominator}"


def parse_fraction(s: str) -> Fraction:
    return Fraction(s)


def rational_sqrt(r) -> Optional[Fraction]:
    """Exact square root of a rational, or None if it is not a square."""
    r = Fraction(r)
    if r < 0:
        return None
    n = math.isqrt(r.numerator)
    d = math.isqrt(r.denominator)
    if n * n != r.numerator or d * d != r.denominator:
        return None
    return Fraction(n, d)
