"""Exact number-theoretic primitives: sawtooth, Dedekind sums, inverses.

All rational values are :class:`fractions.Fraction`; nothing here touches
floating point.
"""
from __future__ import annotations

from fractions import Fraction
from math import floor, gcd

from .errors import InvalidArgumentError

Rational = Fraction

__all__ = [
    "Rational",
    "sawtooth",
    "frac",
    "dedekind_sum",
    "reciprocity_rhs",
    "mod_inverse",
    "render",
    "parse_rational",
]


def frac(x) -> Fraction:
    """Fractional part {x} = x - floor(x), always in [0, 1)."""
    x = Fraction(x)
    return x - floor(x)


def sawtooth(x) -> Fraction:
    """((x)): x - floor(x) - 1/2 off the integers, 0 on them."""
    x = Fraction(x)
    if x.denominator == 1:
        return Fraction(0)
    return x - floor(x) - Fraction(1, 2)


def dedekind_sum(p: int, q: int) -> Fraction:
    """s(p, q) = sum_{i=1}^{q-1} ((i/q)) ((p i/q)).

    Evaluated straight from the definition in O(q) steps, using integer
    arithmetic over the common denominator 4 q^2. Negative ``p`` is handled
    by the definition itself, not by reduction.
    """
    if q <= 0:
        raise InvalidArgumentError(f"dedekind_sum needs q >= 1, got q={q}")
    total = 0
    for i in range(1, q):
        r = (p * i) % q
        if r:
            # ((i/q)) = (2i - q)/(2q) and ((pi/q)) = (2r - q)/(2q)
            total += (2 * i - q) * (2 * r - q)
    return Fraction(total, 4 * q * q)


def reciprocity_rhs(a: int, b: int) -> Fraction:
    """Right-hand side of Dedekind reciprocity, equal to s(a,b) + s(b,a)."""
    if a < 1 or b < 1:
        raise InvalidArgumentError(f"reciprocity needs a, b >= 1, got ({a}, {b})")
    if gcd(a, b) != 1:
        raise InvalidArgumentError(f"reciprocity needs gcd(a, b) = 1, got ({a}, {b})")
    return Fraction(1, 12) * (Fraction(a, b) + Fraction(b, a) + Fraction(1, a * b)) - Fraction(1, 4)


def mod_inverse(w: int, a: int) -> int:
    """The inverse of w modulo a, normalized to 0 < w' <= a (so a = 1 gives 1)."""
    if a < 1:
        raise InvalidArgumentError(f"modulus must be >= 1, got {a}")
    if gcd(w, a) != 1:
        raise InvalidArgumentError(f"{w} is not invertible modulo {a}")
    if a == 1:
        return 1
    return pow(w, -1, a)


def render(x) -> str:
    """Render an exact rational as "num/den", or "n" for integers."""
    x = Fraction(x)
    return str(x)


def parse_rational(text: str) -> Fraction:
    """Inverse of :func:`render`. Rejects decimal notation."""
    text = text.strip()
    if any(c in text for c in ".eE"):
        raise InvalidArgumentError(f"not an exact rational: {text!r}")
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise InvalidArgumentError(f"not an exact rational: {text!r}") from exc
