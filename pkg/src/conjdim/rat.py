"""Exact rational scalars.

Everything downstream works over `fractions.Fraction`, which already keeps
values in lowest terms with a positive denominator.  This module adds the
handful of predicates and text conversions the rest of the package needs.
"""

from __future__ import annotations

import math
from fractions import Fraction


def rat(value) -> Fraction:
    """Coerce ints, strings like '3/4', or Fractions to Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot interpret {value!r} as a rational")


def rat_str(q: Fraction) -> str:
    """Canonical text form: 'p/q' in lowest terms, or bare 'p' for integers."""
    return str(q)


def is_perfect_square(n: int) -> bool:
    if n < 0:
        return False
    r = math.isqrt(n)
    return r * r == n


def rational_is_square(q: Fraction) -> bool:
    """True iff q is a square in Q (zero counts)."""
    q = rat(q)
    if q < 0:
        return False
    return is_perfect_square(q.numerator) and is_perfect_square(q.denominator)


def rational_sqrt(q: Fraction) -> Fraction:
    """Exact square root of a rational square; raises if q is not one."""
    q = rat(q)
    if not rational_is_square(q):
        raise ValueError(f"{q} is not a square in Q")
    return Fraction(math.isqrt(q.numerator), math.isqrt(q.denominator))


def sign(q: Fraction) -> int:
    if q > 0:
        return 1
    if q < 0:
        return -1
    return 0
