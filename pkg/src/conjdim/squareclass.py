"""Square-class tests used by the square-root-tower hypothesis checks.

Both tests reduce to rational square testing: the first because delta^2 is
always a square (so only the parity of the delta-exponent matters), the
second because an odd-degree number field contains no quadratic subfield.
"""

from __future__ import annotations

from fractions import Fraction

from .numberfield import NumberField
from .rat import rat, rational_is_square


def in_delta_square_class(a_n: Fraction, delta: Fraction) -> bool:
    """True iff a_n = delta^k * (rational square) for some integer k."""
    a_n = rat(a_n)
    delta = rat(delta)
    if a_n == 0 or delta == 0:
        raise ValueError("in_delta_square_class requires nonzero inputs")
    return rational_is_square(a_n) or rational_is_square(a_n * delta)


def rational_square_in_odd_degree_field(q: Fraction, field: NumberField) -> bool:
    """Decide whether the rational q is a square in an odd-degree field.

    Odd degree rules out quadratic subfields, so the answer coincides with
    squareness in Q. Even-degree fields are refused: membership there is a
    genuinely harder problem this module does not attempt.
    """
    if field.degree % 2 == 0:
        raise ValueError(
            "square membership is only decided for odd-degree fields; "
            f"got degree {field.degree}"
        )
    return rational_is_square(rat(q))
