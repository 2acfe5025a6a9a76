"""Rational helpers: parsing, square detection, exact square roots."""

import random
from fractions import Fraction

import pytest

from conjdim.rat import is_perfect_square, rat, rat_str, rational_is_square, rational_sqrt, sign


def test_rat_accepts_common_inputs():
    assert rat(3) == Fraction(3)
    assert rat("7/2") == Fraction(7, 2)
    assert rat("-5") == Fraction(-5)
    assert rat(Fraction(1, 3)) == Fraction(1, 3)


def test_rat_str_round_trip():
    for s in ("0", "5", "-5", "7/2", "-22/7"):
        assert rat_str(rat(s)) == s


def test_perfect_square_edges():
    assert is_perfect_square(0)
    assert is_perfect_square(1)
    assert not is_perfect_square(2)
    assert is_perfect_square(144)
    assert not is_perfect_square(-4)


def test_sign():
    assert sign(Fraction(0)) == 0
    assert sign(Fraction(-3, 7)) == -1
    assert sign(Fraction(9)) == 1


def test_rational_sqrt_exact():
    assert rational_sqrt(Fraction(49, 4)) == Fraction(7, 2)
    with pytest.raises(ValueError):
        rational_sqrt(Fraction(2))


def test_squares_recognized_randomized():
    rng = random.Random(11)
    for _ in range(200):
        q = Fraction(rng.randint(-40, 40), rng.randint(1, 23))
        assert rational_is_square(q * q)
        # q^2 * non-square integer is never a square (q != 0)
        if q:
            assert not rational_is_square(q * q * 2)
            assert not rational_is_square(-q * q)
