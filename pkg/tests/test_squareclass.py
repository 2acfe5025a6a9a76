"""Square detection in odd-degree real fields without factoring there."""

import random
from fractions import Fraction

from conjdim.numberfield import nf_make
from conjdim.squareclass import in_delta_square_class, rational_square_in_odd_degree_field
from conjdim.unipoly import poly_from_int_list


def test_rational_squares_stay_squares_in_odd_fields():
    K = nf_make([-2, 0, 0, 1])  # cube root of 2
    rng = random.Random(91)
    for _ in range(40):
        q = Fraction(rng.randint(1, 30), rng.randint(1, 9))
        assert rational_square_in_odd_degree_field(q * q, K)


def test_known_non_squares():
    K = nf_make([-2, 0, 0, 1])
    # 2 is not a square in Q(2^(1/3)): the field has odd degree, so a
    # rational is a square there iff it is a square in Q
    assert not rational_square_in_odd_degree_field(Fraction(2), K)
    assert not rational_square_in_odd_degree_field(Fraction(-1), K)
    assert not rational_square_in_odd_degree_field(Fraction(-4), K)


def test_worked_quartic_discriminant_value():
    # frozen side condition from the four-variable chain: the quartic
    # discriminant is not a square in the cubic field
    cubic = [
        Fraction(-114051068048293, 6220800),
        Fraction(5811288377, 36864),
        Fraction(5735, 32),
        Fraction(1),
    ]
    K = nf_make(cubic)
    disc = Fraction(223967999, 97200)
    assert not rational_square_in_odd_degree_field(disc, K)
    # sanity: an actual square passes
    assert rational_square_in_odd_degree_field(Fraction(9, 4), K)


def test_delta_square_class():
    # a is in the square class of delta iff a*delta is a rational square
    assert in_delta_square_class(Fraction(8), Fraction(2))
    assert in_delta_square_class(Fraction(2), Fraction(2))
    assert not in_delta_square_class(Fraction(3), Fraction(2))
    assert not in_delta_square_class(Fraction(-2), Fraction(2))
