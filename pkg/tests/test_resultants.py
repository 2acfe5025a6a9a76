"""Resultants, discriminants, elimination, and exact power roots."""

import random
from fractions import Fraction

import pytest

from conjdim.multipoly import MultiPoly
from conjdim.numberfield import QQ, cyclotomic_field
from conjdim.resultants import (
    discriminant,
    multipoly_to_unipoly,
    perfect_power_root,
    resultant_elim,
    resultant_uni,
    sylvester_resultant,
    unipoly_to_multipoly,
)
from conjdim.unipoly import UniPoly, poly_from_int_list


def rand_monic(rng, deg, span=6):
    coeffs = [Fraction(rng.randint(-span, span)) for _ in range(deg)]
    coeffs.append(Fraction(1))
    return UniPoly.from_rationals(QQ, coeffs)


def test_resultant_of_linear_pair():
    # Res(x - a, x - b) = a - b up to the sign convention fixed by
    # Res(f, g) = prod g(root of f)
    f = poly_from_int_list([-3, 1])
    g = poly_from_int_list([-5, 1])
    r = resultant_uni(f, g)
    assert r.as_rational() == Fraction(-2)


def test_resultant_multiplicative_in_first_argument():
    rng = random.Random(51)
    for _ in range(60):
        f = rand_monic(rng, rng.randint(1, 3))
        g = rand_monic(rng, rng.randint(1, 3))
        h = rand_monic(rng, rng.randint(1, 3))
        assert resultant_uni(f * g, h) == resultant_uni(f, h) * resultant_uni(g, h)


def test_resultant_swap_sign():
    rng = random.Random(52)
    for _ in range(60):
        f = rand_monic(rng, rng.randint(1, 4))
        g = rand_monic(rng, rng.randint(1, 4))
        lhs = resultant_uni(f, g)
        rhs = resultant_uni(g, f) * QQ.elem(Fraction((-1) ** (f.degree * g.degree)))
        assert lhs == rhs


def test_resultant_agrees_with_sylvester_determinant():
    rng = random.Random(53)
    for _ in range(40):
        f = rand_monic(rng, rng.randint(1, 4))
        g = rand_monic(rng, rng.randint(1, 4))
        assert resultant_uni(f, g) == sylvester_resultant(f, g)


def test_resultant_detects_common_root():
    common = poly_from_int_list([-7, 1])
    f = poly_from_int_list([1, 1]) * common
    g = poly_from_int_list([2, 1]) * common
    assert resultant_uni(f, g).is_zero()


def test_resultant_over_gaussian_field():
    K = cyclotomic_field(4)
    i = K.gen
    f = UniPoly(K, [-i, K.one])  # x - i
    g = UniPoly(K, [i, K.one])  # x + i
    assert resultant_uni(f, g) == i * 2


def test_discriminant_quadratic_formula():
    rng = random.Random(54)
    for _ in range(50):
        b = Fraction(rng.randint(-9, 9))
        c = Fraction(rng.randint(-9, 9))
        f = UniPoly.from_rationals(QQ, [c, b, Fraction(1)])
        assert discriminant(f).as_rational() == b * b - 4 * c


def test_discriminant_vanishes_on_repeated_root():
    f = poly_from_int_list([1, 1])
    assert discriminant(f * f * poly_from_int_list([3, 1])).is_zero()


def test_elimination_projects_variety():
    # x^2 + y^2 = 5, x*y = 2 has solutions with x in {1, -1, 2, -2}
    x, y = MultiPoly.gens(QQ, ("x", "y"))
    f = x * x + y * y - MultiPoly.const(QQ, ("x", "y"), 5)
    g = x * y - MultiPoly.const(QQ, ("x", "y"), 2)
    r = resultant_elim(f, g, "y")
    r_uni = multipoly_to_unipoly(r, "x").monic()
    expected = (
        poly_from_int_list([-1, 1])
        * poly_from_int_list([1, 1])
        * poly_from_int_list([-2, 1])
        * poly_from_int_list([2, 1])
    )
    assert r_uni == expected.monic()


def test_unipoly_multipoly_round_trip():
    f = poly_from_int_list([3, 0, -2, 1])
    m = unipoly_to_multipoly(f, ("x", "y"), "x")
    back = multipoly_to_unipoly(m, "x")
    assert back == f


def test_perfect_power_root():
    rng = random.Random(55)
    for m in (2, 3, 4):
        for _ in range(15):
            p = rand_monic(rng, rng.randint(1, 3))
            scale = Fraction(rng.randint(1, 5))
            f = UniPoly.const(QQ, scale)
            for _ in range(m):
                f = f * p
            root, c = perfect_power_root(f, m)
            assert root == p
            assert c.as_rational() == scale


def test_perfect_power_root_rejects_non_power():
    f = poly_from_int_list([1, 1]) * poly_from_int_list([2, 1])
    with pytest.raises(ArithmeticError):
        perfect_power_root(f, 2)
