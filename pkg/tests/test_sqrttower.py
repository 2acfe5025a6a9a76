"""Splitting-algebra tower and weighted square-root minimal polynomials."""

import random
from fractions import Fraction

import pytest

from conjdim.numberfield import QQ
from conjdim.sqrttower import (
    SplittingAlgebra,
    algebra_minpoly,
    check_sqrt_criteria,
    minpoly_of_weighted_sqrts,
    mult_generator,
)
from conjdim.unipoly import UniPoly, poly_from_int_list


def test_algebra_dimension():
    f = poly_from_int_list([-1, 1, 1])  # x^2 + x - 1
    alg = SplittingAlgebra(f)
    # n! * 2^n basis monomials
    assert alg.dim == 2 * 4


def test_roots_satisfy_defining_polynomial():
    f = poly_from_int_list([-1, 1, 1])
    alg = SplittingAlgebra(f)
    for i in range(2):
        r = alg.root(i)
        val = r * r + r - alg.one()
        assert val.is_zero()
    # sqrt generators square to the roots
    for i in range(2):
        s = alg.sqrt_root(i)
        assert (s * s - alg.root(i)).is_zero()


def test_vieta_inside_algebra():
    # sum and product of the embedded roots match the coefficients
    f = poly_from_int_list([-7, 2, 1])  # x^2 + 2x - 7
    alg = SplittingAlgebra(f)
    s = alg.root(0) + alg.root(1)
    p = alg.root(0) * alg.root(1)
    assert (s + alg.const(2)).is_zero()
    assert (p - alg.const(-7)).is_zero()


def test_minpoly_of_sqrt2_plus_sqrt3():
    # classic: minimal polynomial of sqrt(2) + sqrt(3)
    f = UniPoly.from_rationals(QQ, [Fraction(6), Fraction(-5), Fraction(1)])
    mp = minpoly_of_weighted_sqrts(f, [1, 1])
    assert [c.as_rational() for c in mp.coeffs] == [1, 0, -10, 0, 1]


def test_minpoly_weighted_matches_direct_expansion():
    rng = random.Random(131)
    for _ in range(10):
        # two distinct positive rational roots r1, r2
        r1 = Fraction(rng.randint(1, 6))
        r2 = Fraction(rng.randint(7, 12))
        f = UniPoly.from_rationals(QQ, [r1 * r2, -(r1 + r2), Fraction(1)])
        w1 = Fraction(rng.randint(1, 3))
        w2 = Fraction(rng.randint(1, 3))
        mp = minpoly_of_weighted_sqrts(f, [w1, w2])
        # (y^2 - (w1^2 r1 + w2^2 r2))^2 = 4 w1^2 w2^2 r1 r2 expands to the
        # quartic below whenever the sum is degree 4 over Q
        a = w1 * w1 * r1 + w2 * w2 * r2
        b = 4 * w1 * w1 * w2 * w2 * r1 * r2
        expect = [a * a - b, Fraction(0), -2 * a, Fraction(0), Fraction(1)]
        got = [c.as_rational() for c in mp.coeffs]
        if mp.degree == 4:
            assert got == expect
        else:
            # degenerate (e.g. sqrt(r1 r2) rational): minpoly divides the quartic
            quartic = UniPoly.from_rationals(QQ, expect, mp.var)
            assert quartic.divmod(mp)[1].is_zero()


def test_algebra_minpoly_of_embedded_rational():
    f = poly_from_int_list([-1, 1, 1])
    alg = SplittingAlgebra(f)
    mp = algebra_minpoly(alg.const(Fraction(3, 2)))
    assert [c.as_rational() for c in mp.coeffs] == [Fraction(-3, 2), 1]


def test_frozen_family_member():
    base = poly_from_int_list([-1, 1, 1])  # the n = 2 family polynomial
    mp = minpoly_of_weighted_sqrts(base, [1, 2])
    assert [c.as_rational() for c in mp.coeffs] == [841, 0, 110, 0, 47, 0, 10, 0, 1]


def test_check_sqrt_criteria_family_member():
    rep = check_sqrt_criteria(poly_from_int_list([-1, 1, 1]))
    assert rep["degree"] == 2
    assert rep["real_roots"] == 2
    assert rep["negative_roots"] == 1
    assert rep["interlacing_hypothesis"] is True
    assert rep["square_class_condition"] == "pass"
    assert rep["zero_product"] == -1
    assert rep["odd_degree_condition"] == "not applicable"


def test_tower_rejects_non_squarefree():
    f = poly_from_int_list([1, 2, 1])  # (x+1)^2
    with pytest.raises(ValueError):
        SplittingAlgebra(f)


def test_mult_generator_is_unit():
    f = poly_from_int_list([-1, 1, 1])
    alg = SplittingAlgebra(f)
    g = mult_generator(alg, 0)
    assert not g.is_zero()
