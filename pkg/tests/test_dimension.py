"""Numeric span dimension and multiplicative rank with exact confirmation."""

import random
from fractions import Fraction

import pytest

from conjdim.dimension import (
    mult_rank_exponents,
    mult_rank_numeric,
    orbit_rank,
    qspan_dimension,
    strip_cyclotomic_factors,
)
from conjdim.numberfield import QQ, cyclotomic_field
from conjdim.unipoly import UniPoly, poly_from_int_list


def test_sextic_spans_dimension_two():
    rep = qspan_dimension(poly_from_int_list([-2, 0, 0, 0, 0, 0, 1]))
    assert rep.dimension_upper == 2
    assert rep.dimension_lower == 2
    assert rep.stable
    assert rep.kind == "additive"
    assert not rep.certified  # numeric relations stay heuristic


def test_degree_12_worked_example_dimension_two():
    f = poly_from_int_list([470596, 0, 0, 0, 0, 0, 572, 0, 0, 0, 0, 0, 1])
    r100 = qspan_dimension(f, digits=100)
    r200 = qspan_dimension(f, digits=200)
    assert r100.dimension_upper == 2
    assert r200.dimension_upper == 2
    assert r100.relations == r200.relations


def test_quadratic_full_dimension():
    rep = qspan_dimension(poly_from_int_list([-2, 0, 1]))
    assert rep.dimension_upper == 1  # conjugates are sqrt2, -sqrt2
    rep2 = qspan_dimension(poly_from_int_list([7, -3, 1]))
    assert rep2.dimension_upper == 2


def test_reducible_input_rejected():
    f = poly_from_int_list([1, 1]) * poly_from_int_list([-2, 0, 1])
    with pytest.raises(ValueError):
        qspan_dimension(f)


def test_assume_irreducible_bypasses_certification():
    f = poly_from_int_list([1, 1]) * poly_from_int_list([-2, 0, 1])
    with pytest.raises(ValueError):
        qspan_dimension(f)
    # same zero set analyzed when asserted: {-1, sqrt2, -sqrt2} spans
    # the rationals plus the sqrt2 line
    rep = qspan_dimension(f, assume_irreducible=True)
    assert rep.dimension_upper == 2


def test_strip_cyclotomic_factors():
    f = poly_from_int_list([1, 0, 1]) * poly_from_int_list([7, -3, 1])
    g, removed = strip_cyclotomic_factors(f)
    assert removed == [4]
    assert [c.as_rational() for c in g.monic().coeffs] == [7, -3, 1]


def test_mult_rank_of_torsion_poly_certified_zero():
    rep = mult_rank_numeric(poly_from_int_list([1, 0, 1]))
    assert rep.dimension_upper == 0
    assert rep.certified
    assert rep.torsion
    assert rep.kind == "multiplicative"


def test_mult_rank_of_unit_quadratic():
    # zeros 3 + 2*sqrt(2), 3 - 2*sqrt(2) multiply to 1: rank 1
    rep = mult_rank_numeric(poly_from_int_list([1, -6, 1]))
    assert rep.dimension_upper == 1
    assert rep.stable


def test_mult_rank_generic_quadratic():
    # zeros of x^2 - x - 1 (golden ratio pair): product is -1, rank 1
    rep = mult_rank_numeric(poly_from_int_list([-1, -1, 1]))
    assert rep.dimension_upper == 1


def test_mult_rank_rejects_zero_root():
    with pytest.raises(ValueError):
        mult_rank_numeric(poly_from_int_list([0, 1, 1]))


def test_exponent_matrix_ranks():
    assert mult_rank_exponents([(1, 0), (0, 1)]) == 2
    assert mult_rank_exponents([(1, 1), (2, 2)]) == 1
    assert mult_rank_exponents([(0, 0)]) == 0
    rng = random.Random(141)
    for _ in range(40):
        n = rng.randint(1, 4)
        # signed permutation rows of a generic weight always span fully
        from conjdim.constructor import _signed_permutation_rows

        rows = _signed_permutation_rows([Fraction(i) for i in range(1, n + 1)])
        assert mult_rank_exponents(rows) == n


def test_orbit_rank_exact():
    assert orbit_rank([(Fraction(1), Fraction(0)), (Fraction(0), Fraction(1))]) == 2
    assert orbit_rank([(Fraction(2), Fraction(4)), (Fraction(1), Fraction(2))]) == 1
    K = cyclotomic_field(4)
    i = K.gen
    assert orbit_rank([(K.one, i), (i, -K.one)]) == 1  # second row = i * first
    assert orbit_rank([(K.one, K.zero), (i, K.one)]) == 2


def test_dimension_report_serialization():
    rep = qspan_dimension(poly_from_int_list([-2, 0, 1]))
    d = rep.to_json_dict()
    assert d["dimension_upper"] == 1
    assert d["kind"] == "additive"
    assert isinstance(d["relations"], list)
