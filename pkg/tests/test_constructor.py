"""End-to-end constructions: elimination, minimal polynomials, certificates.

The frozen coefficient values here were produced once by independent means
(direct expansion over the splitting data) and pinned; the pipeline must
reproduce them bit for bit.
"""

from fractions import Fraction

import pytest

from conjdim.constructor import (
    DegenerateConstantsError,
    build_linear_construction,
    build_mult_example,
    build_nonexceptional,
    eliminate_to_auxiliary,
    f4_auxiliary_chain,
    minpoly_by_shifted_resultant,
    nonexceptional_base_poly,
)
from conjdim.invariants import g2_invariants, invariant_system, st8_invariants
from conjdim.numberfield import QQ
from conjdim.unipoly import poly_from_int_list


def rational_coeff_list(f):
    return [c.as_rational() for c in f.coeffs]


class TestDihedralPipeline:
    def test_worked_example_bit_exact(self):
        con = build_linear_construction(g2_invariants(), (0, 2), (1, 3))
        assert rational_coeff_list(con.auxiliary) == [-2, 0, 0, 0, 0, 0, 1]
        assert rational_coeff_list(con.alpha_minpoly) == [
            470596, 0, 0, 0, 0, 0, 572, 0, 0, 0, 0, 0, 1,
        ]
        assert con.alpha_minpoly.var == "y"
        assert con.degree == 12
        assert con.conj_dim_claimed == 2
        assert con.certificates["alpha_irreducibility"].verdict == "Irreducible"
        assert con.certificates["weight_orbit_size"] == 12
        assert con.certificates["weight_stabilizer_trivial"] is True
        assert con.certificates["group_order"] == 12
        assert con.certificates["e1_orbit_size"] == 6

    def test_minpoly_helper_agrees(self):
        direct = minpoly_by_shifted_resultant(g2_invariants(), (0, 2), (1, 3))
        assert rational_coeff_list(direct) == [
            470596, 0, 0, 0, 0, 0, 572, 0, 0, 0, 0, 0, 1,
        ]

    def test_degenerate_constants_raise(self):
        with pytest.raises(DegenerateConstantsError):
            build_linear_construction(g2_invariants(), (0, 0), (1, 3))

    def test_wrong_arity_rejected(self):
        with pytest.raises(ValueError):
            build_linear_construction(g2_invariants(), (0, 2, 1), (1, 3))
        with pytest.raises(ValueError):
            build_linear_construction(g2_invariants(), (0, 2), (1, 3, 5))


class TestMonomialAuxiliary:
    def test_signed_pair_auxiliary(self):
        sys_ = invariant_system("B_n", n=2)
        aux = eliminate_to_auxiliary(sys_, (5, 4))
        assert rational_coeff_list(aux) == [4, 0, -5, 0, 1]

    def test_signed_triple_auxiliary(self):
        sys_ = invariant_system("B_n", n=3)
        aux = eliminate_to_auxiliary(sys_, (1, -4, -4))
        assert rational_coeff_list(aux) == [4, 0, -4, 0, -1, 0, 1]

    def test_reducible_eliminant_falls_back_to_vanishing_factor(self):
        # {x1^2, x2^2} = {1, 4}: the weighted sum with weights (1, 1) is
        # rational, so the certified minimal polynomial collapses
        sys_ = invariant_system("B_n", n=2)
        con = build_linear_construction(sys_, (5, 4), (1, 1))
        assert con.degree in (1, 2)
        assert con.certificates["alpha_irreducibility"].verdict == "Irreducible"

    def test_rational_roots_give_degenerate_error_on_square_system(self):
        sys_ = invariant_system("B_n", n=2)
        with pytest.raises(DegenerateConstantsError):
            eliminate_to_auxiliary(sys_, (0, 0))


class TestGaussianPipeline:
    def test_printed_auxiliary_coefficients(self):
        sys_ = st8_invariants()
        K = sys_.group.field
        i = K.gen
        one = K.one
        aux = eliminate_to_auxiliary(sys_, (one + i, 1))
        want = {
            24: K.elem(27),
            16: (one + i) * -270,
            12: K.elem(270),
            8: i * -810,
            4: (one + i) * 54,
            0: K.elem(-9) + i * 8,
        }
        assert aux.degree == 24
        for k in range(25):
            assert aux.coeff(k) * 27 == want.get(k, K.zero)


class TestFourVariableChain:
    @pytest.fixture(scope="class")
    def chain(self):
        return f4_auxiliary_chain()

    def test_frozen_cubic(self, chain):
        assert rational_coeff_list(chain.gamma_cubic) == [
            Fraction(-114051068048293, 6220800),
            Fraction(5811288377, 36864),
            Fraction(5735, 32),
            Fraction(1),
        ]
        assert chain.s2 == 5

    def test_quartic_over_cubic_field(self, chain):
        q = chain.quartic
        assert q.degree == 4
        assert q.field.label == "Q(gamma)"
        assert list(q.coeff(3).coords) == [-5, 0, 0]
        assert list(q.coeff(2).coords) == [
            Fraction(20261200695, 3175710433),
            Fraction(-47690820, 3175710433),
            Fraction(34560, 3175710433),
        ]
        assert list(q.coeff(0).coords) == [
            Fraction(-203476507483, 38108525196),
            Fraction(-56249419, 12702841732),
            Fraction(-72000, 3175710433),
        ]

    def test_degree_24_eliminant(self, chain):
        f = chain.auxiliary
        assert f.degree == 24
        assert f.coeff(22).as_rational() == -15
        assert f.coeff(0).as_rational() == Fraction(-24389830879, 1592524800)
        assert f.coeff(6).as_rational() == Fraction(1338226651, 5308416)
        # even polynomial
        for k in range(1, 24, 2):
            assert f.coeff(k).is_zero()

    def test_side_conditions(self, chain):
        sc = chain.side_conditions
        assert sc["quartic_discriminant"] == Fraction(223967999, 97200)
        assert sc["discriminant_is_square_in_field"] is False
        assert sc["quartic_real_roots"] == 4
        assert sc["quartic_negative_roots"] == 1
        assert sc["weight_stabilizer_trivial"] is True


class TestSquareRootFamily:
    def test_base_polynomials(self):
        assert rational_coeff_list(nonexceptional_base_poly(1)) == [-2, 1]
        assert rational_coeff_list(nonexceptional_base_poly(2)) == [-1, 1, 1]
        assert rational_coeff_list(nonexceptional_base_poly(3)) == [1, -1, 0, 1]

    def test_dimension_two_member_frozen(self):
        con = build_nonexceptional(2)
        assert rational_coeff_list(con.alpha_minpoly) == [
            841, 0, 110, 0, 47, 0, 10, 0, 1,
        ]
        assert con.degree == 8
        assert con.conj_dim_claimed == 2
        assert con.certificates["alpha_irreducibility"].verdict == "Irreducible"
        assert con.certificates["base_poly_irreducibility"].verdict == "Irreducible"
        crit = con.certificates["sqrt_criteria"]
        assert crit["degree"] == 2
        rep = con.certificates["dimension_report"]
        assert rep.dimension_upper == 2
        assert rep.dimension_lower == 2
        assert con.certificates["bounds_verdict"] == "OK"

    def test_degree_one_member(self):
        con = build_nonexceptional(1)
        assert con.degree == 2
        assert con.conj_dim_claimed == 1


class TestMultiplicativeFamily:
    def test_rank_one_frozen(self):
        con = build_mult_example(1)
        assert rational_coeff_list(con.alpha_minpoly) == [1, 6, 1]
        assert con.conj_dim_claimed == 1

    def test_rank_two_frozen(self):
        con = build_mult_example(2)
        assert rational_coeff_list(con.alpha_minpoly) == [
            1, 48, 5436, 75728, 355974, 75728, 5436, 48, 1,
        ]
        assert con.degree == 8
        assert con.certificates["distinct_exponent_rows"] == 8
        assert con.certificates["exponent_rank"] == 2
        assert con.certificates["alpha_irreducibility"].verdict == "Irreducible"
        assert con.certificates["bounds_verdict"] == "OK"

    def test_rank_bounds_hold_for_small_ranks(self):
        from conjdim.tables import d_max

        for n in (1, 2):
            con = build_mult_example(n)
            assert n <= con.degree <= d_max(n)


def test_mismatched_constant_field_rejected():
    from conjdim.numberfield import cyclotomic_field

    K = cyclotomic_field(4)
    with pytest.raises(ValueError):
        build_linear_construction(g2_invariants(), (K.gen, 2), (1, 3))
