"""Finite fields, Frobenius orbits, and linearized-polynomial checks."""

import random

import pytest

from conjdim.finitefield import (
    FqField,
    element_minpoly,
    ff_make,
    fp_rank,
    frobenius_orbit,
    linearized_from_minpoly,
    linearized_poly_of_subspace,
    multiplicative_generator,
    subfield_elements,
    upper_bound_scan,
    verify_Dqn,
)


def test_least_lex_moduli():
    assert ff_make(2, 3).modulus == (1, 1, 0, 1)  # x^3 + x + 1
    assert ff_make(3, 2).modulus == (1, 0, 1)  # x^2 + 1
    assert ff_make(2, 2).modulus == (1, 1, 1)
    assert ff_make(2, 4).modulus == (1, 1, 0, 0, 1)


def test_field_arithmetic_randomized():
    rng = random.Random(151)
    for K in (ff_make(2, 3), ff_make(3, 2), ff_make(5, 2)):
        elements = list(K.elements())
        assert len(elements) == K.size
        for _ in range(80):
            a = rng.choice(elements)
            b = rng.choice(elements)
            c = rng.choice(elements)
            assert K.mul(K.add(a, b), c) == K.add(K.mul(a, c), K.mul(b, c))
            assert K.mul(a, b) == K.mul(b, a)
            if a != K.zero:
                assert K.mul(a, K.inv(a)) == K.one


def test_frobenius_is_additive():
    rng = random.Random(152)
    for K in (ff_make(2, 4), ff_make(3, 3)):
        elements = list(K.elements())
        for _ in range(50):
            a = rng.choice(elements)
            b = rng.choice(elements)
            assert K.frobenius(K.add(a, b)) == K.add(K.frobenius(a), K.frobenius(b))


def test_multiplicative_generator_orders():
    for p, k in ((2, 2), (2, 3), (3, 2), (5, 1)):
        K = ff_make(p, k)
        g = multiplicative_generator(K)
        seen = set()
        z = K.one
        for _ in range(K.size - 1):
            z = K.mul(z, g)
            seen.add(z)
        assert len(seen) == K.size - 1  # g generates the full unit group


def test_element_minpoly_degree_matches_orbit():
    K = ff_make(2, 6)
    rng = random.Random(153)
    elements = list(K.elements())
    for _ in range(30):
        a = rng.choice(elements)
        orbit = frobenius_orbit(K, a)
        f = element_minpoly(K, a)
        assert len(f) - 1 == len(orbit)


def test_linearized_from_minpoly_strings():
    f22 = element_minpoly(ff_make(2, 2), ff_make(2, 2).gen)
    assert f22 == [1, 1, 1]
    L = linearized_from_minpoly(f22, 2)
    assert str(L) == "X^4 + X^2 + X"
    L3 = linearized_from_minpoly([1, 0, 1], 3)  # x^2 + 1 over F_3
    assert str(L3) == "X^9 + X"


def test_linearized_identity_normalization():
    # minimal polynomial x (the zero element): companion is the separable X
    L = linearized_from_minpoly([0, 1], 2)
    assert L.coeffs == (1,)
    assert str(L) == "X"


def test_verify_desk_pairs():
    for q, n in ((2, 2), (2, 3), (3, 2)):
        rep = verify_Dqn(q, n)
        assert rep["pass"], rep
        assert rep["degree"] == q**n - 1
        assert rep["dimension"] == n
        assert len(rep["orbit"]) == q**n - 1


def test_verify_worked_pair_details():
    rep = verify_Dqn(2, 2)
    assert rep["expected_degree"] == 3
    assert rep["modulus"] == "x^3 + x + 1"
    assert rep["linearized"] == "X^4 + X^2 + X"


def test_verify_rejects_prime_powers():
    with pytest.raises(ValueError):
        verify_Dqn(4, 2)


def test_upper_bound_scan_clean():
    scan = upper_bound_scan(2, 2, 6)
    assert scan["pass"]
    assert scan["elements_checked"] == 126
    assert scan["max_degree_at_dimension_le_n"] == 3
    assert scan["violations"] == []


def test_subfield_elements():
    K = ff_make(2, 4)
    sub = subfield_elements(K, 2)
    assert len(sub) == 4
    for z in sub:
        # fixed by the square of Frobenius
        assert K.frobenius(K.frobenius(z)) == z


def test_linearized_poly_of_subspace():
    K = ff_make(2, 4)
    sub = subfield_elements(K, 2)  # F_4 viewed as a 2-dim F_2 space
    coeffs = linearized_poly_of_subspace(K, sub)
    # exponents 1, 2, 4 with coefficients in K; X^4 + cX^2 + dX shape
    assert len(coeffs) == 5
    assert coeffs[3] == K.zero
    assert coeffs[4] == K.one


def test_fp_rank():
    assert fp_rank([(1, 0), (0, 1)], 2) == 2
    assert fp_rank([(1, 1), (1, 1)], 2) == 1
    assert fp_rank([(2, 4), (1, 2)], 3) == 1
    assert fp_rank([(0, 0)], 5) == 0


def test_bad_constructions_rejected():
    with pytest.raises(ValueError):
        ff_make(6, 2)  # not prime
    with pytest.raises(ValueError):
        FqField(2, 2, (1, 0, 1))  # x^2 + 1 is reducible mod 2
