"""Number field arithmetic: construction cache, coordinates, inverses."""

import random
from fractions import Fraction

import pytest

from conjdim.numberfield import (
    QQ,
    NFElem,
    cyclotomic_field,
    cyclotomic_poly,
    field_by_label,
    nf_make,
)


def test_rational_field_singleton():
    assert QQ.degree == 1
    assert QQ.elem(Fraction(2, 3)).as_rational() == Fraction(2, 3)
    assert field_by_label("Q") is QQ


def test_nf_make_caches_by_defining_polynomial():
    K1 = nf_make([-2, 0, 1])
    K2 = nf_make([-2, 0, 1])
    assert K1 is K2


def test_gaussian_field_label_and_gen():
    K = cyclotomic_field(4)
    assert K.label == "Q(i)"
    assert field_by_label("Q(i)") is K
    i = K.gen
    assert (i * i).as_rational() == -1


def test_cyclotomic_poly_samples():
    assert cyclotomic_poly(4) == [Fraction(1), Fraction(0), Fraction(1)]
    assert cyclotomic_poly(3) == [Fraction(1), Fraction(1), Fraction(1)]
    assert cyclotomic_poly(1) == [Fraction(-1), Fraction(1)]
    # phi_12 = x^4 - x^2 + 1
    assert cyclotomic_poly(12) == [
        Fraction(1),
        Fraction(0),
        Fraction(-1),
        Fraction(0),
        Fraction(1),
    ]


def test_cyclotomic_gen_has_right_order():
    for l in (3, 4, 5, 6, 8, 12):
        K = cyclotomic_field(l)
        z = K.gen
        p = K.one
        for _ in range(l):
            p = p * z
        assert p == K.one
        # primitive: no smaller power is 1
        p = K.one
        for k in range(1, l):
            p = p * z
            assert p != K.one


def test_elem_coercion_forms():
    K = cyclotomic_field(4)
    assert K.elem(3).coords == (Fraction(3), Fraction(0))
    assert K.elem("1/2").coords == (Fraction(1, 2), Fraction(0))
    assert K.elem([1, 2]).coords == (Fraction(1), Fraction(2))
    with pytest.raises(ValueError):
        K.elem([1, 2, 3])


def test_mixed_field_arithmetic_rejected():
    K = cyclotomic_field(4)
    L = cyclotomic_field(3)
    with pytest.raises(ValueError):
        K.gen + L.gen


def test_field_axioms_randomized():
    rng = random.Random(31)
    fields = [cyclotomic_field(4), cyclotomic_field(3), nf_make([-2, 0, 0, 1])]
    for _ in range(150):
        K = rng.choice(fields)
        a = K.elem([Fraction(rng.randint(-8, 8), rng.randint(1, 4)) for _ in range(K.degree)])
        b = K.elem([Fraction(rng.randint(-8, 8), rng.randint(1, 4)) for _ in range(K.degree)])
        c = K.elem([Fraction(rng.randint(-8, 8), rng.randint(1, 4)) for _ in range(K.degree)])
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a + (-a) == K.zero
        if not a.is_zero():
            assert a * a.inverse() == K.one


def test_inverse_of_zero_raises():
    K = cyclotomic_field(4)
    with pytest.raises(ZeroDivisionError):
        K.zero.inverse()


def test_nfelem_text_and_rationality():
    K = cyclotomic_field(4)
    a = K.elem([Fraction(1, 2), Fraction(-3)])
    assert a.text() == "[1/2, -3]@Q(i)"
    assert not a.is_rational()
    b = K.elem(7)
    assert b.is_rational()
    assert b.as_rational() == 7


def test_numeric_embedding_tracks_exact_value():
    K = nf_make([-2, 0, 1], seed=1.4)  # sqrt(2) near 1.4
    g = K.gen
    approx = (g * g).numeric(50)
    assert abs(complex(approx) - 2.0) < 1e-40
