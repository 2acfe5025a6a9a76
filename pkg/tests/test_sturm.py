"""Sturm chains, real root counting, and exact sign oracles."""

import random
from fractions import Fraction

import pytest

from conjdim.numberfield import QQ, nf_make
from conjdim.sturm import (
    RealEmbedding,
    cauchy_root_bound,
    isolate_real_roots,
    real_and_negative_root_counts,
    real_root_count,
    sturm_chain,
)
from conjdim.unipoly import UniPoly, poly_from_int_list


def test_real_root_count_known_cases():
    # x^2 - 2: two real roots, one negative
    f = poly_from_int_list([-2, 0, 1])
    assert real_and_negative_root_counts(f) == (2, 1)
    # x^2 + 1: none
    assert real_and_negative_root_counts(poly_from_int_list([1, 0, 1])) == (0, 0)
    # x^3 - x = x(x-1)(x+1)
    assert real_and_negative_root_counts(poly_from_int_list([0, -1, 0, 1])) == (3, 1)
    # x^6 - 2: two real, one negative
    assert real_and_negative_root_counts(poly_from_int_list([-2, 0, 0, 0, 0, 0, 1])) == (2, 1)


def test_random_products_of_linear_factors():
    rng = random.Random(81)
    for _ in range(80):
        roots = sorted(
            {Fraction(rng.randint(-12, 12), rng.randint(1, 3)) for _ in range(rng.randint(1, 5))}
        )
        f = UniPoly.const(QQ, 1)
        for r in roots:
            f = f * UniPoly.from_rationals(QQ, [-r, Fraction(1)])
        n_real, n_neg = real_and_negative_root_counts(f)
        assert n_real == len(roots)
        assert n_neg == sum(1 for r in roots if r < 0)


def test_isolating_intervals_are_disjoint_and_complete():
    rng = random.Random(82)
    for _ in range(40):
        roots = sorted(
            {Fraction(rng.randint(-9, 9)) for _ in range(rng.randint(1, 4))}
        )
        f = UniPoly.const(QQ, 1)
        for r in roots:
            f = f * UniPoly.from_rationals(QQ, [-r, Fraction(1)])
        ivs = isolate_real_roots(f)
        assert len(ivs) == len(roots)
        for (lo, hi), r in zip(sorted(ivs), roots):
            assert lo <= r <= hi
        flat = sorted(ivs)
        for (a, b), (c, d) in zip(flat, flat[1:]):
            assert b <= c


def test_cauchy_bound_contains_roots():
    f = poly_from_int_list([-30, 1, 1])  # roots 5, -6
    bound = cauchy_root_bound(f)
    assert bound >= 6


def test_sturm_chain_endpoints():
    f = poly_from_int_list([-2, 0, 1])
    chain = sturm_chain(f)
    assert chain[0].monic() == f.monic()
    assert chain[1] == chain[0].derivative()
    assert real_root_count(f, Fraction(0), Fraction(2)) == 1


def test_real_embedding_sign_oracle():
    # the positive real cube root of 2
    K = nf_make([-2, 0, 0, 1], seed=1.26)
    emb = RealEmbedding(K)
    g = K.gen
    assert emb.sign(g) == 1
    assert emb.sign(g * g - 2) == -1  # 2^(2/3) < 2
    assert emb.sign(g ** 3 - 2) == 0
    assert emb.sign(K.elem(Fraction(-1, 7))) == -1


def test_real_embedding_compare_and_refine():
    K = nf_make([-2, 0, 1], seed=1.4)
    emb = RealEmbedding(K)
    g = K.gen
    for _ in range(10):
        emb.refine()
    a = emb.approx()
    assert abs(a * a - 2) < Fraction(1, 1000)
    assert emb.compare(g, K.elem(1)) == 1
    assert emb.compare(g, K.elem(2)) == -1


def test_no_real_embedding_raises():
    K = nf_make([1, 0, 1])  # x^2 + 1
    with pytest.raises(ValueError):
        RealEmbedding(K)
