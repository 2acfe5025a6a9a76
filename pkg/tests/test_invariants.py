"""Invariant systems of the built-in reflection groups."""

import random
from fractions import Fraction

import pytest

from conjdim.groups import mat_identity, mat_mul, row_action
from conjdim.invariants import (
    f4_defining_powersum_form,
    f4_invariants,
    f4_reduced_powersum_forms,
    g2_invariants,
    invariant_system,
    st8_invariants,
)


def test_degrees_match_group_orders():
    # product of the invariant degrees equals the group order
    for sys_ in (g2_invariants(), f4_invariants(), st8_invariants()):
        assert sys_.degree_product() == sys_.group.order()
    assert g2_invariants().degrees == [2, 6]
    assert f4_invariants().degrees == [2, 6, 8, 12]
    assert st8_invariants().degrees == [8, 12]


def test_invariance_generator_check():
    for sys_ in (g2_invariants(), f4_invariants(), st8_invariants()):
        assert sys_.check_invariance()


def test_invariance_at_random_points():
    rng = random.Random(121)
    for sys_ in (g2_invariants(), f4_invariants(), st8_invariants()):
        K = sys_.group.field
        n = sys_.group.dim
        for _ in range(25):
            mat = mat_identity(K, n)
            for _ in range(rng.randint(1, 6)):
                mat = mat_mul(mat, rng.choice(sys_.group.generators))
            z = tuple(K.elem(rng.randint(-5, 5)) for _ in range(n))
            img = list(row_action(z, mat))
            for p in sys_.polys:
                assert p.eval_all(img) == p.eval_all(list(z))


def test_invariants_are_homogeneous():
    for sys_ in (g2_invariants(), f4_invariants(), st8_invariants()):
        for p, d in zip(sys_.polys, sys_.degrees):
            assert p.total_degree() == d
            for exps in p.terms:
                assert sum(exps) == d


def test_f4_reduced_forms_frozen_coefficients():
    forms = f4_reduced_powersum_forms()
    assert sorted(forms) == [1, 3, 4, 6]
    i2 = forms[1]
    assert i2.terms[(1, 0, 0, 0)].as_rational() == 6
    i12 = forms[6]
    assert i12.terms[(2, 2, 0, 0)].as_rational() == Fraction(1365, 2)
    assert i12.terms[(6, 0, 0, 0)].as_rational() == Fraction(159, 2)


def test_f4_defining_forms_evaluate_consistently():
    # the reduced forms agree with the defining expansions after Newton
    # reduction; spot-check by evaluating both on random power-sum data
    rng = random.Random(122)
    from conjdim.numberfield import QQ
    from conjdim.symmetric import newton_reduce

    for k in (1, 3, 4, 6):
        defining = f4_defining_powersum_form(k)
        reduced = newton_reduce(defining, 4)
        frozen = f4_reduced_powersum_forms()[k]
        for _ in range(5):
            z = [Fraction(rng.randint(-4, 4)) for _ in range(4)]
            point = [QQ.elem(sum(x ** (2 * j) for x in z)) for j in range(1, 5)]
            assert reduced.eval_all(point) == frozen.eval_all(point)


def test_st8_invariant_anchor_values():
    sys_ = st8_invariants()
    K = sys_.group.field
    at01 = [K.zero, K.one]
    vals = [p.eval_all(at01) for p in sys_.polys]
    assert vals[0].as_rational() == 1
    assert vals[1].as_rational() == 2
    at_m21 = [K.elem(-2), K.one]
    assert sys_.polys[0].eval_all(at_m21).as_rational() == -39


def test_invariant_system_lookup():
    assert invariant_system("G2").group.name == "G2"
    assert invariant_system("W(F4)").group.name == "F4"
    assert invariant_system("ST8").group.name == "ST8"
    bn = invariant_system("B_n", n=3)
    assert bn.group.order() == 48
    assert bn.degree_product() == 48
    gl = invariant_system("G(l,1,n)", l=3, n=2)
    assert gl.group.order() == 18
    with pytest.raises(ValueError):
        invariant_system("nope")


def test_monomial_invariants_invariance():
    for name, params in (("B_n", {"n": 2}), ("B_n", {"n": 3}), ("G(l,1,n)", {"l": 3, "n": 2})):
        sys_ = invariant_system(name, **params)
        assert sys_.check_invariance()
        assert sys_.degree_product() == sys_.group.order()
