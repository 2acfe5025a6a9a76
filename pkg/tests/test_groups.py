"""Matrix group enumeration, orbits, stabilizers, invariance checks."""

import math
import random

import pytest

from conjdim.groups import (
    builtin_group,
    dihedral_g2_group,
    f4_reflection_group,
    mat_identity,
    mat_mul,
    monomial_group,
    row_action,
    signed_permutation_group,
    st8_group,
)


def test_enumerated_orders():
    assert dihedral_g2_group().order() == 12
    assert st8_group().order() == 96
    assert f4_reflection_group().order() == 1152
    for n in range(1, 6):
        assert signed_permutation_group(n).order() == 2**n * math.factorial(n)
    assert monomial_group(3, 2).order() == 3**2 * 2
    assert monomial_group(4, 3).order() == 4**3 * 6


def test_group_closure_sampled():
    rng = random.Random(111)
    for g in (dihedral_g2_group(), signed_permutation_group(3), st8_group()):
        elements = g.enumerate()
        as_set = set(elements)
        assert len(as_set) == g.order()
        for _ in range(30):
            a = rng.choice(elements)
            b = rng.choice(elements)
            assert mat_mul(a, b) in as_set


def test_identity_present():
    for g in (dihedral_g2_group(), signed_permutation_group(2), monomial_group(3, 2)):
        assert mat_identity(g.field, g.dim) in set(g.enumerate())


def test_orbit_stabilizer_theorem_randomized():
    rng = random.Random(112)
    groups = [
        dihedral_g2_group(),
        signed_permutation_group(2),
        signed_permutation_group(3),
        st8_group(),
        monomial_group(3, 2),
    ]
    for _ in range(40):
        g = rng.choice(groups)
        v = [rng.randint(-3, 3) for _ in range(g.dim)]
        if all(x == 0 for x in v):
            v[0] = 1
        orbit = g.orbit(v)
        assert len(orbit) * g.stabilizer_order(v) == g.order()


def test_basis_vector_orbits():
    e1 = [1, 0]
    assert len(dihedral_g2_group().orbit(e1)) == 6
    assert len(st8_group().orbit(e1)) == 24
    assert len(f4_reflection_group().orbit([1, 0, 0, 0])) == 24
    assert len(signed_permutation_group(3).orbit([1, 0, 0])) == 6


def test_f4_weight_stabilizer_trivial():
    g = f4_reflection_group()
    assert g.stabilizer_is_trivial([1, 2, 3, 5])
    assert not g.stabilizer_is_trivial([1, 0, 0, 0])


def test_generic_weight_orbit_sizes():
    # a weight off every reflection hyperplane has a free orbit
    assert len(dihedral_g2_group().orbit([1, 3])) == 12
    assert len(st8_group().orbit([1, 2])) == 96
    assert len(signed_permutation_group(3).orbit([1, 2, 3])) == 48


def test_orbit_closed_under_generators():
    rng = random.Random(113)
    for g in (dihedral_g2_group(), st8_group()):
        v = [rng.randint(1, 4) for _ in range(g.dim)]
        orbit = g.orbit(v)
        pts = set(orbit.elements)
        for p in orbit.elements:
            for gen in g.generators:
                assert row_action(p, gen) in pts


def test_element_orders_divide_group_order():
    for g in (dihedral_g2_group(), st8_group()):
        n = g.order()
        for mat in g.enumerate():
            assert n % g.element_order(mat) == 0


def test_enumeration_cap():
    with pytest.raises(RuntimeError):
        signed_permutation_group(4).enumerate(cap=10)
