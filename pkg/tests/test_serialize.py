"""Canonical text and JSON forms; every emitted value must re-parse equal."""

import json
import random
from fractions import Fraction

import pytest

from conjdim.numberfield import QQ, cyclotomic_field, nf_make
from conjdim.serialize import (
    construction_json,
    nfelem_str,
    parse_nfelem,
    parse_rat,
    rat_str,
    to_jsonable,
    unipoly_from_json,
    unipoly_json,
)
from conjdim.unipoly import UniPoly, poly_from_int_list


def test_rational_round_trip():
    rng = random.Random(161)
    for _ in range(100):
        q = Fraction(rng.randint(-999, 999), rng.randint(1, 999))
        assert parse_rat(rat_str(q)) == q
    assert rat_str(Fraction(5)) == "5"
    assert rat_str(Fraction(-7, 3)) == "-7/3"


def test_nfelem_round_trip():
    K = cyclotomic_field(4)
    a = K.elem([Fraction(1, 2), Fraction(-3)])
    s = nfelem_str(a)
    assert s == "[1/2, -3]@Q(i)"
    assert parse_nfelem(s) == a


def test_nfelem_round_trip_randomized():
    rng = random.Random(162)
    fields = [QQ, cyclotomic_field(4), cyclotomic_field(3), nf_make([-2, 0, 0, 1])]
    for _ in range(100):
        K = rng.choice(fields)
        a = K.elem([Fraction(rng.randint(-20, 20), rng.randint(1, 7)) for _ in range(K.degree)])
        assert parse_nfelem(nfelem_str(a)) == a


def test_unipoly_json_round_trip_over_q():
    f = poly_from_int_list([470596, 0, 0, 0, 0, 0, 572, 0, 0, 0, 0, 0, 1], var="y")
    d = unipoly_json(f)
    assert d["var"] == "y"
    assert d["field"] == "Q"
    assert d["coeffs"][0] == "470596"
    g = unipoly_from_json(d)
    assert g == f
    # survives an actual JSON encode/decode cycle
    g2 = unipoly_from_json(json.loads(json.dumps(d)))
    assert g2 == f


def test_unipoly_json_round_trip_over_gaussian():
    K = cyclotomic_field(4)
    i = K.gen
    f = UniPoly(K, [K.one + i, K.elem(-2), K.one], var="x")
    d = unipoly_json(f)
    assert d["field"] == "Q(i)"
    assert "@Q(i)" in d["coeffs"][0]
    assert unipoly_from_json(json.loads(json.dumps(d))) == f


def test_unipoly_json_unlabeled_field_uses_defining_poly():
    K = nf_make([-5, 0, 1])  # sqrt 5, auto label
    f = UniPoly(K, [K.gen, K.one])
    d = unipoly_json(f)
    g = unipoly_from_json(json.loads(json.dumps(d)))
    assert g.field is K
    assert g == f


def test_parse_rejects_mismatched_degree():
    with pytest.raises(ValueError):
        parse_nfelem("[1, 2, 3]@Q(i)")


def test_parse_rejects_unknown_field():
    with pytest.raises(ValueError):
        parse_nfelem("[1]@Q(nonexistent-label)")


def test_to_jsonable_common_shapes():
    K = cyclotomic_field(4)
    out = to_jsonable(
        {
            "frac": Fraction(1, 3),
            "elem": K.gen,
            "poly": poly_from_int_list([1, 1]),
            "list": [Fraction(2), 3, None, True],
        }
    )
    assert out["frac"] == "1/3"
    assert out["elem"] == "[0, 1]@Q(i)"
    assert out["poly"]["coeffs"] == ["1", "1"]
    assert out["list"] == ["2", 3, None, True]
    # everything below must survive json.dumps
    json.dumps(out)


def test_construction_json_worked_example():
    from conjdim.constructor import build_linear_construction
    from conjdim.invariants import g2_invariants

    con = build_linear_construction(g2_invariants(), (0, 2), (1, 3))
    d = construction_json(con)
    assert d["alpha_minpoly"]["coeffs"][0] == "470596"
    assert d["degree"] == 12
    assert d["group"] == "G2"
    assert d["certificates"]["alpha_irreducibility"]["verdict"] == "Irreducible"
    json.dumps(d)
    # emitted polynomial re-parses to an equal value
    assert unipoly_from_json(d["alpha_minpoly"]) == con.alpha_minpoly
    assert unipoly_from_json(d["auxiliary"]) == con.auxiliary
