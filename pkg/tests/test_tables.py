"""Frozen degree-bound tables and the admissibility checker."""

import math

import pytest

from conjdim.tables import (
    D_cyc,
    D_cyc_row,
    D_finite,
    check_bounds,
    d_max,
    d_max_row,
    table_json,
)


def test_dmax_all_rows_frozen():
    want = {
        1: 2,
        2: 12,
        3: 48,
        4: 1152,
        5: 3840,
        6: 103680,
        7: 2903040,
        8: 696729600,
        9: 1393459200,
        10: 8360755200,
    }
    for n, v in want.items():
        assert d_max(n) == v


def test_dmax_exceptional_ratios():
    assert d_max_row(2)["ratio"] == "3/2"
    assert d_max_row(4)["ratio"] == "3"
    assert d_max_row(6)["ratio"] == "9/4"
    assert d_max_row(7)["ratio"] == "9/2"
    assert d_max_row(8)["ratio"] == "135/2"
    assert d_max_row(9)["ratio"] == "15/2"
    assert d_max_row(10)["ratio"] == "9/4"
    for n in (1, 3, 5, 11, 15):
        assert d_max_row(n)["ratio"] == "1"


def test_dmax_generic_beyond_exceptions():
    for n in range(11, 21):
        assert d_max(n) == 2**n * math.factorial(n)


def test_dmax_strictly_monotone_to_20():
    for n in range(1, 20):
        assert d_max(n) < d_max(n + 1)


def test_cyclotomic_exceptions_frozen():
    want = {
        (2, 4): 96,
        (2, 8): 192,
        (2, 10): 600,
        (2, 20): 1200,
        (4, 4): 46080,
        (4, 6): 155520,
        (4, 10): 720000,
        (5, 4): 184320,
        (6, 6): 39191040,
        (6, 10): 1296000000,
        (8, 4): 4246732800,
    }
    for (n, l), v in want.items():
        assert D_cyc(l, n) == v
    assert D_cyc_row(4, 8)["ratio"] == "45/28"
    assert D_cyc_row(4, 2)["ratio"] == "3"
    assert D_cyc_row(6, 6)["ratio"] == "7/6"


def test_cyclotomic_generic():
    assert D_cyc(12, 3) == 12**3 * 6
    assert D_cyc(4, 3) == 4**3 * 6
    assert D_cyc(6, 2) == 6**2 * 2


def test_cyclotomic_input_validation():
    with pytest.raises(ValueError):
        D_cyc(3, 2)  # odd order
    with pytest.raises(ValueError):
        D_cyc(2, 2)  # too small


def test_finite_field_bound():
    assert D_finite(2, 2) == 3
    assert D_finite(2, 3) == 7
    assert D_finite(3, 2) == 8
    assert D_finite(4, 2) == 15
    assert D_finite(9, 1) == 8
    with pytest.raises(ValueError):
        D_finite(6, 2)


def test_check_bounds_verdicts():
    assert check_bounds(2, 12) == "OK"
    assert check_bounds(2, 13) == "ViolatesUpper"
    assert check_bounds(3, 2) == "ViolatesLower"
    assert check_bounds(2, 96, base="cyc:4") == "OK"
    assert check_bounds(2, 97, base="cyc:4") == "ViolatesUpper"
    assert check_bounds(3, 7, base="fq:2") == "OK"
    assert check_bounds(3, 8, base="fq:2") == "ViolatesUpper"
    with pytest.raises(ValueError):
        check_bounds(2, 2, base="weird")


def test_table_json_shapes():
    t = table_json("Q", 4)
    assert t["base"] == "Q"
    assert [r["n"] for r in t["rows"]] == [1, 2, 3, 4]
    assert t["rows"][1]["bound"] == 12
    t2 = table_json("cyc:4", 2)
    assert t2["base"] == "Q(w_4)"
    assert t2["rows"][1]["bound"] == 96
    t3 = table_json("fq:2", 3)
    assert t3["rows"][2]["bound"] == 7


def test_small_orders_match_direct_enumeration():
    from conjdim.groups import dihedral_g2_group, signed_permutation_group, st8_group

    assert dihedral_g2_group().order() == d_max_row(2)["bound"]
    assert st8_group().order() == D_cyc_row(4, 2)["bound"]
    for n in (1, 2, 3, 4, 5):
        assert signed_permutation_group(n).order() == 2**n * math.factorial(n)
