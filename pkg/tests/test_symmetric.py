"""Newton identities and symmetric-function rewriting."""

import itertools
import math
import random
from fractions import Fraction

from conjdim.multipoly import MultiPoly
from conjdim.numberfield import QQ
from conjdim.symmetric import (
    elem_symm_lpowers,
    elementary_in_powersums,
    newton_reduce,
    powersum_reductions,
    powersums_to_elementary,
)


def powersum_values(z, m):
    return QQ.elem(sum(x**m for x in z))


def elementary_values(z, k):
    return QQ.elem(sum(math.prod(c) for c in itertools.combinations(z, k)))


def test_powersums_to_elementary_matches_direct():
    rng = random.Random(61)
    for _ in range(120):
        n = rng.randint(1, 5)
        z = [Fraction(rng.randint(-6, 6), rng.randint(1, 3)) for _ in range(n)]
        psums = [powersum_values(z, m) for m in range(1, n + 1)]
        es = powersums_to_elementary(psums)
        assert es == [elementary_values(z, k) for k in range(1, n + 1)]


def test_elementary_in_powersums_forms():
    rng = random.Random(62)
    for n in (1, 2, 3, 4):
        forms = elementary_in_powersums(n)
        assert len(forms) == n
        for _ in range(10):
            z = [Fraction(rng.randint(-5, 5)) for _ in range(n)]
            point = [powersum_values(z, m) for m in range(1, n + 1)]
            for k, form in enumerate(forms, start=1):
                assert form.eval_all(point) == elementary_values(z, k)


def test_newton_reduce_expresses_high_powersums():
    # s_m for m > n rewritten in s_1..s_n, checked by evaluation
    rng = random.Random(63)
    n = 3
    reductions = powersum_reductions(n, 8)
    for m in range(4, 9):
        form = reductions[m]
        for _ in range(15):
            z = [Fraction(rng.randint(-5, 5)) for _ in range(n)]
            point = [powersum_values(z, j) for j in range(1, n + 1)]
            assert form.eval_all(point) == powersum_values(z, m)


def test_newton_reduce_is_identity_on_low_degrees():
    n = 4
    vs = tuple(f"p{j}" for j in range(1, n + 1))
    gens = MultiPoly.gens(QQ, vs)
    expr = gens[0] * gens[1] + gens[2]
    assert newton_reduce(expr, n) == expr


def test_elem_symm_lpowers_invariance_under_scaling():
    # forms in n variables built from l-th powers: e_k(x_1^l .. x_n^l)
    rng = random.Random(64)
    for n, l in ((2, 3), (3, 2), (2, 4)):
        forms = elem_symm_lpowers(n, l)
        assert len(forms) == n
        for _ in range(10):
            z = [Fraction(rng.randint(-4, 4)) for _ in range(n)]
            zs = [QQ.elem(x) for x in z]
            pow_vals = [x**l for x in z]
            for k, form in enumerate(forms, start=1):
                direct = QQ.elem(
                    sum(math.prod(c) for c in itertools.combinations(pow_vals, k))
                )
                assert form.eval_all(zs) == direct
