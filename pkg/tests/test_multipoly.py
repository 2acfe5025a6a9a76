"""Sparse multivariate polynomials: substitution, matrix action, evaluation."""

import random
from fractions import Fraction

from conjdim.multipoly import MultiPoly
from conjdim.numberfield import QQ, cyclotomic_field


def rand_mpoly(rng, field, variables, n_terms=4, max_exp=3, span=6):
    terms = {}
    for _ in range(n_terms):
        e = tuple(rng.randint(0, max_exp) for _ in variables)
        terms[e] = field.elem(rng.randint(-span, span))
    return MultiPoly(field, tuple(variables), {e: c for e, c in terms.items() if not c.is_zero()})


def test_gens_and_text():
    x, y = MultiPoly.gens(QQ, ("x", "y"))
    p = x * x + y * QQ.elem(-3)
    assert p.total_degree() == 2
    assert p.degree_in("x") == 2
    assert p.degree_in("y") == 1
    assert p.eval_all([QQ.elem(2), QQ.elem(1)]).as_rational() == 1


def test_ring_axioms_randomized():
    rng = random.Random(41)
    fields = [QQ, cyclotomic_field(4)]
    for _ in range(100):
        K = rng.choice(fields)
        vs = ("x1", "x2")
        a = rand_mpoly(rng, K, vs)
        b = rand_mpoly(rng, K, vs)
        c = rand_mpoly(rng, K, vs)
        assert (a + b) * c == a * c + b * c
        assert a * b == b * a
        assert (a * b) * c == a * (b * c)


def test_substitute_matches_eval():
    rng = random.Random(42)
    x, y = MultiPoly.gens(QQ, ("x", "y"))
    for _ in range(60):
        p = rand_mpoly(rng, QQ, ("x", "y"))
        img = x + y * Fraction(2)
        q = p.substitute({"x": img})
        at = [QQ.elem(rng.randint(-4, 4)), QQ.elem(rng.randint(-4, 4))]
        expected = p.eval_all([img.eval_all(at), at[1]])
        assert q.eval_all(at) == expected


def test_compose_matrix_rows_is_linear_substitution():
    rng = random.Random(43)
    from conjdim.groups import mat_from_rows, row_action

    for _ in range(60):
        p = rand_mpoly(rng, QQ, ("x1", "x2"))
        g = mat_from_rows(QQ, [[rng.randint(-3, 3) for _ in range(2)] for _ in range(2)])
        q = p.compose_matrix_rows(g)
        z = tuple(QQ.elem(rng.randint(-4, 4)) for _ in range(2))
        assert q.eval_all(list(z)) == p.eval_all(list(row_action(z, g)))


def test_as_univariate_round_trip():
    rng = random.Random(44)
    for _ in range(40):
        p = rand_mpoly(rng, QQ, ("x", "y"))
        coeffs = p.as_univariate("y")
        rebuilt = MultiPoly.from_univariate(coeffs, "y")
        assert rebuilt == p


def test_exact_div():
    x, y = MultiPoly.gens(QQ, ("x", "y"))
    a = x + y
    b = x * x - y * y
    q = b.exact_div(a)
    assert q * a == b
