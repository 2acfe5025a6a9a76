"""Newton identities between power sums and elementary symmetric functions."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .multipoly import MultiPoly
from .numberfield import NFElem, NumberField, QQ


def elementary_in_powersums(n: int, field: NumberField = QQ) -> list[MultiPoly]:
    """e_1..e_n as polynomials in the power-sum variables p1..pn.

    Triangular Newton recurrence: k*e_k = sum_{i=1}^{k} (-1)^(i-1) e_{k-i} p_i.
    """
    pvars = tuple(f"p{i}" for i in range(1, n + 1))
    pgens = MultiPoly.gens(field, pvars)
    one = MultiPoly.const(field, pvars, 1)
    es = [one]  # e_0
    for k in range(1, n + 1):
        acc = MultiPoly.zero(field, pvars)
        for i in range(1, k + 1):
            term = es[k - i] * pgens[i - 1]
            acc = acc + (term if i % 2 == 1 else -term)
        es.append(acc * Fraction(1, k))
    return es[1:]


def powersum_reductions(n: int, m_max: int, field: NumberField = QQ) -> dict[int, MultiPoly]:
    """p_m rewritten in p1..pn for every m <= m_max (n variables).

    For m > n: p_m = sum_{i=1}^{n} (-1)^(i-1) e_i p_{m-i}.
    """
    pvars = tuple(f"p{i}" for i in range(1, n + 1))
    pgens = MultiPoly.gens(field, pvars)
    es = elementary_in_powersums(n, field)
    red: dict[int, MultiPoly] = {}
    for m in range(1, min(n, m_max) + 1):
        red[m] = pgens[m - 1]
    for m in range(n + 1, m_max + 1):
        acc = MultiPoly.zero(field, pvars)
        for i in range(1, n + 1):
            term = es[i - 1] * red[m - i]
            acc = acc + (term if i % 2 == 1 else -term)
        red[m] = acc
    return red


def newton_reduce(expr: MultiPoly, n: int) -> MultiPoly:
    """Rewrite a polynomial in power sums p1..pM using only p1..pn.

    Valid when the p_i are the power sums of exactly n quantities.
    """
    m_max = n
    for v in expr.vars:
        if not v.startswith("p"):
            raise ValueError("newton_reduce expects variables named p1, p2, ...")
        m_max = max(m_max, int(v[1:]))
    red = powersum_reductions(n, m_max, expr.field)
    return expr.substitute({v: red[int(v[1:])] for v in expr.vars})


def powersums_to_elementary(psums: Sequence[NFElem]) -> list[NFElem]:
    """Values e_1..e_n from power-sum values p_1..p_n (characteristic 0)."""
    if not psums:
        return []
    field = psums[0].field
    es: list[NFElem] = [field.one]
    for k in range(1, len(psums) + 1):
        acc = field.zero
        for i in range(1, k + 1):
            term = es[k - i] * psums[i - 1]
            acc = acc + (term if i % 2 == 1 else -term)
        es.append(acc * Fraction(1, k))
    return es[1:]


def elem_symm_lpowers(n: int, l: int, field: NumberField = QQ) -> list[MultiPoly]:
    """Elementary symmetric polynomials of x_1^l, ..., x_n^l.

    These generate the invariants of the full monomial group G(l,1,n)
    acting on n coordinates.
    """
    xvars = tuple(f"x{i}" for i in range(1, n + 1))
    xgens = MultiPoly.gens(field, xvars)
    es = [MultiPoly.const(field, xvars, 1)]  # e_0, e_1, ...
    for xi in xgens:
        xl = xi ** l
        new = [es[0]]
        for j in range(1, len(es) + 1):
            term = es[j] if j < len(es) else MultiPoly.zero(field, xvars)
            new.append(term + es[j - 1] * xl)
        es = new
    return es[1:]
