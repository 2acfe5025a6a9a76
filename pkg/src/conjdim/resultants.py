"""Resultants, discriminants, and perfect-power roots.

The workhorse is a subresultant pseudo-remainder sequence over any exact
coefficient ring (number-field elements or multivariate polynomials), which
returns the true Sylvester-determinant value including sign.  Bivariate
eliminations with well-behaved leading coefficients take an
evaluate-and-interpolate fast path instead of running the PRS over a
polynomial coefficient ring.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .multipoly import MultiPoly
from .numberfield import NFElem, NumberField
from .unipoly import UniPoly


def _one_like(c):
    if isinstance(c, NFElem):
        return c.field.one
    return MultiPoly.const(c.field, c.vars, 1)


def _ediv(a, b):
    """Exact division in the coefficient ring."""
    if isinstance(a, NFElem):
        return a * b.inverse()
    return a.exact_div(b)


def _trim(cs: list) -> list:
    while cs and cs[-1].is_zero():
        cs.pop()
    return cs


def _prem(A: list, B: list) -> list:
    """Pseudo-remainder: lc(B)^(deg A - deg B + 1) * A modulo B."""
    d = B[-1]
    delta = len(A) - len(B)
    R = list(A)
    mults = 0
    while R and len(R) >= len(B):
        lead = R[-1]
        R = [c * d for c in R[:-1]]
        mults += 1
        sh = len(R) - (len(B) - 1)
        for i, bc in enumerate(B[:-1]):
            R[sh + i] = R[sh + i] - lead * bc
        _trim(R)
    for _ in range(delta + 1 - mults):
        R = [c * d for c in R]
    return R


def resultant_list(A: list, B: list):
    """Resultant of two coefficient lists (ascending) over an exact ring.

    Subresultant PRS; agrees with the Sylvester determinant in both value
    and sign.  Returns a ring element (zero element on vanishing resultant).
    """
    A, B = _trim(list(A)), _trim(list(B))
    if not A or not B:
        raise ValueError("resultant of the zero polynomial is undefined here")
    one = _one_like(A[0] if A else B[0])
    zero = one - one
    s_negate = False
    if len(A) - 1 == 0 and len(B) - 1 == 0:
        return one
    if len(A) < len(B):
        if ((len(A) - 1) * (len(B) - 1)) % 2 == 1:
            s_negate = not s_negate
        A, B = B, A
    if len(B) == 1:
        out = one
        for _ in range(len(A) - 1):
            out = out * B[0]
        return -out if s_negate else out
    g = one
    h = one
    while True:
        dA, dB = len(A) - 1, len(B) - 1
        delta = dA - dB
        if (dA % 2 == 1) and (dB % 2 == 1):
            s_negate = not s_negate
        R = _prem(A, B)
        if not R:
            return zero
        denom = g
        for _ in range(delta):
            denom = denom * h
        A = B
        B = [_ediv(c, denom) for c in R]
        g = A[-1]
        if delta == 0:
            pass
        elif delta == 1:
            h = g
        else:
            num = g
            for _ in range(delta - 1):
                num = num * g
            den = h
            for _ in range(delta - 2):
                den = den * h
            h = _ediv(num, den)
        if len(B) - 1 == 0:
            break
    dA = len(A) - 1
    num = B[0]
    for _ in range(dA - 1):
        num = num * B[0]
    if dA >= 2:
        den = h
        for _ in range(dA - 2):
            den = den * h
        res = _ediv(num, den)
    else:
        res = num
    return -res if s_negate else res


def resultant_uni(f: UniPoly, g: UniPoly) -> NFElem:
    if f.is_zero() or g.is_zero():
        return f.field.zero
    return resultant_list(list(f.coeffs), list(g.coeffs))


def sylvester_matrix(f: UniPoly, g: UniPoly) -> list[list[NFElem]]:
    m, n = f.degree, g.degree
    size = m + n
    zero = f.field.zero
    rows = []
    fc = list(reversed(f.coeffs))
    gc = list(reversed(g.coeffs))
    for i in range(n):
        rows.append([zero] * i + fc + [zero] * (size - i - len(fc)))
    for i in range(m):
        rows.append([zero] * i + gc + [zero] * (size - i - len(gc)))
    return rows


def bareiss_det(rows: list[list]):
    """Fraction-free determinant over an exact ring (with row pivoting)."""
    n = len(rows)
    if n == 0:
        raise ValueError("empty matrix")
    M = [list(r) for r in rows]
    one = _one_like(M[0][0])
    zero = one - one
    sign_flip = False
    prev = one
    for k in range(n - 1):
        if M[k][k].is_zero():
            for r in range(k + 1, n):
                if not M[r][k].is_zero():
                    M[k], M[r] = M[r], M[k]
                    sign_flip = not sign_flip
                    break
            else:
                return zero
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = _ediv(M[i][j] * M[k][k] - M[i][k] * M[k][j], prev)
            M[i][k] = zero
        prev = M[k][k]
    det = M[n - 1][n - 1]
    return -det if sign_flip else det


def sylvester_resultant(f: UniPoly, g: UniPoly) -> NFElem:
    """Determinant-of-Sylvester reference implementation (small inputs)."""
    if f.is_zero() or g.is_zero():
        return f.field.zero
    if f.degree == 0 and g.degree == 0:
        return f.field.one
    if f.degree == 0:
        return f.coeffs[0] ** g.degree
    if g.degree == 0:
        return g.coeffs[0] ** f.degree
    return bareiss_det(sylvester_matrix(f, g))


def discriminant(f: UniPoly) -> NFElem:
    """disc(f) = (-1)^(d(d-1)/2) * Res(f, f') / lc(f)."""
    d = f.degree
    if d < 1:
        raise ValueError("discriminant needs degree >= 1")
    r = resultant_uni(f, f.derivative())
    r = r * f.lc().inverse()
    if (d * (d - 1) // 2) % 2 == 1:
        r = -r
    return r


# -- interpolation ---------------------------------------------------------


def lagrange_interpolate(
    field: NumberField, points: Sequence[NFElem], values: Sequence[NFElem], var: str
) -> UniPoly:
    one = UniPoly.const(field, 1, var)
    prod = one
    for t in points:
        prod = prod * UniPoly(field, [-t, field.one], var)
    acc = UniPoly.zero(field, var)
    for t, v in zip(points, values):
        numer = prod.exact_div(UniPoly(field, [-t, field.one], var))
        scale = v * numer.eval_nf(t).inverse()
        acc = acc + numer * scale
    return acc


def _multipoly_is_const(p: MultiPoly) -> bool:
    return p.is_zero() or p.is_constant()


def multipoly_to_unipoly(p: MultiPoly, var: str, out_var: str | None = None) -> UniPoly:
    """Convert a MultiPoly involving only `var` to a UniPoly."""
    coeffs = p.as_univariate(var)
    out = []
    for c in coeffs:
        if not _multipoly_is_const(c):
            raise ValueError("polynomial involves more than one variable")
        out.append(c.constant_value())
    return UniPoly(p.field, out, out_var or var)


def unipoly_to_multipoly(f: UniPoly, variables: Sequence[str], var: str) -> MultiPoly:
    field = f.field
    i = tuple(variables).index(var)
    terms = {}
    for k, c in enumerate(f.coeffs):
        if not c.is_zero():
            e = [0] * len(variables)
            e[i] = k
            terms[tuple(e)] = c
    return MultiPoly(field, variables, terms)


def resultant_elim(f: MultiPoly, g: MultiPoly, var: str) -> MultiPoly:
    """Resultant of f and g with respect to `var`.

    Uses evaluate/interpolate when a single other variable remains and the
    leading coefficients make specialization safe; otherwise runs the
    subresultant PRS with polynomial coefficients.
    """
    if f.is_zero() or g.is_zero():
        return MultiPoly.zero(f.field, f.vars)
    fU = f.as_univariate(var)
    gU = g.as_univariate(var)
    others = [
        v
        for v in f.vars
        if v != var and (f.degree_in(v) > 0 or g.degree_in(v) > 0)
    ]
    if len(others) == 1:
        y = others[0]
        lf, lg = fU[-1], gU[-1]
        lf_const = _multipoly_is_const(lf)
        lg_const = _multipoly_is_const(lg)
        f_monic = lf_const and not lf.is_zero() and lf.constant_value() == f.field.one
        g_monic = lg_const and not lg.is_zero() and lg.constant_value() == f.field.one
        if (lf_const and lg_const) or f_monic or g_monic:
            return _resultant_interp(
                f, fU, gU, y, lf_const and lg_const, f_monic, g_monic
            )
    return resultant_list(fU, gU)


def _resultant_interp(
    f: MultiPoly,
    fU: list,
    gU: list,
    y: str,
    both_const: bool,
    f_monic: bool,
    g_monic: bool,
) -> MultiPoly:
    """Interpolate Res_var(f, g) as a polynomial in the remaining variable y.

    Specialization at y = t commutes with the resultant when both leading
    coefficients are constants (degrees never drop) or when one side is
    monic (evaluate through that side's root product; the other side may
    drop degree freely).
    """
    field = f.field
    da, db = len(fU) - 1, len(gU) - 1
    ra = max((c.degree_in(y) for c in fU), default=0)
    rb = max((c.degree_in(y) for c in gU), default=0)
    bound = da * rb + db * ra + 1
    swap_sign = (da * db) % 2 == 1
    points: list[NFElem] = []
    values: list[NFElem] = []
    t = 0
    while len(points) < bound:
        te = field.elem(t)
        t = -t if t > 0 else -t + 1  # 0, 1, -1, 2, -2, ...
        pt = [te if v == y else field.zero for v in f.vars]
        fa = _trim([c.eval_all(pt) for c in fU])
        gb = _trim([c.eval_all(pt) for c in gU])
        if both_const or f_monic:
            if not gb:
                val = field.zero
            else:
                val = resultant_list(fa, gb)
        else:  # g monic: go through Res(g, f) and flip by the formal sign
            if not fa:
                val = field.zero
            else:
                val = resultant_list(gb, fa)
                if swap_sign:
                    val = -val
        points.append(te)
        values.append(val)
    res = lagrange_interpolate(field, points, values, y)
    return unipoly_to_multipoly(res, f.vars, y)


# -- perfect powers ----------------------------------------------------------


def perfect_power_root(f: UniPoly, m: int) -> tuple[UniPoly, NFElem]:
    """Write f = c * P^m with P monic; returns (P, c) or raises."""
    if m < 1:
        raise ValueError("power must be positive")
    if f.is_zero():
        raise ValueError("zero polynomial")
    if m == 1:
        return f.monic(), f.lc()
    if f.degree % m != 0:
        raise ArithmeticError(f"degree {f.degree} is not a multiple of {m}")
    N = f.degree // m
    field = f.field
    fm = f.monic()
    # reversed power series: S(t)^m = rev(fm)(t) mod t^(N+1), S(0) = 1
    rev = [fm.coeffs[fm.degree - k] for k in range(fm.degree + 1)]
    S = [field.one] + [field.zero] * N
    minv = field.elem(Fraction(1, m))
    for j in range(1, N + 1):
        acc = _series_power_coeff(S, m, j, field)
        S[j] = (rev[j] - acc) * minv
    P = UniPoly(field, list(reversed(S)), f.var)
    c = f.lc()
    check = P ** m * c
    if check != f:
        raise ArithmeticError(f"input is not a perfect {m}-th power times a constant")
    return P, c


def _series_power_coeff(S: list, m: int, j: int, field) -> NFElem:
    """Coefficient of t^j in (sum S_k t^k)^m, treating S[j] as zero."""
    cur = [field.one]
    base = S[:j] + [field.zero]
    for _ in range(m):
        nxt = [field.zero] * (j + 1)
        for a, ca in enumerate(cur):
            if ca.is_zero():
                continue
            for b in range(0, j + 1 - a):
                cb = base[b] if b < len(base) else field.zero
                if not cb.is_zero():
                    nxt[a + b] = nxt[a + b] + ca * cb
        cur = nxt[: j + 1]
    return cur[j] if j < len(cur) else field.zero
