"""Exact arithmetic with square roots of all zeros of a rational polynomial.

Given a squarefree monic f of degree n over Q, the algebra generated by
symbols x_1, ..., x_n (the zeros of f, adjoined generically) together with
s_1, ..., s_n (square roots of those zeros) has dimension 2^n * n! over Q.
Elements are kept in the triangular monomial basis

    x_1^{a_1} ... x_n^{a_n} * s_1^{d_1} ... s_n^{d_n},
    0 <= a_i <= n - i,  d_i in {0, 1}.

The x-part is reduced by the classical quotient tower h_1 = f,
h_{i+1}(t) = h_i(t) / (t - x_i) (synthetic division; h_i is monic of degree
n - i + 1 in t), and s_i^2 rewrites to x_i.  When f is squarefree with
f(0) != 0, the algebra is a product of fields, so the monic annihilator of
any element is squarefree and the true minimal polynomial of a numeric
realization is one of its irreducible factors.

Minimal polynomials are extracted by the Krylov method: generate powers of
the element and stop at the first linear dependence, found by incremental
fraction-free elimination with bookkeeping of the combination.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Sequence

import mpmath

from .modfactor import factor_over_q, irreducibility_certificate
from .numberfield import QQ
from .rat import rat
from .resultants import discriminant
from .sturm import RealEmbedding, real_and_negative_root_counts
from .unipoly import UniPoly

Key = tuple[tuple[int, ...], tuple[int, ...]]
Terms = dict[Key, Fraction]

_ZERO = Fraction(0)
_ONE = Fraction(1)


class SplittingAlgebra:
    """Q-algebra Q[x_1..x_n, s_1..s_n] / (tower of f, s_i^2 - x_i)."""

    def __init__(self, f: UniPoly):
        if f.field is not QQ:
            raise ValueError("the square-root tower is built over Q only")
        f = f.monic()
        if not f.is_squarefree():
            raise ValueError("tower construction needs a squarefree polynomial")
        self.f = f
        self.n = f.degree
        n = self.n
        # max exponent of x_i (0-indexed i) in the monomial basis
        self.bounds = [n - 1 - i for i in range(n)]
        self._build_tower()
        self._basis = [
            (a, d)
            for a in itertools.product(*(range(b + 1) for b in self.bounds))
            for d in itertools.product((0, 1), repeat=n)
        ]
        self.dim = len(self._basis)
        self._index = {key: j for j, key in enumerate(self._basis)}

    def _build_tower(self) -> None:
        """Iterated synthetic division of f by (t - x_1), (t - x_2), ...

        Stores, for each i, the basis expansion of x_i^{bounds[i]+1} (the
        image of the monic leading term of h_i under h_i(x_i) = 0).
        """
        n = self.n
        zero = (0,) * n
        # h as a list of coefficient term-dicts, ascending in t
        h: list[Terms] = [
            {(zero, zero): rat(c)} if c != 0 else {}
            for c in self.f.rational_coeffs()
        ]
        self.rewrite_pow: list[Terms] = []
        for i in range(n):
            m = n - i  # degree of h in t is m + ... ; here len(h) - 1 = n - i
            deg = len(h) - 1
            # x_i^{deg} = -(c_0 + c_1 x_i + ... + c_{deg-1} x_i^{deg-1})
            image: Terms = {}
            for k in range(deg):
                shift = tuple(k if j == i else 0 for j in range(n))
                for (a, d), v in h[k].items():
                    na = tuple(a[j] + shift[j] for j in range(n))
                    key = (na, d)
                    image[key] = image.get(key, _ZERO) - v
            self.rewrite_pow.append({k: v for k, v in image.items() if v != 0})
            if i == n - 1:
                break
            # synthetic quotient by (t - x_i): b_{deg-1} = 1, b_{k-1} = c_k + x_i b_k
            xi = tuple(1 if j == i else 0 for j in range(n))
            b: list[Terms] = [dict() for _ in range(deg)]
            b[deg - 1] = {(zero, zero): _ONE}
            for k in range(deg - 1, 0, -1):
                nxt: Terms = dict(h[k])
                for (a, d), v in b[k].items():
                    na = tuple(a[j] + xi[j] for j in range(n))
                    key = (na, d)
                    nxt[key] = nxt.get(key, _ZERO) + v
                b[k - 1] = {kk: vv for kk, vv in nxt.items() if vv != 0}
            h = b

    # --- element constructors -------------------------------------------

    def zero(self) -> "TowerElem":
        return TowerElem(self, {})

    def one(self) -> "TowerElem":
        zero = (0,) * self.n
        return TowerElem(self, {(zero, zero): _ONE})

    def const(self, q) -> "TowerElem":
        q = rat(q)
        if q == 0:
            return self.zero()
        zero = (0,) * self.n
        return TowerElem(self, {(zero, zero): q})

    def root(self, i: int) -> "TowerElem":
        """The i-th adjoined zero x_i (0-indexed)."""
        a = tuple(1 if j == i else 0 for j in range(self.n))
        return TowerElem(self, {(a, (0,) * self.n): _ONE})

    def sqrt_root(self, i: int) -> "TowerElem":
        """The chosen square root s_i of the i-th zero (0-indexed)."""
        d = tuple(1 if j == i else 0 for j in range(self.n))
        return TowerElem(self, {((0,) * self.n, d): _ONE})

    # --- arithmetic on raw term dicts ------------------------------------

    def _reduce(self, terms: Terms) -> Terms:
        n = self.n
        for i in reversed(range(n)):
            bound = self.bounds[i]
            while any(a[i] > bound for (a, _d) in terms):
                out: Terms = {}
                for (a, d), v in terms.items():
                    if a[i] <= bound:
                        out[(a, d)] = out.get((a, d), _ZERO) + v
                        continue
                    rest = list(a)
                    rest[i] -= bound + 1
                    for (ra, _rd), rv in self.rewrite_pow[i].items():
                        na = tuple(rest[j] + ra[j] for j in range(n))
                        key = (na, d)
                        out[key] = out.get(key, _ZERO) + v * rv
                terms = {k: v for k, v in out.items() if v != 0}
        return terms

    def _mul(self, u: Terms, v: Terms) -> Terms:
        n = self.n
        raw: Terms = {}
        for (a1, d1), c1 in u.items():
            for (a2, d2), c2 in v.items():
                a = [a1[j] + a2[j] for j in range(n)]
                d = []
                for j in range(n):
                    dj = d1[j] + d2[j]
                    if dj == 2:
                        a[j] += 1
                        dj = 0
                    d.append(dj)
                key = (tuple(a), tuple(d))
                raw[key] = raw.get(key, _ZERO) + c1 * c2
        return self._reduce({k: v for k, v in raw.items() if v != 0})

    def coords(self, elem: "TowerElem") -> list[Fraction]:
        vec = [_ZERO] * self.dim
        for key, v in elem.terms.items():
            vec[self._index[key]] = v
        return vec


class TowerElem:
    """Element of a SplittingAlgebra in the reduced monomial basis."""

    __slots__ = ("alg", "terms")

    def __init__(self, alg: SplittingAlgebra, terms: Terms):
        self.alg = alg
        self.terms = terms

    def __add__(self, other: "TowerElem") -> "TowerElem":
        out = dict(self.terms)
        for k, v in other.terms.items():
            s = out.get(k, _ZERO) + v
            if s == 0:
                out.pop(k, None)
            else:
                out[k] = s
        return TowerElem(self.alg, out)

    def __sub__(self, other: "TowerElem") -> "TowerElem":
        return self + (-other)

    def __neg__(self) -> "TowerElem":
        return TowerElem(self.alg, {k: -v for k, v in self.terms.items()})

    def __mul__(self, other) -> "TowerElem":
        if isinstance(other, TowerElem):
            return TowerElem(self.alg, self.alg._mul(self.terms, other.terms))
        q = rat(other)
        if q == 0:
            return self.alg.zero()
        return TowerElem(self.alg, {k: v * q for k, v in self.terms.items()})

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "TowerElem":
        if e < 0:
            raise ValueError("negative powers are not defined in the tower")
        out = self.alg.one()
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def is_zero(self) -> bool:
        return not self.terms

    def __repr__(self):
        return f"TowerElem({len(self.terms)} terms, dim {self.alg.dim})"


def algebra_minpoly(elem: TowerElem, var: str = "y") -> UniPoly:
    """Monic annihilator of an algebra element, by the Krylov method.

    Powers 1, t, t^2, ... are echelonized incrementally; the first power
    that is linearly dependent on the earlier ones yields the coefficients.
    """
    alg = elem.alg
    rows: list[tuple[int, list[Fraction], list[Fraction]]] = []
    cur = alg.one()
    k = 0
    while True:
        if k > alg.dim:
            raise ArithmeticError("annihilator search exceeded the algebra dimension")
        vec = alg.coords(cur)
        combo = [_ZERO] * k + [_ONE]
        for pivot, rvec, rcombo in rows:
            c = vec[pivot]
            if c == 0:
                continue
            vec = [vec[j] - c * rvec[j] for j in range(alg.dim)]
            for j, rc in enumerate(rcombo):
                combo[j] -= c * rc
        pivot = next((j for j, v in enumerate(vec) if v != 0), None)
        if pivot is None:
            return UniPoly.from_rationals(QQ, combo, var).monic()
        inv = 1 / vec[pivot]
        vec = [v * inv for v in vec]
        combo = [c * inv for c in combo]
        rows.append((pivot, vec, combo))
        cur = cur * elem
        k += 1


def _principal_sqrt_sum(f: UniPoly, weights: Sequence[Fraction], dps: int) -> mpmath.mpc:
    """Numeric value of the weighted sum of principal square roots of the
    zeros of f, the zeros sorted by (real part, imaginary part)."""
    with mpmath.workdps(dps + 20):
        coeffs = list(reversed(f.numeric_coeffs(dps + 20)))
        roots = mpmath.polyroots(coeffs, maxsteps=600, extraprec=80)
        roots = sorted(roots, key=lambda z: (float(mpmath.re(z)), float(mpmath.im(z))))
        total = mpmath.mpc(0)
        for w, r in zip(weights, roots):
            total += mpmath.mpf(w.numerator) / w.denominator * mpmath.sqrt(r)
        return total


def _select_factor_at(sf: UniPoly, value: mpmath.mpc, dps: int) -> UniPoly:
    """Irreducible factor of sf (over Q) vanishing at the given numeric value."""
    _c, factors, complete = factor_over_q(sf)
    if not complete:
        raise ArithmeticError("factorization over Q did not complete")
    if len(factors) == 1:
        return factors[0][0]
    tol = mpmath.mpf(10) ** (-dps // 2)
    scored = []
    for g, _m in factors:
        scored.append((abs(g.eval_numeric(value, dps + 20)), g))
    scored.sort(key=lambda t: t[0])
    best, second = scored[0], scored[1]
    if best[0] < tol and second[0] > 1e10 * max(best[0], tol / 1e10):
        return best[1]
    raise ArithmeticError(
        "could not separate candidate factors at the numeric weighted sum"
    )


def minpoly_of_weighted_sqrts(f: UniPoly, weights: Sequence) -> UniPoly:
    """Minimal polynomial over Q of sum_i w_i * sqrt(r_i), the r_i running
    over the zeros of f (squarefree over Q, deg f = len(weights))."""
    poly, _meta = _weighted_sqrt_minpoly(f, weights)
    return poly


def _weighted_sqrt_minpoly(
    f: UniPoly, weights: Sequence, var: str = "y"
) -> tuple[UniPoly, dict]:
    if f.field is not QQ:
        raise ValueError("weighted square-root sums are taken over Q")
    wq = [rat(w) for w in weights]
    if f.degree != len(wq):
        raise ValueError(f"expected {f.degree} weights, got {len(wq)}")
    alg = SplittingAlgebra(f)
    alpha = alg.zero()
    for i, w in enumerate(wq):
        alpha = alpha + alg.sqrt_root(i) * w
    ann = algebra_minpoly(alpha, var)
    meta: dict = {"algebra_dimension": alg.dim, "annihilator_degree": ann.degree}
    notes: list[str] = []
    if alg.dim % ann.degree != 0:
        notes.append(
            f"annihilator degree {ann.degree} does not divide the algebra dimension {alg.dim}"
        )
    cert = irreducibility_certificate(ann)
    poly = ann
    if cert.verdict == "Reducible":
        dps = 60
        value = _principal_sqrt_sum(f, wq, dps)
        poly = _select_factor_at(ann, value, dps)
        notes.append(
            "annihilator was reducible; selected the factor vanishing at the "
            "numeric weighted sum of principal square roots"
        )
        cert = irreducibility_certificate(poly)
    meta["certificate"] = cert
    meta["notes"] = notes
    return poly, meta


def check_sqrt_criteria(f: UniPoly) -> dict:
    """Report on the sufficient conditions for a weighted sum of square
    roots of the zeros of f to have conjugate dimension deg(f).

    Checks (a) whether the constant-term product of the zeros lies in the
    square class generated by the discriminant (it must not), and (b) the
    interlacing hypothesis that all zeros are real with exactly one negative
    (decided exactly by Sturm sequences).  For odd degree the extra
    condition on the first zero is taken from the interlacing route when it
    applies and reported unverified otherwise.
    """
    from .squareclass import in_delta_square_class

    n = f.degree
    if n < 1:
        raise ValueError("need a nonconstant polynomial")
    fm = f.monic()
    report: dict = {"degree": n}
    # product of the zeros
    a_n = fm.coeff(0) * ((-1) ** n)
    disc = discriminant(fm)
    report["zero_product"] = a_n.as_rational() if a_n.is_rational() else a_n
    report["discriminant"] = disc.as_rational() if disc.is_rational() else disc
    if a_n.is_rational() and disc.is_rational():
        in_class = in_delta_square_class(a_n.as_rational(), disc.as_rational())
        report["zero_product_in_disc_square_class"] = in_class
        report["square_class_condition"] = "fail" if in_class else "pass"
    else:
        report["zero_product_in_disc_square_class"] = None
        report["square_class_condition"] = "not checked exactly"
    sign = None
    if f.field is not QQ:
        sign = RealEmbedding(f.field).sign
    total, negative = real_and_negative_root_counts(fm, sign=sign)
    report["real_roots"] = total
    report["negative_roots"] = negative
    report["interlacing_hypothesis"] = total == n and negative == 1
    if n % 2 == 1:
        if report["interlacing_hypothesis"]:
            report["odd_degree_condition"] = "satisfied via the interlacing route"
        else:
            report["odd_degree_condition"] = "not checked exactly"
    else:
        report["odd_degree_condition"] = "not applicable"
    return report


def mult_generator(alg: SplittingAlgebra, i: int) -> TowerElem:
    """(1 + s_i) / (1 - s_i) written without division.

    Uses (1 - s_i)(1 + s_i) = 1 - x_i and (1 - x_i)^{-1} =
    prod_{j != i} (1 - x_j) / f(1); needs f(1) != 0.
    """
    f1 = alg.f.eval_rat(1).as_rational()
    if f1 == 0:
        raise ValueError("1 is a zero of f, so 1 - x_i is not invertible")
    one = alg.one()
    num = one + alg.sqrt_root(i)
    rest = alg.one()
    for j in range(alg.n):
        if j != i:
            rest = rest * (one - alg.root(j))
    return num * num * rest * (1 / f1)
