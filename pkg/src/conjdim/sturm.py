"""Sturm chains, exact real-root counting, and real embeddings of number fields.

Everything here is exact. Sign determination for elements of a real-embedded
number field uses rational interval arithmetic on an isolating interval of
the defining polynomial's chosen real root, refined by bisection until the
sign is unambiguous.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Optional, Sequence

from .numberfield import NFElem, NumberField, QQ
from .unipoly import UniPoly

SignOracle = Callable[[NFElem], int]


def _rational_sign(v: NFElem) -> int:
    c = v.coords[0]
    if any(v.coords[1:]):
        raise ValueError("sign of a non-rational element needs a real embedding")
    return (c > 0) - (c < 0)


def sturm_chain(f: UniPoly) -> list[UniPoly]:
    """Sturm chain of the squarefree part of f."""
    f = f.squarefree_part()
    chain = [f]
    if f.degree >= 1:
        chain.append(f.derivative())
        while chain[-1].degree >= 1:
            r = chain[-2] % chain[-1]
            if r.is_zero():
                break
            chain.append(-r)
    return chain


def _sign_at(chain: list[UniPoly], t: Fraction, sign: SignOracle) -> list[int]:
    return [sign(g.eval_rat(t)) for g in chain]


def _sign_at_infinity(chain: list[UniPoly], positive: bool, sign: SignOracle) -> list[int]:
    out = []
    for g in chain:
        if g.is_zero():
            out.append(0)
            continue
        s = sign(g.lc())
        if not positive and g.degree % 2 == 1:
            s = -s
        out.append(s)
    return out


def _variations(signs: Sequence[int]) -> int:
    nz = [s for s in signs if s != 0]
    return sum(1 for a, b in zip(nz, nz[1:]) if a * b < 0)


def real_root_count(
    f: UniPoly,
    lo: Optional[Fraction] = None,
    hi: Optional[Fraction] = None,
    sign: Optional[SignOracle] = None,
) -> int:
    """Number of distinct real roots of f in (lo, hi]; None means +-infinity.

    Coefficients may lie in a real-embedded number field when a sign oracle
    is supplied.
    """
    if f.degree < 1:
        return 0
    oracle = sign if sign is not None else _rational_sign
    chain = sturm_chain(f)
    va = (
        _variations(_sign_at_infinity(chain, False, oracle))
        if lo is None
        else _variations(_sign_at(chain, Fraction(lo), oracle))
    )
    vb = (
        _variations(_sign_at_infinity(chain, True, oracle))
        if hi is None
        else _variations(_sign_at(chain, Fraction(hi), oracle))
    )
    return va - vb


def real_and_negative_root_counts(f: UniPoly, sign: Optional[SignOracle] = None) -> tuple[int, int]:
    """(number of distinct real roots, number of distinct negative real roots)."""
    total = real_root_count(f, None, None, sign)
    negative = real_root_count(f, None, Fraction(0), sign)
    # the count over (-inf, 0] includes a root at 0 when present
    oracle = sign if sign is not None else _rational_sign
    if f.degree >= 0 and oracle(f.eval_rat(Fraction(0))) == 0:
        negative -= 1
    return total, negative


def cauchy_root_bound(f: UniPoly) -> Fraction:
    """A rational M with every real root of f in (-M, M). Rational coefficients."""
    cs = f.rational_coeffs()
    lead = abs(cs[-1])
    m = max((abs(c) / lead for c in cs[:-1]), default=Fraction(0))
    return m + 1


def isolate_real_roots(f: UniPoly) -> list[tuple[Fraction, Fraction]]:
    """Disjoint rational intervals, each containing exactly one real root of f.

    Rational coefficients only. Exact rational roots come back as [r, r];
    the other intervals (lo, hi] have nonzero values at both endpoints.
    """
    if f.field.degree != 1:
        raise ValueError("real-root isolation works over the rationals")
    g = f.squarefree_part()
    if g.degree < 1:
        return []
    bound = cauchy_root_bound(g)
    out: list[tuple[Fraction, Fraction]] = []

    def rec(a: Fraction, b: Fraction, count: int) -> None:
        if count == 0:
            return
        vb = g.eval_rat(b).coords[0]
        if count == 1:
            if vb == 0:
                out.append((b, b))
            else:
                out.append((a, b))
            return
        mid = (a + b) / 2
        left = real_root_count(g, a, mid)
        rec(a, mid, left)
        rec(mid, b, count - left)

    rec(-bound, bound, real_root_count(g, -bound, bound))
    out.sort()
    return out


def _interval_eval(coeffs: Sequence[Fraction], lo: Fraction, hi: Fraction) -> tuple[Fraction, Fraction]:
    """Rigorous range bound of a polynomial over [lo, hi] by interval Horner."""
    alo = ahi = coeffs[-1]
    for c in reversed(coeffs[:-1]):
        p1, p2, p3, p4 = alo * lo, alo * hi, ahi * lo, ahi * hi
        alo = min(p1, p2, p3, p4) + c
        ahi = max(p1, p2, p3, p4) + c
    return alo, ahi


class RealEmbedding:
    """A number field together with a chosen real root of its defining polynomial.

    Provides exact sign determination for field elements via interval
    refinement; the isolating interval is maintained with rational endpoints
    and bisected on demand.
    """

    def __init__(self, field: NumberField, lo: Optional[Fraction] = None, hi: Optional[Fraction] = None):
        self.field = field
        self._defpoly = UniPoly.from_rationals(QQ, field.poly)
        if lo is not None and hi is not None:
            self.lo, self.hi = Fraction(lo), Fraction(hi)
            if real_root_count(self._defpoly, self.lo, self.hi) != 1:
                raise ValueError("interval does not isolate a single real root")
        else:
            intervals = isolate_real_roots(self._defpoly)
            if not intervals:
                raise ValueError(f"{field.label} has no real embedding")
            target = float(getattr(field.seed, "real", field.seed))
            best = min(intervals, key=lambda iv: abs(float((iv[0] + iv[1]) / 2) - target))
            self.lo, self.hi = best
        # make both endpoint signs strict so bisection can steer
        while self._sign_def(self.lo) == 0 or self._sign_def(self.hi) == 0:
            if self._sign_def(self.lo) == 0 and self.lo == self.hi:
                break  # rational root, exact
            self._widen_to_strict()

    def _sign_def(self, t: Fraction) -> int:
        v = self._defpoly.eval_rat(t).coords[0]
        return (v > 0) - (v < 0)

    def _widen_to_strict(self) -> None:
        # nudge an endpoint that sits exactly on a root of another factor;
        # the defining polynomial is irreducible in practice, so this is rare
        span = self.hi - self.lo
        if self._sign_def(self.lo) == 0:
            self.lo -= span / 7
        if self._sign_def(self.hi) == 0:
            self.hi += span / 7
        if real_root_count(self._defpoly, self.lo, self.hi) != 1:
            raise ValueError("could not repair the isolating interval")

    def refine(self) -> None:
        """Halve the isolating interval."""
        if self.lo == self.hi:
            return
        mid = (self.lo + self.hi) / 2
        s = self._sign_def(mid)
        if s == 0:
            self.lo = self.hi = mid
        elif s == self._sign_def(self.lo):
            self.lo = mid
        else:
            self.hi = mid

    def approx(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def sign(self, value) -> int:
        """Exact sign of a field element under this embedding."""
        if isinstance(value, NFElem):
            if value.field is not self.field:
                if value.field is QQ or value.field.degree == 1:
                    c = value.coords[0]
                    return (c > 0) - (c < 0)
                raise ValueError("element belongs to a different field")
            coeffs = list(value.coords)
        else:
            c = Fraction(value)
            return (c > 0) - (c < 0)
        if not any(coeffs):
            return 0
        while True:
            a, b = _interval_eval(coeffs, self.lo, self.hi)
            if a > 0:
                return 1
            if b < 0:
                return -1
            if self.lo == self.hi:
                v = sum(c * self.lo ** i for i, c in enumerate(coeffs))
                return (v > 0) - (v < 0)
            self.refine()

    def compare(self, x, y) -> int:
        return self.sign((x if isinstance(x, NFElem) else self.field.elem(x)) - (y if isinstance(y, NFElem) else self.field.elem(y)))
