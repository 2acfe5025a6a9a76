"""Dense univariate polynomials with number-field coefficients.

Coefficients are stored ascending (coeffs[k] multiplies x^k) with no
trailing zeros; the zero polynomial has an empty list and degree -1 by
convention.  Division assumes field coefficients, so remainders are exact.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Iterable, Sequence

import mpmath

from .numberfield import NFElem, NumberField, QQ
from .rat import rat


class UniPoly:
    __slots__ = ("field", "coeffs", "var")

    def __init__(self, field: NumberField, coeffs: Sequence[NFElem], var: str = "x"):
        cs = list(coeffs)
        while cs and cs[-1].is_zero():
            cs.pop()
        self.field = field
        self.coeffs = cs
        self.var = var

    # -- constructors -----------------------------------------------------

    @classmethod
    def from_rationals(cls, field: NumberField, coeffs: Iterable, var: str = "x") -> "UniPoly":
        return cls(field, [field.elem(c) for c in coeffs], var)

    @classmethod
    def zero(cls, field: NumberField, var: str = "x") -> "UniPoly":
        return cls(field, [], var)

    @classmethod
    def const(cls, field: NumberField, value, var: str = "x") -> "UniPoly":
        return cls(field, [field.elem(value)], var)

    @classmethod
    def gen(cls, field: NumberField, var: str = "x") -> "UniPoly":
        return cls(field, [field.zero, field.one], var)

    # -- basics ------------------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def lc(self) -> NFElem:
        if self.is_zero():
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coeff(self, k: int) -> NFElem:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return self.field.zero

    def is_monic(self) -> bool:
        return not self.is_zero() and self.lc() == self.field.one

    def monic(self) -> "UniPoly":
        if self.is_zero():
            return self
        inv = self.lc().inverse()
        return UniPoly(self.field, [c * inv for c in self.coeffs], self.var)

    def rational_coeffs(self) -> list[Fraction]:
        """Ascending Fraction list; requires all coefficients rational."""
        return [c.as_rational() for c in self.coeffs]

    # -- ring operations -----------------------------------------------------

    def _check(self, other: "UniPoly") -> None:
        if other.field is not self.field:
            raise ValueError("mixed coefficient fields")

    def __add__(self, other: "UniPoly") -> "UniPoly":
        self._check(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly(
            self.field,
            [self.coeff(k) + other.coeff(k) for k in range(n)],
            self.var,
        )

    def __sub__(self, other: "UniPoly") -> "UniPoly":
        self._check(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly(
            self.field,
            [self.coeff(k) - other.coeff(k) for k in range(n)],
            self.var,
        )

    def __neg__(self) -> "UniPoly":
        return UniPoly(self.field, [-c for c in self.coeffs], self.var)

    def __mul__(self, other) -> "UniPoly":
        if isinstance(other, NFElem) or isinstance(other, (int, Fraction)):
            s = self.field.elem(other)
            return UniPoly(self.field, [c * s for c in self.coeffs], self.var)
        self._check(other)
        if self.is_zero() or other.is_zero():
            return UniPoly.zero(self.field, self.var)
        out = [self.field.zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                if not b.is_zero():
                    out[i + j] = out[i + j] + a * b
        return UniPoly(self.field, out, self.var)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "UniPoly":
        if n < 0:
            raise ValueError("negative power")
        result = UniPoly.const(self.field, 1, self.var)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift_times_x(self, k: int) -> "UniPoly":
        if self.is_zero():
            return self
        return UniPoly(self.field, [self.field.zero] * k + self.coeffs, self.var)

    def divmod(self, other: "UniPoly") -> tuple["UniPoly", "UniPoly"]:
        self._check(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        q = [self.field.zero] * max(1, len(self.coeffs) - other.degree)
        rem = list(self.coeffs)
        inv_lc = other.lc().inverse()
        d = other.degree
        while len(rem) - 1 >= d and rem:
            while rem and rem[-1].is_zero():
                rem.pop()
            if len(rem) - 1 < d or not rem:
                break
            sh = len(rem) - 1 - d
            c = rem[-1] * inv_lc
            q[sh] = c
            for i, bc in enumerate(other.coeffs):
                rem[i + sh] = rem[i + sh] - c * bc
            rem.pop()
        return (
            UniPoly(self.field, q, self.var),
            UniPoly(self.field, rem, self.var),
        )

    def __mod__(self, other: "UniPoly") -> "UniPoly":
        return self.divmod(other)[1]

    def exact_div(self, other: "UniPoly") -> "UniPoly":
        q, r = self.divmod(other)
        if not r.is_zero():
            raise ArithmeticError("division was not exact")
        return q

    def derivative(self) -> "UniPoly":
        return UniPoly(
            self.field,
            [self.coeffs[k] * k for k in range(1, len(self.coeffs))],
            self.var,
        )

    def gcd(self, other: "UniPoly") -> "UniPoly":
        """Monic gcd by the Euclidean algorithm."""
        self._check(other)
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        return a.monic() if not a.is_zero() else a

    def squarefree_part(self) -> "UniPoly":
        if self.degree < 1:
            return self.monic()
        g = self.gcd(self.derivative())
        return self.exact_div(g).monic() if g.degree > 0 else self.monic()

    def is_squarefree(self) -> bool:
        return self.degree < 1 or self.gcd(self.derivative()).degree == 0

    # -- evaluation and rewriting ----------------------------------------------

    def eval_nf(self, point: NFElem) -> NFElem:
        acc = self.field.zero
        for c in reversed(self.coeffs):
            acc = acc * point + c
        return acc

    def eval_rat(self, q) -> NFElem:
        return self.eval_nf(self.field.elem(q))

    def compose(self, inner: "UniPoly") -> "UniPoly":
        acc = UniPoly.zero(self.field, inner.var)
        for c in reversed(self.coeffs):
            acc = acc * inner + UniPoly.const(self.field, c, inner.var)
        return acc

    def map_coeffs(self, fn: Callable[[NFElem], NFElem], field: NumberField) -> "UniPoly":
        return UniPoly(field, [fn(c) for c in self.coeffs], self.var)

    def eval_numeric(self, z, prec_dps: int):
        with mpmath.workdps(prec_dps + 10):
            acc = mpmath.mpc(0)
            for c in reversed(self.coeffs):
                acc = acc * z + c.numeric(prec_dps)
            return acc

    def numeric_coeffs(self, prec_dps: int) -> list:
        with mpmath.workdps(prec_dps + 10):
            return [c.numeric(prec_dps) for c in self.coeffs]

    # -- integer scaling (rational coefficients only) ----------------------------

    def cleared_int_coeffs(self) -> tuple[list[int], Fraction]:
        """Primitive integer form: returns (ints ascending, scale) with
        self = scale * (integer polynomial)."""
        qs = self.rational_coeffs()
        if not qs:
            return [], Fraction(1)
        from math import gcd, lcm

        den = 1
        for c in qs:
            den = lcm(den, c.denominator)
        ints = [int(c * den) for c in qs]
        g = 0
        for v in ints:
            g = gcd(g, v)
        g = g or 1
        if ints[-1] < 0:
            g = -g
        ints = [v // g for v in ints]
        return ints, Fraction(g, den)

    # -- comparison / output -----------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self.field is other.field and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((id(self.field), tuple(self.coeffs)))

    def text(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for k in range(self.degree, -1, -1):
            c = self.coeff(k)
            if c.is_zero():
                continue
            if k == 0:
                parts.append(f"({c.text()})")
            elif k == 1:
                parts.append(f"({c.text()})*{self.var}")
            else:
                parts.append(f"({c.text()})*{self.var}^{k}")
        return " + ".join(parts)

    def __repr__(self):
        return f"UniPoly({self.text()})"


def poly_from_int_list(ints: Sequence[int], var: str = "x") -> UniPoly:
    return UniPoly.from_rationals(QQ, [rat(v) for v in ints], var)


def poly_gcd(f: UniPoly, g: UniPoly) -> UniPoly:
    """Monic gcd of two polynomials over the same field."""
    return f.gcd(g)
