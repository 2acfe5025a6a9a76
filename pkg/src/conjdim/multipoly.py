"""Sparse multivariate polynomials over a number field.

Terms map exponent tuples to nonzero coefficients.  The variable tuple is
fixed per polynomial; binary operations require identical variable tuples.
Substitution works slice-by-slice (Horner in each variable), so images may
be arbitrary polynomials in a different ring.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .numberfield import NFElem, NumberField


class MultiPoly:
    __slots__ = ("field", "vars", "terms")

    def __init__(self, field: NumberField, variables: Sequence[str], terms: Mapping):
        self.field = field
        self.vars = tuple(variables)
        self.terms = {
            exps: c for exps, c in terms.items() if not c.is_zero()
        }

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, field: NumberField, variables: Sequence[str]) -> "MultiPoly":
        return cls(field, variables, {})

    @classmethod
    def const(cls, field: NumberField, variables: Sequence[str], value) -> "MultiPoly":
        v = field.elem(value)
        if v.is_zero():
            return cls.zero(field, variables)
        return cls(field, variables, {(0,) * len(variables): v})

    @classmethod
    def gens(cls, field: NumberField, variables: Sequence[str]) -> list["MultiPoly"]:
        variables = tuple(variables)
        out = []
        for i in range(len(variables)):
            e = [0] * len(variables)
            e[i] = 1
            out.append(cls(field, variables, {tuple(e): field.one}))
        return out

    # -- basics ----------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(all(e == 0 for e in exps) for exps in self.terms)

    def constant_value(self) -> NFElem:
        if self.is_zero():
            return self.field.zero
        if not self.is_constant():
            raise ValueError("not a constant polynomial")
        return next(iter(self.terms.values()))

    def total_degree(self) -> int:
        if self.is_zero():
            return -1
        return max(sum(exps) for exps in self.terms)

    def degree_in(self, var: str) -> int:
        if self.is_zero():
            return -1
        i = self.vars.index(var)
        return max(exps[i] for exps in self.terms)

    def _check(self, other: "MultiPoly") -> None:
        if self.field is not other.field or self.vars != other.vars:
            raise ValueError("incompatible polynomial rings")

    # -- arithmetic ---------------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, (int, Fraction, NFElem)):
            other = MultiPoly.const(self.field, self.vars, other)
        self._check(other)
        out = dict(self.terms)
        for exps, c in other.terms.items():
            cur = out.get(exps)
            s = c if cur is None else cur + c
            if s.is_zero():
                out.pop(exps, None)
            else:
                out[exps] = s
        return MultiPoly(self.field, self.vars, out)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(
            self.field, self.vars, {e: -c for e, c in self.terms.items()}
        )

    def __sub__(self, other):
        if isinstance(other, (int, Fraction, NFElem)):
            other = MultiPoly.const(self.field, self.vars, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, NFElem)):
            s = self.field.elem(other)
            if s.is_zero():
                return MultiPoly.zero(self.field, self.vars)
            return MultiPoly(
                self.field, self.vars, {e: c * s for e, c in self.terms.items()}
            )
        self._check(other)
        a, b = self.terms, other.terms
        if len(a) > len(b):
            a, b = b, a
        out: dict = {}
        for ea, ca in a.items():
            for eb, cb in b.items():
                key = tuple(x + y for x, y in zip(ea, eb))
                prod = ca * cb
                cur = out.get(key)
                s = prod if cur is None else cur + prod
                if s.is_zero():
                    out.pop(key, None)
                else:
                    out[key] = s
        return MultiPoly(self.field, self.vars, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        result = MultiPoly.const(self.field, self.vars, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return (
            self.field is other.field
            and self.vars == other.vars
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash(
            (id(self.field), self.vars, tuple(sorted(self.terms.items(), key=lambda t: t[0])))
        )

    # -- exact division -------------------------------------------------------------

    def exact_div(self, divisor: "MultiPoly") -> "MultiPoly":
        """Quotient self/divisor when the division is exact (lex reduction)."""
        if isinstance(divisor, (int, Fraction, NFElem)):
            inv = self.field.elem(divisor).inverse()
            return self * inv
        self._check(divisor)
        if divisor.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        if divisor.is_constant():
            return self * divisor.constant_value().inverse()
        rem = dict(self.terms)
        lead_d = max(divisor.terms)
        lc_d_inv = divisor.terms[lead_d].inverse()
        quot: dict = {}
        while rem:
            lead_r = max(rem)
            qexp = tuple(a - b for a, b in zip(lead_r, lead_d))
            if any(e < 0 for e in qexp):
                raise ArithmeticError("multivariate division not exact")
            qc = rem[lead_r] * lc_d_inv
            quot[qexp] = quot.get(qexp, self.field.zero) + qc
            for ed, cd in divisor.terms.items():
                key = tuple(a + b for a, b in zip(qexp, ed))
                s = rem.get(key, self.field.zero) - qc * cd
                if s.is_zero():
                    rem.pop(key, None)
                else:
                    rem[key] = s
        return MultiPoly(self.field, self.vars, quot)

    # -- views --------------------------------------------------------------------------

    def as_univariate(self, var: str) -> list["MultiPoly"]:
        """Coefficients (in the same ring, var-free) ascending in var."""
        i = self.vars.index(var)
        d = self.degree_in(var)
        if d < 0:
            return []
        buckets: list[dict] = [dict() for _ in range(d + 1)]
        for exps, c in self.terms.items():
            rest = list(exps)
            k = rest[i]
            rest[i] = 0
            buckets[k][tuple(rest)] = c
        return [MultiPoly(self.field, self.vars, b) for b in buckets]

    @classmethod
    def from_univariate(
        cls, coeffs: Sequence["MultiPoly"], var: str
    ) -> "MultiPoly":
        if not coeffs:
            raise ValueError("empty coefficient list")
        field, variables = coeffs[0].field, coeffs[0].vars
        i = variables.index(var)
        out: dict = {}
        for k, c in enumerate(coeffs):
            for exps, v in c.terms.items():
                e = list(exps)
                e[i] += k
                out[tuple(e)] = v
        return cls(field, variables, out)

    # -- substitution -----------------------------------------------------------------------

    def substitute(self, images: Mapping[str, "MultiPoly"]) -> "MultiPoly":
        """Simultaneous substitution; images live in a common target ring.

        Variables without an image must appear as a variable of the target
        ring (they map to themselves).
        """
        if self.is_zero():
            some = next(iter(images.values()))
            return MultiPoly.zero(some.field, some.vars)
        some = next(iter(images.values()))
        target_field, target_vars = some.field, some.vars
        full_images: list[MultiPoly] = []
        for v in self.vars:
            img = images.get(v)
            if img is None:
                if v not in target_vars:
                    raise ValueError(f"no image for variable {v}")
                img = MultiPoly.gens(target_field, target_vars)[target_vars.index(v)]
            full_images.append(img)

        def rec(terms: dict, vi: int) -> MultiPoly:
            if vi == len(self.vars):
                # all exponents exhausted; terms is {(0,...,0): c}
                c = next(iter(terms.values()))
                return MultiPoly.const(target_field, target_vars, c)
            slices: dict[int, dict] = {}
            for exps, c in terms.items():
                k = exps[vi]
                e = list(exps)
                e[vi] = 0
                slices.setdefault(k, {})[tuple(e)] = c
            img = full_images[vi]
            acc = MultiPoly.zero(target_field, target_vars)
            for k in range(max(slices), -1, -1):
                if not acc.is_zero():
                    acc = acc * img
                part = slices.get(k)
                if part:
                    acc = acc + rec(part, vi + 1)
            return acc

        return rec(self.terms, 0)

    def compose_matrix_rows(self, g: Sequence[Sequence[NFElem]]) -> "MultiPoly":
        """f(x*g) for the row action: variable i's image is sum_j g[j][i] x_j."""
        n = len(self.vars)
        gens = MultiPoly.gens(self.field, self.vars)
        images = {}
        for i, v in enumerate(self.vars):
            img = MultiPoly.zero(self.field, self.vars)
            for j in range(n):
                c = g[j][i]
                if not (isinstance(c, NFElem) and c.is_zero()):
                    img = img + gens[j] * c
            images[v] = img
        return self.substitute(images)

    def eval_all(self, point: Sequence[NFElem]) -> NFElem:
        """Full evaluation at number-field values."""
        maxes = [0] * len(self.vars)
        for exps in self.terms:
            for i, e in enumerate(exps):
                if e > maxes[i]:
                    maxes[i] = e
        powers = []
        for i, p in enumerate(point):
            row = [self.field.one]
            for _ in range(maxes[i]):
                row.append(row[-1] * p)
            powers.append(row)
        acc = self.field.zero
        for exps, c in self.terms.items():
            t = c
            for i, e in enumerate(exps):
                if e:
                    t = t * powers[i][e]
            acc = acc + t
        return acc

    # -- output ------------------------------------------------------------------------------

    def sorted_terms(self) -> list[tuple[tuple[int, ...], NFElem]]:
        return sorted(self.terms.items(), key=lambda t: t[0], reverse=True)

    def text(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for exps, c in self.sorted_terms():
            mono = "*".join(
                f"{v}^{e}" if e > 1 else v
                for v, e in zip(self.vars, exps)
                if e > 0
            )
            if mono:
                parts.append(f"({c.text()})*{mono}")
            else:
                parts.append(f"({c.text()})")
        return " + ".join(parts)

    def __repr__(self):
        return f"MultiPoly({self.text()})"
