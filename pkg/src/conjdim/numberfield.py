"""Number fields in power-basis representation.

A field is Q[x]/(m(x)) for a monic irreducible m over Q; elements are
coordinate vectors in the basis 1, theta, ..., theta^(d-1).  The rational
field is the degree-1 case with defining polynomial x.  Instances are
interned so element operations can insist on identical field objects.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Optional, Sequence

import mpmath

from .rat import rat, rat_str

_REGISTRY: dict = {}
_LABELS: dict = {}


def _poly_trim(cs: list[Fraction]) -> list[Fraction]:
    while cs and cs[-1] == 0:
        cs.pop()
    return cs


def _poly_divmod(a: list[Fraction], b: list[Fraction]):
    """Quotient and remainder of rational coefficient lists (b nonzero)."""
    a = _poly_trim(list(a))
    b = _poly_trim(list(b))
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    db, lb = len(b) - 1, b[-1]
    q = [Fraction(0)] * max(1, len(a) - db)
    while a and len(a) - 1 >= db:
        sh = len(a) - 1 - db
        c = a[-1] / lb
        q[sh] = c
        for i, bc in enumerate(b):
            a[i + sh] -= c * bc
        _poly_trim(a)
    return q, a


class NumberField:
    """Power-basis field Q(theta) with monic defining polynomial."""

    def __init__(self, coeffs: Sequence[Fraction], label: str, seed: complex):
        self.poly = tuple(rat(c) for c in coeffs)  # ascending, monic
        if self.poly[-1] != 1:
            raise ValueError("defining polynomial must be monic")
        self.degree = len(self.poly) - 1
        if self.degree < 1:
            raise ValueError("defining polynomial must have degree >= 1")
        self.label = label
        self.seed = complex(seed)
        self.irreducibility = "asserted"
        # reduction table: theta^(d+k) as coordinate vectors, k = 0..d-2
        d = self.degree
        red = []
        cur = [-c for c in self.poly[:-1]]  # theta^d
        red.append(tuple(cur))
        for _ in range(d - 2):
            cur = [Fraction(0)] + cur
            top = cur.pop()
            if top:
                cur = [cur[i] + top * red[0][i] for i in range(d)]
            red.append(tuple(cur))
        self._red = red
        self._theta_cache: dict[int, mpmath.mpc] = {}
        self.zero = NFElem(self, (Fraction(0),) * d)
        self.one = NFElem(self, tuple([Fraction(1)] + [Fraction(0)] * (d - 1)))
        if d > 1:
            self.gen = NFElem(
                self, tuple([Fraction(0), Fraction(1)] + [Fraction(0)] * (d - 2))
            )
        else:
            self.gen = NFElem(self, (-self.poly[0],))

    # -- construction ----------------------------------------------------

    def elem(self, value) -> "NFElem":
        if isinstance(value, NFElem):
            if value.field is not self:
                raise ValueError(
                    f"element of {value.field.label} used in {self.label}"
                )
            return value
        if isinstance(value, (int, Fraction, str)):
            q = rat(value)
            return NFElem(
                self, tuple([q] + [Fraction(0)] * (self.degree - 1))
            )
        coords = [rat(c) for c in value]
        if len(coords) > self.degree:
            raise ValueError("too many coordinates")
        coords += [Fraction(0)] * (self.degree - len(coords))
        return NFElem(self, tuple(coords))

    # -- arithmetic support ----------------------------------------------

    def _reduce(self, prod: list[Fraction]) -> tuple[Fraction, ...]:
        d = self.degree
        out = prod[:d] + [Fraction(0)] * (d - len(prod[:d]))
        for k in range(d, len(prod)):
            c = prod[k]
            if c:
                row = self._red[k - d]
                for i in range(d):
                    if row[i]:
                        out[i] += c * row[i]
        return tuple(out)

    def inverse_coords(self, coords: Sequence[Fraction]) -> tuple[Fraction, ...]:
        """Extended Euclid against the defining polynomial."""
        a = list(self.poly)
        b = _poly_trim(list(coords))
        if not b:
            raise ZeroDivisionError(f"division by zero in {self.label}")
        # invariants: s*m + t*orig(b) = b_cur  (t tracked only)
        t0: list[Fraction] = []
        t1: list[Fraction] = [Fraction(1)]
        while len(b) > 1 or (len(b) == 1 and b[0] == 0):
            q, r = _poly_divmod(a, b)
            a, b = b, _poly_trim(r)
            if not b:
                raise ZeroDivisionError("element is a zero divisor; field modulus reducible?")
            # t_new = t0 - q*t1
            qt = [Fraction(0)] * (len(q) + len(t1) - 1) if q and t1 else []
            for i, qi in enumerate(q):
                if qi:
                    for j, tj in enumerate(t1):
                        qt[i + j] += qi * tj
            t_new = [
                (t0[i] if i < len(t0) else Fraction(0))
                - (qt[i] if i < len(qt) else Fraction(0))
                for i in range(max(len(t0), len(qt), 1))
            ]
            t0, t1 = t1, _poly_trim(t_new) or [Fraction(0)]
        c = b[0]
        inv = [ti / c for ti in t1]
        inv += [Fraction(0)] * (self.degree - len(inv))
        return tuple(inv[: self.degree])

    # -- numerics ---------------------------------------------------------

    def theta_numeric(self, prec_dps: int) -> mpmath.mpc:
        """theta at the requested decimal precision, stable across calls."""
        cached = self._theta_cache.get(prec_dps)
        if cached is not None:
            return cached
        if self.degree == 1:
            with mpmath.workdps(prec_dps + 10):
                c0 = self.poly[0]
                val = mpmath.mpc(-mpmath.mpf(c0.numerator) / c0.denominator)
        else:
            with mpmath.workdps(prec_dps + 10):
                coeffs = [mpmath.mpf(c.numerator) / c.denominator for c in self.poly]
                roots = mpmath.polyroots(list(reversed(coeffs)), maxsteps=200, extraprec=60)
                seed = mpmath.mpc(self.seed)
                val = min(roots, key=lambda r: abs(r - seed))
        self._theta_cache[prec_dps] = val
        return val

    def __repr__(self):
        return f"NumberField({self.label}, deg {self.degree})"


class NFElem:
    """Element of a NumberField as a power-basis coordinate tuple."""

    __slots__ = ("field", "coords", "_hash")

    def __init__(self, field: NumberField, coords: tuple[Fraction, ...]):
        self.field = field
        self.coords = coords
        self._hash = None

    # -- predicates --------------------------------------------------------

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coords[1:])

    def as_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coords[0]

    # -- arithmetic ---------------------------------------------------------

    def _coerce(self, other) -> "NFElem":
        if isinstance(other, NFElem):
            if other.field is not self.field:
                raise ValueError(
                    f"mixed fields {self.field.label} / {other.field.label}"
                )
            return other
        return self.field.elem(other)

    def __add__(self, other):
        o = self._coerce(other)
        return NFElem(
            self.field, tuple(a + b for a, b in zip(self.coords, o.coords))
        )

    __radd__ = __add__

    def __neg__(self):
        return NFElem(self.field, tuple(-a for a in self.coords))

    def __sub__(self, other):
        o = self._coerce(other)
        return NFElem(
            self.field, tuple(a - b for a, b in zip(self.coords, o.coords))
        )

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        o = other if isinstance(other, NFElem) else self._coerce(other)
        if o.field is not self.field:
            raise ValueError("mixed fields")
        a, b = self.coords, o.coords
        d = self.field.degree
        if d == 1:
            return NFElem(self.field, (a[0] * b[0],))
        prod = [Fraction(0)] * (2 * d - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        prod[i + j] += ai * bj
        return NFElem(self.field, self.field._reduce(prod))

    __rmul__ = __mul__

    def inverse(self) -> "NFElem":
        if self.field.degree == 1:
            if self.coords[0] == 0:
                raise ZeroDivisionError("division by zero")
            return NFElem(self.field, (1 / self.coords[0],))
        return NFElem(self.field, self.field.inverse_coords(self.coords))

    def __truediv__(self, other):
        o = self._coerce(other)
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = self.field.one
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- comparison / hashing ------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coords[0] == other
        if not isinstance(other, NFElem):
            return NotImplemented
        return self.field is other.field and self.coords == other.coords

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((id(self.field), self.coords))
        return self._hash

    # -- output ---------------------------------------------------------------

    def text(self) -> str:
        """Canonical form: bare rational over Q, '[c0, c1]@label' otherwise."""
        if self.field.degree == 1:
            return rat_str(self.coords[0])
        inner = ", ".join(rat_str(c) for c in self.coords)
        return f"[{inner}]@{self.field.label}"

    def numeric(self, prec_dps: int) -> mpmath.mpc:
        with mpmath.workdps(prec_dps + 10):
            th = self.field.theta_numeric(prec_dps)
            acc = mpmath.mpc(0)
            for c in reversed(self.coords):
                acc = acc * th + (mpmath.mpf(c.numerator) / c.denominator)
            return acc

    def __repr__(self):
        return self.text()


def nf_make(
    coeffs: Sequence,
    label: Optional[str] = None,
    seed: Optional[complex] = None,
    assert_irreducible: bool = False,
) -> NumberField:
    """Create (or fetch) the field Q[x]/(m) for monic m given by ascending coeffs.

    The defining polynomial must be irreducible; unless asserted, a
    certificate is attempted and recorded on the field object.
    """
    cs = [rat(c) for c in coeffs]
    if not cs or cs[-1] != 1:
        raise ValueError("defining polynomial must be monic")
    key = tuple(cs)
    if key in _REGISTRY:
        return _REGISTRY[key]
    if seed is None:
        if len(cs) == 2:
            seed = complex(-cs[0])
        else:
            with mpmath.workdps(30):
                mcs = [mpmath.mpf(c.numerator) / c.denominator for c in cs]
                roots = mpmath.polyroots(list(reversed(mcs)), maxsteps=200, extraprec=40)
                real = [r for r in roots if abs(r.imag) < mpmath.mpf("1e-20")]
                pool = real if real else roots
                pick = max(pool, key=lambda r: (r.real, r.imag))
                seed = complex(pick.real, pick.imag)
    if label is None:
        label = "Q" if len(cs) == 2 and cs[0] == 0 else f"Q(a{len(_REGISTRY)})"
    field = NumberField(cs, label, seed)
    if len(cs) > 2 and not assert_irreducible:
        from .modfactor import irreducibility_certificate
        from .unipoly import UniPoly

        cert = irreducibility_certificate(UniPoly.from_rationals(QQ, cs))
        if cert.verdict == "Reducible":
            raise ValueError(
                f"defining polynomial is reducible: {cert.witness_factor}"
            )
        field.irreducibility = (
            "certified" if cert.verdict == "Irreducible" else "asserted"
        )
    _REGISTRY[key] = field
    _LABELS.setdefault(label, field)
    return field


def field_by_label(label: str) -> Optional[NumberField]:
    return _LABELS.get(label)


def register_alias(label: str, field: NumberField) -> None:
    _LABELS.setdefault(label, field)


# The rational field: degree 1, defining polynomial x.
QQ = nf_make([0, 1], label="Q", seed=0.0)


def cyclotomic_poly(l: int) -> list[Fraction]:
    """Coefficients of the l-th cyclotomic polynomial, ascending."""
    if l < 1:
        raise ValueError("l must be positive")
    # x^l - 1 divided by the product of Phi_d for proper divisors d
    num = [Fraction(-1)] + [Fraction(0)] * (l - 1) + [Fraction(1)]
    for d in range(1, l):
        if l % d == 0:
            q, r = _poly_divmod(num, cyclotomic_poly(d))
            if _poly_trim(list(r)):
                raise ArithmeticError("cyclotomic division left a remainder")
            num = q
    return num


def cyclotomic_field(l: int) -> NumberField:
    """Q(w_l) for l <= 60; l in {1, 2} gives Q itself."""
    if not 1 <= l <= 60:
        raise ValueError("cyclotomic order out of range (1..60)")
    if l in (1, 2):
        return QQ
    poly = cyclotomic_poly(l)
    label = "Q(i)" if l == 4 else f"Q(w{l})"
    angle = 2 * math.pi / l
    field = nf_make(
        poly, label=label, seed=complex(math.cos(angle), math.sin(angle)),
        assert_irreducible=True,
    )
    register_alias(f"Q(w{l})", field)
    return field
