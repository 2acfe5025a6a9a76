"""Conjugate dimension and multiplicative rank.

Two regimes live here.  Exact: ranks of orbit matrices over a number field
and of integer exponent matrices, by fraction-free elimination.  Numeric:
for an arbitrary rational polynomial, certified-enclosure root finding
followed by integer-relation detection.  The numeric side builds the lattice

    [ I_d | K*Re(alpha_i) | K*Im(alpha_i) ],   K = 10^(digits-10),

reduces it with exact integer LLL (delta = 99/100), harvests short vectors
whose trailing columns nearly vanish, and confirms each candidate relation
sum_i v_i alpha_i numerically at the working and at doubled precision.
Detected relations stay heuristic; reports are only marked certified when
an exact source (torsion test, orbit data) settles the answer.  Dimension
lower bounds come from interval arithmetic alone, so they are honest but
never exceed 2: the real-plane coordinates of two roots can prove rank 2,
never rank 3.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

import mpmath

from .lll import hermite_normal_form, lll_reduce
from .modfactor import irreducibility_certificate
from .numberfield import NFElem, QQ, cyclotomic_poly
from .unipoly import UniPoly

PRECISION_LADDER = (50, 100, 200, 400)
GUARD_DIGITS = 10


# --------------------------------------------------------------------------
# numeric roots with certified enclosures


@dataclass
class RootSet:
    """All complex zeros of a squarefree polynomial with disjoint enclosures.

    Disk i (center mids[i], radius radii[i]) contains exactly one zero: each
    disk of radius deg(f)*|f(z)/f'(z)| contains at least one zero, the disks
    are pairwise disjoint, and there are deg(f) of them.
    """

    poly: UniPoly
    precision_digits: int
    mids: list
    radii: list

    @property
    def roots(self) -> list[tuple]:
        return list(zip(self.mids, self.radii))


def roots_numeric(f: UniPoly, digits: int) -> RootSet:
    """Certified complex zeros of f, sorted by (real part, imaginary part)."""
    if f.degree < 1:
        raise ValueError("need a nonconstant polynomial")
    if not f.is_squarefree():
        raise ValueError("take the squarefree part before isolating zeros")
    n = f.degree
    work = digits + 20
    with mpmath.workdps(work):
        coeffs = list(reversed(f.numeric_coeffs(work)))
        try:
            raw = mpmath.polyroots(coeffs, maxsteps=800, extraprec=140)
        except mpmath.libmp.libhyper.NoConvergence as exc:
            raise ArithmeticError(f"zero finding did not converge at {digits} digits") from exc
        mids = sorted(
            (mpmath.mpc(z) for z in raw), key=lambda z: (z.real, z.imag)
        )
        fp = f.derivative()
        radii = []
        for z in mids:
            fz = f.eval_numeric(z, work)
            fpz = fp.eval_numeric(z, work)
            if fpz == 0:
                raise ArithmeticError("derivative vanished at an approximate zero")
            radii.append(n * abs(fz) / abs(fpz))
        for i in range(n):
            for j in range(i + 1, n):
                if abs(mids[i] - mids[j]) <= radii[i] + radii[j]:
                    raise ArithmeticError(
                        f"zero enclosures overlap at {digits} digits; raise the precision"
                    )
    return RootSet(poly=f, precision_digits=digits, mids=mids, radii=radii)


def _pair_roots(base: RootSet, fine: RootSet) -> list[int]:
    """Index map base -> fine by nearest midpoint, with containment checks."""
    perm: list[int] = []
    for i, z in enumerate(base.mids):
        j = min(range(len(fine.mids)), key=lambda t: abs(z - fine.mids[t]))
        if abs(z - fine.mids[j]) > base.radii[i] + fine.radii[j]:
            raise ArithmeticError("zero pairing across precisions failed")
        perm.append(j)
    if len(set(perm)) != len(perm):
        raise ArithmeticError("zero pairing across precisions is not one-to-one")
    return perm


# --------------------------------------------------------------------------
# reports


@dataclass
class DimReport:
    """Outcome of a dimension or rank computation.

    dimension_lower is exact (interval arithmetic or an exact source);
    dimension_upper counts zeros minus independent detected relations and is
    heuristic unless certified. precision_trail records (digits, upper) for
    every precision tried; stable means the last two levels agreed on both
    the value and the canonical relation set.
    """

    dimension_lower: int
    dimension_upper: int
    relations: list[tuple[int, ...]]
    certified: bool
    precision_trail: list[tuple[int, int]]
    stable: bool = False
    kind: str = "additive"
    torsion: bool = False
    notes: list[str] = field(default_factory=list)

    def to_json_dict(self) -> dict:
        return {
            "kind": self.kind,
            "dimension_lower": self.dimension_lower,
            "dimension_upper": self.dimension_upper,
            "relations": [list(v) for v in self.relations],
            "certified": self.certified,
            "stable": self.stable,
            "torsion": self.torsion,
            "precision_trail": [list(t) for t in self.precision_trail],
            "notes": list(self.notes),
        }


# --------------------------------------------------------------------------
# relation harvesting


def _harvest(rows_float, d: int, K_exp: int, verify) -> list[tuple[int, ...]]:
    """LLL-reduce the integer matrix and keep rows that verify as relations."""
    red = lll_reduce(rows_float)
    cutoff = 10 ** ((K_exp + 1) // 2)
    found: list[tuple[int, ...]] = []
    for u in red:
        v = tuple(u[:d])
        if not any(v):
            continue
        if any(abs(c) > cutoff for c in u[d:]):
            continue
        if verify(v):
            found.append(v)
    return [tuple(r) for r in hermite_normal_form(found)]


def _to_int(x) -> int:
    return int(mpmath.floor(x + mpmath.mpf("0.5")))


def qspan_dimension(
    f: UniPoly,
    digits: Optional[int] = None,
    max_digits: int = 400,
    assume_irreducible: bool = False,
) -> DimReport:
    """Dimension of the Q-vector space spanned by all zeros of f.

    Runs the precision ladder until two consecutive levels agree on the
    count and on the canonical (Hermite form) relation set; the final
    relations are re-confirmed against zeros computed at double precision.
    """
    if f.field is not QQ:
        raise ValueError("the numeric dimension pipeline works over Q")
    notes: list[str] = []
    if not assume_irreducible:
        cert = irreducibility_certificate(f)
        if cert.verdict == "Reducible":
            raise ValueError("input polynomial is reducible; certify factors separately")
        if cert.verdict == "Unknown":
            notes.append("irreducibility not certified; dimensions refer to the zero set")
    d = f.degree
    start = digits if digits is not None else PRECISION_LADDER[0]
    levels = [start]
    while levels[-1] < max(max_digits, 2 * start):
        levels.append(2 * levels[-1])
    trail: list[tuple[int, int]] = []
    prev: Optional[tuple[int, tuple]] = None
    last: Optional[tuple[int, list[tuple[int, ...]], RootSet]] = None
    stable = False
    for L in levels:
        try:
            rs = roots_numeric(f, L)
        except ArithmeticError as exc:
            notes.append(str(exc))
            continue
        K_exp = L - GUARD_DIGITS
        with mpmath.workdps(L + 20):
            K = mpmath.mpf(10) ** K_exp
            rows = []
            for i, z in enumerate(rs.mids):
                row = [0] * d + [_to_int(K * z.real), _to_int(K * z.imag)]
                row[i] = 1
                rows.append(row)
            thresh = mpmath.mpf(10) ** (-(L // 2))

            def verify(v, _rs=rs, _thresh=thresh):
                s = sum(c * z for c, z in zip(v, _rs.mids) if c)
                return abs(s) < _thresh

            rels = _harvest(rows, d, K_exp, verify)
        upper = d - len(rels)
        trail.append((L, upper))
        last = (L, rels, rs)
        if prev is not None and prev[0] == upper and prev[1] == tuple(rels):
            stable = True
            break
        prev = (upper, tuple(rels))
    if last is None:
        raise ArithmeticError("no precision level produced certified zero enclosures")
    L, rels, rs = last
    upper = d - len(rels)
    # re-confirm the final relations at double precision
    if rels:
        fine = roots_numeric(f, 2 * L)
        perm = _pair_roots(rs, fine)
        with mpmath.workdps(2 * L + 20):
            thresh = mpmath.mpf(10) ** (-(L // 2))
            for v in rels:
                s = sum(c * fine.mids[perm[i]] for i, c in enumerate(v) if c)
                if not abs(s) < thresh:
                    stable = False
                    notes.append(
                        f"relation {v} failed re-verification at {2 * L} digits"
                    )
    lower = _interval_plane_rank(rs, _surviving_indices(d, rels))
    if lower > upper:
        raise ArithmeticError(
            "interval arithmetic certifies a higher dimension than the detected "
            "relations allow; the relation set is unsound"
        )
    return DimReport(
        dimension_lower=lower,
        dimension_upper=upper,
        relations=rels,
        certified=False,
        precision_trail=trail,
        stable=stable,
        kind="additive",
        notes=notes,
    )


def _surviving_indices(d: int, rels: list[tuple[int, ...]]) -> list[int]:
    pivots = set()
    for v in rels:
        pivots.add(next(i for i, c in enumerate(v) if c != 0))
    return [i for i in range(d) if i not in pivots]


def _interval_plane_rank(rs: RootSet, indices: list[int]) -> int:
    """Certified rank of the (Re, Im) coordinate rows of the chosen zeros.

    Rank 2 needs a 2x2 minor provably nonzero under the enclosure radii;
    rank 1 needs one zero provably nonzero.  This bounds the Q-dimension
    from below because R-independent numbers are Q-independent.
    """
    nonzero = [i for i in indices if abs(rs.mids[i]) > rs.radii[i]]
    if not nonzero:
        return 0
    for i, j in itertools.combinations(nonzero, 2):
        a, b = rs.mids[i], rs.mids[j]
        ra, rb = rs.radii[i], rs.radii[j]
        det = a.real * b.imag - b.real * a.imag
        err = (
            abs(a.real) * rb
            + abs(b.imag) * ra
            + abs(b.real) * ra
            + abs(a.imag) * rb
            + 2 * ra * rb
        )
        if abs(det) > err:
            return 2
    return 1


# --------------------------------------------------------------------------
# exact ranks


def orbit_rank(orbit: Sequence[Sequence]) -> int:
    """Exact rank of a list of equal-length vectors over a number field."""
    rows = list(orbit)
    if not rows:
        raise ValueError("empty orbit")
    arity = len(rows[0])
    K = None
    for row in rows:
        if len(row) != arity:
            raise ValueError("orbit vectors have mixed arity")
        for x in row:
            if isinstance(x, NFElem):
                K = x.field
                break
        if K is not None:
            break
    if K is None:
        K = QQ
    echelon: list[tuple[int, list[NFElem]]] = []
    for row in rows:
        vec = [x if isinstance(x, NFElem) else K.elem(x) for x in row]
        for pivot, prow in echelon:
            c = vec[pivot]
            if not c.is_zero():
                vec = [vec[t] - c * prow[t] for t in range(arity)]
        pivot = next((t for t in range(arity) if not vec[t].is_zero()), None)
        if pivot is None:
            continue
        inv = vec[pivot].inverse()
        vec = [x * inv for x in vec]
        echelon.append((pivot, vec))
        if len(echelon) == arity:
            break
    return len(echelon)


def mult_rank_exponents(rows: Sequence[Sequence[int]]) -> int:
    """Exact rank over Q of an integer exponent matrix."""
    mat = [list(map(Fraction, r)) for r in rows]
    if not mat:
        return 0
    arity = len(mat[0])
    echelon: list[tuple[int, list[Fraction]]] = []
    for vec in mat:
        if len(vec) != arity:
            raise ValueError("exponent rows have mixed arity")
        for pivot, prow in echelon:
            c = vec[pivot]
            if c:
                vec = [vec[t] - c * prow[t] for t in range(arity)]
        pivot = next((t for t in range(arity) if vec[t]), None)
        if pivot is None:
            continue
        inv = 1 / vec[pivot]
        vec = [x * inv for x in vec]
        echelon.append((pivot, vec))
        if len(echelon) == arity:
            break
    return len(echelon)


# --------------------------------------------------------------------------
# multiplicative rank, numeric


def _euler_phi(m: int) -> int:
    out = 1
    n = m
    p = 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out *= (p - 1) * p ** (e - 1)
        p += 1
    if n > 1:
        out *= n - 1
    return out


def strip_cyclotomic_factors(f: UniPoly) -> tuple[UniPoly, list[int]]:
    """Divide out every cyclotomic factor; returns (quotient, orders found)."""
    if f.field is not QQ:
        raise ValueError("cyclotomic stripping works over Q")
    g = f.monic()
    removed: list[int] = []
    d = g.degree
    m = 1
    while m <= 2 * d * d + 2 and g.degree > 0:
        if _euler_phi(m) <= g.degree:
            phi = UniPoly.from_rationals(QQ, cyclotomic_poly(m), g.var)
            while g.degree >= phi.degree and (g % phi).is_zero():
                g = g.exact_div(phi)
                removed.append(m)
        m += 1
    return g, removed


def mult_rank_numeric(
    f: UniPoly, digits: Optional[int] = None, max_digits: int = 400
) -> DimReport:
    """Heuristic rank of the multiplicative group generated by the zeros
    of f, modulo roots of unity.

    Cyclotomic factors are divided out exactly first.  Candidate relations
    prod alpha_i^{v_i} = root of unity are detected on the lattice of
    (log|alpha_i|, arg alpha_i) rows with one extra 2*pi row absorbing the
    argument ambiguity, then confirmed numerically.
    """
    if f.field is not QQ:
        raise ValueError("the numeric rank pipeline works over Q")
    if f.coeff(0).is_zero():
        raise ValueError("zero is a zero of f; the multiplicative rank needs nonzero zeros")
    g, removed = strip_cyclotomic_factors(f)
    notes: list[str] = []
    torsion = bool(removed)
    if removed:
        notes.append(f"cyclotomic factors of orders {sorted(set(removed))} divided out exactly")
    if g.degree == 0:
        return DimReport(
            dimension_lower=0,
            dimension_upper=0,
            relations=[],
            certified=True,
            precision_trail=[],
            stable=True,
            kind="multiplicative",
            torsion=True,
            notes=notes + ["every zero is a root of unity"],
        )
    d = g.degree
    start = digits if digits is not None else PRECISION_LADDER[0]
    levels = [start]
    while levels[-1] < max(max_digits, 2 * start):
        levels.append(2 * levels[-1])
    trail: list[tuple[int, int]] = []
    prev = None
    last = None
    stable = False
    for L in levels:
        try:
            rs = roots_numeric(g, L)
        except ArithmeticError as exc:
            notes.append(str(exc))
            continue
        K_exp = L - GUARD_DIGITS
        with mpmath.workdps(L + 20):
            K = mpmath.mpf(10) ** K_exp
            twopi = 2 * mpmath.pi
            logs = [mpmath.log(z) for z in rs.mids]
            rows = []
            for i, lg in enumerate(logs):
                row = [0] * d + [_to_int(K * lg.real), _to_int(K * lg.imag)]
                row[i] = 1
                rows.append(row)
            rows.append([0] * d + [0, _to_int(K * twopi)])
            thresh = mpmath.mpf(10) ** (-(L // 2))

            def verify(v, _logs=logs, _thresh=thresh, _twopi=twopi):
                t = sum(c * lg for c, lg in zip(v, _logs) if c)
                m = _to_int(-t.imag / _twopi)
                return abs(t.real) < _thresh and abs(t.imag + m * _twopi) < _thresh

            rels = _harvest(rows, d, K_exp, verify)
        upper = d - len(rels)
        trail.append((L, upper))
        last = (L, rels, rs)
        if prev is not None and prev[0] == upper and prev[1] == tuple(rels):
            stable = True
            break
        prev = (upper, tuple(rels))
    if last is None:
        raise ArithmeticError("no precision level produced certified zero enclosures")
    L, rels, rs = last
    upper = d - len(rels)
    if rels:
        fine = roots_numeric(g, 2 * L)
        perm = _pair_roots(rs, fine)
        with mpmath.workdps(2 * L + 20):
            twopi = 2 * mpmath.pi
            thresh = mpmath.mpf(10) ** (-(L // 2))
            for v in rels:
                t = sum(c * mpmath.log(fine.mids[perm[i]]) for i, c in enumerate(v) if c)
                m = _to_int(-t.imag / twopi)
                if not (abs(t.real) < thresh and abs(t.imag + m * twopi) < thresh):
                    stable = False
                    notes.append(f"relation {v} failed re-verification at {2 * L} digits")
    with mpmath.workdps(L + 20):
        lower = 0
        for z, r in zip(rs.mids, rs.radii):
            if abs(abs(z) - 1) > r:
                lower = 1
                break
    lower = min(lower, upper)
    return DimReport(
        dimension_lower=lower,
        dimension_upper=upper,
        relations=rels,
        certified=False,
        precision_trail=trail,
        stable=stable,
        kind="multiplicative",
        torsion=torsion,
        notes=notes,
    )
