"""Mod-p factorization and irreducibility certificates for rational polynomials.

Phase 1 of a certificate samples factor-degree profiles at many good primes
and intersects the realizable factor degrees. Phase 2 Hensel-lifts a mod-p
factorization to a coefficient bound and runs a bounded subset recombination
search. Both phases are deterministic: candidate polynomials for equal-degree
splitting are drawn from an RNG seeded by a hash of the inputs.
"""

from __future__ import annotations

import hashlib
import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb, isqrt
from typing import Optional, Sequence

from .unipoly import UniPoly

RECOMBINATION_BUDGET = 10 ** 6
GOOD_PRIME_COUNT = 25
GOOD_PRIME_FLOOR = 100


# ---------------------------------------------------------------------------
# primality (deterministic Miller-Rabin, exact far beyond desk scale)

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % q == 0:
            return n == q
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def primes_from(start: int):
    """Yield primes strictly greater than start, ascending."""
    n = start + 1
    if n <= 2:
        yield 2
        n = 3
    if n % 2 == 0:
        n += 1
    while True:
        if is_prime(n):
            yield n
        n += 2


# ---------------------------------------------------------------------------
# dense F_p[x] arithmetic on ascending coefficient lists of ints in [0, p)


def gf_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def gf_deg(a: Sequence[int]) -> int:
    return len(a) - 1


def gf_add(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    n = max(len(a), len(b))
    out = [0] * n
    for i, c in enumerate(a):
        out[i] = c
    for i, c in enumerate(b):
        out[i] = (out[i] + c) % p
    return gf_trim(out)


def gf_sub(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    n = max(len(a), len(b))
    out = [0] * n
    for i, c in enumerate(a):
        out[i] = c
    for i, c in enumerate(b):
        out[i] = (out[i] - c) % p
    return gf_trim(out)


def gf_mul(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                if cb:
                    out[i + j] = (out[i + j] + ca * cb) % p
    return gf_trim(out)


def gf_monic(a: Sequence[int], p: int) -> list[int]:
    a = gf_trim(list(a))
    if not a or a[-1] == 1:
        return list(a)
    inv = pow(a[-1], -1, p)
    return [c * inv % p for c in a]


def gf_divmod(a: Sequence[int], b: Sequence[int], p: int) -> tuple[list[int], list[int]]:
    a = gf_trim(list(a))
    b = gf_trim(list(b))
    if not b:
        raise ZeroDivisionError("division by zero polynomial")
    db = len(b) - 1
    inv = pow(b[-1], -1, p)
    q = [0] * max(len(a) - db, 0)
    r = list(a)
    while r and len(r) - 1 >= db:
        k = len(r) - 1 - db
        c = r[-1] * inv % p
        q[k] = c
        for i in range(db + 1):
            r[i + k] = (r[i + k] - c * b[i]) % p
        gf_trim(r)
    return gf_trim(q), r


def gf_rem(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    return gf_divmod(a, b, p)[1]


def gf_exact_div(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    q, r = gf_divmod(a, b, p)
    if r:
        raise ArithmeticError("division mod p is not exact")
    return q


def gf_gcd(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    a = gf_trim(list(a))
    b = gf_trim(list(b))
    while b:
        a, b = b, gf_rem(a, b, p)
    return gf_monic(a, p)


def gf_ext_gcd(a: Sequence[int], b: Sequence[int], p: int) -> tuple[list[int], list[int], list[int]]:
    """Monic g = gcd(a, b) plus s, t with s*a + t*b = g (mod p)."""
    r0, r1 = gf_trim(list(a)), gf_trim(list(b))
    s0, s1 = [1], []
    t0, t1 = [], [1]
    while r1:
        q, r = gf_divmod(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, gf_sub(s0, gf_mul(q, s1, p), p)
        t0, t1 = t1, gf_sub(t0, gf_mul(q, t1, p), p)
    if not r0:
        return [], s0, t0
    inv = pow(r0[-1], -1, p)
    scale = [inv]
    return gf_monic(r0, p), gf_mul(s0, scale, p), gf_mul(t0, scale, p)


def gf_pow_mod(a: Sequence[int], e: int, mod: Sequence[int], p: int) -> list[int]:
    result = [1]
    base = gf_rem(a, mod, p)
    while e > 0:
        if e & 1:
            result = gf_rem(gf_mul(result, base, p), mod, p)
        base = gf_rem(gf_mul(base, base, p), mod, p)
        e >>= 1
    return result


def gf_deriv(a: Sequence[int], p: int) -> list[int]:
    return gf_trim([i * c % p for i, c in enumerate(a)][1:])


def gf_is_squarefree(a: Sequence[int], p: int) -> bool:
    a = gf_monic(a, p)
    if gf_deg(a) <= 0:
        return True
    return gf_deg(gf_gcd(a, gf_deriv(a, p), p)) == 0


# ---------------------------------------------------------------------------
# factorization over F_p: distinct-degree + equal-degree splitting


def _det_rng(*parts) -> random.Random:
    digest = hashlib.sha256(repr(parts).encode()).digest()
    return random.Random(int.from_bytes(digest[:8], "big"))


def _ddf(f: list[int], p: int) -> list[tuple[list[int], int]]:
    """Distinct-degree split of a monic squarefree f: [(product, degree), ...]."""
    out = []
    x = [0, 1]
    h = [0, 1]
    cur = list(f)
    d = 0
    while gf_deg(cur) > 0:
        d += 1
        if 2 * d > gf_deg(cur):
            out.append((cur, gf_deg(cur)))
            break
        h = gf_pow_mod(h, p, cur, p)
        g = gf_gcd(gf_sub(h, x, p), cur, p)
        if gf_deg(g) > 0:
            out.append((g, d))
            cur = gf_exact_div(cur, g, p)
            h = gf_rem(h, cur, p)
    return out


def _eds(f: list[int], d: int, p: int) -> list[list[int]]:
    """Equal-degree split: f monic squarefree, all irreducible factors of degree d."""
    if gf_deg(f) == d:
        return [gf_monic(f, p)]
    rng = _det_rng("eds", p, d, tuple(f))
    work = [gf_monic(f, p)]
    done: list[list[int]] = []
    while work:
        h = work.pop()
        if gf_deg(h) == d:
            done.append(h)
            continue
        while True:
            a = gf_trim([rng.randrange(p) for _ in range(gf_deg(h))])
            if gf_deg(a) < 1:
                continue
            if p == 2:
                # trace map over F_{2^d}: a + a^2 + a^4 + ... (d terms)
                t = gf_rem(a, h, p)
                acc = t
                for _ in range(d - 1):
                    t = gf_rem(gf_mul(t, t, p), h, p)
                    acc = gf_add(acc, t, p)
                b = acc
            else:
                b = gf_pow_mod(a, (p ** d - 1) // 2, h, p)
                b = gf_sub(b, [1], p)
            g = gf_gcd(b, h, p)
            if 0 < gf_deg(g) < gf_deg(h):
                work.append(g)
                work.append(gf_exact_div(h, g, p))
                break
    done.sort()
    return done


def gf_factor_squarefree(f: list[int], p: int) -> list[list[int]]:
    """Irreducible factors of a monic squarefree f over F_p, sorted."""
    out: list[list[int]] = []
    for part, d in _ddf(gf_monic(f, p), p):
        out.extend(_eds(part, d, p))
    out.sort(key=lambda g: (gf_deg(g), g))
    return out


def gf_factor_monic(f: list[int], p: int) -> list[tuple[list[int], int]]:
    """Complete factorization (with multiplicities) of a monic f over F_p."""
    found: dict[tuple[int, ...], int] = {}

    def rec(g: list[int], mult: int) -> None:
        if gf_deg(g) <= 0:
            return
        gp = gf_deriv(g, p)
        if not gp:
            # every exponent divisible by p: g(x) = h(x^p) and c^(1/p) = c in F_p
            h = [g[i] for i in range(0, len(g), p)]
            rec(gf_trim(h), mult * p)
            return
        w = gf_gcd(g, gp, p)
        sqf = gf_exact_div(g, w, p)
        rem = list(g)
        for irr in gf_factor_squarefree(sqf, p):
            m = 0
            while True:
                q, r = gf_divmod(rem, irr, p)
                if r:
                    break
                rem = q
                m += 1
            key = tuple(irr)
            found[key] = found.get(key, 0) + m * mult
        # rem now has all factor exponents divisible by p
        rec(rem, mult)

    rec(gf_monic(f, p), 1)
    items = [(list(k), m) for k, m in found.items()]
    items.sort(key=lambda t: (gf_deg(t[0]), t[0]))
    return items


# ---------------------------------------------------------------------------
# degree profiles and good primes


@dataclass(frozen=True)
class FactorDegreeProfile:
    prime: int
    degrees: tuple[int, ...]
    squarefree_mod_p: bool

    def subset_degree_sums(self) -> frozenset[int]:
        sums = {0}
        for d in self.degrees:
            sums |= {s + d for s in sums}
        return frozenset(sums)


def _require_q(f: UniPoly) -> None:
    if f.field.degree != 1:
        raise ValueError("only rational-coefficient polynomials are supported here")


def _int_form(f: UniPoly) -> tuple[list[int], Fraction]:
    _require_q(f)
    ints, scale = f.cleared_int_coeffs()
    return ints, scale


def factor_mod_p(f: UniPoly, p: int) -> tuple[FactorDegreeProfile, list[tuple[list[int], int]]]:
    """Reduce f mod p and factor completely.

    Returns the degree profile (degrees listed with multiplicity) and the
    monic irreducible factors as ascending coefficient lists.
    """
    if not is_prime(p):
        raise ValueError(f"bad prime: {p}")
    ints, scale = _int_form(f)
    if not ints:
        raise ValueError("cannot factor the zero polynomial")
    if scale.numerator % p == 0 or scale.denominator % p == 0 or ints[-1] % p == 0:
        raise ValueError(f"bad prime {p}: divides a leading coefficient or denominator")
    fbar = gf_monic([c % p for c in ints], p)
    sf = gf_is_squarefree(fbar, p)
    factors = gf_factor_monic(fbar, p)
    degrees: list[int] = []
    for g, m in factors:
        degrees.extend([gf_deg(g)] * m)
    profile = FactorDegreeProfile(prime=p, degrees=tuple(sorted(degrees)), squarefree_mod_p=sf)
    return profile, factors


def good_primes(f: UniPoly, count: int = GOOD_PRIME_COUNT, floor: int = GOOD_PRIME_FLOOR) -> list[int]:
    """First `count` primes above `floor` at which f stays squarefree of full degree."""
    ints, scale = _int_form(f)
    if gf_deg(ints) < 1:
        raise ValueError("need degree at least 1")
    out = []
    for p in primes_from(floor):
        if ints[-1] % p == 0 or scale.numerator % p == 0 or scale.denominator % p == 0:
            continue
        fbar = gf_monic([c % p for c in ints], p)
        if gf_is_squarefree(fbar, p):
            out.append(p)
            if len(out) == count:
                return out
    raise RuntimeError("prime search did not terminate")


# ---------------------------------------------------------------------------
# Hensel lifting (quadratic, on a binary factor tree)


def _zp_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _zp_mul(a: Sequence[int], b: Sequence[int], m: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                if cb:
                    out[i + j] = (out[i + j] + ca * cb) % m
    return _zp_trim(out)


def _zp_add(a: Sequence[int], b: Sequence[int], m: int) -> list[int]:
    n = max(len(a), len(b))
    out = [0] * n
    for i, c in enumerate(a):
        out[i] = c
    for i, c in enumerate(b):
        out[i] = (out[i] + c) % m
    return _zp_trim(out)


def _zp_sub(a: Sequence[int], b: Sequence[int], m: int) -> list[int]:
    n = max(len(a), len(b))
    out = [0] * n
    for i, c in enumerate(a):
        out[i] = c
    for i, c in enumerate(b):
        out[i] = (out[i] - c) % m
    return _zp_trim(out)


def _zp_divmod_monic(a: Sequence[int], b: Sequence[int], m: int) -> tuple[list[int], list[int]]:
    """Division by a monic b over Z/m."""
    b = _zp_trim(list(b))
    if not b or b[-1] != 1:
        raise ValueError("divisor must be monic")
    db = len(b) - 1
    r = _zp_trim(list(a))
    q = [0] * max(len(r) - db, 0)
    while r and len(r) - 1 >= db:
        k = len(r) - 1 - db
        c = r[-1]
        q[k] = c
        for i in range(db + 1):
            r[i + k] = (r[i + k] - c * b[i]) % m
        _zp_trim(r)
    return _zp_trim(q), r


def _hensel_step(m: int, f, g, h, s, t):
    """One quadratic lift: from f = g*h and s*g + t*h = 1 (mod m) to mod m^2.

    h (and the lifted h) are monic; degree shapes are preserved.
    """
    mm = m * m
    e = _zp_sub([c % mm for c in f], _zp_mul(g, h, mm), mm)
    q, r = _zp_divmod_monic(_zp_mul(s, e, mm), h, mm)
    g1 = _zp_add(_zp_add(g, _zp_mul(t, e, mm), mm), _zp_mul(q, g, mm), mm)
    h1 = _zp_add(h, r, mm)
    b = _zp_sub(_zp_add(_zp_mul(s, g1, mm), _zp_mul(t, h1, mm), mm), [1], mm)
    c, d = _zp_divmod_monic(_zp_mul(s, b, mm), h1, mm)
    s1 = _zp_sub(s, d, mm)
    t1 = _zp_sub(_zp_sub(t, _zp_mul(t, b, mm), mm), _zp_mul(c, g1, mm), mm)
    return g1, h1, s1, t1


class _HenselNode:
    __slots__ = ("value", "left", "right", "s", "t")

    def __init__(self, value, left=None, right=None):
        self.value = value
        self.left = left
        self.right = right
        self.s = None
        self.t = None


def _build_tree(factors: list[list[int]], p: int) -> _HenselNode:
    nodes = [_HenselNode(list(f)) for f in factors]
    while len(nodes) > 1:
        nxt = []
        for i in range(0, len(nodes) - 1, 2):
            l, r = nodes[i], nodes[i + 1]
            parent = _HenselNode(gf_mul(l.value, r.value, p), l, r)
            g, s, t = gf_ext_gcd(l.value, r.value, p)
            if gf_deg(g) != 0:
                raise ArithmeticError("factors are not coprime mod p")
            parent.s, parent.t = s, t
            nxt.append(parent)
        if len(nodes) % 2 == 1:
            nxt.append(nodes[-1])
        nodes = nxt
    return nodes[0]


def _lift_tree(node: _HenselNode, m: int) -> None:
    if node.left is None:
        return
    g1, h1, s1, t1 = _hensel_step(m, node.value, node.left.value, node.right.value, node.s, node.t)
    node.left.value, node.right.value = g1, h1
    node.s, node.t = s1, t1
    _lift_tree(node.left, m)
    _lift_tree(node.right, m)


def _leaves(node: _HenselNode) -> list[list[int]]:
    if node.left is None:
        return [node.value]
    return _leaves(node.left) + _leaves(node.right)


def hensel_lift_factors(f_ints: list[int], p: int, target: int) -> tuple[list[list[int]], int]:
    """Lift the mod-p factorization of a monic integer f to modulus >= target.

    Returns (monic factors mod p^K, p^K). The product of the factors is
    verified to reproduce f mod p^K.
    """
    if f_ints[-1] != 1:
        raise ValueError("Hensel lifting expects a monic polynomial")
    fbar = gf_monic([c % p for c in f_ints], p)
    if not gf_is_squarefree(fbar, p):
        raise ValueError("polynomial is not squarefree mod p")
    base = gf_factor_squarefree(fbar, p)
    if len(base) == 1:
        return [list(f_ints)], 0  # already irreducible mod p; no lift needed
    root = _build_tree(base, p)
    m = p
    while m < target:
        root.value = [c % (m * m) for c in f_ints]
        _lift_tree(root, m)
        m = m * m
    leaves = _leaves(root)
    check = [1]
    for leaf in leaves:
        check = _zp_mul(check, leaf, m)
    if check != _zp_trim([c % m for c in f_ints]):
        raise ArithmeticError("Hensel lift verification failed")
    return leaves, m


def landau_mignotte_bound(f_ints: Sequence[int]) -> int:
    """Coefficient bound for monic integer factors: 2^deg(f) * l2-norm(f)."""
    d = gf_deg(list(f_ints))
    norm_sq = sum(c * c for c in f_ints)
    return (2 ** d) * (isqrt(norm_sq) + 1)


# ---------------------------------------------------------------------------
# integer-polynomial helpers for recombination


def _symmetric(c: int, m: int) -> int:
    c %= m
    return c - m if c > m // 2 else c


def _int_poly_divmod(a: Sequence[int], b: Sequence[int]) -> tuple[list[int], list[int]]:
    """Exact integer division by a monic b."""
    b = list(b)
    if not b or b[-1] != 1:
        raise ValueError("divisor must be monic")
    db = len(b) - 1
    r = list(a)
    while r and r[-1] == 0:
        r.pop()
    q = [0] * max(len(r) - db, 0)
    while r and len(r) - 1 >= db:
        k = len(r) - 1 - db
        c = r[-1]
        q[k] = c
        for i in range(db + 1):
            r[i + k] -= c * b[i]
        while r and r[-1] == 0:
            r.pop()
    return q, r


def _monicize(ints: Sequence[int]) -> tuple[list[int], int]:
    """G(y) = a^(d-1) * F(y/a) for a = lc(F): monic integer polynomial.

    Roots of G are a times the roots of F, so G and F factor in parallel.
    """
    d = gf_deg(list(ints))
    a = ints[-1]
    out = [ints[i] * a ** (d - 1 - i) for i in range(d)] + [1]
    return out, a


class _Budget:
    def __init__(self, limit: int):
        self.limit = limit
        self.used = 0

    def spend(self) -> bool:
        self.used += 1
        return self.used <= self.limit


def _recombine(
    g_ints: list[int],
    leaves: list[list[int]],
    modulus: int,
    budget: _Budget,
) -> tuple[Optional[list[int]], bool]:
    """Search leaf subsets for a monic integer factor of g_ints.

    Returns (factor or None, exhausted). `exhausted` means every subset with
    total degree <= deg/2 was tried, so None is a proof of irreducibility.
    """
    d = gf_deg(g_ints)
    half = d // 2
    r = len(leaves)
    const = g_ints[0]
    idx = list(range(r))
    # every proper factorization has a side of degree <= half, and that side
    # is a product of leaves, so subsets up to `half` leaves are exhaustive
    for size in range(1, min(r, half + 1)):
        for combo in combinations(idx, size):
            if not budget.spend():
                return None, False
            deg_sum = sum(gf_deg(leaves[i]) for i in combo)
            if deg_sum > half or deg_sum == 0:
                continue
            cand = [1]
            for i in combo:
                cand = _zp_mul(cand, leaves[i], modulus)
            cand_int = [_symmetric(c, modulus) for c in cand]
            while cand_int and cand_int[-1] == 0:
                cand_int.pop()
            if not cand_int or cand_int[-1] != 1:
                continue
            if const != 0 and cand_int[0] != 0 and const % cand_int[0] != 0:
                continue
            q, rem = _int_poly_divmod(g_ints, cand_int)
            if not rem:
                return cand_int, True
    return None, True


# ---------------------------------------------------------------------------
# certificates


@dataclass
class IrreducibilityCertificate:
    verdict: str  # "Irreducible" | "Reducible" | "Unknown"
    evidence: list[FactorDegreeProfile]
    recombination_checked: bool
    witness_factor: Optional[UniPoly]
    note: str = ""

    def to_json_dict(self) -> dict:
        wit = None
        if self.witness_factor is not None:
            wit = [str(c) for c in self.witness_factor.rational_coeffs()]
        return {
            "verdict": self.verdict,
            "primes": [pr.prime for pr in self.evidence],
            "profiles": [list(pr.degrees) for pr in self.evidence],
            "witness": wit,
        }


def _witness_from_monic_factor(f: UniPoly, cand: list[int], a: int) -> UniPoly:
    """Map a monic factor C(y) of the monicized polynomial back to f's variable.

    With G(y) = a^(d-1) F(y/a), the factor C corresponds to the monic rational
    polynomial C(a*x) / a^deg(C), which must divide f exactly.
    """
    e = gf_deg(cand)
    coeffs = [Fraction(cand[j]) / Fraction(a) ** (e - j) for j in range(e + 1)]
    w = UniPoly.from_rationals(f.field, coeffs, var=f.var)
    q, rem = f.divmod(w)
    if not rem.is_zero():
        raise ArithmeticError("recombination witness does not divide the input")
    return w


def irreducibility_certificate(f: UniPoly, budget: int = RECOMBINATION_BUDGET) -> IrreducibilityCertificate:
    """Two-phase irreducibility certification for a rational polynomial.

    Phase 1 intersects achievable factor degrees over sampled good primes.
    Phase 2 Hensel-lifts at the prime with the fewest modular factors and
    searches factor subsets up to half the degree.
    """
    _require_q(f)
    d = f.degree
    if d < 1:
        raise ValueError("irreducibility needs degree at least 1")
    if d == 1:
        return IrreducibilityCertificate("Irreducible", [], False, None, note="degree 1")
    if not f.is_squarefree():
        witness = f.squarefree_part()
        return IrreducibilityCertificate(
            "Reducible", [], False, witness,
            note="input not squarefree; witness is its squarefree part",
        )

    primes = good_primes(f)
    profiles: list[FactorDegreeProfile] = []
    allowed = None
    for p in primes:
        profile, _ = factor_mod_p(f, p)
        profiles.append(profile)
        sums = profile.subset_degree_sums()
        allowed = sums if allowed is None else (allowed & sums)
    if allowed == frozenset({0, d}):
        return IrreducibilityCertificate("Irreducible", profiles, False, None, note="phase 1")

    # Phase 2 at the good prime with the fewest modular factors
    ints, _ = _int_form(f)
    g_ints, a = _monicize(ints)
    best_p = None
    best_count = None
    for p in primes:
        gbar = gf_monic([c % p for c in g_ints], p)
        if not gf_is_squarefree(gbar, p):
            continue
        n_fac = sum(1 for _ in _ddf_factor_count(gbar, p))
        if best_count is None or n_fac < best_count or (n_fac == best_count and p < best_p):
            best_p, best_count = p, n_fac
    if best_p is None:
        return IrreducibilityCertificate(
            "Unknown", profiles, False, None,
            note="no good prime for the monicized polynomial",
        )

    bound = 2 * landau_mignotte_bound(g_ints)
    leaves, modulus = hensel_lift_factors(g_ints, best_p, bound)
    if modulus == 0:
        # single factor mod best_p: irreducible outright
        return IrreducibilityCertificate(
            "Irreducible", profiles, False, None, note=f"irreducible mod {best_p}",
        )
    tracker = _Budget(budget)
    cand, exhausted = _recombine(g_ints, leaves, modulus, tracker)
    if cand is not None:
        witness = _witness_from_monic_factor(f, cand, a)
        return IrreducibilityCertificate(
            "Reducible", profiles, True, witness, note=f"phase 2 at p={best_p}",
        )
    if exhausted:
        return IrreducibilityCertificate(
            "Irreducible", profiles, True, None, note=f"phase 2 at p={best_p}",
        )
    return IrreducibilityCertificate(
        "Unknown", profiles, False, None, note="recombination budget exhausted",
    )


def _ddf_factor_count(fbar: list[int], p: int):
    """Degrees (one entry per irreducible factor) of a monic squarefree fbar."""
    for part, deg in _ddf(fbar, p):
        for _ in range(gf_deg(part) // deg):
            yield deg


# ---------------------------------------------------------------------------
# full factorization over Q (desk scale)


def _int_factor_squarefree(ints: list[int], budget: _Budget) -> tuple[list[list[int]], bool]:
    """Irreducible monic-after-monicization factors of a squarefree primitive
    integer polynomial, as monic integer factor lists of the monicized form.

    Returns (factors_of_G, complete). G = monicize(ints).
    """
    g_ints, a = _monicize(ints)
    d = gf_deg(g_ints)
    if d == 1:
        return [g_ints], True
    # pick the good prime with fewest factors of G
    best = None
    count = 0
    for p in primes_from(GOOD_PRIME_FLOOR):
        gbar = gf_monic([c % p for c in g_ints], p)
        if gf_is_squarefree(gbar, p):
            n_fac = sum(1 for _ in _ddf_factor_count(gbar, p))
            if best is None or n_fac < best[1]:
                best = (p, n_fac)
            count += 1
            if count >= GOOD_PRIME_COUNT:
                break
    p = best[0]
    bound = 2 * landau_mignotte_bound(g_ints)
    leaves, modulus = hensel_lift_factors(g_ints, p, bound)
    if modulus == 0:
        return [g_ints], True
    remaining = list(leaves)
    current = list(g_ints)
    out: list[list[int]] = []
    while gf_deg(current) > 0 and remaining:
        cand, exhausted = _recombine(current, remaining, modulus, budget)
        if cand is None:
            if not exhausted:
                return out + [current], False
            out.append(current)
            return out, True
        out.append(cand)
        current, rem = _int_poly_divmod(current, cand)
        if rem:
            raise ArithmeticError("factor bookkeeping failed")
        # drop the leaves used by this factor: re-derive by dividing mod p^K
        new_remaining = []
        probe = [c % modulus for c in cand]
        for leaf in remaining:
            q, r = _zp_divmod_monic(probe, leaf, modulus)
            if not r and gf_deg(q) >= 0:
                probe = q
            else:
                new_remaining.append(leaf)
        remaining = new_remaining
    if gf_deg(current) > 0:
        out.append(current)
    return out, True


def factor_over_q(f: UniPoly, budget: int = RECOMBINATION_BUDGET) -> tuple[Fraction, list[tuple[UniPoly, int]], bool]:
    """Factor a rational polynomial into monic irreducible factors over Q.

    Returns (constant, [(monic factor, multiplicity), ...], complete). The
    product of constant and factor powers reproduces f when complete is True
    (verified).
    """
    _require_q(f)
    if f.is_zero():
        raise ValueError("cannot factor the zero polynomial")
    if f.degree == 0:
        return f.rational_coeffs()[0], [], True
    tracker = _Budget(budget)
    sqf = f.squarefree_part()
    ints, _ = _int_form(sqf)
    a = ints[-1]
    g_factors, complete = _int_factor_squarefree(ints, tracker)
    result: list[tuple[UniPoly, int]] = []
    for g in g_factors:
        e = gf_deg(g)
        coeffs = [Fraction(g[j]) / Fraction(a) ** (e - j) for j in range(e + 1)]
        w = UniPoly.from_rationals(f.field, coeffs, var=f.var)
        mult = 0
        probe = f
        while True:
            q, rem = probe.divmod(w)
            if not rem.is_zero():
                break
            probe = q
            mult += 1
        if mult == 0:
            raise ArithmeticError("candidate factor does not divide the input")
        result.append((w, mult))
    result.sort(key=lambda t: (t[0].degree, [str(c) for c in t[0].rational_coeffs()]))
    const = f.lc().coords[0]
    if complete:
        check = UniPoly.const(f.field, const, var=f.var)
        for w, m in result:
            check = check * (w ** m)
        if not (check - f).is_zero():
            raise ArithmeticError("factorization verification failed")
    return Fraction(const), result, complete
