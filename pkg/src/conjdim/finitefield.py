"""Finite fields at desk scale.

Arithmetic in F_{p^k} (p^k <= 2^32) with a deterministically chosen modulus,
multiplicative generators, q-linearized polynomials, and an exact check that
an algebraic element over F_q can have degree q**n - 1 while its Frobenius
orbit spans only an n-dimensional F_q-space.

Elements of F_{p^k} are coordinate tuples of length k (ascending powers of
the residue class of x modulo the field's defining polynomial), so they are
hashable and iterate in a stable order via their integer encodings.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Iterator, Sequence

from .modfactor import gf_deg, gf_ext_gcd, gf_mul, gf_pow_mod, gf_rem, gf_trim

SIZE_CAP = 2**32
_SCAN_CAP = 2**20


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def _prime_factors(n: int) -> list[int]:
    """Distinct prime factors of n by trial division (n <= 2**32)."""
    out = []
    for p in (2, 3):
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
    f = 5
    while f * f <= n:
        for step in (f, f + 2):
            if n % step == 0:
                out.append(step)
                while n % step == 0:
                    n //= step
        f += 6
    if n > 1:
        out.append(n)
    return out


def _poly_str(coeffs: Sequence[int], var: str = "x") -> str:
    """Render an ascending integer coefficient list, e.g. 'x^3 + x + 1'."""
    terms = []
    for e in range(len(coeffs) - 1, -1, -1):
        c = coeffs[e]
        if c == 0:
            continue
        if e == 0:
            terms.append(str(c))
        else:
            head = "" if c == 1 else f"{c}*"
            terms.append(f"{head}{var}" if e == 1 else f"{head}{var}^{e}")
    return " + ".join(terms) if terms else "0"


def _is_irreducible_mod_p(f: list[int], p: int) -> bool:
    """Rabin's test for a monic polynomial over F_p."""
    k = gf_deg(f)
    if k <= 0:
        return False
    if k == 1:
        return True
    x = [0, 1]
    for r in _prime_factors(k):
        h = gf_pow_mod(x, p ** (k // r), f, p)
        g = _gf_gcd_local(_gf_sub_local(h, x, p), f, p)
        if gf_deg(g) != 0:
            return False
    return gf_pow_mod(x, p**k, f, p) == gf_trim(x)


def _gf_sub_local(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    n = max(len(a), len(b))
    out = [0] * n
    for i in range(n):
        ai = a[i] if i < len(a) else 0
        bi = b[i] if i < len(b) else 0
        out[i] = (ai - bi) % p
    return gf_trim(out)


def _gf_gcd_local(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    a, b = gf_trim(list(a)), gf_trim(list(b))
    while b:
        a, b = b, gf_rem(a, b, p)
    return a


@functools.lru_cache(maxsize=None)
def _least_lex_modulus(p: int, k: int) -> tuple[int, ...]:
    """First monic irreducible of degree k over F_p, ordering candidates by
    the base-p integer whose digits are the non-leading coefficients read
    from the constant term up."""
    for m in range(p**k):
        coeffs = []
        t = m
        for _ in range(k):
            coeffs.append(t % p)
            t //= p
        coeffs.append(1)
        if _is_irreducible_mod_p(coeffs, p):
            return tuple(coeffs)
    raise ArithmeticError(f"no irreducible of degree {k} over F_{p}")


class FqField:
    """F_{p^k} presented as F_p[x] modulo a fixed monic irreducible.

    Elements are length-k tuples of ints in [0, p).  All operations are
    exact.  The class does no caching beyond the modulus itself; fields
    are cheap value objects and ff_make memoizes the modulus search.
    """

    def __init__(self, p: int, k: int, modulus: Sequence[int]):
        if not _is_prime(p):
            raise ValueError(f"characteristic {p} is not prime")
        if k < 1 or p**k > SIZE_CAP:
            raise ValueError(f"size cap exceeded: {p}^{k} > 2^32")
        mod = [c % p for c in modulus]
        if gf_deg(mod) != k or mod[-1] != 1:
            raise ValueError("modulus must be monic of degree k")
        if not _is_irreducible_mod_p(mod, p):
            raise ValueError(f"modulus {_poly_str(mod)} is reducible mod {p}")
        self.p = p
        self.k = k
        self.modulus = tuple(mod)
        self.size = p**k

    def __repr__(self) -> str:
        return f"F_{self.size}"

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FqField)
            and (self.p, self.k, self.modulus) == (other.p, other.k, other.modulus)
        )

    def __hash__(self) -> int:
        return hash((self.p, self.k, self.modulus))

    # -- element plumbing -------------------------------------------------

    @property
    def zero(self) -> tuple[int, ...]:
        return (0,) * self.k

    @property
    def one(self) -> tuple[int, ...]:
        return self.const(1)

    def const(self, c: int) -> tuple[int, ...]:
        return (c % self.p,) + (0,) * (self.k - 1)

    @property
    def gen(self) -> tuple[int, ...]:
        """Residue class of x (equals 0 in the degenerate k = 1 field)."""
        if self.k == 1:
            return self.zero
        return (0, 1) + (0,) * (self.k - 2)

    def element(self, coeffs: Sequence[int]) -> tuple[int, ...]:
        if len(coeffs) > self.k:
            red = gf_rem([c % self.p for c in coeffs], list(self.modulus), self.p)
        else:
            red = [c % self.p for c in coeffs]
        return tuple(red) + (0,) * (self.k - len(red))

    def encode(self, a: Sequence[int]) -> int:
        e = 0
        for c in reversed(list(a)):
            e = e * self.p + c
        return e

    def decode(self, e: int) -> tuple[int, ...]:
        if not 0 <= e < self.size:
            raise ValueError(f"encoding {e} outside [0, {self.size})")
        out = []
        for _ in range(self.k):
            out.append(e % self.p)
            e //= self.p
        return tuple(out)

    def elements(self) -> Iterator[tuple[int, ...]]:
        for e in range(self.size):
            yield self.decode(e)

    # -- arithmetic --------------------------------------------------------

    def add(self, a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
        return tuple((x + y) % self.p for x, y in zip(a, b))

    def sub(self, a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
        return tuple((x - y) % self.p for x, y in zip(a, b))

    def neg(self, a: Sequence[int]) -> tuple[int, ...]:
        return tuple((-x) % self.p for x in a)

    def scale(self, a: Sequence[int], c: int) -> tuple[int, ...]:
        return tuple((x * c) % self.p for x in a)

    def mul(self, a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
        prod = gf_rem(gf_mul(list(a), list(b), self.p), list(self.modulus), self.p)
        return tuple(prod) + (0,) * (self.k - len(prod))

    def pow(self, a: Sequence[int], e: int) -> tuple[int, ...]:
        if e < 0:
            return self.pow(self.inv(a), -e)
        acc = self.one
        base = tuple(a)
        while e:
            if e & 1:
                acc = self.mul(acc, base)
            base = self.mul(base, base)
            e >>= 1
        return acc

    def inv(self, a: Sequence[int]) -> tuple[int, ...]:
        alist = gf_trim(list(a))
        if not alist:
            raise ZeroDivisionError("inverse of zero in a finite field")
        g, u, _ = gf_ext_gcd(alist, list(self.modulus), self.p)
        c = pow(g[0], -1, self.p)
        red = gf_trim([(x * c) % self.p for x in u])
        return tuple(red) + (0,) * (self.k - len(red))

    def frobenius(self, a: Sequence[int]) -> tuple[int, ...]:
        return self.pow(a, self.p)


def ff_make(p: int, k: int) -> FqField:
    """Field with p**k elements and the least-lexicographic irreducible
    modulus, so two runs always agree on element coordinates."""
    if not _is_prime(p):
        raise ValueError(f"characteristic {p} is not prime")
    if k < 1 or p**k > SIZE_CAP:
        raise ValueError(f"size cap exceeded: {p}^{k} > 2^32")
    return FqField(p, k, _least_lex_modulus(p, k))


def multiplicative_generator(K: FqField) -> tuple[int, ...]:
    """Smallest element (in encoding order) of multiplicative order |K| - 1.

    Order is tested against the prime factorization of |K| - 1: z generates
    iff z**((|K|-1)/r) != 1 for every prime r dividing |K| - 1.
    """
    n = K.size - 1
    if n == 1:
        return K.one
    primes = _prime_factors(n)
    for e in range(1, K.size):
        z = K.decode(e)
        if all(K.pow(z, n // r) != K.one for r in primes):
            return z
    raise ArithmeticError("no generator found (unreachable for a field)")


@dataclass(frozen=True)
class LinearizedPoly:
    """Polynomial sum(c_i * X**(q**i)); additive and F_q-linear on every
    extension of F_q."""

    base_q: int
    coeffs: tuple[int, ...]

    def __str__(self) -> str:
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            e = self.base_q**i
            head = "" if c == 1 else f"{c}*"
            terms.append(f"{head}X" if e == 1 else f"{head}X^{e}")
        return " + ".join(terms) if terms else "0"

    @property
    def exponents(self) -> list[int]:
        return [self.base_q**i for i in range(len(self.coeffs)) if self.coeffs[i]]

    def evaluate(self, K: FqField, z: Sequence[int]) -> tuple[int, ...]:
        if K.p != self.base_q:
            raise ValueError("evaluation field has the wrong characteristic")
        acc = K.zero
        zpow = tuple(z)
        for i, c in enumerate(self.coeffs):
            if i > 0:
                zpow = K.pow(zpow, self.base_q)
            if c:
                acc = K.add(acc, K.scale(zpow, c))
        return acc


def linearized_from_minpoly(f: Sequence[int], q: int) -> LinearizedPoly:
    """Companion of a monic irreducible f = sum(c_i x**i) over F_q: the
    linearized polynomial sum(c_i X**(q**i)), whose roots form an F_q-space
    on which Frobenius acts the way multiplication by a root of f acts."""
    if not _is_prime(q):
        raise ValueError("only prime q is supported at desk scale")
    coeffs = gf_trim([c % q for c in f])
    if not coeffs or coeffs[-1] != 1:
        raise ValueError("f must be monic")
    if not _is_irreducible_mod_p(coeffs, q):
        raise ValueError(f"f = {_poly_str(coeffs)} is reducible mod {q}")
    if coeffs == [0, 1]:
        # Kernel is {0}; return the separable polynomial with that root set.
        return LinearizedPoly(base_q=q, coeffs=(1,))
    return LinearizedPoly(base_q=q, coeffs=tuple(coeffs))


def fp_rank(rows: Sequence[Sequence[int]], p: int) -> int:
    """Rank over F_p by Gaussian elimination on integer coordinate rows."""
    basis: list[list[int]] = []
    pivots: list[int] = []
    for row in rows:
        work = [c % p for c in row]
        for b, j in zip(basis, pivots):
            if work[j]:
                c = work[j]
                work = [(x - c * y) % p for x, y in zip(work, b)]
        lead = next((j for j, c in enumerate(work) if c), None)
        if lead is None:
            continue
        inv = pow(work[lead], -1, p)
        basis.append([(x * inv) % p for x in work])
        pivots.append(lead)
    return len(basis)


def frobenius_orbit(K: FqField, a: Sequence[int], q: int | None = None) -> list[tuple[int, ...]]:
    """Orbit of a under z -> z**q (default q = char), in iteration order."""
    q = K.p if q is None else q
    orbit = [tuple(a)]
    z = K.pow(a, q)
    while z != orbit[0]:
        orbit.append(z)
        z = K.pow(z, q)
    return orbit


def element_minpoly(K: FqField, a: Sequence[int]) -> list[int]:
    """Minimal polynomial of a over the prime field, as ascending ints.

    Computed as the product of (t - b) over the Frobenius orbit of a; the
    coefficients land in F_p because the orbit is Frobenius-stable.
    """
    orbit = frobenius_orbit(K, a)
    poly: list[tuple[int, ...]] = [K.one]
    for b in orbit:
        nb = K.neg(b)
        nxt: list[tuple[int, ...]] = [K.zero] * (len(poly) + 1)
        for i, c in enumerate(poly):
            nxt[i + 1] = K.add(nxt[i + 1], c)
            nxt[i] = K.add(nxt[i], K.mul(c, nb))
        poly = nxt
    out = []
    for c in poly:
        if any(c[1:]):
            raise ArithmeticError("orbit product has a non-constant coefficient")
        out.append(c[0])
    return out


def _kernel_vector(L: LinearizedPoly, K: FqField) -> tuple[int, ...] | None:
    """Deterministic nonzero solution of L(z) = 0 in K via linear algebra
    over the prime field (L is F_p-linear), or None if the kernel is {0}."""
    d, p = K.k, K.p
    cols = []
    for j in range(d):
        basis_el = tuple(1 if i == j else 0 for i in range(d))
        cols.append(L.evaluate(K, basis_el))
    rows = [[cols[j][i] for j in range(d)] for i in range(d)]
    # Reduced echelon with pivot bookkeeping, then back-substitute the first
    # free coordinate set to 1.
    pivots: list[int] = []
    reduced: list[list[int]] = []
    for row in rows:
        work = list(row)
        for b, j in zip(reduced, pivots):
            if work[j]:
                c = work[j]
                work = [(x - c * y) % p for x, y in zip(work, b)]
        lead = next((j for j, c in enumerate(work) if c), None)
        if lead is None:
            continue
        inv = pow(work[lead], -1, p)
        work = [(x * inv) % p for x in work]
        for b in reduced:
            if b[lead]:
                c = b[lead]
                for j in range(d):
                    b[j] = (b[j] - c * work[j]) % p
        reduced.append(work)
        pivots.append(lead)
    free = next((j for j in range(d) if j not in pivots), None)
    if free is None:
        return None
    vec = [0] * d
    vec[free] = 1
    for b, j in zip(reduced, pivots):
        vec[j] = (-b[free]) % p
    return tuple(vec)


def _first_root(L: LinearizedPoly, K: FqField) -> tuple[int, ...]:
    """First nonzero root of L in K.  Small fields are scanned exhaustively
    in encoding order; larger ones fall back to a kernel computation."""
    if K.size <= _SCAN_CAP:
        for e in range(1, K.size):
            z = K.decode(e)
            if L.evaluate(K, z) == K.zero:
                return z
        raise ArithmeticError("linearized polynomial has no nonzero root here")
    vec = _kernel_vector(L, K)
    if vec is None:
        raise ArithmeticError("linearized polynomial has no nonzero root here")
    return vec


def verify_Dqn(q: int, n: int) -> dict:
    """Exhibit and check an element of degree q**n - 1 over F_q whose
    Frobenius orbit spans an n-dimensional F_q-space.

    Builds a multiplicative generator g of F_{q^n}, its degree-n minimal
    polynomial f over F_q, the linearized companion L of f, and a nonzero
    root alpha of L in F_{q^d} with d = q**n - 1.  Verifies by direct
    computation that (a) the Frobenius orbit of alpha has exactly q**n - 1
    elements and (b) the orbit's F_q-span has dimension exactly n.
    """
    if not _is_prime(q):
        raise ValueError("only prime q is supported at desk scale")
    if n < 1:
        raise ValueError("n must be positive")
    d = q**n - 1
    if q**d > SIZE_CAP:
        raise ValueError(f"cap exceeded: need F_{q}^{d} with {q}^{d} > 2^32")

    Kn = ff_make(q, n)
    g = multiplicative_generator(Kn)
    f = element_minpoly(Kn, g)
    if gf_deg(f) != n:
        raise ArithmeticError("generator unexpectedly has degree below n")
    L = linearized_from_minpoly(f, q)

    Kd = ff_make(q, d)
    alpha = _first_root(L, Kd)
    if L.evaluate(Kd, alpha) != Kd.zero:
        raise ArithmeticError("selected element is not a root")

    orbit = frobenius_orbit(Kd, alpha, q)
    degree = len(orbit)
    dimension = fp_rank(orbit, q)
    return {
        "q": q,
        "n": n,
        "expected_degree": d,
        "degree": degree,
        "dimension": dimension,
        "modulus": _poly_str(list(Kd.modulus)),
        "field": f"F_{q}^{d}",
        "generator_minpoly": f,
        "linearized": str(L),
        "alpha": list(alpha),
        "orbit": [list(z) for z in orbit],
        "pass": degree == d and dimension == n,
    }


def upper_bound_scan(q: int, n: int, m_max: int) -> dict:
    """Brute-force check that no element of F_{q^m}, m <= m_max, has
    Frobenius-span dimension <= n while its degree exceeds q**n - 1."""
    if not _is_prime(q):
        raise ValueError("only prime q is supported at desk scale")
    if q**m_max > _SCAN_CAP:
        raise ValueError("scan cap exceeded")
    bound = q**n - 1
    checked = 0
    max_degree_within = 0
    violations = []
    for m in range(1, m_max + 1):
        K = ff_make(q, m)
        for z in K.elements():
            checked += 1
            orbit = frobenius_orbit(K, z, q)
            degree = len(orbit)
            dim = fp_rank(orbit, q)
            if dim <= n:
                max_degree_within = max(max_degree_within, degree)
                if degree > bound:
                    violations.append({"m": m, "element": list(z), "degree": degree, "dimension": dim})
    return {
        "q": q,
        "n": n,
        "m_max": m_max,
        "degree_bound": bound,
        "elements_checked": checked,
        "max_degree_at_dimension_le_n": max_degree_within,
        "violations": violations,
        "pass": not violations,
    }


def subfield_elements(K: FqField, r: int) -> list[tuple[int, ...]]:
    """All z in K with z**(p**r) = z, i.e. the copy of F_{p^r} inside K.
    Exhaustive, so K must be small."""
    if K.k % r != 0:
        raise ValueError(f"F_{K.p}^{r} is not a subfield of F_{K.p}^{K.k}")
    if K.size > _SCAN_CAP:
        raise ValueError("scan cap exceeded")
    q = K.p**r
    return [z for z in K.elements() if K.pow(z, q) == z]


def linearized_poly_of_subspace(K: FqField, V: Sequence[Sequence[int]]) -> list[tuple[int, ...]]:
    """prod((X - v) for v in V) for an F_p-subspace V of K, returned as an
    ascending list of K-coefficients.  The product of linear factors over a
    subspace collapses so that only exponents p**0 .. p**dim(V) survive;
    that structure is verified before returning.
    """
    vset = {tuple(c % K.p for c in v) for v in V}
    r = fp_rank(sorted(vset), K.p)
    if len(vset) != K.p**r:
        raise ValueError("V is not an F_q-subspace")
    poly: list[tuple[int, ...]] = [K.one]
    for v in sorted(vset):
        nv = K.neg(v)
        nxt: list[tuple[int, ...]] = [K.zero] * (len(poly) + 1)
        for i, c in enumerate(poly):
            nxt[i + 1] = K.add(nxt[i + 1], c)
            nxt[i] = K.add(nxt[i], K.mul(c, nv))
        poly = nxt
    allowed = {K.p**i for i in range(r + 1)}
    for e, c in enumerate(poly):
        if c != K.zero and e not in allowed:
            raise ArithmeticError(
                f"subspace product has a stray term at exponent {e}"
            )
    return poly
