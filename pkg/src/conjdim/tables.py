"""Bounds on the degree of an algebraic number with prescribed span.

Hard-coded maximal orders of finite subgroups of GL_n over Q and over the
cyclotomic fields Q(w_l) for even l >= 4, together with the generic formulas
they deviate from.  These values rest on the classification of finite simple
groups (Feit's tables) and are treated as frozen reference data: the ratio
column is retained so the entries can self-check against the generic
formula, and the small groups are cross-checked by direct enumeration in the
test suite.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial

TABLE_SOURCE = "Feit/Table 1"

# n -> (ratio to 2^n n!, realizing group, order)
GLNQ_EXCEPTIONS: dict[int, tuple[Fraction, str, int]] = {
    2: (Fraction(3, 2), "W(G2)", 12),
    4: (Fraction(3), "W(F4)", 1152),
    6: (Fraction(9, 4), "<W(E6), -I>", 103680),
    7: (Fraction(9, 2), "W(E7)", 2903040),
    8: (Fraction(135, 2), "W(E8)", 696729600),
    9: (Fraction(15, 2), "W(E8) x W(A1)", 1393459200),
    10: (Fraction(9, 4), "W(E8) x W(G2)", 8360755200),
}

# (n, l) -> (ratio to l^n n!, realizing group, order)
CYCLOTOMIC_EXCEPTIONS: dict[tuple[int, int], tuple[Fraction, str, int]] = {
    (2, 4): (Fraction(3), "ST8", 96),
    (2, 8): (Fraction(3, 2), "ST9", 192),
    (2, 10): (Fraction(3), "ST16", 600),
    (2, 20): (Fraction(3, 2), "ST17", 1200),
    (4, 4): (Fraction(15, 2), "ST31", 46080),
    (4, 6): (Fraction(5), "ST32", 155520),
    (4, 10): (Fraction(3), "ST16 wr S2", 720000),
    (5, 4): (Fraction(3, 2), "ST31 x <w4*I>", 184320),
    (6, 6): (Fraction(7, 6), "ST34", 39191040),
    (6, 10): (Fraction(9, 5), "ST16 wr S3", 1296000000),
    (8, 4): (Fraction(45, 28), "ST31 wr S2", 4246732800),
}


def d_max(n: int) -> int:
    """Largest possible degree of an algebraic number whose conjugates span
    a Q-vector space of dimension n."""
    if n < 0:
        raise ValueError("dimension must be nonnegative")
    if n in GLNQ_EXCEPTIONS:
        return GLNQ_EXCEPTIONS[n][2]
    return 2**n * factorial(n)


def d_max_row(n: int) -> dict:
    """Full table row for dimension n over Q."""
    generic = 2**n * factorial(n)
    if n in GLNQ_EXCEPTIONS:
        ratio, group, order = GLNQ_EXCEPTIONS[n]
        return {"n": n, "bound": order, "group": group, "ratio": str(ratio)}
    return {"n": n, "bound": generic, "group": "W(B_n)", "ratio": "1"}


def D_cyc(l: int, n: int) -> int:
    """Largest degree over Q(w_l), l even and >= 4, for span dimension n."""
    if l < 4 or l % 2 != 0:
        raise ValueError("the cyclotomic table needs an even order l >= 4")
    if n < 0:
        raise ValueError("dimension must be nonnegative")
    if (n, l) in CYCLOTOMIC_EXCEPTIONS:
        return CYCLOTOMIC_EXCEPTIONS[(n, l)][2]
    return l**n * factorial(n)


def D_cyc_row(l: int, n: int) -> dict:
    generic = l**n * factorial(n)
    if (n, l) in CYCLOTOMIC_EXCEPTIONS:
        ratio, group, order = CYCLOTOMIC_EXCEPTIONS[(n, l)]
        return {"n": n, "l": l, "bound": order, "group": group, "ratio": str(ratio)}
    return {"n": n, "l": l, "bound": generic, "group": "ST2(l,1,n)", "ratio": "1"}


def is_prime_power(q: int) -> bool:
    if q < 2:
        return False
    p = 2
    while p * p <= q:
        if q % p == 0:
            while q % p == 0:
                q //= p
            return q == 1
        p += 1
    return True


def D_finite(q: int, n: int) -> int:
    """Largest degree over the field of q elements for span dimension n."""
    if not is_prime_power(q):
        raise ValueError(f"{q} is not a prime power")
    if n < 0:
        raise ValueError("dimension must be nonnegative")
    return q**n - 1


def check_bounds(n: int, d: int, base: str = "Q") -> str:
    """Verdict on whether degree d is admissible for span dimension n.

    base is "Q", "cyc:<l>", or "fq:<q>".  Returns "OK", "ViolatesLower"
    (d < n), or "ViolatesUpper" (d over the table bound).
    """
    if n < 0 or d < 0:
        raise ValueError("dimension and degree must be nonnegative")
    if base in ("Q", "q"):
        upper = d_max(n)
    elif base.startswith("cyc:"):
        upper = D_cyc(int(base.split(":", 1)[1]), n)
    elif base.startswith("fq:"):
        upper = D_finite(int(base.split(":", 1)[1]), n)
    else:
        raise ValueError(f"unknown base field spec {base!r}")
    if d < n:
        return "ViolatesLower"
    if d > upper:
        return "ViolatesUpper"
    return "OK"


def table_json(base: str = "Q", n_max: int = 10) -> dict:
    """Table rows for the CLI, with the provenance of the frozen data."""
    if base in ("Q", "q"):
        rows = [d_max_row(n) for n in range(1, n_max + 1)]
        label = "Q"
    elif base.startswith("cyc:"):
        l = int(base.split(":", 1)[1])
        rows = [D_cyc_row(l, n) for n in range(1, n_max + 1)]
        label = f"Q(w_{l})"
    elif base.startswith("fq:"):
        q = int(base.split(":", 1)[1])
        rows = [{"n": n, "bound": D_finite(q, n)} for n in range(1, n_max + 1)]
        label = f"F_{q}"
    else:
        raise ValueError(f"unknown base field spec {base!r}")
    return {"base": label, "rows": rows, "source": TABLE_SOURCE}
