"""Invariant polynomial systems for the built-in matrix groups.

Each system packages a group, an ordered list of invariant polynomials, and
their degrees. The degree product equals the group order for every system
here, which is what makes the elimination construction produce an auxiliary
polynomial of the full orbit degree.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from .groups import MatGroup, dihedral_g2_group, f4_reflection_group, monomial_group, st8_group
from .multipoly import MultiPoly
from .numberfield import QQ, cyclotomic_field
from .symmetric import elem_symm_lpowers as _elem_symm_lpower_polys
from .symmetric import newton_reduce


@dataclass
class InvariantSystem:
    group: MatGroup
    polys: list[MultiPoly]
    degrees: list[int]
    # Signs translating weights on the published basis zeros into weights on
    # the raw solution-set coordinates (basis zero i = basis_signs[i] * x_i at
    # an aligned solution point). None means all +1.
    basis_signs: tuple[int, ...] | None = None
    # Set to l for the monomial-group systems (elementary symmetric functions
    # of x_i^l); enables the closed-form elimination in any variable count.
    symmetric_power: int | None = None

    def degree_product(self) -> int:
        out = 1
        for d in self.degrees:
            out *= d
        return out

    def check_invariance(self) -> bool:
        return all(self.group.is_invariant(f) for f in self.polys)


def elem_symm_lpowers(n: int, l: int) -> InvariantSystem:
    """Elementary symmetric functions of x_i^l: the invariants of G(l,1,n)."""
    group = monomial_group(l, n)
    polys = _elem_symm_lpower_polys(n, l, field=group.field)
    degrees = [l * j for j in range(1, n + 1)]
    return InvariantSystem(
        group=group, polys=polys, degrees=degrees, symmetric_power=l
    )


def g2_invariants() -> InvariantSystem:
    group = dihedral_g2_group()
    x1, x2 = MultiPoly.gens(QQ, ("x1", "x2"))
    i1 = x1 ** 2 - x1 * x2 + x2 ** 2
    i2 = (x1 * x2 * (x1 - x2)) ** 2
    # On the curve x1^2 - x1*x2 + x2^2 = 0 the aligned solution point has
    # x2 = -w3*x1 (w3 a primitive cube root of unity), while the published
    # basis pairs the first zero with +w3 times itself; hence the sign flip
    # on the second coordinate.
    return InvariantSystem(
        group=group, polys=[i1, i2], degrees=[2, 6], basis_signs=(1, -1)
    )


# frozen reduced forms of the degree-2k invariants in the power sums
# s_2, s_4, s_6, s_8 of the squared coordinates (regression oracle)
_F4_REDUCED_TERMS: dict[int, list[tuple[tuple[int, int, int, int], Fraction]]] = {
    1: [((1, 0, 0, 0), Fraction(6))],
    3: [((0, 0, 1, 0), Fraction(-24)), ((1, 1, 0, 0), Fraction(30))],
    4: [
        ((0, 0, 0, 1), Fraction(-120)),
        ((1, 0, 1, 0), Fraction(56)),
        ((0, 2, 0, 0), Fraction(70)),
    ],
    6: [
        ((0, 1, 0, 1), Fraction(-540)),
        ((0, 0, 2, 0), Fraction(244)),
        ((2, 0, 0, 1), Fraction(-1365)),
        ((2, 2, 0, 0), Fraction(1365, 2)),
        ((0, 3, 0, 0), Fraction(255)),
        ((4, 1, 0, 0), Fraction(-710)),
        ((3, 0, 1, 0), Fraction(1250)),
        ((6, 0, 0, 0), Fraction(159, 2)),
        ((1, 1, 1, 0), Fraction(110)),
    ],
}

_F4_KS = (1, 3, 4, 6)
_F4_PVARS = ("p1", "p2", "p3", "p4")


def f4_defining_powersum_form(k: int) -> MultiPoly:
    """The degree-2k invariant in power-sum variables before reduction.

    Variable p_m stands for the power sum of the squared coordinates of
    exponent m (a polynomial of degree 2m in the coordinates). The defining
    combination is (8 - 2^(2k-1)) p_k + sum_j C(2k,2j) p_j p_{k-j}.
    """
    gens = MultiPoly.gens(QQ, tuple(f"p{i}" for i in range(1, k + 1)))
    acc = gens[k - 1] * (8 - 2 ** (2 * k - 1))
    for j in range(1, k):
        acc = acc + gens[j - 1] * gens[k - j - 1] * comb(2 * k, 2 * j)
    return acc


def f4_reduced_powersum_forms() -> dict[int, MultiPoly]:
    """Newton-reduce the defining forms to p1..p4 and check the frozen oracle."""
    out: dict[int, MultiPoly] = {}
    for k in _F4_KS:
        reduced = newton_reduce(f4_defining_powersum_form(k), 4)
        frozen = MultiPoly(QQ, _F4_PVARS, {e: QQ.elem(c) for e, c in _F4_REDUCED_TERMS[k]})
        if reduced != frozen:
            raise ArithmeticError(
                f"degree-{2 * k} invariant reduction drifted from the frozen form: "
                f"{reduced.text()}"
            )
        out[k] = reduced
    return out


def f4_invariants() -> InvariantSystem:
    """The four invariants of the 1152-element reflection group, rederived.

    Built from the defining power-sum formula, reduced via Newton identities
    (guarded by the frozen printed forms), then expanded into the four
    coordinates by substituting each p_m with x1^2m + ... + x4^2m.
    """
    group = f4_reflection_group()
    reduced = f4_reduced_powersum_forms()
    xvars = tuple(f"x{i}" for i in range(1, 5))
    xgens = MultiPoly.gens(QQ, xvars)
    images = {}
    for m in range(1, 5):
        s = MultiPoly.zero(QQ, xvars)
        for g in xgens:
            s = s + g ** (2 * m)
        images[f"p{m}"] = s
    polys = [reduced[k].substitute(images) for k in _F4_KS]
    return InvariantSystem(group=group, polys=polys, degrees=[2, 6, 8, 12])


def st8_invariants() -> InvariantSystem:
    """The two explicit invariants of the order-96 unitary reflection group."""
    group = st8_group()
    K = group.field
    i = K.gen
    one = K.one
    x1, x2 = MultiPoly.gens(K, ("x1", "x2"))

    def trm(c, a, b):
        return (x1 ** a) * (x2 ** b) * c

    i8 = (
        trm(one, 8, 0)
        + trm((one + i) * 4, 7, 1)
        + trm(i * 14, 6, 2)
        - trm((one - i) * 14, 5, 3)
        - trm(K.elem(21), 4, 4)
        - trm((one + i) * 14, 3, 5)
        - trm(i * 14, 2, 6)
        + trm((one - i) * 4, 1, 7)
        + trm(one, 0, 8)
    )
    i12 = (
        trm(K.elem(2), 12, 0)
        + trm((one + i) * 12, 11, 1)
        + trm(i * 66, 10, 2)
        - trm((one - i) * 110, 9, 3)
        - trm(K.elem(231), 8, 4)
        - trm((one + i) * 132, 7, 5)
        - trm((one - i) * 132, 5, 7)
        - trm(K.elem(231), 4, 8)
        - trm((one + i) * 110, 3, 9)
        - trm(i * 66, 2, 10)
        + trm((one - i) * 12, 1, 11)
        + trm(K.elem(2), 0, 12)
    )
    return InvariantSystem(group=group, polys=[i8, i12], degrees=[8, 12])


def invariant_system(name: str, **params) -> InvariantSystem:
    """Look up an invariant system by group name."""
    key = name.replace(" ", "")
    if key in ("G2", "W(G2)"):
        return g2_invariants()
    if key in ("F4", "W(F4)"):
        return f4_invariants()
    if key == "ST8":
        return st8_invariants()
    if key.startswith("B_"):
        n = params.get("n") or int(key[2:])
        return elem_symm_lpowers(int(n), 2)
    if key.startswith("G("):
        inner = key[2:-1].split(",")
        l = params.get("l") or int(inner[0])
        n = params.get("n") or int(inner[2])
        return elem_symm_lpowers(int(n), int(l))
    raise ValueError(f"no invariant system for: {name}")
