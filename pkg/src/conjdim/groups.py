"""Finite matrix groups over number fields: enumeration, orbits, invariance.

The default group action is on ROW vectors (v maps to v*g); polynomial
invariance means f((x_1,...,x_n)*g) = f(x). A column action is available for
fixed-point checks on column vectors.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .multipoly import MultiPoly
from .numberfield import NFElem, NumberField, QQ, cyclotomic_field
from .resultants import bareiss_det

ENUMERATION_CAP = 10 ** 7

Matrix = tuple[tuple[NFElem, ...], ...]
Vector = tuple[NFElem, ...]


def mat_from_rows(field: NumberField, rows: Sequence[Sequence]) -> Matrix:
    return tuple(tuple(field.elem(v) for v in row) for row in rows)


def mat_identity(field: NumberField, n: int) -> Matrix:
    return tuple(
        tuple(field.one if i == j else field.zero for j in range(n)) for i in range(n)
    )


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    n = len(a)
    m = len(b[0])
    inner = len(b)
    bt = tuple(tuple(b[k][j] for k in range(inner)) for j in range(m))
    out = []
    for i in range(n):
        arow = a[i]
        row = []
        for j in range(m):
            bcol = bt[j]
            acc = None
            for k in range(inner):
                e = arow[k]
                if e == 0:
                    continue
                term = e * bcol[k]
                acc = term if acc is None else acc + term
            row.append(acc if acc is not None else arow[0].field.zero)
        out.append(tuple(row))
    return tuple(out)


def row_action(v: Vector, g: Matrix) -> Vector:
    n = len(g)
    out = []
    for j in range(n):
        acc = None
        for i in range(n):
            e = v[i]
            if e == 0:
                continue
            term = e * g[i][j]
            acc = term if acc is None else acc + term
        out.append(acc if acc is not None else v[0].field.zero)
    return tuple(out)


def column_action(g: Matrix, v: Vector) -> Vector:
    n = len(g)
    out = []
    for i in range(n):
        acc = None
        for j in range(n):
            e = g[i][j]
            if e == 0:
                continue
            term = e * v[j]
            acc = term if acc is None else acc + term
        out.append(acc if acc is not None else v[0].field.zero)
    return tuple(out)


@dataclass
class Orbit:
    base_vector: Vector
    elements: list[Vector]
    transversal: list[Matrix]

    def __len__(self) -> int:
        return len(self.elements)


class MatGroup:
    """A finite matrix group given by generators, enumerated on demand."""

    def __init__(
        self,
        field: NumberField,
        generators: Sequence[Matrix],
        name: str = "",
        claimed_order: Optional[int] = None,
    ):
        if not generators:
            raise ValueError("need at least one generator")
        self.field = field
        self.dim = len(generators[0])
        for g in generators:
            if len(g) != self.dim or any(len(row) != self.dim for row in g):
                raise ValueError("generators must be square of equal dimension")
            if bareiss_det([list(row) for row in g]) == 0:
                raise ValueError("generator is singular")
        self.generators = tuple(generators)
        self.name = name
        self.claimed_order = claimed_order
        self._elements: Optional[list[Matrix]] = None

    def _coerce_vector(self, v: Sequence) -> Vector:
        return tuple(
            c if isinstance(c, NFElem) and c.field is self.field else self.field.elem(c)
            for c in v
        )

    def enumerate(self, cap: int = ENUMERATION_CAP) -> list[Matrix]:
        """All elements, in breadth-first discovery order from the identity."""
        if self._elements is not None:
            return self._elements
        ident = mat_identity(self.field, self.dim)
        seen = {ident}
        order_list = [ident]
        frontier = [ident]
        while frontier:
            new_frontier = []
            for e in frontier:
                for g in self.generators:
                    m = mat_mul(e, g)
                    if m not in seen:
                        seen.add(m)
                        order_list.append(m)
                        new_frontier.append(m)
                        if len(order_list) > cap:
                            raise RuntimeError(
                                f"group enumeration exceeded cap {cap}; infinite or wrong generators"
                            )
            frontier = new_frontier
        if self.claimed_order is not None and len(order_list) != self.claimed_order:
            raise ArithmeticError(
                f"{self.name or 'group'}: enumerated {len(order_list)} elements, "
                f"expected {self.claimed_order}"
            )
        self._elements = order_list
        return order_list

    def order(self) -> int:
        return len(self.enumerate())

    def orbit(self, v: Sequence, action: str = "row") -> Orbit:
        """Distinct images of v under the group, with a transversal."""
        base = self._coerce_vector(v)
        if all(c == 0 for c in base):
            raise ValueError("orbit of the zero vector is trivial; pass a nonzero vector")
        ident = mat_identity(self.field, self.dim)
        act = row_action if action == "row" else (lambda w, g: column_action(g, w))
        seen = {base}
        elements = [base]
        transversal = [ident]
        frontier = [(base, ident)]
        while frontier:
            nxt = []
            for w, t in frontier:
                for g in self.generators:
                    img = act(w, g)
                    if img not in seen:
                        witness = mat_mul(t, g) if action == "row" else mat_mul(g, t)
                        seen.add(img)
                        elements.append(img)
                        transversal.append(witness)
                        nxt.append((img, witness))
            frontier = nxt
        return Orbit(base_vector=base, elements=elements, transversal=transversal)

    def stabilizer_order(self, v: Sequence, action: str = "row") -> int:
        base = self._coerce_vector(v)
        count = 0
        for g in self.enumerate():
            img = row_action(base, g) if action == "row" else column_action(g, base)
            if img == base:
                count += 1
        return count

    def stabilizer_is_trivial(self, v: Sequence, action: str = "row") -> bool:
        return self.stabilizer_order(v, action) == 1

    def element_order(self, g: Matrix) -> int:
        ident = mat_identity(self.field, self.dim)
        m = g
        k = 1
        while m != ident:
            m = mat_mul(m, g)
            k += 1
            if self.claimed_order is not None and k > self.claimed_order:
                raise ArithmeticError("element order exceeds the group order")
        return k

    def regular_cycle_types(self) -> set[tuple[int, ...]]:
        """Cycle types of the regular permutation action: |G|/ord(g) cycles of length ord(g)."""
        n = self.order()
        types = set()
        for g in self.enumerate():
            m = self.element_order(g)
            types.add(tuple([m] * (n // m)))
        return types

    def is_invariant(self, f: MultiPoly) -> bool:
        """True iff f is fixed by the row action of every generator."""
        if len(f.vars) != self.dim:
            raise ValueError(f"polynomial has {len(f.vars)} variables, group dimension is {self.dim}")
        for g in self.generators:
            rows = [[g[i][j] for j in range(self.dim)] for i in range(self.dim)]
            if f.compose_matrix_rows(rows) != f:
                return False
        return True


# ---------------------------------------------------------------------------
# built-in groups


def _perm_generators(field: NumberField, n: int) -> list[Matrix]:
    gens = []
    if n >= 2:
        swap = [[0] * n for _ in range(n)]
        for i in range(n):
            swap[i][i] = 1
        swap[0][0] = swap[1][1] = 0
        swap[0][1] = swap[1][0] = 1
        gens.append(mat_from_rows(field, swap))
    if n >= 3:
        cyc = [[0] * n for _ in range(n)]
        for i in range(n):
            cyc[i][(i + 1) % n] = 1
        gens.append(mat_from_rows(field, cyc))
    return gens


def _diag_first(field: NumberField, n: int, value) -> Matrix:
    rows = [[0] * n for _ in range(n)]
    for i in range(n):
        rows[i][i] = 1
    rows[0][0] = value
    return mat_from_rows(field, rows)


def signed_permutation_group(n: int) -> MatGroup:
    """All n x n signed permutation matrices; order 2^n * n!."""
    import math

    gens = _perm_generators(QQ, n)
    gens.append(_diag_first(QQ, n, -1))
    return MatGroup(QQ, gens, name=f"B_{n}", claimed_order=2 ** n * math.factorial(n))


def dihedral_g2_group() -> MatGroup:
    gens = [
        mat_from_rows(QQ, [[0, -1], [1, 1]]),
        mat_from_rows(QQ, [[0, 1], [1, 0]]),
    ]
    return MatGroup(QQ, gens, name="G2", claimed_order=12)


def f4_reflection_group() -> MatGroup:
    half = Fraction(1, 2)
    extra = mat_from_rows(
        QQ,
        [
            [half, half, half, half],
            [half, -half, half, -half],
            [half, half, -half, -half],
            [half, -half, -half, half],
        ],
    )
    gens = list(signed_permutation_group(4).generators) + [extra]
    return MatGroup(QQ, gens, name="F4", claimed_order=1152)


def st8_group() -> MatGroup:
    """Order-96 unitary reflection group over Q(i), presented for the row action.

    The generator pair is written so that the group's degree-8 and degree-12
    invariants are fixed by the row action x -> x*g used throughout this
    package (the first generator is symmetric; the second is the transpose of
    the column-action form).
    """
    K = cyclotomic_field(4)
    i = K.gen
    gens = [
        mat_from_rows(K, [[0, 1], [1, i]]),
        mat_from_rows(K, [[0, -i], [1, 0]]),
    ]
    return MatGroup(K, gens, name="ST8", claimed_order=96)


def monomial_group(l: int, n: int) -> MatGroup:
    """G(l,1,n): n x n monomial matrices with l-th-root-of-unity entries."""
    import math

    if l < 1 or n < 1:
        raise ValueError("need l >= 1 and n >= 1")
    K = cyclotomic_field(l)
    if l == 1:
        omega = K.one
    elif l == 2:
        omega = -K.one
    else:
        omega = K.gen
    gens = _perm_generators(K, n)
    if l > 1 or not gens:
        gens.append(_diag_first(K, n, omega))
    return MatGroup(K, gens, name=f"G({l},1,{n})", claimed_order=l ** n * math.factorial(n))


def builtin_group(name: str, **params) -> MatGroup:
    """Look up a built-in group by name.

    Names: "B_n" (param n), "G2", "F4", "ST8", "G(l,1,n)" (params l, n).
    """
    key = name.replace(" ", "")
    if key in ("G2", "W(G2)"):
        return dihedral_g2_group()
    if key in ("F4", "W(F4)"):
        return f4_reflection_group()
    if key == "ST8":
        return st8_group()
    if key.startswith("B_") or key == "B_n":
        n = params.get("n")
        if n is None and key != "B_n":
            n = int(key[2:])
        if n is None:
            raise ValueError("B_n needs parameter n")
        return signed_permutation_group(int(n))
    if key.startswith("G(") or key == "G(l,1,n)":
        l = params.get("l")
        n = params.get("n")
        if (l is None or n is None) and key not in ("G(l,1,n)",):
            inner = key[2:-1].split(",")
            if len(inner) == 3:
                l = int(inner[0]) if l is None else l
                n = int(inner[2]) if n is None else n
        if l is None or n is None:
            raise ValueError("G(l,1,n) needs parameters l and n")
        return monomial_group(int(l), int(n))
    raise ValueError(f"unknown group name: {name}")
