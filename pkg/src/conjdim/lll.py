"""Exact integer lattice tools: LLL reduction and Hermite normal form.

The LLL implementation is the all-integer variant: it maintains the leading
principal minors d_k of the Gram matrix and the scaled Gram-Schmidt
coefficients lam[i][j] = d_{j+1} * mu_{i,j}, so no rationals appear.  The
Lovasz condition with delta = dn/dd is tested as

    dd * (d[k+1] * d[k-1] + lam[k][k-1]^2) < dn * d[k]^2.

Row vectors must be linearly independent over Q.
"""

from __future__ import annotations

from typing import Sequence


def _dot(u: Sequence[int], v: Sequence[int]) -> int:
    return sum(x * y for x, y in zip(u, v))


def lll_reduce(rows: Sequence[Sequence[int]], delta=(99, 100)) -> list[list[int]]:
    """LLL-reduced basis of the lattice spanned by independent integer rows."""
    b = [list(map(int, row)) for row in rows]
    n = len(b)
    if n <= 1:
        return b
    dn, dd = delta
    d = [0] * (n + 1)
    d[0] = 1
    lam = [[0] * n for _ in range(n)]

    def red(k: int, l: int) -> None:
        if 2 * abs(lam[k][l]) > d[l + 1]:
            q = (2 * lam[k][l] + d[l + 1]) // (2 * d[l + 1])
            if q:
                bl = b[l]
                bk = b[k]
                for t in range(len(bk)):
                    bk[t] -= q * bl[t]
                lam[k][l] -= q * d[l + 1]
                for i in range(l):
                    lam[k][i] -= q * lam[l][i]

    def swap(k: int, kmax: int) -> None:
        b[k], b[k - 1] = b[k - 1], b[k]
        for j in range(k - 1):
            lam[k][j], lam[k - 1][j] = lam[k - 1][j], lam[k][j]
        lam_ = lam[k][k - 1]
        newd = (d[k - 1] * d[k + 1] + lam_ * lam_) // d[k]
        for i in range(k + 1, kmax + 1):
            t = lam[i][k]
            lam[i][k] = (d[k + 1] * lam[i][k - 1] - lam_ * t) // d[k]
            lam[i][k - 1] = (newd * t + lam_ * lam[i][k]) // d[k + 1]
        d[k] = newd

    d[1] = _dot(b[0], b[0])
    if d[1] == 0:
        raise ValueError("zero row in lattice basis")
    k = 1
    kmax = 0
    while k < n:
        if k > kmax:
            kmax = k
            for j in range(k + 1):
                u = _dot(b[k], b[j])
                for i in range(j):
                    u = (d[i + 1] * u - lam[k][i] * lam[j][i]) // d[i]
                if j < k:
                    lam[k][j] = u
                else:
                    d[k + 1] = u
            if d[k + 1] == 0:
                raise ValueError("rows are linearly dependent")
        while True:
            red(k, k - 1)
            if dd * (d[k + 1] * d[k - 1] + lam[k][k - 1] ** 2) < dn * d[k] ** 2:
                swap(k, kmax)
                k = max(1, k - 1)
            else:
                for l in range(k - 2, -1, -1):
                    red(k, l)
                k += 1
                break
    return b


def hermite_normal_form(rows: Sequence[Sequence[int]]) -> list[list[int]]:
    """Canonical row Hermite normal form of the row span.

    Returns echelon rows with positive pivots, entries above each pivot
    reduced into [0, pivot), zero rows dropped.  Two integer matrices have
    the same row span over Z exactly when their forms coincide.
    """
    work = [list(map(int, r)) for r in rows if any(r)]
    if not work:
        return []
    ncols = len(work[0])
    out: list[list[int]] = []
    for col in range(ncols):
        if not work:
            break
        # Euclid within the column until a single row carries it
        while True:
            nz = sorted((r for r in work if r[col] != 0), key=lambda r: abs(r[col]))
            if len(nz) <= 1:
                break
            piv = nz[0]
            for r in nz[1:]:
                q = r[col] // piv[col]
                for t in range(ncols):
                    r[t] -= q * piv[t]
            work = [r for r in work if any(r)]
        nz = [r for r in work if r[col] != 0]
        if not nz:
            continue
        piv = nz[0]
        work = [r for r in work if r is not piv]
        if piv[col] < 0:
            piv = [-x for x in piv]
        out.append(piv)
    # reduce entries above each pivot into [0, pivot); left-to-right so that
    # a reduction never disturbs an already-normalized earlier pivot column
    for i in range(len(out)):
        pcol = next(j for j, x in enumerate(out[i]) if x != 0)
        p = out[i][pcol]
        for k in range(i):
            q = out[k][pcol] // p
            if q:
                for t in range(ncols):
                    out[k][t] -= q * out[i][t]
    return out
