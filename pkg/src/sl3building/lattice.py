"""Rank-3 lattices over Z_(p) and their homothety classes.

A lattice is given by a nonsingular basis matrix whose columns span it over
O.  Its class (a vertex of the building) is stored through a canonical
representative: the column Hermite form of the unique lattice in the class
whose determinant has valuation 0, 1 or 2.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Tuple

from . import matrix as mx
from .dvr import DVRContext
from .matrix import Matrix


@dataclass(frozen=True)
class ElementaryDivisors:
    a: int
    b: int

    def __post_init__(self):
        if not self.a >= self.b >= 0:
            raise ValueError(f"need a >= b >= 0, got {self.a}, {self.b}")


@dataclass(frozen=True)
class LatticeClass:
    """A vertex: homothety class of lattices, keyed by its canonical basis."""

    canon: Matrix
    ctx: DVRContext
    det_valuation_mod3: int

    def __repr__(self):
        return f"LatticeClass({mx.format_matrix_inline(self.canon)})"


def _min_valuation(A: Matrix, ctx: DVRContext):
    return min(ctx.valuation(x) for x in mx.entries(A))


def contains(L: Matrix, M: Matrix, ctx: DVRContext) -> bool:
    """True iff the O-span of M's columns lies in the O-span of L's."""
    return all(ctx.is_integral(x) for x in mx.entries(mx.mul(mx.inverse(L), M)))


def same_lattice(L: Matrix, M: Matrix, ctx: DVRContext) -> bool:
    return contains(L, M, ctx) and contains(M, L, ctx)


def hermite_form(B: Matrix, ctx: DVRContext) -> Matrix:
    """Column Hermite form of a nonsingular basis over O.

    Lower triangular, diagonal entries p^(a_i), entries left of each pivot
    reduced by ``ctx.reduce_mod_power`` modulo that pivot.
    """
    if mx.det(B) == 0:
        raise ValueError("singular matrix")
    A = [list(row) for row in B]

    def col_axpy(dst, src, c):
        for r in range(3):
            A[r][dst] -= c * A[r][src]

    for i in range(3):
        j = min(range(i, 3), key=lambda j: (ctx.valuation(A[i][j]), j))
        if j != i:
            for r in range(3):
                A[r][i], A[r][j] = A[r][j], A[r][i]
        v = ctx.valuation(A[i][i])
        u = A[i][i] / ctx.power(v)
        for r in range(3):
            A[r][i] /= u
        for j in range(i + 1, 3):
            if A[i][j]:
                col_axpy(j, i, A[i][j] / A[i][i])

    for i in range(1, 3):
        a = ctx.valuation(A[i][i])
        for j in range(i):
            x = A[i][j]
            r = ctx.reduce_mod_power(x, a)
            if x != r:
                col_axpy(j, i, (x - r) / A[i][i])
    return mx.matrix(A)


def canonical_class(basis, ctx: DVRContext) -> LatticeClass:
    B = mx.matrix(basis)
    d = mx.det(B)
    if d == 0:
        raise ValueError("singular matrix")
    shift = ctx.valuation(d) // 3
    H = hermite_form(mx.scale(B, ctx.power(-shift)), ctx)
    return LatticeClass(H, ctx, ctx.valuation(mx.det(H)))


def tight_fit(L: Matrix, M: Matrix, ctx: DVRContext) -> Tuple[int, Matrix]:
    """Return (n, p^n M) with p^n M inside L but not inside pL."""
    n = -_min_valuation(mx.mul(mx.inverse(L), M), ctx)
    return n, mx.scale(M, ctx.power(n))


def smith_form(X: Matrix, ctx: DVRContext) -> Tuple[Matrix, List[int], Matrix]:
    """Smith form over O: returns (U, exps, V) with U X V = diag(p^exps).

    U, V lie in GL3(O); exps is nondecreasing.  The pivot at each stage is
    the entry of least valuation, ties broken by row then column.
    """
    A = [list(row) for row in X]
    U = [list(row) for row in mx.identity()]
    V = [list(row) for row in mx.identity()]
    exps = []
    for k in range(3):
        cells = [(ctx.valuation(A[i][j]), i, j)
                 for i in range(k, 3) for j in range(k, 3)]
        v, i, j = min(cells)
        if v == float("inf"):
            raise ValueError("singular matrix")
        A[k], A[i] = A[i], A[k]
        U[k], U[i] = U[i], U[k]
        for M_ in (A, V):
            for r in range(3):
                M_[r][k], M_[r][j] = M_[r][j], M_[r][k]
        u = A[k][k] / ctx.power(v)
        A[k] = [x / u for x in A[k]]
        U[k] = [x / u for x in U[k]]
        for i in range(k + 1, 3):
            f = A[i][k] / A[k][k]
            if f:
                A[i] = [x - f * y for x, y in zip(A[i], A[k])]
                U[i] = [x - f * y for x, y in zip(U[i], U[k])]
        for j in range(k + 1, 3):
            f = A[k][j] / A[k][k]
            if f:
                for M_ in (A, V):
                    for r in range(3):
                        M_[r][j] -= f * M_[r][k]
        exps.append(v)
    return mx.matrix(U), exps, mx.matrix(V)


_REVERSE = mx.matrix([[0, 0, 1], [0, 1, 0], [1, 0, 0]])


def adapted_bases(L: Matrix, M: Matrix,
                  ctx: DVRContext) -> Tuple[Matrix, ElementaryDivisors]:
    """Basis E of L with (p^a e1, p^b e2, e3) a basis of M.

    M must be tight-fitting within L.
    """
    X = mx.mul(mx.inverse(L), M)
    if not all(ctx.is_integral(x) for x in mx.entries(X)) or _min_valuation(X, ctx) != 0:
        raise ValueError("not tight-fitting")
    U, exps, _ = smith_form(X, ctx)
    # reorder diag(1, p^b, p^a) to diag(p^a, p^b, 1)
    E = mx.mul(L, mx.inverse(mx.mul(_REVERSE, U)))
    return E, ElementaryDivisors(exps[2], exps[1])


def distance(c1: LatticeClass, c2: LatticeClass) -> int:
    ctx = c1.ctx
    if c1 == c2:
        return 0
    _, M = tight_fit(c1.canon, c2.canon, ctx)
    return adapted_bases(c1.canon, M, ctx)[1].a


def vertex_type(c: LatticeClass) -> int:
    return c.det_valuation_mod3


def adapted_lattice(E: Matrix, exps, ctx: DVRContext) -> Matrix:
    """Basis E * diag(p^exps)."""
    return mx.mul(E, mx.diag(*(ctx.power(e) for e in exps)))
