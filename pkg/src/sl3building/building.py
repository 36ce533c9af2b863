"""Local structure of the building: edges, orientation, stars, paths.

Neighbours and faces at a vertex come from subspaces and flags of
L/pL ~= F_p^3, where L is the canonical representative of the vertex.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import List, NamedTuple, Sequence, Tuple

from . import matrix as mx
from .dvr import DVRContext
from .lattice import (LatticeClass, adapted_bases, adapted_lattice,
                      canonical_class, contains, distance, tight_fit,
                      vertex_type)
from .matrix import Matrix

Vector = Tuple[int, ...]


# -- residue subspaces -------------------------------------------------------

def rref_mod_p(rows: Sequence[Sequence[int]], p: int) -> Tuple[Vector, ...]:
    """Nonzero rows of the reduced row echelon form over F_p."""
    A = [[x % p for x in row] for row in rows]
    out = []
    ncols = len(A[0]) if A else 0
    for col in range(ncols):
        piv = next((i for i, r in enumerate(A) if r[col]), None)
        if piv is None:
            continue
        row = A.pop(piv)
        inv = pow(row[col], -1, p)
        row = [x * inv % p for x in row]
        A = [[(x - r[col] * y) % p for x, y in zip(r, row)] for r in A]
        out = [[(x - r[col] * y) % p for x, y in zip(r, row)] for r in out]
        out.append(row)
    return tuple(sorted((tuple(r) for r in out),
                        key=lambda r: next(i for i, x in enumerate(r) if x)))


@dataclass(frozen=True)
class ResidueSubspace:
    """Subspace of F_p^3 stored by its reduced echelon basis."""

    dim: int
    basis: Tuple[Vector, ...]
    p: int

    @classmethod
    def span(cls, vectors: Sequence[Sequence[int]], p: int) -> "ResidueSubspace":
        basis = rref_mod_p(vectors, p)
        return cls(len(basis), basis, p)

    def contains(self, vec: Sequence[int]) -> bool:
        return ResidueSubspace.span(list(self.basis) + [list(vec)], self.p).dim == self.dim

    def contains_subspace(self, other: "ResidueSubspace") -> bool:
        return all(self.contains(v) for v in other.basis)

    def pivots(self) -> List[int]:
        return [next(i for i, x in enumerate(r) if x) for r in self.basis]


def subspaces(ctx: DVRContext, dim: int) -> List[ResidueSubspace]:
    """All dim-dimensional subspaces of F_p^3, one reduced echelon form each."""
    if dim not in (1, 2):
        raise ValueError("dim must be 1 or 2")
    p = ctx.p
    out = []
    for pivots in itertools.combinations(range(3), dim):
        free = [(r, c) for r, pc in enumerate(pivots) for c in range(pc + 1, 3)
                if c not in pivots]
        for values in itertools.product(range(p), repeat=len(free)):
            rows = [[1 if c == pc else 0 for c in range(3)] for pc in pivots]
            for (r, c), x in zip(free, values):
                rows[r][c] = x
            out.append(ResidueSubspace(dim, tuple(tuple(r) for r in rows), p))
    return out


def _complete(vectors: Sequence[Vector], p: int) -> List[Vector]:
    """Extend independent vectors to a basis of F_p^3 with standard vectors."""
    out = list(vectors)
    for i in range(3):
        if len(out) == 3:
            break
        e = tuple(1 if j == i else 0 for j in range(3))
        if ResidueSubspace.span(out + [e], p).dim == len(out) + 1:
            out.append(e)
    return out


def lift_frame(L: Matrix, vectors: Sequence[Vector], ctx: DVRContext) -> Matrix:
    """L times the lift (coefficients in [0, p)) of a completed residue basis."""
    T = mx.from_columns(_complete(vectors, ctx.p))
    return mx.mul(L, T)


def image_subspace(L: Matrix, N: Matrix, ctx: DVRContext) -> ResidueSubspace:
    """Image of N in L/pL, in coordinates of L's basis (N must lie in L)."""
    X = mx.mul(mx.inverse(L), N)
    cols = [[ctx.residue(X[i][j]) for i in range(3)] for j in range(3)]
    return ResidueSubspace.span(cols, ctx.p)


def vertex_for_subspace(L: Matrix, S: ResidueSubspace, ctx: DVRContext) -> LatticeClass:
    """Class of W + pL, W a lift of S."""
    E = lift_frame(L, S.basis, ctx)
    exps = [0] * S.dim + [1] * (3 - S.dim)
    return canonical_class(adapted_lattice(E, exps, ctx), ctx)


# -- edges and faces -------------------------------------------------------

@dataclass(frozen=True)
class Edge:
    tail: LatticeClass
    head: LatticeClass


@dataclass(frozen=True)
class Face:
    """Three pairwise adjacent classes, slot i holding the vertex of type i."""

    verts: Tuple[LatticeClass, LatticeClass, LatticeClass]

    @classmethod
    def from_classes(cls, c1, c2, c3) -> "Face":
        verts = sorted((c1, c2, c3), key=vertex_type)
        if [vertex_type(v) for v in verts] != [0, 1, 2]:
            raise ValueError("vertices of a face have distinct types")
        return cls(tuple(verts))

    def vertex_set(self):
        return frozenset(self.verts)

    def __contains__(self, c):
        return c in self.verts

    def edges(self) -> List[Edge]:
        """Directed edges: type 1 -> type 0 -> type 2 -> type 1."""
        v0, v1, v2 = self.verts
        return [Edge(v1, v0), Edge(v0, v2), Edge(v2, v1)]


def is_adjacent(c1: LatticeClass, c2: LatticeClass) -> bool:
    return c1 != c2 and distance(c1, c2) == 1


def edge_orientation(c1: LatticeClass, c2: LatticeClass) -> Edge:
    if not is_adjacent(c1, c2):
        raise ValueError("classes are not adjacent")
    ctx = c1.ctx
    _, M = tight_fit(c1.canon, c2.canon, ctx)
    rank = image_subspace(c1.canon, M, ctx).dim
    return Edge(c1, c2) if rank == 1 else Edge(c2, c1)


def neighbors(c: LatticeClass) -> List[LatticeClass]:
    ctx = c.ctx
    return [vertex_for_subspace(c.canon, S, ctx)
            for dim in (1, 2) for S in subspaces(ctx, dim)]


def face_from_flag(L: Matrix, line: ResidueSubspace, plane: ResidueSubspace,
                   ctx: DVRContext) -> Face:
    """Face {L, (e1,e2,pe3), (e1,pe2,pe3)} for the flag line < plane of L/pL."""
    e1 = line.basis[0]
    e2 = next(v for v in plane.basis if not line.contains(v))
    E = lift_frame(L, [e1, e2], ctx)
    return Face.from_classes(
        canonical_class(L, ctx),
        canonical_class(adapted_lattice(E, (0, 0, 1), ctx), ctx),
        canonical_class(adapted_lattice(E, (0, 1, 1), ctx), ctx))


def flags(ctx: DVRContext) -> List[Tuple[ResidueSubspace, ResidueSubspace]]:
    planes = subspaces(ctx, 2)
    return [(line, plane) for line in subspaces(ctx, 1)
            for plane in planes if plane.contains(line.basis[0])]


def faces_at_vertex(c: LatticeClass) -> List[Face]:
    return [face_from_flag(c.canon, line, plane, c.ctx)
            for line, plane in flags(c.ctx)]


def faces_at_edge(e: Edge) -> List[Face]:
    c = e.tail
    ctx = c.ctx
    if not is_adjacent(e.tail, e.head):
        raise ValueError("not an edge")
    _, M = tight_fit(c.canon, e.head.canon, ctx)
    S = image_subspace(c.canon, M, ctx)
    if S.dim == 1:
        pairs = [(S, P) for P in subspaces(ctx, 2) if P.contains_subspace(S)]
    else:
        pairs = [(l, S) for l in subspaces(ctx, 1) if S.contains_subspace(l)]
    return [face_from_flag(c.canon, line, plane, ctx) for line, plane in pairs]


def flag_at(c: LatticeClass, face: Face) -> Tuple[ResidueSubspace, ResidueSubspace]:
    """The flag (line, plane) of L/pL that a face through c corresponds to."""
    ctx = c.ctx
    subs = []
    for v in face.verts:
        if v != c:
            _, M = tight_fit(c.canon, v.canon, ctx)
            subs.append(image_subspace(c.canon, M, ctx))
    subs.sort(key=lambda s: s.dim)
    return subs[0], subs[1]


def is_face(c1: LatticeClass, c2: LatticeClass, c3: LatticeClass) -> bool:
    if len({c1, c2, c3}) < 3:
        return False
    if not (is_adjacent(c1, c2) and is_adjacent(c2, c3) and is_adjacent(c1, c3)):
        return False
    ctx = c1.ctx
    _, L2 = tight_fit(c1.canon, c2.canon, ctx)
    _, L3 = tight_fit(c1.canon, c3.canon, ctx)
    nested = contains(L2, L3, ctx) or contains(L3, L2, ctx)
    assert nested, "tight-fitting representatives of a face must be nested"
    return True


# -- paths -----------------------------------------------------------------

@dataclass(frozen=True)
class EdgePath:
    verts: Tuple[LatticeClass, ...]

    def __post_init__(self):
        object.__setattr__(self, "verts", tuple(self.verts))
        if not self.verts:
            raise ValueError("a path has at least one vertex")

    @property
    def length(self) -> int:
        return len(self.verts) - 1

    @property
    def is_closed(self) -> bool:
        return self.verts[0] == self.verts[-1]

    def is_valid(self) -> bool:
        return all(is_adjacent(u, v) for u, v in zip(self.verts, self.verts[1:]))


def connecting_path(c1: LatticeClass, c2: LatticeClass) -> EdgePath:
    """Geodesic c1 -> c2 through the lattices (p^i e1, p^min(i,b) e2, e3)."""
    if c1 == c2:
        return EdgePath((c1,))
    ctx = c1.ctx
    _, M = tight_fit(c1.canon, c2.canon, ctx)
    E, d = adapted_bases(c1.canon, M, ctx)
    verts = [c1]
    for i in range(1, d.a + 1):
        L_i = adapted_lattice(E, (i, min(i, d.b), 0), ctx)
        verts.append(canonical_class(L_i, ctx))
    assert verts[-1] == c2
    return EdgePath(tuple(verts))


# -- one step away from a vertex at distance a ---------------------------

class StepClass(NamedTuple):
    case: str
    predicted: int
    a: int
    b: int


def classify_step(L: LatticeClass, M: LatticeClass, N: LatticeClass) -> StepClass:
    """Case A1/A2/B1/B2 of N relative to (L, M) and the predicted d(L, N).

    Requires d(L, M) = a >= 1 and d(M, N) = 1.  N is read as a subspace of
    M/pM in the basis (p^a e1, p^b e2, e3) adapted to L and M.
    """
    ctx = L.ctx
    a = distance(L, M)
    if a < 1 or not is_adjacent(M, N):
        raise ValueError("need d(L, M) >= 1 and d(M, N) = 1")
    _, Mt = tight_fit(L.canon, M.canon, ctx)
    E, d = adapted_bases(L.canon, Mt, ctx)
    b = d.b
    Mb = adapted_lattice(E, (a, b, 0), ctx)
    _, Nt = tight_fit(Mb, N.canon, ctx)
    S = image_subspace(Mb, Nt, ctx)
    inside = all(v[2] == 0 for v in S.basis)
    if S.dim == 1 and inside:
        beta = S.basis[0][1]
        if beta:
            pred = a + 1 if b == 0 else a
        else:
            pred = a if a == b else a - 1
        return StepClass("A1", pred, a, b)
    if S.dim == 2 and inside:
        return StepClass("A2", a if b == 0 else a - 1, a, b)
    if S.dim == 1:
        return StepClass("B1", a + 1, a, b)
    r1, r2 = S.basis
    w = [(r2[2] * x - r1[2] * y) % ctx.p for x, y in zip(r1, r2)]
    delta = w[1]
    pred = a + 1 if (delta or a == b) else a
    return StepClass("B2", pred, a, b)
