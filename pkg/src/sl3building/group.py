"""SL3(K) acting on the building, vertex stabilizers, amalgam words.

The standard face has vertices L = O^3, L' = alpha L, L'' = beta L with
alpha = diag(1, 1, p) and beta = diag(1, p, p).  Their stabilizers in
SL3(K) are G1 = SL3(O), G2 = alpha G1 alpha^-1 and G3 = beta G1 beta^-1.
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Tuple

from . import matrix as mx
from .building import (Face, connecting_path, face_from_flag, flag_at, flags,
                       image_subspace, lift_frame)
from .dvr import DVRContext
from .lattice import LatticeClass, canonical_class, tight_fit
from .matrix import Matrix


@dataclass(frozen=True)
class GroupElement:
    mat: Matrix
    ctx: DVRContext

    def __post_init__(self):
        object.__setattr__(self, "mat", mx.matrix(self.mat))
        if mx.det(self.mat) == 0:
            raise ValueError("singular matrix")

    @property
    def det(self) -> Fraction:
        return mx.det(self.mat)

    @property
    def det_val(self) -> int:
        return self.ctx.valuation(self.det)

    @property
    def is_special(self) -> bool:
        return self.det == 1

    def __matmul__(self, other: "GroupElement") -> "GroupElement":
        return GroupElement(mx.mul(self.mat, other.mat), self.ctx)

    def inverse(self) -> "GroupElement":
        return GroupElement(mx.inverse(self.mat), self.ctx)

    def is_identity(self) -> bool:
        return self.mat == mx.identity()

    def __repr__(self):
        return f"GroupElement({mx.format_matrix_inline(self.mat)})"


class SubgroupTag(enum.Enum):
    G1 = "G1"
    G2 = "G2"
    G3 = "G3"


class Intersection(enum.Enum):
    G12 = "G12"
    G13 = "G13"
    G23 = "G23"
    G123 = "G123"


@dataclass(frozen=True)
class AmalgamWord:
    letters: Tuple[Tuple[SubgroupTag, GroupElement], ...]
    ctx: DVRContext

    def __len__(self):
        return len(self.letters)


# Least allowed valuation of each entry for membership in the stabilizers
# and their intersections.
_PATTERNS: Dict[object, Tuple[Tuple[int, ...], ...]] = {
    SubgroupTag.G1: ((0, 0, 0),
                     (0, 0, 0),
                     (0, 0, 0)),
    SubgroupTag.G2: ((0, 0, -1),
                     (0, 0, -1),
                     (1, 1, 0)),
    SubgroupTag.G3: ((0, -1, -1),
                     (1, 0, 0),
                     (1, 0, 0)),
    Intersection.G12: ((0, 0, 0),
                       (0, 0, 0),
                       (1, 1, 0)),
    Intersection.G13: ((0, 0, 0),
                       (1, 0, 0),
                       (1, 0, 0)),
    Intersection.G23: ((0, 0, -1),
                       (1, 0, 0),
                       (1, 1, 0)),
    Intersection.G123: ((0, 0, 0),
                        (1, 0, 0),
                        (1, 1, 0)),
}


def _fits(g: GroupElement, pattern) -> bool:
    if not g.is_special:
        raise ValueError("determinant is not 1")
    v = g.ctx.valuation
    return all(v(g.mat[i][j]) >= pattern[i][j] for i in range(3) for j in range(3))


def in_stabilizer(g: GroupElement, tag: SubgroupTag) -> bool:
    return _fits(g, _PATTERNS[SubgroupTag(tag)])


def in_intersection(g: GroupElement, which: Intersection) -> bool:
    return _fits(g, _PATTERNS[Intersection(which)])


def identity(ctx: DVRContext) -> GroupElement:
    return GroupElement(mx.identity(), ctx)


def alpha(ctx: DVRContext) -> GroupElement:
    return GroupElement(mx.diag(1, 1, ctx.p), ctx)


def beta(ctx: DVRContext) -> GroupElement:
    return GroupElement(mx.diag(1, ctx.p, ctx.p), ctx)


def standard_face(ctx: DVRContext) -> Face:
    return Face.from_classes(canonical_class(mx.identity(), ctx),
                             canonical_class(alpha(ctx).mat, ctx),
                             canonical_class(beta(ctx).mat, ctx))


def standard_vertex(ctx: DVRContext, tag: SubgroupTag) -> LatticeClass:
    return standard_face(ctx).verts[list(SubgroupTag).index(SubgroupTag(tag))]


def act(g: GroupElement, c: LatticeClass) -> LatticeClass:
    return canonical_class(mx.mul(g.mat, c.canon), c.ctx)


def act_face(g: GroupElement, f: Face) -> Face:
    return Face.from_classes(*(act(g, v) for v in f.verts))


# -- face transitivity -----------------------------------------------------

def face_frame(face: Face, base: int = 0) -> Matrix:
    """Basis E with face = {[E], [E diag(1,1,p)], [E diag(1,p,p)]}.

    [E] is face.verts[base], represented by its canonical lattice.
    """
    c = face.verts[base]
    ctx = c.ctx
    line, plane = flag_at(c, face)
    e1 = line.basis[0]
    e2 = next(v for v in plane.basis if not line.contains(v))
    return lift_frame(c.canon, [e1, e2], ctx)


def _scale_first_column(F: Matrix, c) -> Matrix:
    return mx.mul(F, mx.diag(c, 1, 1))


def _transport(f: Face, g: Face, source: int, target: int) -> GroupElement:
    ctx = f.verts[0].ctx
    E = face_frame(f, source)
    F = face_frame(g, target)
    n = ctx.valuation(mx.det(F) / mx.det(E))
    u = mx.det(F) / mx.det(E) / ctx.power(n)
    F = _scale_first_column(F, 1 / u)
    m = -((-n) // 3)
    r = n - 3 * m
    F = mx.scale(F, ctx.power(-m))
    phi = mx.mul(F, mx.inverse(E))
    if r:
        shift = mx.diag(1, 1, ctx.p) if r == -1 else mx.diag(1, ctx.p, ctx.p)
        phi = mx.mul(mx.mul(mx.mul(F, shift), mx.inverse(F)), phi)
    assert mx.det(phi) == 1
    # phi carries the source vertex lattice onto one vertex lattice M of g;
    # re-frame g at M and correct the unit so the whole frame is carried.
    M = mx.mul(phi, E)
    image = canonical_class(M, ctx)
    slot = g.verts.index(image)
    F2 = face_frame(g, slot)
    k = ctx.valuation(mx.det(M) / mx.det(F2))
    assert k % 3 == 0
    F2 = mx.scale(F2, ctx.power(k // 3))
    unit = mx.det(F2) / mx.det(E)
    F2 = _scale_first_column(F2, 1 / unit)
    return GroupElement(mx.mul(F2, mx.inverse(E)), ctx)


def map_face_to_face(f: Face, g: Face) -> GroupElement:
    """A determinant-one element carrying face f onto face g, types preserved."""
    phi = _transport(f, g, 0, 0)
    assert phi.is_special
    return phi


def check_without_inversion(g: GroupElement, f: Face) -> bool:
    """For g preserving f setwise, whether g fixes each vertex of f."""
    if not g.is_special:
        raise ValueError("determinant is not 1")
    images = [act(g, v) for v in f.verts]
    if set(images) != f.vertex_set():
        raise ValueError("element does not preserve the face")
    return images == list(f.verts)


# -- amalgam words ---------------------------------------------------------

def _link_gallery(center: LatticeClass, start: Face, goal) -> List[Face]:
    """Shortest run of faces around center, each sharing an edge through center
    with the next, from start to a face satisfying goal(line, plane)."""
    ctx = center.ctx
    first = flag_at(center, start)
    if goal(*first):
        return []
    all_flags = flags(ctx)
    prev = {first: None}
    queue = deque([first])
    while queue:
        fl = queue.popleft()
        line, plane = fl
        for nxt in all_flags:
            if nxt in prev or (nxt[0] != line and nxt[1] != plane):
                continue
            prev[nxt] = fl
            if goal(*nxt):
                chain = [nxt]
                while prev[chain[-1]] != first:
                    chain.append(prev[chain[-1]])
                return [face_from_flag(center.canon, l, pl, ctx)
                        for l, pl in reversed(chain)]
            queue.append(nxt)
    raise RuntimeError("flag graph is disconnected")


def gallery(start: Face, goal: Face) -> List[Face]:
    """Faces start = F_0, ..., F_m = goal, consecutive ones sharing an edge."""
    out = [start]
    current = start
    src, dst = start.verts[0], goal.verts[0]
    path = connecting_path(src, dst).verts
    for here, there in zip(path, path[1:]):
        ctx = here.ctx
        _, M = tight_fit(here.canon, there.canon, ctx)
        S = image_subspace(here.canon, M, ctx)
        out += _link_gallery(here, current, lambda l, pl: S in (l, pl))
        current = out[-1]
    target = flag_at(dst, goal)
    out += _link_gallery(dst, current, lambda l, pl: (l, pl) == target)
    return out


def _tag(g: GroupElement) -> SubgroupTag:
    for tag in SubgroupTag:
        if in_stabilizer(g, tag):
            return tag
    raise ValueError("element lies in no vertex stabilizer")


def factor_in_amalgam(g: GroupElement) -> AmalgamWord:
    """Write g in SL3(K) as a product of elements of G1, G2 and G3.

    Walk a gallery from the standard face to g(standard face).  Each step
    crosses an edge of the current translate, so the letter moving the
    standard face onto its neighbour fixes an edge of it and lies in a
    pairwise intersection.  The leftover element fixes the standard face.
    """
    ctx = g.ctx
    if not g.is_special:
        raise ValueError("not in SL3(K)")
    if g.is_identity():
        return AmalgamWord((), ctx)
    for tag in SubgroupTag:
        if in_stabilizer(g, tag):
            return AmalgamWord(((tag, g),), ctx)
    F0 = standard_face(ctx)
    faces = gallery(F0, act_face(g, F0))
    h = identity(ctx)
    letters = []
    for F in faces[1:]:
        s = map_face_to_face(F0, act_face(h.inverse(), F))
        letters.append((_tag(s), s))
        h = h @ s
    rest = h.inverse() @ g
    if not in_intersection(rest, Intersection.G123):
        raise RuntimeError("leftover element does not fix the standard face")
    if not rest.is_identity():
        letters.append((SubgroupTag.G1, rest))
    word = AmalgamWord(tuple(letters), ctx)
    assert multiply_word(word).mat == g.mat
    return word


def multiply_word(w: AmalgamWord) -> GroupElement:
    out = identity(w.ctx)
    for _, g in w.letters:
        out = out @ g
    return out


def word_is_valid(w: AmalgamWord, g: GroupElement) -> bool:
    return (multiply_word(w).mat == g.mat
            and all(in_stabilizer(x, tag) for tag, x in w.letters))
