"""Contracting closed edge paths through faces.

``contract_loop`` produces a certificate: a list of elementary moves whose
replay (``verify_moves``) turns the loop into the trivial path at its base
point.  Each phase deforms the loop near the first vertex where the
distance from the base point stops growing, and the pair
(length, n_P) strictly decreases lexicographically from phase to phase.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from . import matrix as mx
from .building import (EdgePath, Face, ResidueSubspace, classify_step,
                       edge_orientation, image_subspace, is_face,
                       vertex_for_subspace)
from .lattice import LatticeClass, contains, distance, tight_fit


class ContractionError(RuntimeError):
    """An internal invariant of the contraction failed."""


class MoveKind(enum.Enum):
    BACKTRACK_RETRACT = "backtrack_retract"
    FACE_PUSH_SHORTEN = "face_push_shorten"
    FACE_PUSH_LENGTHEN = "face_push_lengthen"
    FACE_SWAP_MID = "face_swap_mid"


@dataclass(frozen=True)
class ContractionMove:
    """One elementary homotopy acting at path index ``at``.

    BACKTRACK_RETRACT   v[at] == v[at+2]; drop v[at+1], v[at+2]
    FACE_PUSH_SHORTEN   {v[at], v[at+1], v[at+2]} == face; drop v[at+1]
    FACE_PUSH_LENGTHEN  insert face's third vertex between v[at], v[at+1]
    FACE_SWAP_MID       replace v[at+1] by x, through face {v[at], v[at+1], x}
                        and second_face {v[at+1], v[at+2], x}
    """

    kind: MoveKind
    at: int
    face: Optional[Face] = None
    second_face: Optional[Face] = None


@dataclass(frozen=True, order=True)
class ContractionMeasure:
    length: int
    n_p: int


class InvalidMove(ValueError):
    pass


def _third(face: Face, u, v):
    rest = [w for w in face.verts if w != u and w != v]
    if len(rest) != 1:
        raise InvalidMove("face does not contain the edge")
    return rest[0]


def _check_face(face: Optional[Face]):
    if face is None or not is_face(*face.verts):
        raise InvalidMove("cited triple is not a face")


def apply_move(verts: Sequence[LatticeClass], move: ContractionMove) -> Tuple[LatticeClass, ...]:
    """Apply one move, raising InvalidMove if it does not fit the path."""
    v = list(verts)
    i = move.at
    kind = move.kind
    if kind is MoveKind.BACKTRACK_RETRACT:
        if not (0 <= i and i + 2 < len(v)) or v[i] != v[i + 2]:
            raise InvalidMove(f"no backtrack at {i}")
        del v[i + 1:i + 3]
        return tuple(v)
    _check_face(move.face)
    if kind is MoveKind.FACE_PUSH_SHORTEN:
        if not (0 <= i and i + 2 < len(v)):
            raise InvalidMove("index out of range")
        if move.face.vertex_set() != {v[i], v[i + 1], v[i + 2]}:
            raise InvalidMove("face does not match the two edges")
        del v[i + 1]
    elif kind is MoveKind.FACE_PUSH_LENGTHEN:
        if not (0 <= i and i + 1 < len(v)):
            raise InvalidMove("index out of range")
        v.insert(i + 1, _third(move.face, v[i], v[i + 1]))
    elif kind is MoveKind.FACE_SWAP_MID:
        _check_face(move.second_face)
        if not (0 <= i and i + 2 < len(v)):
            raise InvalidMove("index out of range")
        x = _third(move.face, v[i], v[i + 1])
        if move.second_face.vertex_set() != {v[i + 1], v[i + 2], x}:
            raise InvalidMove("second face does not match")
        v[i + 1] = x
    else:
        raise InvalidMove(f"unknown move kind {kind}")
    return tuple(v)


def has_backtrack(verts: Sequence[LatticeClass]) -> bool:
    return any(verts[i] == verts[i + 2] for i in range(len(verts) - 2))


def _retract(verts: Sequence[LatticeClass]) -> Tuple[Tuple[LatticeClass, ...], List[ContractionMove]]:
    stack: List[LatticeClass] = []
    moves = []
    for w in verts:
        if len(stack) >= 2 and stack[-2] == w:
            moves.append(ContractionMove(MoveKind.BACKTRACK_RETRACT, len(stack) - 2))
            stack.pop()
        else:
            stack.append(w)
    return tuple(stack), moves


def remove_backtracks(path: EdgePath) -> Tuple[EdgePath, List[ContractionMove]]:
    verts, moves = _retract(path.verts)
    return EdgePath(verts), moves


def n_p(verts: Sequence[LatticeClass]) -> int:
    """Least n with d(v0, v[n+1]) < n + 1."""
    for n in range(len(verts) - 1):
        if distance(verts[0], verts[n + 1]) < n + 1:
            return n
    raise ValueError("path is not closed")


def contraction_measure(verts: Sequence[LatticeClass]) -> ContractionMeasure:
    if len(verts) == 1:
        return ContractionMeasure(0, 0)
    return ContractionMeasure(len(verts) - 1, n_p(verts))


def _tight_chain(verts: Sequence[LatticeClass], upto: int):
    """Representatives R_0 > R_1 > ... > R_upto, each tight within the last."""
    ctx = verts[0].ctx
    reps = [verts[0].canon]
    for j in range(1, upto + 1):
        reps.append(tight_fit(reps[-1], verts[j].canon, ctx)[1])
    return reps


def _link_subspace(center: LatticeClass, other: LatticeClass) -> ResidueSubspace:
    ctx = center.ctx
    _, M = tight_fit(center.canon, other.canon, ctx)
    return image_subspace(center.canon, M, ctx)


def _cross(u, v, p):
    return ((u[1] * v[2] - u[2] * v[1]) % p,
            (u[2] * v[0] - u[0] * v[2]) % p,
            (u[0] * v[1] - u[1] * v[0]) % p)


def _lower_vertex(center: LatticeClass, prev: LatticeClass, nxt: LatticeClass) -> LatticeClass:
    """Third vertex of faces through both edges (prev, center), (center, nxt).

    In L/pL of the center, two distinct planes meet in one line and two
    distinct lines span one plane; that line or plane is the vertex.
    """
    p = center.ctx.p
    s1, s2 = _link_subspace(center, prev), _link_subspace(center, nxt)
    if s1.dim != s2.dim or s1 == s2:
        raise ContractionError("lower route needs two distinct lines or planes")
    if s1.dim == 2:
        n1 = _cross(*s1.basis, p)
        n2 = _cross(*s2.basis, p)
        S = ResidueSubspace.span([_cross(n1, n2, p)], p)
    else:
        S = ResidueSubspace.span([s1.basis[0], s2.basis[0]], p)
    return vertex_for_subspace(center.canon, S, center.ctx)


def _face(*verts) -> Face:
    if not is_face(*verts):
        raise ContractionError("expected a face")
    return Face.from_classes(*verts)


def _phase(verts: Tuple[LatticeClass, ...]) -> ContractionMove:
    """The single face move that starts one phase of the contraction."""
    n = n_p(verts)
    if n == 1:
        return ContractionMove(MoveKind.FACE_PUSH_SHORTEN, 0, _face(*verts[:3]))

    L0, prev, cur, nxt = verts[0], verts[n - 1], verts[n], verts[n + 1]
    step = classify_step(L0, prev, cur)
    outward = step.case in ("B1", "B2") or (step.case == "A1" and step.b == 0)
    # A1 with b = 0 is B1 after exchanging e2 and e3
    if step.predicted != n or not outward:
        raise ContractionError(f"step into L_n is {step}, expected case B at distance {n}")

    # fwd: E_n points into L_n, or E_{n+1} points into L_{n+1}; back otherwise
    into_cur = edge_orientation(prev, cur).head == cur
    out_of_cur = edge_orientation(cur, nxt).tail == cur
    ctx = L0.ctx
    reps = _tight_chain(verts, n + 1)
    inside = contains(mx.scale(reps[0], ctx.p), reps[n + 1], ctx)

    if into_cur and out_of_cur:                      # fwd-fwd
        if not inside:
            raise ContractionError("fwd-fwd step with L_{n+1} outside pL_0")
        return ContractionMove(MoveKind.FACE_PUSH_SHORTEN, n - 1, _face(prev, cur, nxt))
    if not into_cur and not out_of_cur:              # back-back
        return ContractionMove(MoveKind.FACE_PUSH_SHORTEN, n - 1, _face(prev, cur, nxt))
    if into_cur:                                     # fwd-back
        if inside:
            raise ContractionError("fwd-back step with L_{n+1} inside pL_0")
    else:                                            # back-fwd
        if not inside:
            raise ContractionError("back-fwd step with L_{n+1} outside pL_0")
    low = _lower_vertex(cur, prev, nxt)
    if distance(L0, low) != n - 1:
        raise ContractionError("lower route vertex is not at distance n - 1")
    return ContractionMove(MoveKind.FACE_SWAP_MID, n - 1,
                           _face(prev, cur, low), _face(cur, nxt, low))


def contract_loop(path: EdgePath, max_phases: int = 10_000) -> List[ContractionMove]:
    if not path.is_closed:
        raise ValueError("path is not closed")
    if not path.is_valid():
        raise ValueError("consecutive vertices must be adjacent")
    verts, moves = _retract(path.verts)
    last = None
    for _ in range(max_phases):
        if len(verts) == 1:
            return moves
        measure = contraction_measure(verts)
        if last is not None and not measure < last:
            raise ContractionError(f"measure {measure} did not drop below {last}")
        last = measure
        move = _phase(verts)
        verts = apply_move(verts, move)
        moves.append(move)
        verts, retractions = _retract(verts)
        moves.extend(retractions)
    raise ContractionError("phase budget exhausted")


def replay(path: EdgePath, moves: Sequence[ContractionMove]) -> Tuple[LatticeClass, ...]:
    verts = path.verts
    for move in moves:
        verts = apply_move(verts, move)
    return verts


def verify_moves(path: EdgePath, moves: Sequence[ContractionMove]) -> bool:
    """True iff every move applies cleanly and the result is a single vertex."""
    if not path.is_closed or not path.is_valid():
        return False
    try:
        final = replay(path, moves)
    except InvalidMove:
        return False
    return len(final) == 1 and final[0] == path.verts[0]
