"""JSON forms of classes, faces, paths, contraction certificates and words."""

from __future__ import annotations

import json
from typing import List

from .building import EdgePath, Face
from .dvr import DVRContext
from .group import AmalgamWord, GroupElement, SubgroupTag
from .homotopy import ContractionMove, MoveKind
from .lattice import LatticeClass, canonical_class
from .matrix import matrix_from_json, matrix_to_json, parse_matrix


def class_to_json(c: LatticeClass) -> list:
    return matrix_to_json(c.canon)


def class_from_json(obj, ctx: DVRContext) -> LatticeClass:
    return canonical_class(matrix_from_json(obj), ctx)


def face_to_json(f: Face) -> list:
    return [class_to_json(v) for v in f.verts]


def face_from_json(obj, ctx: DVRContext) -> Face:
    if not isinstance(obj, list) or len(obj) != 3:
        raise ValueError("a face is a list of 3 matrices")
    return Face.from_classes(*(class_from_json(m, ctx) for m in obj))


def path_to_json(path: EdgePath) -> list:
    return [class_to_json(v) for v in path.verts]


def path_from_json(obj, ctx: DVRContext) -> EdgePath:
    if not isinstance(obj, list) or not obj:
        raise ValueError("a path is a non-empty list of matrices")
    return EdgePath(tuple(class_from_json(m, ctx) for m in obj))


def parse_path(text: str, ctx: DVRContext) -> EdgePath:
    """A JSON list of matrices, or text matrices separated by blank lines."""
    stripped = text.strip()
    if stripped.startswith("["):
        return path_from_json(json.loads(stripped), ctx)
    blocks = [b for b in stripped.split("\n\n") if b.strip()]
    if not blocks:
        raise ValueError("empty path")
    return EdgePath(tuple(canonical_class(parse_matrix(b), ctx) for b in blocks))


def move_to_json(m: ContractionMove) -> dict:
    return {
        "kind": m.kind.value,
        "at": m.at,
        "face": face_to_json(m.face) if m.face is not None else None,
        "second_face": face_to_json(m.second_face) if m.second_face is not None else None,
    }


def move_from_json(obj: dict, ctx: DVRContext) -> ContractionMove:
    face = obj.get("face")
    second = obj.get("second_face")
    return ContractionMove(
        MoveKind(obj["kind"]), int(obj["at"]),
        face_from_json(face, ctx) if face is not None else None,
        face_from_json(second, ctx) if second is not None else None)


def moves_to_json(moves: List[ContractionMove]) -> list:
    return [move_to_json(m) for m in moves]


def moves_from_json(obj, ctx: DVRContext) -> List[ContractionMove]:
    if isinstance(obj, dict):
        obj = obj["moves"]
    return [move_from_json(m, ctx) for m in obj]


def word_to_json(w: AmalgamWord) -> list:
    return [{"tag": tag.value, "matrix": matrix_to_json(g.mat)} for tag, g in w.letters]


def word_from_json(obj, ctx: DVRContext) -> AmalgamWord:
    if isinstance(obj, dict):
        obj = obj["word"]
    letters = tuple((SubgroupTag(d["tag"]), GroupElement(matrix_from_json(d["matrix"]), ctx))
                    for d in obj)
    return AmalgamWord(letters, ctx)
