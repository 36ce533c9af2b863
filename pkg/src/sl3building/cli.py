"""Command line front end.

Exit codes: 0 success, 1 verification or property failure, 2 bad input.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from . import matrix as mx
from . import serialize as ser
from . import selftest
from .building import faces_at_vertex, neighbors
from .dvr import DVRContext
from .group import GroupElement, factor_in_amalgam, word_is_valid
from .homotopy import contract_loop, verify_moves
from .lattice import adapted_bases, canonical_class, distance, tight_fit
from .sampling import random_class, random_loop


class BadInput(Exception):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise BadInput(str(exc)) from exc


def _read_matrix(path: str):
    try:
        return mx.parse_matrix(_read(path))
    except (ValueError, json.JSONDecodeError) as exc:
        raise BadInput(f"{path}: {exc}") from exc


def _read_class(path: str, ctx: DVRContext):
    try:
        return canonical_class(_read_matrix(path), ctx)
    except ValueError as exc:
        raise BadInput(f"{path}: {exc}") from exc


def _emit(args, text_lines, payload):
    if args.format == "json":
        print(json.dumps(payload))
    else:
        for line in text_lines:
            print(line)


def cmd_distance(args, ctx) -> int:
    c1, c2 = _read_class(args.m1, ctx), _read_class(args.m2, ctx)
    d = distance(c1, c2)
    n, M = tight_fit(c1.canon, c2.canon, ctx)
    _, ed = adapted_bases(c1.canon, M, ctx)
    lines = [str(d)]
    payload = {"distance": d}
    if args.verbose:
        lines.append(f"a={ed.a} b={ed.b} n={n}")
        payload.update(a=ed.a, b=ed.b, n=n)
    _emit(args, lines, payload)
    return 0


def cmd_neighbors(args, ctx) -> int:
    classes = neighbors(_read_class(args.m, ctx))
    lines = [mx.format_matrix_inline(c.canon) for c in classes]
    lines.append(f"count {len(classes)}")
    _emit(args, lines, {"classes": [ser.class_to_json(c) for c in classes],
                        "count": len(classes)})
    return 0


def cmd_faces(args, ctx) -> int:
    faces = faces_at_vertex(_read_class(args.m, ctx))
    lines = [" | ".join(mx.format_matrix_inline(v.canon) for v in f.verts) for f in faces]
    lines.append(f"count {len(faces)}")
    _emit(args, lines, {"faces": [ser.face_to_json(f) for f in faces],
                        "count": len(faces)})
    return 0


def _format_move(m) -> str:
    parts = [m.kind.value, f"at={m.at}"]
    for name, face in (("face", m.face), ("second_face", m.second_face)):
        if face is not None:
            parts.append(f"{name}=[" + " | ".join(mx.format_matrix_inline(v.canon)
                                                  for v in face.verts) + "]")
    return " ".join(parts)


def cmd_contract(args, ctx) -> int:
    try:
        loop = ser.parse_path(_read(args.loop), ctx)
    except (ValueError, KeyError, json.JSONDecodeError) as exc:
        raise BadInput(f"{args.loop}: {exc}") from exc
    if not loop.is_closed:
        raise BadInput("path is not closed")
    if not loop.is_valid():
        raise BadInput("consecutive vertices are not adjacent")
    if args.check:
        try:
            moves = ser.moves_from_json(json.loads(_read(args.check)), ctx)
        except (ValueError, KeyError, TypeError, json.JSONDecodeError) as exc:
            print(f"INVALID certificate: {exc}")
            return 1
    else:
        moves = contract_loop(loop)
    ok = verify_moves(loop, moves)
    lines = [_format_move(m) for m in moves]
    lines.append(f"CONTRACTED in {len(moves)} moves" if ok else "INVALID certificate")
    _emit(args, lines, {"moves": ser.moves_to_json(moves), "count": len(moves),
                        "contracted": ok})
    return 0 if ok else 1


def cmd_randloop(args, ctx) -> int:
    rng = random.Random(args.seed)
    start = random_class(rng, ctx, 2)
    loop = random_loop(rng, start, args.length)
    if args.format == "json":
        print(json.dumps(ser.path_to_json(loop)))
    else:
        print("\n\n".join(mx.format_matrix(v.canon) for v in loop.verts))
    return 0


def cmd_factor(args, ctx) -> int:
    try:
        g = GroupElement(_read_matrix(args.g), ctx)
    except ValueError as exc:
        raise BadInput(str(exc)) from exc
    if not g.is_special:
        raise BadInput("not in SL3(K)")
    word = factor_in_amalgam(g)
    lines = [f"{tag.value}: {mx.format_matrix_inline(x.mat)}" for tag, x in word.letters]
    lines.append(f"letters {len(word)}")
    payload = {"word": ser.word_to_json(word), "length": len(word)}
    ok = True
    if args.check:
        ok = word_is_valid(word, g)
        lines.append("CHECK OK" if ok else "CHECK FAILED")
        payload["check"] = ok
    _emit(args, lines, payload)
    return 0 if ok else 1


def cmd_selftest(args, ctx) -> int:
    for name, passed, detail in selftest.run(seed=args.seed):
        print(f"{'PASS' if passed else 'FAIL'} {name}: {detail}")
        if not passed:
            return 1
    print("ALL PASS")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sl3building",
        description="Lattice classes, loops and amalgam words for SL3 over Z_(p).")
    parser.add_argument("--prime", type=int, default=2)
    parser.add_argument("--format", choices=("text", "json"), default="text")
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("distance", help="distance between two lattice classes")
    p.add_argument("m1")
    p.add_argument("m2")
    p.set_defaults(func=cmd_distance)

    p = sub.add_parser("neighbors", help="classes adjacent to a class")
    p.add_argument("m")
    p.set_defaults(func=cmd_neighbors)

    p = sub.add_parser("faces", help="faces containing a class")
    p.add_argument("m")
    p.set_defaults(func=cmd_faces)

    p = sub.add_parser("contract", help="contract a closed edge path")
    p.add_argument("loop")
    p.add_argument("--check", metavar="CERT",
                   help="verify this certificate instead of computing one")
    p.set_defaults(func=cmd_contract)

    p = sub.add_parser("randloop", help="print a seeded random closed path")
    p.add_argument("--length", type=int, default=6, help="random walk length")
    p.set_defaults(func=cmd_randloop)

    p = sub.add_parser("factor", help="factor an SL3 element over G1, G2, G3")
    p.add_argument("g")
    p.add_argument("--check", action="store_true")
    p.set_defaults(func=cmd_factor)

    p = sub.add_parser("selftest", help="run the bounded property suite")
    p.set_defaults(func=cmd_selftest)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        ctx = DVRContext(args.prime)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    try:
        return args.func(args, ctx)
    except BadInput as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
