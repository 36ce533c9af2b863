"""Bounded property checks over the whole library, used by ``selftest``."""

from __future__ import annotations

import random
from typing import Callable, Iterator, List, Tuple

from . import matrix as mx
from .building import (connecting_path, edge_orientation, faces_at_edge,
                       faces_at_vertex, neighbors, classify_step)
from .dvr import DVRContext
from .group import (GroupElement, Intersection, SubgroupTag, act, act_face,
                    alpha, beta, factor_in_amalgam, in_intersection,
                    in_stabilizer, map_face_to_face, standard_face,
                    standard_vertex, word_is_valid)
from .homotopy import contract_loop, verify_moves
from .lattice import contains, distance, tight_fit, vertex_type
from .sampling import random_class, random_loop, random_sl3


def _distance_axioms(ctx, rng):
    for _ in range(20):
        x, y = random_class(rng, ctx), random_class(rng, ctx)
        d = distance(x, y)
        assert d == distance(y, x), "asymmetric"
        assert (d == 0) == (x == y)
        _, M = tight_fit(x.canon, y.canon, ctx)
        strict = (contains(M, mx.scale(x.canon, ctx.p), ctx)
                  and not contains(M, x.canon, ctx) and x != y)
        assert (d == 1) == strict
    return 20


def _local_counts(ctx, rng):
    q = ctx.q
    v = random_class(rng, ctx, 2)
    nb = neighbors(v)
    fc = faces_at_vertex(v)
    assert len(set(nb)) == len(nb) == 2 * (q * q + q + 1)
    assert len(set(fc)) == len(fc) == (q * q + q + 1) * (q + 1)
    for w in nb:
        assert len(set(faces_at_edge(edge_orientation(v, w)))) == q + 1
    return len(nb)


def _orientation_cycle(ctx, rng):
    fc = faces_at_vertex(random_class(rng, ctx, 2))
    for f in fc:
        edges = [edge_orientation(a, b) for a, b in
                 ((f.verts[0], f.verts[1]), (f.verts[1], f.verts[2]), (f.verts[0], f.verts[2]))]
        tails = {e.tail for e in edges}
        heads = {e.head for e in edges}
        assert tails == heads == f.vertex_set(), "edges do not cycle"
    return len(fc)


def _step_table(ctx, rng):
    n = 0
    for _ in range(4):
        L = random_class(rng, ctx, 2)
        M = L
        while M == L:
            M = connecting_path(L, random_class(rng, ctx, 2)).verts[-1]
        a = distance(L, M)
        for N in neighbors(M):
            step = classify_step(L, M, N)
            assert step.predicted == distance(L, N)
            assert step.predicted in (a - 1, a, a + 1)
            n += 1
    return n


def _connectivity(ctx, rng):
    for _ in range(20):
        x, y = random_class(rng, ctx), random_class(rng, ctx)
        path = connecting_path(x, y)
        assert path.length == distance(x, y)
        assert path.is_valid()
    return 20


def _simple_connectivity(ctx, rng):
    for _ in range(8):
        loop = random_loop(rng, random_class(rng, ctx, 2), rng.randint(1, 5))
        assert verify_moves(loop, contract_loop(loop))
    return 8


def _action(ctx, rng):
    for _ in range(15):
        g = GroupElement(random_sl3(rng, ctx), ctx)
        x, y = random_class(rng, ctx, 3), random_class(rng, ctx, 3)
        assert distance(act(g, x), act(g, y)) == distance(x, y)
        assert vertex_type(act(g, x)) == vertex_type(x)
        assert vertex_type(act(alpha(ctx), x)) == (vertex_type(x) + 1) % 3
        assert vertex_type(act(beta(ctx), x)) == (vertex_type(x) + 2) % 3
    return 15


def _face_transitivity(ctx, rng):
    F0 = standard_face(ctx)
    for _ in range(6):
        G = act_face(GroupElement(random_sl3(rng, ctx), ctx), F0)
        phi = map_face_to_face(F0, G)
        assert phi.is_special
        assert [act(phi, v) for v in F0.verts] == list(G.verts)
    return 6


def _stabilizers(ctx, rng):
    for _ in range(30):
        g = GroupElement(random_sl3(rng, ctx, max_factors=4, max_val=1), ctx)
        fixed = {t: act(g, standard_vertex(ctx, t)) == standard_vertex(ctx, t)
                 for t in SubgroupTag}
        for t in SubgroupTag:
            assert in_stabilizer(g, t) == fixed[t]
        assert in_intersection(g, Intersection.G12) == (fixed[SubgroupTag.G1] and fixed[SubgroupTag.G2])
        assert in_intersection(g, Intersection.G13) == (fixed[SubgroupTag.G1] and fixed[SubgroupTag.G3])
        assert in_intersection(g, Intersection.G23) == (fixed[SubgroupTag.G2] and fixed[SubgroupTag.G3])
        assert in_intersection(g, Intersection.G123) == all(fixed.values())
    return 30


def _amalgam(ctx, rng):
    for _ in range(8):
        g = GroupElement(random_sl3(rng, ctx), ctx)
        assert word_is_valid(factor_in_amalgam(g), g)
    return 8


CHECKS: List[Tuple[str, Callable]] = [
    ("distance_axioms", _distance_axioms),
    ("local_counts", _local_counts),
    ("orientation_cycle", _orientation_cycle),
    ("step_table", _step_table),
    ("connectivity", _connectivity),
    ("simple_connectivity", _simple_connectivity),
    ("action_and_type", _action),
    ("face_transitivity", _face_transitivity),
    ("stabilizers", _stabilizers),
    ("amalgam_factorization", _amalgam),
]


def run(seed: int = 0, primes=(2, 3)) -> Iterator[Tuple[str, bool, str]]:
    """Yield (name, passed, detail) per check and prime; stops after a failure."""
    for p in primes:
        ctx = DVRContext(p)
        for name, check in CHECKS:
            rng = random.Random(f"{seed}:{p}:{name}")
            label = f"p={p} {name}"
            try:
                n = check(ctx, rng)
            except AssertionError as exc:
                detail = str(exc).splitlines()
                yield label, False, detail[0] if detail else "assertion failed"
                return
            yield label, True, f"{n} cases"
