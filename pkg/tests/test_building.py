import itertools

import pytest

from sl3building import matrix as mx
from sl3building.building import (Edge, EdgePath, Face, ResidueSubspace, classify_step,
                                  connecting_path, edge_orientation, faces_at_edge,
                                  faces_at_vertex, flags, is_adjacent,
                                  is_face, neighbors, rref_mod_p, subspaces,
                                  vertex_for_subspace)
from sl3building.dvr import DVRContext
from sl3building.lattice import canonical_class, distance, tight_fit, vertex_type
from sl3building.sampling import random_class, random_walk

import oracles

I = mx.identity()


def cls(ctx, *d):
    return canonical_class(mx.diag(*d), ctx)


def standard(ctx):
    p = ctx.p
    return cls(ctx, 1, 1, 1), cls(ctx, 1, 1, p), cls(ctx, 1, p, p)


# -- residue subspaces -------------------------------------------------------

@pytest.mark.parametrize("p,dim,count", [(2, 1, 7), (2, 2, 7), (3, 1, 13), (3, 2, 13), (5, 1, 31)])
def test_subspace_counts(p, dim, count):
    subs = subspaces(DVRContext(p), dim)
    assert len(subs) == len(set(subs)) == count
    for S in subs:
        assert S.dim == dim
        assert rref_mod_p(S.basis, p) == S.basis


@pytest.mark.parametrize("p", [2, 3])
def test_subspaces_match_brute_force(p):
    ctx = DVRContext(p)
    ours = set()
    for dim in (1, 2):
        for S in subspaces(ctx, dim):
            ours.add(frozenset(tuple(sum(c * v[i] for c, v in zip(coef, S.basis)) % p
                                     for i in range(3))
                               for coef in itertools.product(range(p), repeat=dim)))
    assert ours == oracles.all_subspaces(p)


def test_rref_canonical():
    a = ResidueSubspace.span([(1, 1, 0), (0, 1, 1)], 2)
    b = ResidueSubspace.span([(1, 0, 1), (1, 1, 0)], 2)
    assert a == b and a.dim == 2
    assert a.contains((1, 0, 1)) and not a.contains((1, 0, 0))


# -- neighbours and faces ------------------------------------------------------

@pytest.mark.parametrize("p,count", [(2, 14), (3, 26), (5, 62)])
def test_neighbor_count(p, count):
    ctx = DVRContext(p)
    nb = neighbors(cls(ctx, 1, 1, 1))
    assert len(nb) == len(set(nb)) == count


def test_neighbors_match_residue_oracle(ctx, rng):
    c = random_class(rng, ctx, 3)
    images = set()
    for n in neighbors(c):
        assert oracles.distance(c.canon, n.canon, ctx.p) == 1
        k = oracles.tight_scale(c.canon, n.canon, ctx.p)
        images.add(oracles.residue_image(c.canon, mx.scale(n.canon, ctx.power(k)), ctx.p))
    assert images == oracles.all_subspaces(ctx.p)


@pytest.mark.parametrize("p,count", [(2, 21), (3, 52)])
def test_faces_at_vertex(p, count):
    ctx = DVRContext(p)
    c = cls(ctx, 1, 1, 1)
    faces = faces_at_vertex(c)
    assert len(faces) == len(set(faces)) == count
    assert len(flags(ctx)) == count
    for f in faces:
        assert c in f
        assert sorted(vertex_type(v) for v in f.verts) == [0, 1, 2]
        for u, v in itertools.combinations(f.verts, 2):
            assert oracles.distance(u.canon, v.canon, p) == 1


@pytest.mark.parametrize("p", [2, 3, 5])
def test_faces_at_edge(p):
    ctx = DVRContext(p)
    L, L1, L2 = standard(ctx)
    for e in (edge_orientation(L, L1), edge_orientation(L, L2), edge_orientation(L1, L2)):
        faces = faces_at_edge(e)
        assert len(set(faces)) == p + 1
        assert all(e.tail in f and e.head in f for f in faces)


def test_faces_at_edge_cross_checked_by_enumeration(ctx):
    L, L1, _ = standard(ctx)
    via_vertex = {f for f in faces_at_vertex(L) if L1 in f}
    assert via_vertex == set(faces_at_edge(edge_orientation(L, L1)))


def test_is_adjacent_examples(ctx):
    p = ctx.p
    L, L1, _ = standard(ctx)
    assert is_adjacent(L, L1)
    assert not is_adjacent(L, L)
    assert not is_adjacent(L, cls(ctx, p * p, p, 1))


def test_edge_orientation_examples(ctx):
    L, L1, L2 = standard(ctx)
    assert edge_orientation(L, L1) == Edge(L1, L)
    assert edge_orientation(L1, L) == Edge(L1, L)
    assert edge_orientation(L, L2) == Edge(L, L2)
    assert edge_orientation(L2, L) == Edge(L, L2)
    with pytest.raises(ValueError):
        edge_orientation(L, L)


def test_orientation_follows_rank_rule(ctx, rng):
    c = random_class(rng, ctx, 3)
    for n in neighbors(c):
        _, M = tight_fit(c.canon, n.canon, ctx)
        rank = len(oracles.residue_image(c.canon, M, ctx.p))
        e = edge_orientation(c, n)
        # image of size p means rank 1, so the edge points away from c
        assert (e.tail == c) == (rank == ctx.p)


def test_orientation_cycle_types(ctx):
    L, L1, L2 = standard(ctx)
    f = Face.from_classes(L2, L, L1)
    assert f.verts == (L, L1, L2)
    for e in f.edges():
        assert edge_orientation(e.tail, e.head) == e
        assert (vertex_type(e.head) - vertex_type(e.tail)) % 3 == 2


def test_is_face_examples(ctx):
    p = ctx.p
    L, L1, L2 = standard(ctx)
    assert is_face(L, L1, L2)
    assert not is_face(L, L, L1)
    odd = cls(ctx, p, p, 1)
    assert is_face(L, L1, odd) == (Face.from_classes(L, L1, odd) in faces_at_vertex(L)
                                   if vertex_type(odd) == 2 else False)


def test_is_face_matches_enumeration(ctx, rng):
    c = random_class(rng, ctx, 2)
    nb = neighbors(c)
    faces = {f.vertex_set() for f in faces_at_vertex(c)}
    for u, v in itertools.combinations(nb, 2):
        assert is_face(c, u, v) == (frozenset((c, u, v)) in faces)


def test_face_requires_distinct_types(ctx):
    L, L1, _ = standard(ctx)
    with pytest.raises(ValueError):
        Face.from_classes(L, L1, L1)


# -- paths ---------------------------------------------------------------------

def test_connecting_path_example(ctx):
    p = ctx.p
    L = cls(ctx, 1, 1, 1)
    target = cls(ctx, p ** 3, p, 1)
    path = connecting_path(L, target)
    assert path.length == 3
    profiles = [tuple(sorted(oracles.relative_exponents(L.canon, v.canon, p))) for v in path.verts[1:]]
    normalised = [tuple(e - min(pr) for e in pr) for pr in profiles]
    assert normalised == [(0, 1, 1), (0, 1, 2), (0, 1, 3)]
    assert connecting_path(L, L).verts == (L,)


def test_connecting_path_random(ctx, rng):
    for _ in range(30):
        x, y = random_class(rng, ctx), random_class(rng, ctx)
        path = connecting_path(x, y)
        assert path.verts[0] == x and path.verts[-1] == y
        assert path.length == oracles.distance(x.canon, y.canon, ctx.p)
        assert len(set(path.verts)) == len(path.verts)
        assert path.is_valid()


def test_edge_path_flags(ctx):
    L, L1, L2 = standard(ctx)
    assert EdgePath((L, L1, L2, L)).is_closed
    assert EdgePath((L, L1, L2, L)).is_valid()
    assert not EdgePath((L, cls(ctx, ctx.p ** 2, 1, 1))).is_valid()


# -- step classification ----------------------------------------------------

def test_step_case_a1_outward():
    ctx = DVRContext(2)
    L, M = cls(ctx, 1, 1, 1), cls(ctx, 4, 1, 1)
    # with b = 0 the adapted frame here pairs p^2 e1 with the third column
    N = vertex_for_subspace(M.canon, ResidueSubspace.span([(1, 0, 1)], 2), ctx)
    step = classify_step(L, M, N)
    assert step.case == "A1" and (step.a, step.b) == (2, 0)
    assert step.predicted == 3 == distance(L, N)


def test_step_case_a2_inward():
    ctx = DVRContext(2)
    L, M = cls(ctx, 1, 1, 1), cls(ctx, 4, 2, 1)
    N = vertex_for_subspace(M.canon, ResidueSubspace.span([(1, 0, 0), (0, 1, 0)], 2), ctx)
    step = classify_step(L, M, N)
    assert step.case == "A2" and (step.a, step.b) == (2, 1)
    assert step.predicted == 1 == distance(L, N)


def test_step_preconditions(ctx):
    L, L1, _ = standard(ctx)
    with pytest.raises(ValueError):
        classify_step(L, L, L1)


def test_step_table_exhaustive(ctx, rng):
    seen = set()
    for _ in range(10):
        L = random_class(rng, ctx, 2)
        M = random_walk(rng, L, rng.randint(1, 4))[-1]
        if M == L:
            continue
        a = distance(L, M)
        for N in neighbors(M):
            step = classify_step(L, M, N)
            seen.add(step.case)
            assert step.predicted == oracles.distance(L.canon, N.canon, ctx.p)
            assert step.predicted in (a - 1, a, a + 1)
    assert {"A1", "A2", "B1", "B2"} <= seen
