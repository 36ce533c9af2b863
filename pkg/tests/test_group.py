import random
from fractions import Fraction

import pytest

from sl3building import matrix as mx
from sl3building.building import is_face
from sl3building.dvr import DVRContext
from sl3building.group import (AmalgamWord, GroupElement, Intersection, SubgroupTag, act,
                               act_face, alpha, beta, check_without_inversion,
                               factor_in_amalgam, identity, in_intersection, in_stabilizer,
                               map_face_to_face, multiply_word, standard_face,
                               standard_vertex, word_is_valid)
from sl3building.lattice import distance, same_lattice, vertex_type
from sl3building.sampling import elementary, random_basis, random_class, random_gl3_o, random_sl3

import oracles


def sl3_o(rng, ctx):
    A = random_gl3_o(rng, ctx)
    return mx.mul(A, mx.diag(1 / mx.det(A), 1, 1))


def stabilizer_element(rng, ctx, tag):
    """Random element of G1, G2 or G3, by conjugating SL3(O)."""
    X = GroupElement(sl3_o(rng, ctx), ctx)
    c = {SubgroupTag.G1: identity(ctx), SubgroupTag.G2: alpha(ctx),
         SubgroupTag.G3: beta(ctx)}[tag]
    return c @ X @ c.inverse()


def stabilizer_product(rng, ctx, k=3):
    g = identity(ctx)
    for _ in range(k):
        g = g @ stabilizer_element(rng, ctx, rng.choice(list(SubgroupTag)))
    return g


def test_alpha_beta(ctx):
    assert alpha(ctx).det_val == 1
    assert beta(ctx).det_val == 2
    F = standard_face(ctx)
    assert is_face(*F.verts)
    L = F.verts[0]
    assert act(alpha(ctx), L) == F.verts[1]
    assert act(beta(ctx), L) == F.verts[2]
    assert act(identity(ctx), L) == L


def test_singular_element_rejected(ctx):
    with pytest.raises(ValueError):
        GroupElement(mx.diag(1, 0, 1), ctx)


def test_action_is_an_isometry(ctx, rng):
    for _ in range(100):
        g = GroupElement(random_basis(rng, ctx, 2), ctx)
        x, y = random_class(rng, ctx, 3), random_class(rng, ctx, 3)
        assert distance(act(g, x), act(g, y)) == oracles.distance(x.canon, y.canon, ctx.p)


def test_type_shift(ctx, rng):
    for _ in range(30):
        g = GroupElement(random_sl3(rng, ctx), ctx)
        x = random_class(rng, ctx)
        assert vertex_type(act(g, x)) == vertex_type(x)
        assert vertex_type(act(alpha(ctx), x)) == (vertex_type(x) + 1) % 3
        assert vertex_type(act(beta(ctx), x)) == (vertex_type(x) + 2) % 3


def test_orbit_discreteness(ctx, rng):
    for tag in SubgroupTag:
        v = standard_vertex(ctx, tag)
        for _ in range(10):
            g = stabilizer_element(rng, ctx, tag)
            assert act(g, v) == v
            assert same_lattice(mx.mul(g.mat, v.canon), v.canon, ctx)


def test_stabilizer_examples(ctx, rng):
    p = ctx.p
    assert in_stabilizer(GroupElement(sl3_o(rng, ctx), ctx), SubgroupTag.G1)
    e13 = GroupElement(elementary(0, 2, Fraction(1, p)), ctx)
    assert in_stabilizer(e13, SubgroupTag.G2)
    assert not in_stabilizer(e13, SubgroupTag.G1)
    with pytest.raises(ValueError):
        in_stabilizer(alpha(ctx), SubgroupTag.G1)


def test_stabilizer_matches_action(ctx, rng):
    hits = {t: 0 for t in SubgroupTag}
    for _ in range(100):
        g = stabilizer_product(rng, ctx, rng.randint(1, 2))
        for t in SubgroupTag:
            v = standard_vertex(ctx, t)
            fixed = act(g, v) == v
            assert in_stabilizer(g, t) == fixed
            hits[t] += fixed
    assert all(hits.values())


def test_intersection_examples(ctx):
    p = ctx.p
    for which in Intersection:
        assert in_intersection(identity(ctx), which)
    g = GroupElement(elementary(1, 0, p), ctx)
    assert in_intersection(g, Intersection.G123)
    assert not in_intersection(GroupElement(elementary(1, 0, 1), ctx), Intersection.G123)


def test_intersections_are_conjunctions(ctx, rng):
    pairs = {Intersection.G12: (SubgroupTag.G1, SubgroupTag.G2),
             Intersection.G13: (SubgroupTag.G1, SubgroupTag.G3),
             Intersection.G23: (SubgroupTag.G2, SubgroupTag.G3),
             Intersection.G123: tuple(SubgroupTag)}
    for _ in range(100):
        g = stabilizer_product(rng, ctx, rng.randint(1, 2))
        for which, tags in pairs.items():
            assert in_intersection(g, which) == all(in_stabilizer(g, t) for t in tags)


def test_map_face_to_itself(ctx):
    F = standard_face(ctx)
    phi = map_face_to_face(F, F)
    assert phi.is_special
    assert in_intersection(phi, Intersection.G123)


def test_map_face_to_face_random(ctx, rng):
    F0 = standard_face(ctx)
    for _ in range(20):
        f = act_face(GroupElement(random_basis(rng, ctx, 3), ctx), F0)
        g = act_face(GroupElement(random_basis(rng, ctx, 3), ctx), F0)
        phi = map_face_to_face(f, g)
        assert phi.is_special
        for v, w in zip(f.verts, g.verts):
            assert act(phi, v) == w and vertex_type(v) == vertex_type(w)


def test_check_without_inversion(ctx, rng):
    F = standard_face(ctx)
    assert check_without_inversion(identity(ctx), F)
    assert check_without_inversion(GroupElement(elementary(2, 0, ctx.p), ctx), F)
    with pytest.raises(ValueError):
        check_without_inversion(GroupElement(elementary(0, 1, Fraction(1, ctx.p)), ctx), F)
    with pytest.raises(ValueError):
        check_without_inversion(alpha(ctx), F)


def test_no_inversions_among_stabilizer_products():
    ctx = DVRContext(2)
    rng = random.Random(11)
    F = standard_face(ctx)
    preserving = 0
    for _ in range(1000):
        g = stabilizer_product(rng, ctx, 2)
        if act_face(g, F) == F:
            preserving += 1
            assert check_without_inversion(g, F)
    assert preserving > 0


def test_factor_examples(ctx, rng):
    g = GroupElement(sl3_o(rng, ctx), ctx)
    w = factor_in_amalgam(g)
    assert [t for t, _ in w.letters] == [SubgroupTag.G1] and w.letters[0][1] == g
    e13 = GroupElement(elementary(0, 2, Fraction(1, ctx.p)), ctx)
    w = factor_in_amalgam(e13)
    assert [t for t, _ in w.letters] == [SubgroupTag.G2]
    assert len(factor_in_amalgam(identity(ctx))) == 0
    with pytest.raises(ValueError, match="not in SL3"):
        factor_in_amalgam(alpha(ctx))


def test_factor_random(ctx, rng):
    L = standard_vertex(ctx, SubgroupTag.G1)
    for _ in range(40 if ctx.p == 2 else 15):
        g = GroupElement(random_sl3(rng, ctx), ctx)
        w = factor_in_amalgam(g)
        assert word_is_valid(w, g)
        assert multiply_word(w).mat == g.mat
        # each gallery step costs at most 3 rotations per path vertex
        d = distance(L, act(g, L))
        assert len(w) <= 3 * (d + 1) + 1


def test_multiply_word(ctx):
    assert multiply_word(AmalgamWord((), ctx)).is_identity()
    g = GroupElement(elementary(0, 1, 3), ctx)
    assert multiply_word(AmalgamWord(((SubgroupTag.G1, g),), ctx)) == g


def test_word_is_valid_catches_bad_tags(ctx):
    e13 = GroupElement(elementary(0, 2, Fraction(1, ctx.p)), ctx)
    assert not word_is_valid(AmalgamWord(((SubgroupTag.G1, e13),), ctx), e13)
    assert not word_is_valid(AmalgamWord(((SubgroupTag.G2, e13),), ctx), identity(ctx))
