"""Seeded random instances: bases, classes, walks, loops, SL3 elements."""

from __future__ import annotations

import random
from fractions import Fraction
from typing import List

from . import matrix as mx
from .building import EdgePath, connecting_path, neighbors
from .dvr import DVRContext
from .lattice import LatticeClass, canonical_class
from .matrix import Matrix


def random_unit(rng: random.Random, ctx: DVRContext, bound: int = 10) -> Fraction:
    while True:
        num = rng.randint(1, bound) * rng.choice((1, -1))
        den = rng.randint(1, bound)
        if num % ctx.p and den % ctx.p:
            return Fraction(num, den)


def random_gl3_o(rng: random.Random, ctx: DVRContext, steps: int = 6) -> Matrix:
    """Random element of GL3(O): elementary moves with integral entries and unit scalings."""
    A = mx.diag(*(random_unit(rng, ctx) for _ in range(3)))
    for _ in range(steps):
        i, j = rng.sample(range(3), 2)
        x = Fraction(rng.randint(-3 * ctx.p, 3 * ctx.p)) * ctx.power(rng.randint(0, 2))
        A = mx.mul(A, elementary(i, j, x))
    perm = rng.sample(range(3), 3)
    return mx.from_columns([mx.column(A, k) for k in perm])


def elementary(i: int, j: int, x) -> Matrix:
    rows = [[Fraction(int(r == c)) for c in range(3)] for r in range(3)]
    rows[i][j] = Fraction(x)
    return mx.matrix(rows)


def random_basis(rng: random.Random, ctx: DVRContext, max_val: int = 5) -> Matrix:
    """U * diag(p^e) * V with U, V in GL3(O) and |e_i| <= max_val."""
    d = mx.diag(*(ctx.power(rng.randint(-max_val, max_val)) for _ in range(3)))
    return mx.mul(mx.mul(random_gl3_o(rng, ctx), d), random_gl3_o(rng, ctx))


def random_class(rng: random.Random, ctx: DVRContext, max_val: int = 5) -> LatticeClass:
    return canonical_class(random_basis(rng, ctx, max_val), ctx)


def random_walk(rng: random.Random, start: LatticeClass, length: int) -> List[LatticeClass]:
    verts = [start]
    for _ in range(length):
        verts.append(rng.choice(neighbors(verts[-1])))
    return verts


def random_loop(rng: random.Random, start: LatticeClass, walk_length: int) -> EdgePath:
    """A random walk closed up by the geodesic back to its start."""
    verts = random_walk(rng, start, walk_length)
    back = connecting_path(verts[-1], start).verts
    return EdgePath(tuple(verts) + back[1:])


def random_sl3(rng: random.Random, ctx: DVRContext, max_factors: int = 8,
               max_val: int = 2) -> Matrix:
    """Product of 1..max_factors elementary matrices, entries u*p^v, |v| <= max_val."""
    A = mx.identity()
    for _ in range(rng.randint(1, max_factors)):
        i, j = rng.sample(range(3), 2)
        x = random_unit(rng, ctx, bound=3 * ctx.p) * ctx.power(rng.randint(-max_val, max_val))
        A = mx.mul(A, elementary(i, j, x))
    return A
