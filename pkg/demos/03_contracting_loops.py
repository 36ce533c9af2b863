# Every closed edge path contracts; here is the certificate for one.
import random

from sl3building import contract_loop, verify_moves, contraction_measure
from sl3building.homotopy import MoveKind, apply_move
from sl3building.dvr import DVRContext
from sl3building.sampling import random_class, random_loop

ctx = DVRContext(2)
rng = random.Random(7)
loop = random_loop(rng, random_class(rng, ctx, 2), 5)
print("loop length:", loop.length)

moves = contract_loop(loop)
verts = loop.verts
for m in moves:
    if m.kind is not MoveKind.BACKTRACK_RETRACT:
        # each phase lowers (length, n_P) lexicographically
        cm = contraction_measure(verts)
        print(f"  measure ({cm.length}, {cm.n_p})  {m.kind.value} at {m.at}")
    verts = apply_move(verts, m)
print("remaining vertices:", len(verts))
print("certificate checks out:", verify_moves(loop, moves))
