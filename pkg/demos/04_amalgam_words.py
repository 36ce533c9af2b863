# Factor elements of SL3(Q) over the stabilizers G1, G2, G3 of the
# standard face's vertices.
import random
from fractions import Fraction

from sl3building import GroupElement, factor_in_amalgam, multiply_word, word_is_valid
from sl3building import matrix as mx
from sl3building.dvr import DVRContext
from sl3building.sampling import elementary, random_sl3

ctx = DVRContext(2)

g = GroupElement(elementary(0, 2, Fraction(1, 2)), ctx)
w = factor_in_amalgam(g)
print("E13(1/2) ->", [tag.value for tag, _ in w.letters])

g = GroupElement(mx.mul(elementary(2, 0, Fraction(1, 4)), elementary(0, 1, 8)), ctx)
w = factor_in_amalgam(g)
for tag, x in w.letters:
    print(f"  {tag.value}: {mx.format_matrix_inline(x.mat)}")
print("product matches:", multiply_word(w).mat == g.mat)

rng = random.Random(1)
lengths = []
for _ in range(20):
    h = GroupElement(random_sl3(rng, ctx), ctx)
    word = factor_in_amalgam(h)
    assert word_is_valid(word, h)
    lengths.append(len(word))
print("word lengths for 20 random elements:", lengths)
