# Lattice classes and the distance between them, at p = 3.
from fractions import Fraction

from sl3building import canonical_class, distance, tight_fit, adapted_bases, vertex_type
from sl3building import matrix as mx
from sl3building.dvr import DVRContext

ctx = DVRContext(3)

# A lattice is given by a basis (the columns).  Its class forgets scaling,
# and every class has one canonical lower-triangular basis.
B = mx.matrix([[3, 1, 0], [0, Fraction(1, 3), 2], [6, 0, 9]])
c = canonical_class(B, ctx)
print("basis:\n" + mx.format_matrix(B))
print("canonical:\n" + mx.format_matrix(c.canon))
print("scaling by 27 changes nothing:", canonical_class(mx.scale(B, 27), ctx) == c)
print("vertex type:", vertex_type(c))

# Distance: fit one lattice tightly inside the other, then read off the
# largest elementary divisor exponent.
L = canonical_class(mx.identity(), ctx)
M = canonical_class(mx.diag(9, 3, 1), ctx)
n, Mt = tight_fit(L.canon, M.canon, ctx)
E, ed = adapted_bases(L.canon, Mt, ctx)
print(f"tight fit scale n={n}, exponents a={ed.a} b={ed.b}")
print("d(L, M) =", distance(L, M), " d(M, L) =", distance(M, L))
print("d(L, c) =", distance(L, c))
