# What the complex looks like around one vertex.
from collections import Counter

from sl3building import (canonical_class, edge_orientation, faces_at_edge,
                         faces_at_vertex, neighbors, vertex_type)
from sl3building import matrix as mx
from sl3building.dvr import DVRContext

for p in (2, 3):
    ctx = DVRContext(p)
    L = canonical_class(mx.identity(), ctx)
    ns = neighbors(L)
    fs = faces_at_vertex(L)
    # neighbours come from lines and planes of F_p^3; faces from flags
    print(f"p={p}: {len(ns)} neighbours, {len(fs)} faces,",
          f"{len(faces_at_edge(edge_orientation(L, ns[0])))} faces per edge")
    print("  neighbour types:", dict(sorted(Counter(vertex_type(n) for n in ns).items())))

# Every edge carries a direction, and the three edges of a face chase
# each other around it: type 1 -> type 0 -> type 2 -> type 1.
ctx = DVRContext(2)
face = faces_at_vertex(canonical_class(mx.identity(), ctx))[5]
for e in face.edges():
    print(f"  {vertex_type(e.tail)} -> {vertex_type(e.head)}:",
          mx.format_matrix_inline(e.tail.canon), "=>", mx.format_matrix_inline(e.head.canon))
