"""Exact computations in the building of SL3 over Z localized at a prime.

Lattice classes, their distance and canonical forms, the simplicial
complex they span, certified contraction of closed edge paths, and
factorization of SL3(Q) elements over three vertex stabilizers.
"""

from .dvr import DVRContext, format_scalar, is_prime, parse_scalar
from .matrix import (diag, format_matrix, format_matrix_inline, identity,
                     parse_matrix)
from .lattice import (ElementaryDivisors, LatticeClass, adapted_bases,
                      canonical_class, contains, distance, smith_form,
                      tight_fit, vertex_type)
from .building import (Edge, EdgePath, Face, StepClass, classify_step,
                       connecting_path, edge_orientation, faces_at_edge,
                       faces_at_vertex, is_adjacent, is_face, neighbors)
from .homotopy import (ContractionError, ContractionMeasure, ContractionMove,
                       InvalidMove, MoveKind, apply_move, contract_loop,
                       contraction_measure, n_p, replay, verify_moves)
from .group import (AmalgamWord, GroupElement, Intersection, SubgroupTag, act,
                    act_face, alpha, beta, check_without_inversion,
                    factor_in_amalgam, in_intersection, in_stabilizer,
                    map_face_to_face, multiply_word, standard_face,
                    word_is_valid)

__version__ = "0.1.0"
