"""Small exact 3x3 matrix helpers over Fraction.

Matrices are tuples of row tuples.  A lattice basis is read column-wise:
column j is the j-th basis vector in the standard frame of K^3.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Iterable, Sequence, Tuple

from .dvr import format_scalar, parse_scalar

Matrix = Tuple[Tuple[Fraction, ...], ...]


def matrix(rows: Iterable[Iterable]) -> Matrix:
    out = tuple(tuple(Fraction(x) for x in row) for row in rows)
    if len(out) != 3 or any(len(r) != 3 for r in out):
        raise ValueError("expected a 3x3 matrix")
    return out


def identity() -> Matrix:
    return diag(1, 1, 1)


def diag(*d) -> Matrix:
    return tuple(tuple(Fraction(d[i]) if i == j else Fraction(0)
                       for j in range(3)) for i in range(3))


def from_columns(cols: Sequence[Sequence]) -> Matrix:
    return tuple(tuple(Fraction(cols[j][i]) for j in range(3)) for i in range(3))


def column(A: Matrix, j: int) -> Tuple[Fraction, ...]:
    return tuple(A[i][j] for i in range(3))


def transpose(A: Matrix) -> Matrix:
    return tuple(zip(*A))


def mul(A: Matrix, B: Matrix) -> Matrix:
    return tuple(tuple(sum(A[i][k] * B[k][j] for k in range(3))
                       for j in range(3)) for i in range(3))


def scale(A: Matrix, c) -> Matrix:
    c = Fraction(c)
    return tuple(tuple(c * x for x in row) for row in A)


def det(A: Matrix) -> Fraction:
    return (A[0][0] * (A[1][1] * A[2][2] - A[1][2] * A[2][1])
            - A[0][1] * (A[1][0] * A[2][2] - A[1][2] * A[2][0])
            + A[0][2] * (A[1][0] * A[2][1] - A[1][1] * A[2][0]))


def inverse(A: Matrix) -> Matrix:
    d = det(A)
    if d == 0:
        raise ValueError("singular matrix")
    cof = [[(A[(i + 1) % 3][(j + 1) % 3] * A[(i + 2) % 3][(j + 2) % 3]
             - A[(i + 1) % 3][(j + 2) % 3] * A[(i + 2) % 3][(j + 1) % 3])
            for j in range(3)] for i in range(3)]
    # inverse is the transposed cofactor matrix over det
    return tuple(tuple(cof[j][i] / d for j in range(3)) for i in range(3))


def entries(A: Matrix):
    for row in A:
        yield from row


# -- text and JSON forms ---------------------------------------------------

def parse_matrix(text: str) -> Matrix:
    """Parse 3 lines of 3 scalars, or a JSON array of 3 arrays of 3 strings."""
    stripped = text.strip()
    if stripped.startswith("["):
        return matrix_from_json(json.loads(stripped))
    lines = [ln for ln in stripped.splitlines() if ln.strip()]
    if len(lines) != 3:
        raise ValueError("matrix text must have 3 non-empty lines")
    rows = [ln.split() for ln in lines]
    if any(len(r) != 3 for r in rows):
        raise ValueError("each matrix line must have 3 entries")
    return matrix([[parse_scalar(t) for t in r] for r in rows])


def format_matrix(A: Matrix) -> str:
    return "\n".join(" ".join(format_scalar(x) for x in row) for row in A)


def format_matrix_inline(A: Matrix) -> str:
    return "; ".join(" ".join(format_scalar(x) for x in row) for row in A)


def matrix_to_json(A: Matrix) -> list:
    return [[format_scalar(x) for x in row] for row in A]


def matrix_from_json(obj) -> Matrix:
    if not isinstance(obj, list) or len(obj) != 3:
        raise ValueError("JSON matrix must be a list of 3 rows")
    rows = []
    for row in obj:
        if not isinstance(row, list) or len(row) != 3:
            raise ValueError("JSON matrix rows must have 3 entries")
        rows.append([parse_scalar(str(t)) for t in row])
    return matrix(rows)
