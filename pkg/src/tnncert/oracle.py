"""Brute-force total non-negativity checks for small matrices.

Both routines return the first negative minor found, or None. Minors are
enumerated by size, then by row set in lexicographic order, then by column
set in lexicographic order, so a failing minor is reproducible.

The matrix is scaled to integers first (a positive scalar multiple has
minors of the same sign), and each size-s minor is obtained by expanding
along its last row or column from the memoised size-(s-1) minors.
"""

from __future__ import annotations

from itertools import combinations
from math import lcm
from typing import Optional

from .core import InputError, MinorSpec, SizeGuardError, as_rational

ALL_MINORS_MAX_N = 8
ANDO_MAX_N = 14


def _as_int_rows(matrix):
    rows = [[as_rational(x) for x in r] for r in matrix]
    size = len(rows)
    if size == 0 or any(len(r) != size for r in rows):
        raise InputError("matrix must be square and non-empty")
    d = lcm(*(x.denominator for r in rows for x in r))
    return [[x.numerator * (d // x.denominator) for x in r] for r in rows]


def all_minors_tnn(matrix) -> Optional[MinorSpec]:
    """First negative minor over every square submatrix, or None if TNN."""
    m = _as_int_rows(matrix)
    size = len(m)
    if size - 1 > ALL_MINORS_MAX_N:
        raise SizeGuardError(f"all-minors check is limited to n <= {ALL_MINORS_MAX_N}")
    idx = range(size)
    prev = {((), ()): 1}
    for s in range(1, size + 1):
        cur = {}
        col_sets = list(combinations(idx, s))
        for rows in combinations(idx, s):
            last = m[rows[-1]]
            head = rows[:-1]
            for cols in col_sets:
                total = 0
                for j, c in enumerate(cols):
                    x = last[c]
                    if x:
                        sub = prev[head, cols[:j] + cols[j + 1:]]
                        if sub:
                            total += x * sub if (s - 1 + j) % 2 == 0 else -x * sub
                if total < 0:
                    return MinorSpec(rows, cols)
                cur[rows, cols] = total
        prev = cur
    return None


def ando_tnn(matrix) -> Optional[MinorSpec]:
    """Reduced check for lower-triangular matrices.

    Only submatrices whose columns are 0..s-1 are examined, with every row
    set of size s.
    """
    m = _as_int_rows(matrix)
    size = len(m)
    if size - 1 > ANDO_MAX_N:
        raise SizeGuardError(f"reduced check is limited to n <= {ANDO_MAX_N}")
    if any(m[r][c] for r in range(size) for c in range(r + 1, size)):
        raise InputError("the reduced check needs a lower-triangular matrix")
    idx = range(size)
    prev = {(): 1}
    for s in range(1, size + 1):
        cur = {}
        c = s - 1
        cols = tuple(range(s))
        for rows in combinations(idx, s):
            total = 0
            for j, r in enumerate(rows):
                x = m[r][c]
                if x:
                    sub = prev[rows[:j] + rows[j + 1:]]
                    if sub:
                        total += x * sub if (j + c) % 2 == 0 else -x * sub
            if total < 0:
                return MinorSpec(rows, cols)
            cur[rows] = total
        prev = cur
    return None
