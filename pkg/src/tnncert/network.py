"""The staircase planar network and its triangular weight array.

The network has sources s_0..s_n on the left and sinks t_0..t_n on the right,
one horizontal line per index, all horizontal edges of weight 1 and oriented
rightwards. Vertical line c (1 <= c <= n) runs upward from row n to row c-1;
its edge from row m to row m-1 is the ``[m, c]`` edge, with weight
``array[m, c]``. A path from s_m to t_k therefore picks one vertical edge
``[r, c_r]`` in each row r = m, m-1, ..., k+1 with ``c_m <= ... <= c_{k+1}``
and ``c_r <= r``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from .core import CobMatrix, InputError, MinorSpec, SequencePair, SizeGuardError, TNNError, as_rational

ENUMERATION_MAX_N = 10

Position = Tuple[int, int]


class PivotError(TNNError, AssertionError):
    """Pivot requested where the triangle is not of the required form."""


@dataclass(frozen=True)
class WeightArray:
    """Triangular array of vertical edge weights; ``rows[m-1][k-1]`` is [m,k]."""

    rows: Tuple[Tuple[Fraction, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(as_rational(x) for x in r) for r in self.rows)
        if not rows:
            raise InputError("weight array must have at least one row")
        for m, row in enumerate(rows, start=1):
            if len(row) != m:
                raise InputError(f"row {m} of the weight array has {len(row)} weights, expected {m}")
        object.__setattr__(self, "rows", rows)

    @property
    def n(self) -> int:
        return len(self.rows)

    def __getitem__(self, pos: Position) -> Fraction:
        m, k = pos
        if not 1 <= k <= m <= self.n:
            raise InputError(f"[{m},{k}] is not a position of an array with n={self.n}")
        return self.rows[m - 1][k - 1]

    def positions(self) -> Iterator[Position]:
        for m in range(1, self.n + 1):
            for k in range(1, m + 1):
                yield m, k

    def column(self, k: int) -> Tuple[Fraction, ...]:
        return tuple(self.rows[m - 1][k - 1] for m in range(k, self.n + 1))

    def replace(self, updates: Dict[Position, Fraction]) -> "WeightArray":
        rows = [list(r) for r in self.rows]
        for (m, k), w in updates.items():
            rows[m - 1][k - 1] = w
        return WeightArray(tuple(tuple(r) for r in rows))

    def is_nonnegative(self) -> bool:
        return all(w >= 0 for row in self.rows for w in row)

    def negative_positions(self) -> List[Position]:
        return [p for p in self.positions() if self[p] < 0]


@dataclass(frozen=True)
class TriangleInstance:
    """Witness that the triangle headed at [m,k] has the form A(f, g).

    The weight at ``[m+l1, k+l2]`` equals ``f[l2] - g[l1-l2]`` (0-based
    lists). Only differences are determined, so ``g[0]`` is fixed to 0.
    """

    m: int
    k: int
    f: Tuple[Fraction, ...]
    g: Tuple[Fraction, ...]


@dataclass(frozen=True)
class PathSystem:
    """Vertex-disjoint paths, one per (source, sink) pair.

    Each path is recorded as its vertical edges, bottom row first.
    """

    sources: Tuple[int, ...]
    sinks: Tuple[int, ...]
    paths: Tuple[Tuple[Position, ...], ...]

    def edges(self) -> Iterator[Position]:
        for p in self.paths:
            yield from p


def build_array(pair: SequencePair) -> WeightArray:
    """The array A(a,e): weight a_k - e_{m-k+1} at [m,k]."""
    a, e = pair.a, pair.e
    return WeightArray(tuple(
        tuple(a[k - 1] - e[m - k] for k in range(1, m + 1))
        for m in range(1, pair.n + 1)
    ))


def path_matrix(array: WeightArray) -> CobMatrix:
    """Sum of path weights from s_m to t_k for every (m, k).

    For each source the sweep goes up one row at a time, carrying the total
    weight of partial paths by the column of their last vertical edge; a
    running prefix sum enforces the non-decreasing column order. O(n^2) per
    source.
    """
    n = array.n
    zero = Fraction(0)
    out = [[zero] * (n + 1) for _ in range(n + 1)]
    for m in range(n + 1):
        out[m][m] = Fraction(1)
        # by_col[c]: weight of partial paths currently at row r whose last
        # vertical edge sits in column c; the fresh source may start anywhere
        by_col = [zero] * (n + 2)
        by_col[1] = Fraction(1)
        for r in range(m, 0, -1):
            weights = array.rows[r - 1]
            nxt = [zero] * (n + 2)
            running = zero
            total = zero
            for c in range(1, r + 1):
                running += by_col[c]
                if running:
                    w = running * weights[c - 1]
                    nxt[c] = w
                    total += w
            out[m][r - 1] = total
            by_col = nxt
    return CobMatrix(tuple(tuple(r) for r in out))


def triangle_decompose(array: WeightArray, m: int, k: int) -> Optional[TriangleInstance]:
    """Find (f, g) with g[0] = 0 such that the triangle at [m,k] is A(f, g).

    The diagonal of the triangle fixes f and its first column fixes g; every
    other weight is then checked. Returns None when they are inconsistent.
    """
    n = array.n
    if not 1 <= k <= m <= n:
        raise InputError(f"[{m},{k}] is not a position of an array with n={n}")
    size = n - m + 1
    w = array.rows
    f = tuple(w[m + j - 1][k + j - 1] for j in range(size))
    g = tuple(f[0] - w[m + l - 1][k - 1] for l in range(size))
    for l1 in range(size):
        row = w[m + l1 - 1]
        for l2 in range(l1 + 1):
            if row[k + l2 - 1] != f[l2] - g[l1 - l2]:
                return None
    return TriangleInstance(m, k, f, g)


def pivot(array: WeightArray, m: int, k: int) -> WeightArray:
    """Pivot on the zero at [m,k].

    Within each row below the head of the triangle, the -g_1 term moves from
    the last position to the first and the other -g_j shift one place right.
    Everything outside the triangle, and the head itself, is left alone.
    The path matrix is unchanged.
    """
    tri = triangle_decompose(array, m, k)
    if tri is None:
        raise PivotError(f"triangle headed at [{m},{k}] is not of the form A(f,g)")
    if tri.f[0] != tri.g[0]:
        raise PivotError(f"pivot needs a zero weight at [{m},{k}], found {array[m, k]}")
    f, g = tri.f, tri.g
    updates = {}
    for l in range(1, array.n - m + 1):
        updates[m + l, k] = f[0] - g[0]
        for j in range(1, l + 1):
            updates[m + l, k + j] = f[j] - g[l + 1 - j]
    return array.replace(updates)


def _paths(array: WeightArray, source: int, sink: int, skip_zero: bool):
    # all column sequences c_source <= ... <= c_{sink+1} with c_r <= r
    out = []
    rows = array.rows

    def extend(r, lo, acc, weight):
        if r == sink:
            out.append((tuple(acc), weight))
            return
        for c in range(lo, r + 1):
            w = rows[r - 1][c - 1]
            if skip_zero and w == 0:
                continue
            acc.append((r, c))
            extend(r - 1, c, acc, weight * w)
            acc.pop()

    extend(source, 1, [], Fraction(1))
    return out


def path_vertices(n: int, source: int, sink: int, edges: Sequence[Position]) -> frozenset:
    """Interior grid vertices visited by a path, as (row, vertical line) pairs.

    Vertex (r, c) is where horizontal line r meets vertical line c; it exists
    when c - 1 <= r. Sources and sinks are distinct per path and omitted.
    """
    verts = set()
    start = 1
    r = source
    for (row, c) in edges:
        verts.update((row, x) for x in range(start, c + 1))
        start = c
        r = row - 1
    verts.update((r, x) for x in range(start, min(n, r + 1) + 1))
    return frozenset(verts)


def enumerate_disjoint_path_systems(
    array: WeightArray, spec: MinorSpec, include_zero: bool = True
) -> List[Tuple[PathSystem, Fraction]]:
    """All vertex-disjoint path systems from ``spec.rows`` to ``spec.cols``.

    Sources are matched to sinks in increasing order; in this planar network
    no other matching admits disjoint paths. With ``include_zero=False``,
    systems using a zero-weight edge are dropped.
    """
    n = array.n
    if n > ENUMERATION_MAX_N:
        raise SizeGuardError(f"path enumeration is limited to n <= {ENUMERATION_MAX_N}")
    for i in spec.rows + spec.cols:
        if i > n:
            raise InputError(f"index {i} out of range 0..{n}")
    pairs = list(zip(spec.rows, spec.cols))
    candidates = []
    for s, t in pairs:
        if t > s:
            return []
        candidates.append([
            (edges, w, path_vertices(n, s, t, edges))
            for edges, w in _paths(array, s, t, skip_zero=not include_zero)
        ])

    results = []
    chosen = []

    def backtrack(idx, used, weight):
        if idx == len(pairs):
            system = PathSystem(tuple(spec.rows), tuple(spec.cols), tuple(e for e, _ in chosen))
            results.append((system, weight))
            return
        for edges, w, verts in candidates[idx]:
            if used.isdisjoint(verts):
                chosen.append((edges, w))
                backtrack(idx + 1, used | verts, weight * w)
                chosen.pop()

    backtrack(0, frozenset(), Fraction(1))
    return results
