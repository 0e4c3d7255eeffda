"""Decide total non-negativity of M_{e->a} and produce a checkable witness.

A TNN verdict comes with a weight array whose weights are all >= 0 and whose
path matrix is M_{e->a}; a NOT_TNN verdict comes with consecutive rows and
columns of M_{e->a} whose minor is negative.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Tuple

from .core import MinorSpec, SequencePair, TNNError, minor
from .growth import DELETE_LAST, DELETE_MATCH, STOP, rg_check
from .network import Position, WeightArray, build_array, path_matrix, pivot

TNN = "TNN"
NOT_TNN = "NOT_TNN"


class WitnessError(TNNError, AssertionError):
    """The array handed to the minor extraction is not in a stopping state."""


@dataclass(frozen=True)
class NegativeMinorWitness:
    rows: Tuple[int, int]
    cols: Tuple[int, int]
    marked_edges: Tuple[Position, ...]
    final_array: WeightArray
    minor_value: Fraction

    @property
    def spec(self) -> MinorSpec:
        return MinorSpec.intervals(*self.rows, *self.cols)

    @property
    def sources(self) -> Tuple[int, ...]:
        return self.spec.rows

    @property
    def sinks(self) -> Tuple[int, ...]:
        return self.spec.cols


@dataclass(frozen=True)
class Certificate:
    """Outcome of certification.

    ``network`` is the final weight array in both cases (the TNN witness when
    ``verdict == TNN``). ``pivots`` lists the pivot positions in the order
    they were applied to A(a, e).
    """

    verdict: str
    pair: SequencePair
    network: WeightArray
    witness: Optional[NegativeMinorWitness] = None
    pivots: Tuple[Position, ...] = ()
    inspections: int = field(default=0, compare=False)

    @property
    def is_tnn(self) -> bool:
        return self.verdict == TNN


def certify(pair: SequencePair) -> Certificate:
    """Scan the columns of A(a,e) left to right, top to bottom.

    A column of positive weights is left as is. The first non-positive weight
    in a column decides: a zero is pivoted on (which zeroes the rest of the
    column) and a negative stops with NOT_TNN. Reaching the end gives TNN.
    """
    array = build_array(pair)
    n = pair.n
    pivots = []
    inspections = 0
    for k in range(1, n + 1):
        for m in range(k, n + 1):
            w = array.rows[m - 1][k - 1]
            inspections += 1
            if w > 0:
                continue
            if w < 0:
                witness = extract_negative_minor(array, m, k)
                return Certificate(NOT_TNN, pair, array, witness, tuple(pivots), inspections)
            # PivotError here would mean the triangle invariant broke
            array = pivot(array, m, k)
            pivots.append((m, k))
            break
    return Certificate(TNN, pair, array, None, tuple(pivots), inspections)


def mark_edges(array: WeightArray, m: int, k0: int) -> Tuple[Position, ...]:
    """Marked edges [m,k0], [m-1,k_1], ... with each k_j < k_{j-1} maximal
    such that the edge weight is positive."""
    marks = [(m, k0)]
    col = k0
    rows = array.rows
    for r in range(m - 1, 0, -1):
        c = min(col - 1, r)
        while c >= 1 and not rows[r - 1][c - 1] > 0:
            c -= 1
        if c < 1:
            break
        marks.append((r, c))
        col = c
    return tuple(marks)


def extract_negative_minor(final_array: WeightArray, m: int, k0: int) -> NegativeMinorWitness:
    """Turn the stopping state at the negative [m,k0] edge into a minor.

    With l+1 marked edges the witness uses rows m-l..m and columns
    k0-1-l..k0-1. The minor is evaluated on the path matrix of
    ``final_array``.
    """
    rows = final_array.rows
    if not 1 <= k0 <= m <= final_array.n:
        raise WitnessError(f"[{m},{k0}] is not a position of the array")
    if not rows[m - 1][k0 - 1] < 0:
        raise WitnessError(f"weight at [{m},{k0}] is not negative")
    if any(not rows[r - 1][k0 - 1] > 0 for r in range(k0, m)):
        raise WitnessError(f"column {k0} has a non-positive weight above row {m}")
    for r in range(1, final_array.n + 1):
        if any(w < 0 for w in rows[r - 1][: min(r, k0 - 1)]):
            raise WitnessError(f"a column left of {k0} has a negative weight")
    marks = mark_edges(final_array, m, k0)
    ell = len(marks) - 1
    k = k0 - 1
    spec = MinorSpec.intervals(m - ell, m, k - ell, k)
    value = minor(path_matrix(final_array), spec)
    if not value < 0:
        raise WitnessError(f"extracted minor {spec} has value {value} >= 0")
    return NegativeMinorWitness((m - ell, m), (k - ell, k), marks, final_array, value)


def fast_certificate_from_rg(pair: SequencePair) -> Certificate:
    """Build the certificate directly from the restricted-growth trace.

    Column i of the final array reads a_i - X_j down the rows, where X is the
    list before step i; on a match at position p the weights from row i+p
    downward are zero instead. On rejection at step i the columns from i on
    are read off the surviving list as a_c - X_{r-c+1}, which is the state
    in which the column scan stops.
    """
    report = rg_check(pair)
    n = pair.n
    a = pair.a
    zero = Fraction(0)
    cols = {}
    pivots = []
    for step in report.trace:
        i, x = step.i, step.x_before
        if step.action == STOP:
            for c in range(i, n + 1):
                for r in range(c, n + 1):
                    cols[r, c] = a[c - 1] - x[r - c]
            array = _assemble(n, cols)
            witness = extract_negative_minor(array, i + step.position - 1, i)
            return Certificate(NOT_TNN, pair, array, witness, tuple(pivots), len(cols))
        last = n if step.action == DELETE_LAST else i + step.position - 1
        for r in range(i, last + 1):
            cols[r, i] = a[i - 1] - x[r - i]
        for r in range(last + 1, n + 1):
            cols[r, i] = zero
        if step.action == DELETE_MATCH:
            pivots.append((last, i))
    return Certificate(TNN, pair, _assemble(n, cols), None, tuple(pivots), len(cols))


def _assemble(n: int, cols) -> WeightArray:
    return WeightArray(tuple(tuple(cols[m, k] for k in range(1, m + 1)) for m in range(1, n + 1)))
