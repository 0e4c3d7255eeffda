"""Construction of the change-of-basis matrix and its classical families."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Optional, Tuple

from .core import CobMatrix, InputError, SequencePair, SizeGuardError

SUBSET_SUM_MAX_N = 12

FAMILIES = ("binomial", "stirling2", "stirling1", "lah", "ferrers_rook", "central_factorial")


def build_matrix(pair: SequencePair) -> CobMatrix:
    """Build M_{e->a} from the three-term recurrence.

    Row m is obtained from row m-1 via
    ``M(m,k) = M(m-1,k-1) + (a_{k+1} - e_m) M(m-1,k)`` with
    ``M(m,0) = (a_1 - e_m) M(m-1,0)``.
    """
    a, e, n = pair.a, pair.e, pair.n
    zero, one = Fraction(0), Fraction(1)
    prev = [one] + [zero] * n
    rows = [tuple(prev)]
    for m in range(1, n + 1):
        em = e[m - 1]
        row = [zero] * (n + 1)
        row[0] = (a[0] - em) * prev[0]
        for k in range(1, m):
            row[k] = prev[k - 1] + (a[k] - em) * prev[k]
        row[m] = one
        rows.append(tuple(row))
        prev = row
    return CobMatrix(tuple(rows))


def _check_index(pair: SequencePair, m: int, k: int) -> None:
    if not 0 <= k <= m <= pair.n:
        raise InputError(f"need 0 <= k <= m <= {pair.n}, got m={m}, k={k}")


def entry_by_subset_sum(pair: SequencePair, m: int, k: int) -> Fraction:
    """Entry (m,k) as a sum over (m-k)-subsets of {1..m}.

    Exponential in m; refuses n > 12.
    """
    if pair.n > SUBSET_SUM_MAX_N:
        raise SizeGuardError(f"subset-sum expansion is limited to n <= {SUBSET_SUM_MAX_N}")
    _check_index(pair, m, k)
    a, e = pair.a, pair.e
    total = Fraction(0)
    for subset in combinations(range(1, m + 1), m - k):
        term = Fraction(1)
        for i, s in enumerate(subset, start=1):
            term *= a[s - i] - e[s - 1]
        total += term
    return total


def _complete_homogeneous(xs, degree: int) -> list:
    # h_0..h_degree of xs
    h = [Fraction(1)] + [Fraction(0)] * degree
    for x in xs:
        for d in range(1, degree + 1):
            h[d] += x * h[d - 1]
    return h


def _elementary(xs, degree: int) -> list:
    s = [Fraction(1)] + [Fraction(0)] * degree
    for x in xs:
        for d in range(degree, 0, -1):
            s[d] += x * s[d - 1]
    return s


def entry_by_symmetric_polys(pair: SequencePair, m: int, k: int) -> Fraction:
    """Entry (m,k) via complete and elementary symmetric polynomials.

    ``sum_l (-1)^l h_{m-k-l}(a_1..a_{k+1}) s_l(e_1..e_m)``
    """
    _check_index(pair, m, k)
    d = m - k
    h = _complete_homogeneous(pair.a[: k + 1], d)
    s = _elementary(pair.e[:m], d)
    return sum(((-1) ** l * h[d - l] * s[l] for l in range(d + 1)), Fraction(0))


@dataclass(frozen=True)
class FamilySpec:
    kind: str
    n: int
    b: Optional[Tuple[int, ...]] = None

    def __post_init__(self):
        if self.kind not in FAMILIES:
            raise InputError(f"unknown family {self.kind!r}; choose from {', '.join(FAMILIES)}")
        if not isinstance(self.n, int) or self.n < 1:
            raise InputError("family size n must be a positive integer")
        if self.kind == "ferrers_rook":
            if self.b is None:
                raise InputError("ferrers_rook needs the column heights b")
            b = tuple(self.b)
            if len(b) != self.n:
                raise InputError(f"b must have length n={self.n}, got {len(b)}")
            if any(not isinstance(x, int) or x < 0 for x in b):
                raise InputError("b must consist of non-negative integers")
            if any(x > y for x, y in zip(b, b[1:])):
                raise InputError("b must be non-decreasing")
            object.__setattr__(self, "b", b)
        elif self.b is not None:
            raise InputError(f"b is only meaningful for ferrers_rook, not {self.kind}")


def family_sequences(spec: FamilySpec) -> SequencePair:
    n = spec.n
    idx = range(1, n + 1)
    if spec.kind == "binomial":
        a, e = [0] * n, [-1] * n
    elif spec.kind == "stirling2":
        a, e = [i - 1 for i in idx], [0] * n
    elif spec.kind == "stirling1":
        a, e = [0] * n, [-(i - 1) for i in idx]
    elif spec.kind == "lah":
        a, e = [i - 1 for i in idx], [-(i - 1) for i in idx]
    elif spec.kind == "ferrers_rook":
        a, e = [i - 1 for i in idx], [i - 1 - spec.b[i - 1] for i in idx]
    else:  # central_factorial
        a, e = [(i - 1) ** 2 for i in idx], [0] * n
    return SequencePair(tuple(a), tuple(e))
