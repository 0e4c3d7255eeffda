"""Exact rational primitives shared by every other module.

Rationals are :class:`fractions.Fraction`, which is always kept in lowest
terms with a positive denominator. Floats are rejected at the boundary.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence, Tuple


class TNNError(Exception):
    """Base class for errors raised by this package."""


class InputError(TNNError, ValueError):
    """Malformed or out-of-range input."""


class SizeGuardError(TNNError):
    """An exponential-time routine was asked to run above its size guard."""


Rational = Fraction


def as_rational(value) -> Fraction:
    """Convert ``value`` to an exact rational.

    Accepts ints, Fractions and strings such as ``"3"``, ``"-2/7"`` or
    ``"0.25"`` (decimals are read exactly as written).
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise InputError(f"not a rational: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        raise InputError(f"floats are not accepted ({value!r}); pass a string like '0.5'")
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise InputError(f"cannot parse rational {value!r}") from exc
    raise InputError(f"not a rational: {value!r}")


def format_rational(q: Fraction) -> str:
    return str(q)


def parse_sequence(text: str) -> Tuple[Fraction, ...]:
    """Parse a comma-separated list of rationals, e.g. ``"3, -1/2, 0.5"``."""
    parts = [p for p in text.replace(";", ",").split(",")]
    if any(not p.strip() for p in parts):
        raise InputError(f"empty item in sequence {text!r}")
    return tuple(as_rational(p) for p in parts)


@dataclass(frozen=True)
class SequencePair:
    """The input sequences ``a`` and ``e``, both of length ``n >= 1``.

    Stored 0-based (``a[0]`` is a_1); the algorithms translate to 1-based
    indices internally.
    """

    a: Tuple[Fraction, ...]
    e: Tuple[Fraction, ...]

    def __post_init__(self):
        a = tuple(as_rational(x) for x in self.a)
        e = tuple(as_rational(x) for x in self.e)
        if len(a) != len(e):
            raise InputError(f"length mismatch: len(a)={len(a)}, len(e)={len(e)}")
        if not a:
            raise InputError("sequences must be non-empty")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "e", e)

    @property
    def n(self) -> int:
        return len(self.a)

    @classmethod
    def parse(cls, a: str, e: str) -> "SequencePair":
        return cls(parse_sequence(a), parse_sequence(e))


@dataclass(frozen=True)
class CobMatrix:
    """Lower unitriangular ``(n+1) x (n+1)`` matrix with rational entries.

    ``matrix[m, k]`` and ``matrix.rows[m][k]`` both address row m, column k
    (0-based, as in the change-of-basis indexing).
    """

    rows: Tuple[Tuple[Fraction, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(as_rational(x) for x in r) for r in self.rows)
        size = len(rows)
        if size == 0 or any(len(r) != size for r in rows):
            raise InputError("matrix must be square and non-empty")
        for m, row in enumerate(rows):
            if row[m] != 1:
                raise InputError(f"diagonal entry ({m},{m}) is {row[m]}, expected 1")
            if any(row[k] != 0 for k in range(m + 1, size)):
                raise InputError(f"row {m} has a non-zero entry above the diagonal")
        object.__setattr__(self, "rows", rows)

    @property
    def n(self) -> int:
        return len(self.rows) - 1

    def __getitem__(self, index):
        if isinstance(index, tuple):
            m, k = index
            return self.rows[m][k]
        return self.rows[index]

    def __iter__(self):
        return iter(self.rows)

    def __len__(self):
        return len(self.rows)


@dataclass(frozen=True)
class MinorSpec:
    """Sorted row and column index sets of a square submatrix."""

    rows: Tuple[int, ...]
    cols: Tuple[int, ...]

    def __post_init__(self):
        rows, cols = tuple(self.rows), tuple(self.cols)
        if len(rows) != len(cols) or not rows:
            raise InputError("a minor needs equally many rows and columns (at least one)")
        for name, idx in (("rows", rows), ("cols", cols)):
            if any(not isinstance(i, int) or i < 0 for i in idx):
                raise InputError(f"{name} must be non-negative integers")
            if any(x >= y for x, y in zip(idx, idx[1:])):
                raise InputError(f"{name} must be strictly increasing: {idx}")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)

    @classmethod
    def intervals(cls, row_lo: int, row_hi: int, col_lo: int, col_hi: int) -> "MinorSpec":
        return cls(tuple(range(row_lo, row_hi + 1)), tuple(range(col_lo, col_hi + 1)))

    @property
    def size(self) -> int:
        return len(self.rows)


def _bareiss(m: list) -> int:
    # fraction-free elimination on an integer matrix, mutates m
    n = len(m)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        rk = m[k]
        for i in range(k + 1, n):
            ri = m[i]
            rik = ri[k]
            for j in range(k + 1, n):
                ri[j] = (ri[j] * pivot - rik * rk[j]) // prev
        prev = pivot
    return sign * m[n - 1][n - 1]


def det(square: Sequence[Sequence]) -> Fraction:
    """Exact determinant of a square matrix of rationals.

    Each row is scaled to integers by the lcm of its denominators, then
    Bareiss elimination runs on plain ints.
    """
    size = len(square)
    if size == 0:
        return Fraction(1)
    scale = 1
    ints = []
    for row in square:
        if len(row) != size:
            raise InputError("determinant of a non-square matrix")
        row = [as_rational(x) for x in row]
        d = lcm(*(x.denominator for x in row))
        scale *= d
        ints.append([x.numerator * (d // x.denominator) for x in row])
    return Fraction(_bareiss(ints), scale)


def submatrix(matrix, rows: Iterable[int], cols: Iterable[int]) -> list:
    rows, cols = list(rows), list(cols)
    size = len(matrix)
    for i in rows + cols:
        if not 0 <= i < size:
            raise InputError(f"index {i} out of range 0..{size - 1}")
    return [[matrix[r][c] for c in cols] for r in rows]


def minor(matrix, spec: MinorSpec) -> Fraction:
    """Determinant of the square submatrix selected by ``spec``."""
    return det(submatrix(matrix, spec.rows, spec.cols))
