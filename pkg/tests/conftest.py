import random
from fractions import Fraction
from itertools import permutations

import pytest

from tnncert import SequencePair

ACCEPT_A = (3, 8, 7, 5, 2, 7)
ACCEPT_E = (2, 1, 3, 7, 3, 4)
REJECT_A = (11, 8, 3, 1)
REJECT_E = (10, 9, 2, 1)

ACCEPT_MATRIX = [
    [1, 0, 0, 0, 0, 0, 0],
    [1, 1, 0, 0, 0, 0, 0],
    [2, 8, 1, 0, 0, 0, 0],
    [0, 42, 12, 1, 0, 0, 0],
    [0, 42, 42, 10, 1, 0, 0],
    [0, 210, 210, 62, 9, 1, 0],
    [0, 840, 840, 272, 44, 12, 1],
]
REJECT_MATRIX = [
    [1, 0, 0, 0, 0],
    [1, 1, 0, 0, 0],
    [2, 0, 1, 0, 0],
    [18, 2, 1, 1, 0],
    [180, 32, 4, 1, 1],
]


@pytest.fixture
def accept_pair():
    return SequencePair(ACCEPT_A, ACCEPT_E)


@pytest.fixture
def reject_pair():
    return SequencePair(REJECT_A, REJECT_E)


def random_pair(rng, max_n=6, bound=5, rationals=False):
    n = rng.randint(1, max_n)
    # narrow ranges make ties (and hence pivots and acceptances) common
    r = rng.choice([1, 2, bound])

    def draw():
        x = Fraction(rng.randint(-r, r))
        if rationals and rng.random() < 0.3:
            x /= rng.choice([2, 3])
        return x

    return SequencePair(tuple(draw() for _ in range(n)), tuple(draw() for _ in range(n)))


def random_pairs(seed, count, **kw):
    rng = random.Random(seed)
    return [random_pair(rng, **kw) for _ in range(count)]


def cofactor_det(rows):
    """Laplace expansion along the first row; independent of the library."""
    if not rows:
        return Fraction(1)
    if len(rows) == 1:
        return Fraction(rows[0][0])
    total = Fraction(0)
    for j, x in enumerate(rows[0]):
        if x:
            sub = [r[:j] + r[j + 1:] for r in rows[1:]]
            total += (-1) ** j * x * cofactor_det(sub)
    return total


def set_partitions(items):
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in set_partitions(rest):
        yield [[first]] + part
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1:]


def cycle_count(perm):
    seen = set()
    cycles = 0
    for start in range(len(perm)):
        if start not in seen:
            cycles += 1
            j = start
            while j not in seen:
                seen.add(j)
                j = perm[j]
    return cycles


def stirling1_brute(m, k):
    return sum(1 for p in permutations(range(m)) if cycle_count(p) == k)


def stirling2_brute(m, k):
    return sum(1 for p in set_partitions(list(range(m))) if len(p) == k)


def rook_count(heights, r):
    """Non-attacking placements of r rooks on columns of the given heights."""
    def place(col, used, left):
        if left == 0:
            return 1
        if col == len(heights):
            return 0
        total = place(col + 1, used, left)
        for row in range(heights[col]):
            if row not in used:
                total += place(col + 1, used | {row}, left - 1)
        return total

    return place(0, frozenset(), r)
