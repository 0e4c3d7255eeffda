import random
from fractions import Fraction
from itertools import combinations

import pytest

from conftest import random_pairs
from tnncert import (
    InputError,
    MinorSpec,
    PivotError,
    SequencePair,
    SizeGuardError,
    WeightArray,
    build_array,
    build_matrix,
    certify,
    enumerate_disjoint_path_systems,
    minor,
    path_matrix,
    pivot,
    triangle_decompose,
)
from tnncert.network import path_vertices

ACCEPT_ARRAY = [[1], [2, 6], [0, 7, 5], [-4, 5, 6, 3], [0, 1, 4, 4, 0], [-1, 5, 0, 2, 1, 5]]
AFTER_FIRST_PIVOT = [[1], [2, 6], [0, 7, 5], [0, 1, 6, 3], [0, 5, 0, 4, 0], [0, 4, 4, -2, 1, 5]]
AFTER_SECOND_PIVOT = [[1], [2, 6], [0, 7, 5], [0, 1, 6, 3], [0, 5, 0, 4, 0], [0, 4, 0, 2, 1, 5]]
# rows of the rejected example's array, from the expressions a_k - e_{m-k+1}
REJECT_ARRAY = [[11 - 10], [11 - 9, 8 - 10], [11 - 2, 8 - 9, 3 - 10], [11 - 1, 8 - 2, 3 - 9, 1 - 10]]


def as_lists(array):
    return [list(r) for r in array.rows]


def random_array(rng, n, lo=-3, hi=3):
    return WeightArray(tuple(tuple(Fraction(rng.randint(lo, hi)) for _ in range(m)) for m in range(1, n + 1)))


def test_weight_array_shape():
    with pytest.raises(InputError):
        WeightArray(((1,), (1,)))
    arr = WeightArray(((1,), (2, 3)))
    assert arr.n == 2 and arr[2, 1] == 2 and len(list(arr.positions())) == 3
    with pytest.raises(InputError):
        arr[1, 2]


def test_build_array_examples(accept_pair, reject_pair):
    assert as_lists(build_array(accept_pair)) == ACCEPT_ARRAY
    assert as_lists(build_array(accept_pair))[3] == [-4, 5, 6, 3]
    assert as_lists(build_array(reject_pair)) == REJECT_ARRAY
    const = SequencePair((2, 2, 2), (2, 2, 2))
    assert all(w == 0 for r in build_array(const).rows for w in r)


def test_path_matrix_three_term_entry():
    rng = random.Random(1)
    for _ in range(50):
        arr = random_array(rng, 4)
        x = lambda m, k: arr[m, k]
        assert path_matrix(arr)[3, 1] == x(3, 1) * x(2, 1) + x(3, 1) * x(2, 2) + x(3, 2) * x(2, 2)


def test_path_matrix_of_zero_array_is_identity():
    zero = WeightArray(tuple((0,) * m for m in range(1, 6)))
    M = path_matrix(zero)
    assert all(M[m, k] == (m == k) for m in range(6) for k in range(6))


def test_path_matrix_of_initial_array_is_cob_matrix(accept_pair):
    assert path_matrix(build_array(accept_pair)) == build_matrix(accept_pair)
    for pair in random_pairs(2, 500, rationals=True):
        assert path_matrix(build_array(pair)) == build_matrix(pair)


def test_path_matrix_matches_single_path_enumeration():
    rng = random.Random(3)
    for _ in range(30):
        n = rng.randint(1, 5)
        arr = random_array(rng, n)
        M = path_matrix(arr)
        for m in range(n + 1):
            for k in range(m + 1):
                total = sum(w for _, w in enumerate_disjoint_path_systems(arr, MinorSpec((m,), (k,))))
                assert total == M[m, k]


def test_triangle_at_top_is_gauge_shift_of_inputs(accept_pair):
    tri = triangle_decompose(build_array(accept_pair), 1, 1)
    a, e = accept_pair.a, accept_pair.e
    assert tri.f == tuple(x - e[0] for x in a)
    assert tri.g == tuple(x - e[0] for x in e)


def test_triangle_inconsistent():
    # f_1-g_1 + f_2-g_2 must equal f_1-g_2 + f_2-g_1 in any 2x2 block
    arr = WeightArray(((0,), (1, 0), (0, 0, 0)))
    assert triangle_decompose(arr, 1, 1) is None
    with pytest.raises(PivotError):
        pivot(arr, 1, 1)


def test_pivot_requires_zero_head(accept_pair):
    with pytest.raises(PivotError):
        pivot(build_array(accept_pair), 2, 1)


def test_pivot_sequence_reproduces_worked_arrays(accept_pair):
    first = pivot(build_array(accept_pair), 3, 1)
    assert as_lists(first) == AFTER_FIRST_PIVOT
    second = pivot(first, 5, 3)
    assert as_lists(second) == AFTER_SECOND_PIVOT
    # second pivot's triangle is an A(f,g) instance, as the first pivot promised
    assert triangle_decompose(first, 2, 2) is not None


def test_pivot_on_bottom_row_is_identity():
    arr = WeightArray(((1,), (2, 3), (4, 0, 5)))
    assert pivot(arr, 3, 2) == arr


def test_pivot_changes_only_the_triangle():
    rng = random.Random(9)
    for pair in random_pairs(13, 300):
        arr = build_array(pair)
        zeros = [(m, k) for (m, k) in arr.positions() if arr[m, k] == 0]
        if not zeros:
            continue
        m, k = rng.choice(zeros)
        out = pivot(arr, m, k)
        for (r, c) in arr.positions():
            inside = r > m and k <= c <= k + (r - m)
            if not inside:
                assert out[r, c] == arr[r, c]
        assert all(out[r, k] == 0 for r in range(m, pair.n + 1))
        assert path_matrix(out) == path_matrix(arr)


def test_pivot_drops_one_g_entry():
    # pivoting inside a triangle headed on the diagonal at [k,k] leaves an
    # A(f',g') triangle at [k+1,k+1] with g' = g minus one entry
    for pair in random_pairs(17, 300):
        arr = build_array(pair)
        n = pair.n
        tri = triangle_decompose(arr, 1, 1)
        zeros = [m for m in range(1, n + 1) if arr[m, 1] == 0]
        if not zeros or n < 2:
            continue
        m = zeros[0]
        out = pivot(arr, m, 1)
        new = triangle_decompose(out, 2, 2)
        assert new is not None
        g_rest = tri.g[: m - 1] + tri.g[m:]
        shift = g_rest[0]
        assert new.g == tuple(x - shift for x in g_rest)
        assert new.f == tuple(x - shift for x in tri.f[1:])


def test_every_certify_pivot_preserves_path_matrix():
    for pair in random_pairs(23, 500):
        cert = certify(pair)
        arr = build_array(pair)
        target = build_matrix(pair)
        for (m, k) in cert.pivots:
            arr = pivot(arr, m, k)
            assert path_matrix(arr) == target
        assert arr == cert.network


def test_path_vertices_geometry():
    # s_3 -> t_1 turning up at columns 1 then 2 on a 3-row network
    verts = path_vertices(3, 3, 1, [(3, 1), (2, 2)])
    assert verts == {(3, 1), (2, 1), (2, 2), (1, 2)}
    assert path_vertices(3, 0, 0, []) == {(0, 1)}


def test_enumeration_on_rejected_array(reject_pair):
    arr = build_array(reject_pair)
    systems = enumerate_disjoint_path_systems(arr, MinorSpec((1, 2), (0, 1)))
    assert sum(w for _, w in systems) == -2
    for system, _ in systems:
        assert (2, 2) in set(system.edges())


def test_enumeration_size_guard():
    arr = WeightArray(tuple((1,) * m for m in range(1, 12)))
    with pytest.raises(SizeGuardError):
        enumerate_disjoint_path_systems(arr, MinorSpec((1,), (0,)))


def test_zero_filter_drops_only_zero_weight_systems():
    rng = random.Random(31)
    for _ in range(30):
        arr = random_array(rng, 4, lo=-1, hi=2)
        spec = MinorSpec((2, 3, 4), (0, 1, 2))
        everything = enumerate_disjoint_path_systems(arr, spec)
        nonzero = enumerate_disjoint_path_systems(arr, spec, include_zero=False)
        assert [s for s, w in everything if w != 0] == [s for s, _ in nonzero]


def lindstrom_check(arr):
    n = arr.n
    M = path_matrix(arr)
    for size in range(1, n + 2):
        for rows in combinations(range(n + 1), size):
            for cols in combinations(range(n + 1), size):
                spec = MinorSpec(rows, cols)
                total = sum(w for _, w in enumerate_disjoint_path_systems(arr, spec))
                assert total == minor(M, spec)


def test_lindstrom_on_nonnegative_arrays():
    rng = random.Random(41)
    for _ in range(6):
        arr = random_array(rng, rng.randint(1, 4), lo=0, hi=3)
        lindstrom_check(arr)


def test_lindstrom_holds_for_signed_weights_too():
    rng = random.Random(43)
    for _ in range(4):
        lindstrom_check(random_array(rng, rng.randint(1, 4)))


def test_lindstrom_random_consecutive_specs_n5():
    rng = random.Random(47)
    for _ in range(40):
        arr = random_array(rng, 5, lo=0, hi=3)
        size = rng.randint(1, 4)
        r0 = rng.randint(0, 6 - size)
        c0 = rng.randint(0, 6 - size)
        spec = MinorSpec.intervals(r0, r0 + size - 1, c0, c0 + size - 1)
        systems = enumerate_disjoint_path_systems(arr, spec)
        assert sum(w for _, w in systems) == minor(path_matrix(arr), spec) >= 0
