import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from conftest import random_pairs
from tnncert import InputError, SequencePair, rg_check, rg_check_monotone
from tnncert.growth import DELETE_LAST, DELETE_MATCH, STOP


def test_accepting_trace(accept_pair):
    rep = rg_check(accept_pair)
    assert rep.report == 7 and rep.accepted
    assert [s.x_before for s in rep.trace] == [
        (2, 1, 3, 7, 3, 4), (2, 1, 7, 3, 4), (2, 1, 7, 3), (2, 1, 3), (2, 1), (1,),
    ]
    assert [(s.action, s.position) for s in rep.trace] == [
        (DELETE_MATCH, 3), (DELETE_LAST, None), (DELETE_MATCH, 3),
        (DELETE_LAST, None), (DELETE_MATCH, 1), (DELETE_LAST, None),
    ]


def test_rejecting_trace(reject_pair):
    rep = rg_check(reject_pair)
    assert rep.report == 2 and not rep.accepted
    assert [(s.i, s.x_before, s.action, s.position) for s in rep.trace] == [
        (1, (10, 9, 2, 1), DELETE_LAST, None),
        (2, (10, 9, 2), STOP, 1),
    ]


def test_equal_sequences_accept_with_head_matches():
    a = (Fraction(1, 3), -2, 5, 5, 0)
    rep = rg_check(SequencePair(a, a))
    assert rep.accepted
    assert all(s.action == DELETE_MATCH and s.position == 1 for s in rep.trace)


def test_trace_shape_and_comparison_bound():
    for pair in random_pairs(21, 400, rationals=True):
        rep = rg_check(pair)
        n = pair.n
        assert rep.accepted == (rep.report == n + 1)
        for s in rep.trace:
            assert len(s.x_before) == n - (s.i - 1)
        assert [s.i for s in rep.trace] == list(range(1, len(rep.trace) + 1))
        assert all(s.action != STOP for s in rep.trace[:-1])
        assert rep.comparisons <= n * n
        assert rg_check(pair) == rep


def test_monotone_examples():
    assert rg_check_monotone(SequencePair((0, 1, 2, 3), (0, 1, 0, 2)))
    assert not rg_check_monotone(SequencePair((0, 1, 2), (1, 0, 0)))


def test_monotone_requires_weakly_increasing_a():
    with pytest.raises(InputError):
        rg_check_monotone(SequencePair((1, 0), (0, 0)))


def classical_rgs(e):
    if e[0] != 0:
        return False
    top = 0
    for x in e[1:]:
        if x > top + 1:
            return False
        top = max(top, x)
    return True


def test_monotone_matches_classical_restricted_growth():
    rng = random.Random(4)
    for _ in range(500):
        n = rng.randint(1, 7)
        e = tuple(rng.randint(0, 3) for _ in range(n))
        pair = SequencePair(tuple(range(n)), e)
        assert rg_check_monotone(pair) == classical_rgs(e) == rg_check(pair).accepted


def test_monotone_agrees_with_general_scan():
    rng = random.Random(8)
    for _ in range(500):
        n = rng.randint(1, 6)
        a = tuple(sorted(rng.randint(-3, 3) for _ in range(n)))
        e = tuple(rng.randint(-4, 4) for _ in range(n))
        pair = SequencePair(a, e)
        assert rg_check_monotone(pair) == rg_check(pair).accepted


values = st.fractions(min_value=-4, max_value=4, max_denominator=3)


@settings(max_examples=300, deadline=None)
@given(st.integers(1, 7).flatmap(lambda n: st.tuples(
    st.lists(values, min_size=n, max_size=n), st.lists(values, min_size=n, max_size=n))))
def test_scan_is_invariant_under_positive_affine_maps(ae):
    a, e = ae
    base = rg_check(SequencePair(a, e)).report
    moved = rg_check(SequencePair([3 * x - 1 for x in a], [3 * x - 1 for x in e])).report
    assert base == moved
