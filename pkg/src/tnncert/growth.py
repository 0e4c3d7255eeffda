"""Restricted growth of ``e`` relative to ``a``.

:func:`rg_check` runs the list-deletion scan for arbitrary ``a`` and keeps a
full trace, which the certifier turns into a witness network.
:func:`rg_check_monotone` is the cap-based test that only applies when ``a``
is weakly increasing.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm
from typing import Optional, Tuple

from .core import InputError, SequencePair

DELETE_LAST = "delete_last"
DELETE_MATCH = "delete_match"
STOP = "stop"


@dataclass(frozen=True)
class TraceStep:
    """One iteration of the scan.

    ``position`` is the 1-based position in ``x_before`` of the first element
    >= a_i (the deleted match, or the offending element on ``stop``); it is
    None for ``delete_last``.
    """

    i: int
    x_before: Tuple[Fraction, ...]
    action: str
    position: Optional[int] = None


@dataclass(frozen=True)
class RgReport:
    report: int
    n: int
    trace: Tuple[TraceStep, ...]
    comparisons: int = field(default=0, compare=False)

    @property
    def accepted(self) -> bool:
        return self.report == self.n + 1


def _integer_keys(pair: SequencePair):
    # order-preserving integer images of a and e (common positive denominator)
    d = lcm(*(x.denominator for x in pair.a + pair.e))
    a = [x.numerator * (d // x.denominator) for x in pair.a]
    e = [x.numerator * (d // x.denominator) for x in pair.e]
    return a, e


def rg_check(pair: SequencePair) -> RgReport:
    """Run the restricted-growth scan and return the report with its trace.

    Starting from X = (e_1..e_n), step i finds the first element of X that is
    >= a_i. With no such element the last element of X is dropped; an element
    equal to a_i is dropped; a strictly larger one stops the scan with report
    i. Surviving all n steps gives report n+1.

    The trace also records the stopping step, so a rejected report i has a
    trace of length i.
    """
    n = pair.n
    a_keys, e_keys = _integer_keys(pair)
    keys = list(e_keys)
    vals = list(pair.e)
    trace = []
    comparisons = 0
    for i in range(1, n + 1):
        ai = a_keys[i - 1]
        before = tuple(vals)
        pos = -1
        for j, v in enumerate(keys):
            if v >= ai:
                pos = j
                break
        comparisons += (pos + 1) if pos >= 0 else len(keys)
        if pos < 0:
            keys.pop()
            vals.pop()
            trace.append(TraceStep(i, before, DELETE_LAST))
        elif keys[pos] == ai:
            del keys[pos]
            del vals[pos]
            trace.append(TraceStep(i, before, DELETE_MATCH, pos + 1))
        else:
            trace.append(TraceStep(i, before, STOP, pos + 1))
            return RgReport(i, n, tuple(trace), comparisons)
    return RgReport(n + 1, n, tuple(trace), comparisons)


def is_weakly_increasing(seq) -> bool:
    return all(x <= y for x, y in zip(seq, seq[1:]))


def rg_check_monotone(pair: SequencePair) -> bool:
    """Cap test for weakly increasing ``a``.

    The cap for e_1 is a_1; the cap moves on to the next ``a`` exactly when
    e_i meets its cap. Since the cap index only advances on a hit, it never
    exceeds i, so it stays within 1..n for every e_i that is examined.
    """
    if not is_weakly_increasing(pair.a):
        raise InputError("the cap test requires a weakly increasing a")
    f = 0
    for ei in pair.e:
        cap = pair.a[f]
        if ei > cap:
            return False
        if ei == cap:
            f += 1
    return True
