"""JSON records for matrices, traces and certificates, and certificate checks.

Rationals are always strings (``"3"``, ``"-2/7"``) so nothing is lost to
floating point. The certificate record (``format == "tnncert-certificate"``,
``version == 1``) has the keys::

    verdict   "TNN" or "NOT_TNN"
    n         length of the sequences
    a, e      the input sequences
    matrix    all n+1 rows of M_{e->a}
    network   the final weight array, row m holding weights [m,1]..[m,m]
    pivots    [[m, k], ...] in the order applied
    witness   null for TNN; otherwise
              {"rows": [lo, hi], "cols": [lo, hi],
               "marked_edges": [[m, k], ...], "minor": "<rational>"}

:func:`verify_certificate` rechecks such a record from scratch and does not
trust anything in it except the input sequences.
"""

from __future__ import annotations

from fractions import Fraction
from typing import List

from .builder import build_matrix
from .certify import NOT_TNN, TNN, Certificate
from .core import CobMatrix, InputError, MinorSpec, SequencePair, TNNError, as_rational, minor
from .growth import RgReport
from .network import WeightArray, path_matrix

FORMAT = "tnncert-certificate"
VERSION = 1


class CertificateFormatError(TNNError):
    """The certificate record is structurally malformed."""


def rationals_to_json(values) -> List[str]:
    return [str(x) for x in values]


def rationals_from_json(values) -> List[Fraction]:
    if not isinstance(values, list):
        raise InputError(f"expected a list of rationals, got {type(values).__name__}")
    out = []
    for v in values:
        if not isinstance(v, (str, int)) or isinstance(v, bool):
            raise InputError(f"rationals must be encoded as strings, got {v!r}")
        out.append(as_rational(v))
    return out


def pair_to_json(pair: SequencePair) -> dict:
    return {"n": pair.n, "a": rationals_to_json(pair.a), "e": rationals_to_json(pair.e)}


def pair_from_json(doc: dict) -> SequencePair:
    if not isinstance(doc, dict) or "a" not in doc or "e" not in doc:
        raise InputError("expected an object with keys 'a' and 'e'")
    return SequencePair(tuple(rationals_from_json(doc["a"])), tuple(rationals_from_json(doc["e"])))


def matrix_to_json(matrix: CobMatrix) -> List[List[str]]:
    return [rationals_to_json(row) for row in matrix]


def array_to_json(array: WeightArray) -> List[List[str]]:
    return [rationals_to_json(row) for row in array.rows]


def report_to_json(report: RgReport) -> dict:
    return {
        "n": report.n,
        "report": report.report,
        "accepted": report.accepted,
        "comparisons": report.comparisons,
        "trace": [
            {"i": s.i, "X": rationals_to_json(s.x_before), "action": s.action, "position": s.position}
            for s in report.trace
        ],
    }


def certificate_to_json(cert: Certificate) -> dict:
    doc = {
        "format": FORMAT,
        "version": VERSION,
        "verdict": cert.verdict,
        **pair_to_json(cert.pair),
        "matrix": matrix_to_json(build_matrix(cert.pair)),
        "network": array_to_json(cert.network),
        "pivots": [list(p) for p in cert.pivots],
        "witness": None,
    }
    if cert.witness is not None:
        w = cert.witness
        doc["witness"] = {
            "rows": list(w.rows),
            "cols": list(w.cols),
            "marked_edges": [list(p) for p in w.marked_edges],
            "minor": str(w.minor_value),
        }
    return doc


def _index_pair(value, what):
    if (not isinstance(value, list) or len(value) != 2
            or not all(isinstance(i, int) and not isinstance(i, bool) for i in value)):
        raise CertificateFormatError(f"{what} must be a pair of integers, got {value!r}")
    return tuple(value)


def _parse(doc):
    if not isinstance(doc, dict):
        raise CertificateFormatError("certificate must be a JSON object")
    if doc.get("format") != FORMAT or doc.get("version") != VERSION:
        raise CertificateFormatError(f"not a {FORMAT} v{VERSION} record")
    for key in ("verdict", "a", "e", "matrix", "network", "witness"):
        if key not in doc:
            raise CertificateFormatError(f"missing key {key!r}")
    if doc["verdict"] not in (TNN, NOT_TNN):
        raise CertificateFormatError(f"unknown verdict {doc['verdict']!r}")
    try:
        pair = pair_from_json(doc)
        matrix = [rationals_from_json(r) for r in doc["matrix"]]
        network = WeightArray(tuple(tuple(rationals_from_json(r)) for r in doc["network"]))
    except (InputError, TypeError) as exc:
        raise CertificateFormatError(str(exc)) from exc
    witness = doc["witness"]
    if doc["verdict"] == NOT_TNN:
        if not isinstance(witness, dict):
            raise CertificateFormatError("NOT_TNN certificate without a witness")
        for key in ("rows", "cols", "marked_edges", "minor"):
            if key not in witness:
                raise CertificateFormatError(f"witness is missing {key!r}")
        rows = _index_pair(witness["rows"], "witness rows")
        cols = _index_pair(witness["cols"], "witness cols")
        if not isinstance(witness["marked_edges"], list):
            raise CertificateFormatError("marked_edges must be a list")
        marks = [_index_pair(p, "marked edge") for p in witness["marked_edges"]]
        try:
            value = as_rational(witness["minor"])
        except InputError as exc:
            raise CertificateFormatError(str(exc)) from exc
        witness = (rows, cols, marks, value)
    elif witness is not None:
        raise CertificateFormatError("TNN certificate must have a null witness")
    return doc["verdict"], pair, matrix, network, witness


def verify_certificate(doc: dict) -> List[str]:
    """Recheck a certificate record; returns the list of failures (empty if valid).

    Raises :class:`CertificateFormatError` if the record cannot be read at all.
    """
    verdict, pair, matrix, network, witness = _parse(doc)
    problems = []
    expected = build_matrix(pair)
    if [list(r) for r in expected] != matrix:
        problems.append("matrix does not equal M_{e->a} recomputed from (a, e)")
    if network.n != pair.n:
        problems.append(f"network has {network.n} rows, expected {pair.n}")
    elif path_matrix(network) != expected:
        problems.append("path matrix of the network differs from M_{e->a}")

    if verdict == TNN:
        neg = network.negative_positions()
        if neg:
            problems.append(f"TNN network has negative weights at {neg[:5]}")
        return problems

    (r_lo, r_hi), (c_lo, c_hi), marks, value = witness
    n = pair.n
    if not (0 <= r_lo <= r_hi <= n and 0 <= c_lo <= c_hi <= n and r_hi - r_lo == c_hi - c_lo):
        problems.append(f"witness intervals rows {r_lo}..{r_hi}, cols {c_lo}..{c_hi} are invalid")
        return problems
    spec = MinorSpec.intervals(r_lo, r_hi, c_lo, c_hi)
    actual = minor(expected, spec)
    if actual != value:
        problems.append(f"stated minor {value} but the recomputed minor is {actual}")
    if not actual < 0:
        problems.append(f"witness minor {actual} is not negative")
    if len(marks) != spec.size:
        problems.append(f"{len(marks)} marked edges for a minor of size {spec.size}")
    elif network.n == n:
        for j, (m, k) in enumerate(marks):
            if m != r_hi - j or not 1 <= k <= m:
                problems.append(f"marked edge {[m, k]} is out of place")
                break
            if j and not k < marks[j - 1][1]:
                problems.append("marked edge columns are not strictly decreasing")
                break
            w = network[m, k]
            if (w < 0) if j else (w >= 0):
                problems.append(f"marked edge {[m, k]} has weight {w} of the wrong sign")
                break
        else:
            if marks[0][1] - 1 != c_hi:
                problems.append("witness columns do not end just left of the negative edge")
    return problems
