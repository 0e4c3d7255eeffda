"""Command-line interface.

Exit status: 0 on success (TNN / accepted), 10 when the matrix is not TNN
(``certify``, ``check``, ``batch`` with any rejection), 2 for bad input,
3 for a size-guard refusal, 4 for a malformed certificate, 5 for a
certificate that fails verification, 70 for an internal inconsistency.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from enum import IntEnum

from .builder import FAMILIES, FamilySpec, build_matrix, family_sequences
from .certify import Certificate, certify, fast_certificate_from_rg
from .core import InputError, SequencePair, SizeGuardError, TNNError, parse_sequence
from .growth import rg_check
from .network import build_array
from .oracle import ALL_MINORS_MAX_N, all_minors_tnn
from .render import array_text, matrix_text, network_dot
from .serialize import (
    CertificateFormatError,
    array_to_json,
    certificate_to_json,
    matrix_to_json,
    pair_from_json,
    pair_to_json,
    report_to_json,
    verify_certificate,
)


class ExitCode(IntEnum):
    OK = 0
    INPUT_ERROR = 2
    SIZE_GUARD = 3
    MALFORMED_CERTIFICATE = 4
    INVALID_CERTIFICATE = 5
    NOT_TNN = 10
    INTERNAL = 70


def _read_text(path):
    if path == "-":
        return sys.stdin.read()
    with open(path) as fh:
        return fh.read()


def load_pair_file(path) -> SequencePair:
    """Read a pair from a JSON object ``{"a": [...], "e": [...]}`` or from two
    lines of comma-separated rationals (a first)."""
    text = _read_text(path)
    stripped = text.strip()
    if stripped.startswith("{"):
        try:
            return pair_from_json(json.loads(stripped))
        except json.JSONDecodeError as exc:
            raise InputError(f"{path}: invalid JSON ({exc})") from exc
    lines = [ln for ln in stripped.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if len(lines) != 2:
        raise InputError(f"{path}: expected two lines (a, then e), found {len(lines)}")
    return SequencePair(parse_sequence(lines[0]), parse_sequence(lines[1]))


def parse_b(text):
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError as exc:
        raise InputError(f"b must be comma-separated integers, got {text!r}") from exc


def resolve_pair(args) -> SequencePair:
    sources = sum(x is not None for x in (args.a, args.input, args.family))
    if sources != 1:
        raise InputError("give exactly one of --a/--e, --input or --family")
    if args.family is not None:
        if args.n is None:
            raise InputError("--family needs --n")
        b = parse_b(args.b) if args.b else None
        return family_sequences(FamilySpec(args.family, args.n, b))
    if args.input is not None:
        return load_pair_file(args.input)
    if args.e is None:
        raise InputError("--a needs --e")
    return SequencePair(parse_sequence(args.a), parse_sequence(args.e))


def _emit(obj, fmt, text):
    if fmt == "json":
        print(json.dumps(obj, indent=2))
    else:
        print(text)


def _oracle_section(cert: Certificate):
    if cert.pair.n > ALL_MINORS_MAX_N:
        return {"checked": False, "reason": f"n > {ALL_MINORS_MAX_N}"}
    found = all_minors_tnn(build_matrix(cert.pair))
    agrees = (found is None) == cert.is_tnn
    section = {"checked": True, "agrees": agrees}
    if found is not None:
        section["first_negative_minor"] = {"rows": list(found.rows), "cols": list(found.cols)}
    return section


def certificate_text(cert: Certificate) -> str:
    lines = [f"verdict: {cert.verdict}", f"pivots: {list(cert.pivots)}", "network:", array_text(cert.network)]
    w = cert.witness
    if w is not None:
        lines += [
            f"rows: {w.rows[0]}..{w.rows[1]}",
            f"cols: {w.cols[0]}..{w.cols[1]}",
            f"marked edges: {[list(p) for p in w.marked_edges]}",
            f"minor: {w.minor_value}",
        ]
    return "\n".join(lines)


def cmd_build(args):
    pair = resolve_pair(args)
    matrix = build_matrix(pair)
    _emit({**pair_to_json(pair), "matrix": matrix_to_json(matrix)}, args.format, matrix_text(matrix))
    return ExitCode.OK


def cmd_family(args):
    pair = family_sequences(FamilySpec(args.kind, args.n, parse_b(args.b) if args.b else None))
    text = "a = " + ",".join(map(str, pair.a)) + "\ne = " + ",".join(map(str, pair.e))
    _emit({"family": args.kind, **pair_to_json(pair)}, args.format, text)
    return ExitCode.OK


def cmd_check(args):
    pair = resolve_pair(args)
    report = rg_check(pair)
    text = f"report: {report.report}\naccepted: {str(report.accepted).lower()}"
    _emit(report_to_json(report), args.format, text)
    return ExitCode.OK if report.accepted else ExitCode.NOT_TNN


def cmd_certify(args):
    pair = resolve_pair(args)
    cert = fast_certificate_from_rg(pair) if args.fast else certify(pair)
    doc = certificate_to_json(cert)
    text = certificate_text(cert)
    if args.oracle:
        doc["oracle"] = _oracle_section(cert)
        text += f"\noracle: {doc['oracle']}"
    _emit(doc, args.format, text)
    if args.oracle and doc["oracle"].get("agrees") is False:
        print("error: brute-force oracle disagrees with the certificate", file=sys.stderr)
        return ExitCode.INTERNAL
    return ExitCode.OK if cert.is_tnn else ExitCode.NOT_TNN


def cmd_verify(args):
    text = _read_text(args.certificate)
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CertificateFormatError(f"certificate is not valid JSON ({exc})") from exc
    problems = verify_certificate(doc)
    if args.format == "json":
        print(json.dumps({"valid": not problems, "problems": problems}, indent=2))
    else:
        print("valid" if not problems else "INVALID")
        for p in problems:
            print(f"  - {p}")
    return ExitCode.OK if not problems else ExitCode.INVALID_CERTIFICATE


def cmd_render(args):
    pair = resolve_pair(args)
    array = certify(pair).network if args.certified else build_array(pair)
    if args.format == "dot":
        sys.stdout.write(network_dot(array))
    elif args.format == "json":
        print(json.dumps({**pair_to_json(pair), "network": array_to_json(array)}, indent=2))
    else:
        print(array_text(array))
    return ExitCode.OK


def _batch_one(item):
    index, doc = item
    try:
        pair = pair_from_json(doc)
    except TNNError as exc:
        return {"index": index, "error": str(exc)}
    cert = certify(pair)
    return {"index": index, "n": pair.n, "verdict": cert.verdict, "certificate": certificate_to_json(cert)}


def cmd_batch(args):
    items = []
    for lineno, line in enumerate(_read_text(args.file).splitlines(), start=1):
        if not line.strip():
            continue
        try:
            items.append((lineno, json.loads(line)))
        except json.JSONDecodeError as exc:
            raise InputError(f"line {lineno}: invalid JSON ({exc})") from exc
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(_batch_one, items))
    else:
        results = [_batch_one(it) for it in items]
    worst = ExitCode.OK
    for res in results:
        if not args.certificates:
            res.pop("certificate", None)
        print(json.dumps(res))
        if "error" in res:
            worst = ExitCode.INPUT_ERROR
        elif res["verdict"] != "TNN" and worst == ExitCode.OK:
            worst = ExitCode.NOT_TNN
    return worst


def _add_input(p):
    g = p.add_argument_group("input")
    g.add_argument("--a", help="comma-separated rationals a_1..a_n (e.g. '3,1/2,-4')")
    g.add_argument("--e", help="comma-separated rationals e_1..e_n")
    g.add_argument("--input", metavar="FILE", help="JSON {'a': [...], 'e': [...]} or two lines; '-' for stdin")
    g.add_argument("--family", choices=FAMILIES, help="use a named family instead of explicit sequences")
    g.add_argument("--n", type=int, help="size for --family")
    g.add_argument("--b", help="column heights for ferrers_rook, comma-separated")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="tnncert", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="print the change-of-basis matrix")
    _add_input(p)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("check", help="run the restricted-growth scan")
    _add_input(p)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("certify", help="decide TNN and emit a certificate")
    _add_input(p)
    p.add_argument("--format", choices=("text", "json"), default="json")
    p.add_argument("--fast", action="store_true", help="build the certificate from the restricted-growth trace")
    p.add_argument("--oracle", action="store_true", help=f"cross-check by brute force when n <= {ALL_MINORS_MAX_N}")
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("verify", help="recheck a certificate produced by 'certify'")
    p.add_argument("certificate", help="certificate JSON file, or '-' for stdin")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("family", help="print the (a, e) sequences of a named family")
    p.add_argument("kind", choices=FAMILIES)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--b", help="column heights for ferrers_rook, comma-separated")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("render", help="render the weight array or network")
    _add_input(p)
    p.add_argument("--format", choices=("text", "dot", "json"), default="text")
    p.add_argument("--certified", action="store_true", help="render the final certificate network instead of A(a,e)")
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("batch", help="certify JSON-lines input, one {'a','e'} object per line")
    p.add_argument("file", help="JSON-lines file, or '-' for stdin")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--certificates", action="store_true", help="include full certificates in the output")
    p.set_defaults(func=cmd_batch)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return int(args.func(args))
    except CertificateFormatError as exc:
        print(f"error: malformed certificate: {exc}", file=sys.stderr)
        return ExitCode.MALFORMED_CERTIFICATE
    except SizeGuardError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return ExitCode.SIZE_GUARD
    except (InputError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return ExitCode.INPUT_ERROR
    except TNNError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return ExitCode.INTERNAL


if __name__ == "__main__":
    sys.exit(main())
