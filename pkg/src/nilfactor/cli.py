"""``nilfactor`` command line.

Exit codes for ``factor``: 0 success, 1 parse or I/O error, 2 invertible
input, 3 nonzero nilpotent 2x2 input.  ``check`` and ``forensics`` exit 0
when everything holds and 1 otherwise.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from .errors import CertificateError, ExceptionalCase, NilfactorError, NotSingular, ParseError
from .factorizer import factor
from .field import parse_field
from .forensics import check_sourour_projection_flaw, check_wu_counterexample
from .matrixfile import format_text, read_matrix, to_json_dict
from .suites import SUITES, run_suite

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_INVERTIBLE = 2
EXIT_EXCEPTIONAL = 3
EXIT_FAILED = 1


def _fields(text: Optional[str]):
    if text is None:
        return None
    # "GF(5),QQ" -> [GF(5), QQ]
    return [parse_field(part) for part in text.replace(" ", "").split(",") if part]


def _on_off(text: str) -> bool:
    if text not in ("on", "off"):
        raise argparse.ArgumentTypeError("expected on or off")
    return text == "on"


def cmd_factor(args, out) -> int:
    try:
        A = read_matrix(args.file)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    try:
        fac = factor(A, verify=args.verify, seed=args.seed)
    except NotSingular:
        print("error: matrix is invertible", file=sys.stderr)
        return EXIT_INVERTIBLE
    except ExceptionalCase:
        print(
            "error: a nonzero nilpotent 2x2 matrix is not a product of two nilpotent matrices",
            file=sys.stderr,
        )
        return EXIT_EXCEPTIONAL
    except CertificateError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_FAILED
    cert = fac.certificate
    if args.json:
        doc = {
            "route": fac.route.value,
            "N1": to_json_dict(fac.N1),
            "N2": to_json_dict(fac.N2),
            "certificate": None if cert is None else cert.to_dict(),
        }
        print(json.dumps(doc, indent=2), file=out)
        return EXIT_OK
    print(f"route: {fac.route.value}", file=out)
    print("N1:", file=out)
    print(format_text(fac.N1), end="", file=out)
    print("N2:", file=out)
    print(format_text(fac.N2), end="", file=out)
    if cert is None:
        print("certificate: not verified", file=out)
    else:
        print(f"product check: {'OK' if cert.product_ok else 'FAILED'}", file=out)
        print(f"nilpotency index N1: {cert.nilpotency_index_1}", file=out)
        print(f"nilpotency index N2: {cert.nilpotency_index_2}", file=out)
        print(f"ranks: A {cert.rank_A}, N1 {cert.rank_1}, N2 {cert.rank_2}", file=out)
    return EXIT_OK


def cmd_check(args, out) -> int:
    try:
        fields = _fields(args.fields)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    reports = run_suite(args.suite, max_k=args.max_k, fields=fields, seed=args.seed)
    ok = all(r.passed for r in reports)
    if args.json:
        print(json.dumps({"passed": ok, "suites": [r.to_dict() for r in reports]}, indent=2), file=out)
    else:
        for r in reports:
            good = len(r.checks) - len(r.failures)
            print(f"{r.suite}: {good}/{len(r.checks)} checks passed", file=out)
            for c in r.failures:
                print(f"  FAIL [{c.anchor}] {c.identity} {c.params} {c.detail}".rstrip(), file=out)
    return EXIT_OK if ok else EXIT_FAILED


def cmd_forensics(args, out) -> int:
    core = [check_wu_counterexample(7), check_sourour_projection_flaw()]
    extra = []
    for k in args.k or []:
        try:
            extra.append(check_wu_counterexample(k))
        except NilfactorError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_INPUT
    ok = all(r.confirmed for r in core)
    if args.json:
        doc = {
            "passed": ok,
            "checks": [r.to_dict() for r in core],
            "recorded": [r.to_dict() for r in extra],
        }
        print(json.dumps(doc, indent=2), file=out)
    else:
        for r in core:
            print(f"{r.check_name}: {r.verdict.value} ({r.claim})", file=out)
        for r in extra:
            print(f"{r.check_name} (recorded): {r.verdict.value}, nilpotent = {r.witness['nilpotent']}", file=out)
    return EXIT_OK if ok else EXIT_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="nilfactor", description="Factor singular matrices into two nilpotents.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("factor", help="factor the matrix in a file")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.add_argument("--verify", type=_on_off, default=True, metavar="on|off")
    p.add_argument("--seed", type=int, default=None)
    p.set_defaults(run=cmd_factor)

    p = sub.add_parser("check", help="run property suites")
    p.add_argument("suite", choices=SUITES + ("all",))
    p.add_argument("--max-k", type=int, default=11)
    p.add_argument("--fields", default=None, help="comma separated, e.g. GF(5),QQ")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--json", action="store_true")
    p.set_defaults(run=cmd_check)

    p = sub.add_parser("forensics", help="re-check the two known counterexamples")
    p.add_argument("--k", type=int, action="append", help="also record the block matrix for this odd k")
    p.add_argument("--json", action="store_true")
    p.set_defaults(run=cmd_forensics)
    return parser


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    args = build_parser().parse_args(argv)
    return args.run(args, sys.stdout if out is None else out)


if __name__ == "__main__":
    sys.exit(main())
