"""Command-line front end.

Exit status: 0 success, 1 verification failure, 2 usage or input error.
"""
from __future__ import annotations

import argparse
import sys
import warnings

from . import kernels
from .classification import classify_extremal, enumerate_am_sequences
from .errors import INT_LIMIT, SemigroupError
from .report import (
    chains_report,
    check_report,
    classification_report,
    dumps,
    sequence_report,
)
from .verify import (
    DEFAULT_MAX_DEGREE,
    DEFAULT_MAX_ENUM_DEGREE,
    DEFAULT_ORACLE_PAIRS,
    run_verification,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _degree(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if n <= 1:
        raise argparse.ArgumentTypeError(f"degree must be > 1, got {n}")
    if n * n > INT_LIMIT:
        raise argparse.ArgumentTypeError(f"degree {n}: n^2 exceeds the 64-bit range")
    return n


def _positive(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if n <= 0:
        raise argparse.ArgumentTypeError(f"must be positive, got {n}")
    if n > INT_LIMIT:
        raise argparse.ArgumentTypeError(f"{n} exceeds the 64-bit range")
    return n


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(f"{self.prog}: error: {message}")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="machine-readable output")
    common.add_argument("--g3-literal", action="store_true", default=argparse.SUPPRESS,
                        help="use the printed n_{h-1} reading of (G3)")

    parser = _Parser(prog="amsemigroup", parents=[common],
                     description="Numerical semigroups and Abhyankar-Moh semigroups.")
    parser.add_argument("--backend", action="store_true",
                        help="print the active kernel backend and exit")
    sub = parser.add_subparsers(dest="verb", parser_class=_Parser)

    p = sub.add_parser("check", parents=[common],
                       help="n-minimal sequence, conditions, conductor and deltas")
    p.add_argument("--degree", type=_degree, required=True)
    p.add_argument("generators", type=_positive, nargs="+")

    p = sub.add_parser("chains", parents=[common], help="divisor chains of n")
    p.add_argument("n", type=_degree)

    p = sub.add_parser("classify", parents=[common],
                       help="classify the maximal-conductor AM semigroups of degree n")
    p.add_argument("n", type=_degree)

    p = sub.add_parser("enumerate", parents=[common], help="all AM sequences of degree n")
    p.add_argument("n", type=_degree)

    p = sub.add_parser("verify", parents=[common], help="run every invariant suite")
    p.add_argument("--max-degree", type=_degree, default=DEFAULT_MAX_DEGREE)
    p.add_argument("--max-enum-degree", type=_positive, default=DEFAULT_MAX_ENUM_DEGREE,
                   help="exhaustive sequence enumeration stops here (default %(default)s)")
    p.add_argument("--oracle-pairs", type=_positive, default=DEFAULT_ORACLE_PAIRS,
                   help="two-generator conductor check up to this value")
    p.add_argument("--jobs", type=_positive, default=1)
    return parser


def _fmt(values) -> str:
    if values is None:
        return "-"
    return "(" + ", ".join(str(v) for v in values) + ")"


def _yn(flag) -> str:
    if flag is None:
        return "undefined"
    return "yes" if flag else "no"


def _render_sequence(r: dict) -> list[str]:
    lines = [
        f"degree n      = {r['degree']}",
        f"sequence bbar = {_fmt(r['sequence'])}",
        f"e             = {_fmt(r['e'])}",
        f"n_k           = {_fmt(r['nratio'])}",
        f"G1 {_yn(r['g1'])}  G2 {_yn(r['g2'])}  G3 {_yn(r['g3'])}"
        f"  G3(literal) {_yn(r['g3_literal'])}",
        f"AM ({r['g3_mode']} G3) = {_yn(r['is_am'])}",
        f"conductor     = {r['conductor_oracle']} (oracle)"
        + (f", {r['conductor_formula']} (formula)" if r["conductor_formula"] is not None else ""),
        f"bound (n-1)(n-2) = {r['bound']}",
    ]
    if r["delta"] is not None:
        lines += [
            f"delta         = {_fmt(r['delta'])}",
            f"gamma         = {r['gamma']}",
            f"extremal      = {_yn(r['extremal'])}",
            "n_k*delta_k in <delta_0..delta_{k-1}>: "
            + ", ".join(f"k={k}: {_yn(v)}" for k, v in enumerate(r["delta_membership"], 1)),
        ]
    return lines


def _cmd_check(args) -> tuple[int, object, list[str]]:
    r = check_report(args.degree, args.generators, literal_g3=args.g3_literal)
    lines = [f"generators    = {_fmt(r['generators'])}"] + _render_sequence(r)
    status = EXIT_OK
    if r["theorem"] is not None and not r["theorem"]["ok"]:
        status = EXIT_FAIL
    return status, r, lines


def _cmd_chains(args):
    r = chains_report(args.n)
    lines = [_fmt(c) for c in r["chains"]] + [f"count a({args.n}) = {r['count']}"]
    return EXIT_OK, r, lines


def _cmd_classify(args):
    records = [classification_report(rec) for rec in classify_extremal(args.n)]
    lines = []
    for r in records:
        lines += [
            f"chain {_fmt(r['chain'])}",
            f"  generators     {_fmt(r['generators'])}  conductor {r['conductor_oracle']}",
            f"  minimal system {_fmt(r['minimal_system'])}  epsilon {_fmt(r['epsilon'])}",
            f"  case {r['am21_case']}  rebuilt {_fmt(r['am21_generators'])}"
            f"  regenerates {_yn(r['am21_regenerates'])}",
            f"  n' = {r['nprime']}  gcd(n, n') = n - n': {_yn(r['am11_ok'])}",
        ]
        if r["am21_printed_generators"] is not None:
            lines.append(f"  printed formula gives {_fmt(r['am21_printed_generators'])}")
    failed = any(r["violations"] or not r["am11_ok"] for r in records)
    out = {"degree": args.n, "records": records, "ok": not failed}
    lines.append(f"{len(records)} records, all consistent: {_yn(not failed)}")
    return (EXIT_FAIL if failed else EXIT_OK), out, lines


def _cmd_enumerate(args):
    seqs = enumerate_am_sequences(args.n, literal_g3=args.g3_literal)
    rows = [sequence_report(s.terms, literal_g3=args.g3_literal) for s in seqs]
    lines = []
    for r in rows:
        gamma = "-" if r["gamma"] is None else r["gamma"]
        thm = "n/a" if r["theorem"] is None else ("ok" if r["theorem"]["ok"] else "FAIL")
        flag = " *" if r["conductor_oracle"] == r["bound"] else ""
        over = " (above bound)" if r["conductor_oracle"] > r["bound"] else ""
        lines.append(
            f"{_fmt(r['sequence'])}  c={r['conductor_oracle']}  gamma={gamma}  theorem {thm}{flag}{over}"
        )
    lines.append(f"{len(rows)} sequences; * marks c = (n-1)(n-2) = {(args.n - 1) * (args.n - 2)}")
    failed = any(r["theorem"] is not None and not r["theorem"]["ok"] for r in rows)
    out = {"degree": args.n, "g3_mode": "literal" if args.g3_literal else "default",
           "sequences": rows, "count": len(rows), "ok": not failed}
    return (EXIT_FAIL if failed else EXIT_OK), out, lines


def _cmd_verify(args):
    r = run_verification(args.max_degree, args.max_enum_degree, args.oracle_pairs, args.jobs)
    lines = []
    for d in r["degrees"]:
        mark = "ok" if not d["failures"] else f"{len(d['failures'])} FAILED"
        lines.append(f"degree {d['degree']:>3}: {d['checks']:>6} checks  {mark}")
    lines.append(f"general checks: {'ok' if not r['general_failures'] else 'FAILED'}")
    if r["counterexample"] is not None:
        lines.append(f"counterexample: {r['counterexample']}")
    lines.append("PASS" if r["ok"] else "FAIL")
    return (EXIT_OK if r["ok"] else EXIT_FAIL), r, lines


COMMANDS = {
    "check": _cmd_check,
    "chains": _cmd_chains,
    "classify": _cmd_classify,
    "enumerate": _cmd_enumerate,
    "verify": _cmd_verify,
}


def execute(argv: list[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(exc, file=err)
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return EXIT_OK if not exc.code else EXIT_USAGE
    if args.backend:
        print(kernels.BACKEND, file=out)
        return EXIT_OK
    if args.verb is None:
        parser.print_usage(err)
        return EXIT_USAGE
    args.json = getattr(args, "json", False)
    args.g3_literal = getattr(args, "g3_literal", False)
    try:
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always")
            status, payload, lines = COMMANDS[args.verb](args)
    except SemigroupError as exc:
        print(f"amsemigroup: error: {exc}", file=err)
        return EXIT_USAGE
    for note in dict.fromkeys(str(w.message) for w in caught):
        print(f"amsemigroup: note: {note}", file=err)
    if args.json:
        out.write(dumps(payload))
    else:
        out.write("\n".join(lines) + "\n")
    return status


def main() -> None:
    sys.exit(execute())


if __name__ == "__main__":
    main()
