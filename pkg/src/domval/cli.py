"""Command-line front end.

    domval analyze FILE          exact gamma, tau, dv and gamma-sets
    domval oracle FILE           same, by exhaustive search (n <= 20)
    domval family SPEC [--solve] closed-form report for a named family
    domval verify                full check sweep over the corpus

Exit codes: 0 success, 1 check failure, 2 usage or parse error,
3 resource refusal.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import closed_forms
from .corpus import DEFAULT_ER_PROBS, DEFAULT_MAX_N, DEFAULT_SEEDS, run_verify, summarize
from .generators import FamilySpec, FamilySpecError, generate
from .graph import GraphError, GraphFormatError, GraphSizeError, read_graph
from .solver import OracleRefusal, domination_report, oracle_report

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_REFUSED = 0, 1, 2, 3
DEFAULT_MAX_SETS = 64


def _emit(obj: dict) -> None:
    print(json.dumps(obj, indent=2))


def _fmt_set(s) -> str:
    return "{" + ", ".join(str(v + 1) for v in s) + "}"


def _print_report(mode: str, source: str, report, fmt: str) -> None:
    if fmt == "json":
        _emit({"mode": mode, "source": source, "report": report.to_dict()})
        return
    if fmt == "tsv":
        print("vertex\tdv")
        for v, d in enumerate(report.dv, start=1):
            print(f"{v}\t{d}")
        return
    print(f"{source}: n={report.n}  gamma={report.gamma}  tau={report.tau}")
    print("vertex  DV")
    for v, d in enumerate(report.dv, start=1):
        print(f"{v:>6}  {d}")
    shown = len(report.gamma_sets)
    print(f"gamma-sets ({shown} of {report.tau} shown):")
    for s in report.gamma_sets:
        print(f"  {_fmt_set(s)}")


def cmd_analyze(args) -> int:
    g = read_graph(args.file)
    _print_report("analyze", args.file, domination_report(g, limit=args.max_sets), args.format)
    return EXIT_OK


def cmd_oracle(args) -> int:
    g = read_graph(args.file)
    _print_report("oracle", args.file, oracle_report(g, limit=args.max_sets), args.format)
    return EXIT_OK


def _family_variants(spec: FamilySpec) -> list[tuple[str, closed_forms.FamilyReport]]:
    if spec.kind != "multipartite":
        return [("formula", closed_forms.family_report(spec))]
    out = [("paper", closed_forms.multipartite_report_paper(spec.params))]
    if min(spec.params) >= 2:
        out.append(("corrected", closed_forms.multipartite_report_corrected(spec.params)))
    return out


def cmd_family(args) -> int:
    spec = FamilySpec.parse(args.spec)
    variants = _family_variants(spec)
    solved = domination_report(generate(spec), limit=args.max_sets) if args.solve else None

    def verdict(f):
        if solved is None:
            return None
        same = (f.gamma, f.tau, f.dv) == (solved.gamma, solved.tau, solved.dv)
        return "AGREE" if same else "DISAGREE"

    verdicts = [verdict(f) for _, f in variants]
    status = EXIT_FAIL if "DISAGREE" in verdicts else EXIT_OK

    if args.format == "json":
        _emit({
            "mode": "family",
            "spec": str(spec),
            "formulas": [
                {"variant": name, **f.to_dict(), **({"verdict": v} if v else {})}
                for (name, f), v in zip(variants, verdicts)
            ],
            "solver": solved.to_dict() if solved else None,
        })
    elif args.format == "tsv":
        cols = [name for name, _ in variants] + (["solver"] if solved else [])
        print("vertex\t" + "\t".join(cols))
        for v in range(spec.order):
            row = [f.dv[v] for _, f in variants] + ([solved.dv[v]] if solved else [])
            print(f"{v + 1}\t" + "\t".join(map(str, row)))
    else:
        print(f"{spec}  (n={spec.order})")
        for (name, f), v in zip(variants, verdicts):
            tail = f"  [{v}]" if v else ""
            print(f"  {name:<10} gamma={f.gamma}  tau={f.tau}  dv={list(f.dv)}{tail}")
        if solved:
            print(f"  {'solver':<10} gamma={solved.gamma}  tau={solved.tau}  dv={list(solved.dv)}")
    return status


def _parse_probs(text: str) -> tuple[float, ...]:
    try:
        probs = tuple(float(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad probability list {text!r}") from None
    if not probs or any(not 0.0 <= p <= 1.0 for p in probs):
        raise argparse.ArgumentTypeError("probabilities must lie in [0, 1]")
    return probs


def cmd_verify(args) -> int:
    outcomes = run_verify(args.max_n, args.seeds, args.er_probs)
    counts = summarize(outcomes)
    failures = [o for o in outcomes if o.failed]
    if args.format == "json":
        _emit({
            "mode": "verify",
            "params": {"max_n": args.max_n, "seeds": args.seeds, "er_probs": list(args.er_probs)},
            "summary": counts,
            "outcomes": [o.to_dict() for o in outcomes],
        })
    elif args.format == "tsv":
        print("subject\tcheck\tstatus\tdetails")
        for o in outcomes:
            print(f"{o.subject}\t{o.name}\t{o.status}\t{json.dumps(o.details, sort_keys=True)}")
    else:
        by_check: dict[str, dict[str, int]] = {}
        for o in outcomes:
            row = by_check.setdefault(o.name, {"pass": 0, "fail": 0, "n/a": 0})
            row[o.status] += 1
        print(f"{'check':<32}{'pass':>7}{'fail':>7}{'n/a':>7}")
        for name in sorted(by_check):
            r = by_check[name]
            print(f"{name:<32}{r['pass']:>7}{r['fail']:>7}{r['n/a']:>7}")
        print(f"total: {counts['pass']} pass, {counts['fail']} fail, {counts['n/a']} n/a")
        for o in failures:
            print(f"FAIL {o.subject} {o.name}: {json.dumps(o.details, sort_keys=True)}")
    return EXIT_FAIL if failures else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument("--format", choices=("table", "json", "tsv"), default=argparse.SUPPRESS)
    shared.add_argument("--max-sets", type=int, default=argparse.SUPPRESS, metavar="K")

    parser = argparse.ArgumentParser(prog="domval", description=__doc__.split("\n")[0])
    parser.add_argument("--format", choices=("table", "json", "tsv"), default="table")
    parser.add_argument("--max-sets", type=int, default=DEFAULT_MAX_SETS, metavar="K",
                        help="gamma-sets to list (default %(default)s); tau is always exact")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", parents=[shared], help="exact analysis of an edge-list file")
    p.add_argument("file")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("oracle", parents=[shared], help="exhaustive analysis (n <= 20)")
    p.add_argument("file")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("family", parents=[shared], help="closed-form report, e.g. path:7")
    p.add_argument("spec")
    p.add_argument("--solve", action="store_true", help="also run the solver and compare")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("verify", parents=[shared], help="run every check on the corpus")
    p.add_argument("--max-n", type=int, default=DEFAULT_MAX_N)
    p.add_argument("--seeds", type=int, default=DEFAULT_SEEDS, help="number of random graphs")
    p.add_argument("--er-probs", type=_parse_probs, default=DEFAULT_ER_PROBS)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    if args.max_sets < 0:
        print("error: --max-sets must be non-negative", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except (GraphSizeError, OracleRefusal) as e:
        print(f"refused: {e}", file=sys.stderr)
        return EXIT_REFUSED
    except (GraphFormatError, FamilySpecError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (GraphError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
