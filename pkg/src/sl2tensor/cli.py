"""Command-line front end.

Four subcommands:

* ``normal-form EXPR``       -- normalize an operator expression and print
  its normal form sum(p_w tau_w).
* ``act EXPR --on POLY``     -- apply the operator to a polynomial.
* ``hilbert --component C``  -- graded dimensions of one of the rank-two
  comparison components.
* ``verify``                 -- run the seeded property suites and report;
  exits 1 when any property fails.

Exit codes: 0 success, 1 a verified property failed, 2 usage error
(including expressions that do not parse).  ``verify --format json``
output is byte-deterministic for a fixed configuration: the report is
serialized with sorted keys and fixed separators, and every random case
is derived from (seed, property id, case index) alone.

The ``--mutate`` flag of ``verify`` flips one of the deliberate-fault
switches before running, to demonstrate that the suites detect a wrong
convention: ``drop-straighten-unit`` loses the +1 in the straightening
rule, ``swap-orientation`` exchanges the two one-sided dot maps on the
comparison side, ``flip-q2-action`` makes the twisted module act
componentwise.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import comparison, nilhecke
from .suites import SUITE_NAMES, SuiteConfig, report_ok, run_suite
from .textform import ParseError, infer_arity, parse

MUTATIONS = {
    "drop-straighten-unit": (nilhecke, "DROP_STRAIGHTEN_UNIT"),
    "swap-orientation": (comparison, "SWAP_ORIENTATION"),
    "flip-q2-action": (comparison, "FLIP_Q2_ACTION"),
}


def _arity(n_flag, *texts) -> int:
    if n_flag is not None:
        if not 1 <= n_flag <= 4:
            raise ParseError("--n must be between 1 and 4")
        return n_flag
    return max(max(infer_arity(t) for t in texts), 1)


def cmd_normal_form(args) -> int:
    try:
        h = parse(args.expr, _arity(args.n, args.expr))
    except ParseError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    print(h.render())
    return 0


def cmd_act(args) -> int:
    try:
        n = _arity(args.n, args.expr, args.on)
        op = parse(args.expr, n)
        operand = parse(args.on, n)
    except ParseError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    ident = nilhecke.identity_perm(n)
    if any(w != ident and not p.is_zero() for w, p in operand.coeffs.items()):
        print("error: --on must be a polynomial (no tau, s or delta symbols)",
              file=sys.stderr)
        return 2
    poly = operand.coeffs.get(ident)
    if poly is None:
        from .polynomials import XRING
        poly = XRING.zero()
    print(op.act(poly).render())
    return 0


def cmd_hilbert(args) -> int:
    rows = comparison.hilbert(args.component, args.max_degree)
    print(" ".join(f"{d}:{dim}" for d, dim in rows))
    return 0


def cmd_verify(args) -> int:
    if args.mutate:
        module, attr = MUTATIONS[args.mutate]
        setattr(module, attr, True)
    try:
        cfg = SuiteConfig(seed=args.seed, cases=args.cases,
                          max_degree=args.max_degree,
                          degree_bound=args.degree_bound)
        report = run_suite(args.suite, cfg)
    finally:
        if args.mutate:
            module, attr = MUTATIONS[args.mutate]
            setattr(module, attr, False)
    if args.format == "json":
        sys.stdout.write(json.dumps(report, indent=2, sort_keys=True,
                                    separators=(",", ": ")) + "\n")
    else:
        c = report["config"]
        cases = "per-property" if c["cases"] is None else c["cases"]
        print(f"suite {report['suite']}: seed {c['seed']}, cases {cases}, "
              f"max-degree {c['max_degree']}, degree-bound {c['degree_bound']}")
        for p in report["properties"]:
            mark = "PASS" if p["failed"] == 0 else "FAIL"
            print(f"[{mark}] {p['id']} ({p['component']}): "
                  f"{p['passed']}/{p['cases']}")
            if p["first_counterexample"]:
                print(f"       {p['first_counterexample']}")
        bad = sum(1 for p in report["properties"] if p["failed"])
        print(f"{len(report['properties'])} properties, {bad} failing")
    return 0 if report_ok(report) else 1


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="sl2tensor",
        description="Exact computations in the nil affine Hecke calculus "
                    "and its tensor-square verification suites.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("normal-form",
                       help="normalize an operator expression")
    p.add_argument("expr", help="expression in x1..x4, y, tau/s/delta1..3, "
                                "rationals, + - * ^ and parentheses")
    p.add_argument("--n", type=int, default=None,
                   help="arity (default: smallest that fits the expression)")
    p.set_defaults(fn=cmd_normal_form)

    p = sub.add_parser("act", help="apply an operator to a polynomial")
    p.add_argument("expr", help="operator expression")
    p.add_argument("--on", required=True, help="polynomial to act on")
    p.add_argument("--n", type=int, default=None,
                   help="arity (default: smallest that fits both)")
    p.set_defaults(fn=cmd_act)

    p = sub.add_parser("hilbert",
                       help="graded dimensions of a comparison component")
    p.add_argument("--component", required=True,
                   choices=list(comparison.COMPONENT_IDS))
    p.add_argument("--max-degree", type=int, default=12)
    p.set_defaults(fn=cmd_hilbert)

    p = sub.add_parser("verify", help="run the seeded property suites")
    p.add_argument("--suite", default="all",
                   choices=list(SUITE_NAMES) + ["all"])
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--cases", type=int, default=None,
                   help="override the per-property case counts")
    p.add_argument("--max-degree", type=int, default=6,
                   help="total-degree budget for random polynomials")
    p.add_argument("--degree-bound", type=int, default=12,
                   help="graded sweeps run through this degree")
    p.add_argument("--format", default="text", choices=("text", "json"))
    p.add_argument("--mutate", default=None, choices=sorted(MUTATIONS),
                   help="flip a deliberate-fault switch before running")
    p.set_defaults(fn=cmd_verify)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.fn(args)


if __name__ == "__main__":
    sys.exit(main())
