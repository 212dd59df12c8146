"""Command-line interface: compute, verify, compare, example.

Exit codes: 0 success, 1 verification failure, 2 input error,
3 combinatorial size-cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from . import axioms as ax
from .netcore import PlayerSet
from .netprob import ConditioningError, DistributionError
from .problems import (
    ProblemFormatError,
    generate_trade_example,
    parse_problem,
    run_compare,
    run_compute,
    run_verify,
    serialize_problem,
)
from .values import SizeCapError

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_INPUT_ERROR = 2
EXIT_SIZE_CAP = 3


def _load_problem(path: str):
    return parse_problem(Path(path).read_text())


def _grid(spec: str) -> list[float]:
    return [float(x) for x in spec.split(",") if x.strip()]


def _cmd_example(args) -> int:
    v, rho = generate_trade_example(args.p, args.q, args.institutional)
    text = serialize_problem(v, rho)
    if args.output:
        Path(args.output).write_text(text + "\n")
    else:
        print(text)
    return EXIT_OK


def _cmd_compute(args) -> int:
    v, rho = _load_problem(args.problem)
    report = run_compute(v, rho)
    print(report.to_json() if args.format == "json" else report.to_table())
    return EXIT_OK


def _cmd_verify(args) -> int:
    if args.random:
        return _verify_random(args)
    if not args.problem:
        print("verify: need a problem file or --random N", file=sys.stderr)
        return EXIT_INPUT_ERROR
    v, rho = _load_problem(args.problem)
    items, ok = run_verify(v, rho, tol=args.tol)
    for item in items:
        rep = item["report"]
        marker = "" if item["expected"] else "  (not expected to hold)"
        print(f"[{item['rule']}] {rep}{marker}")
    return EXIT_OK if ok else EXIT_VERIFY_FAILED


def _verify_random(args) -> int:
    """Randomized corpus: axiom suite on component-additive instances."""
    rng = np.random.default_rng(args.seed)
    ok = True
    for rep in ax.check_shapley_axioms(tol=args.tol, seed=args.seed):
        print(f"[shapley] {rep}")
        ok = ok and rep.passed
    from .values import expected_myerson, expected_position

    for trial in range(args.random):
        ps = PlayerSet(int(rng.integers(2, 5)))
        v, rho = ax.random_variable_game(ps, rng)
        checks = [
            ("expected-myerson", ax.check_balance(expected_myerson, v, rho, args.tol)),
            ("expected-myerson", ax.check_component_balance(expected_myerson, v, rho, args.tol)),
            ("expected-myerson", ax.check_equal_bargaining_power(expected_myerson, v, rho, args.tol)),
            ("expected-myerson", ax.check_balanced_contributions(expected_myerson, v, rho, args.tol)),
            ("expected-position", ax.check_balance(expected_position, v, rho, args.tol)),
            ("expected-position", ax.check_component_balance(expected_position, v, rho, args.tol)),
            ("expected-position", ax.check_balanced_link_contributions(expected_position, v, rho, args.tol)),
        ]
        for rule, rep in checks:
            if not rep.passed:
                print(f"trial {trial} [{rule}] {rep}")
                ok = False
    status = "all checks passed" if ok else "FAILURES detected"
    print(f"{args.random} random instances: {status}")
    return EXIT_OK if ok else EXIT_VERIFY_FAILED


def _cmd_compare(args) -> int:
    grid = _grid(args.grid)
    rows = run_compare(grid, grid)
    if args.format == "json":
        print(json.dumps(rows, indent=2))
        return EXIT_OK
    header = (
        f"{'p':>5}{'q':>5}{'E plain':>14}{'E inst':>14}"
        f"{'m improves':>12}{'pos seller diff':>18}{'closed-form sign':>18}"
    )
    print(header)
    for row in rows:
        print(
            f"{row['p']:>5.2g}{row['q']:>5.2g}"
            f"{row['expected_wealth_plain']:>14.6g}"
            f"{row['expected_wealth_institutional']:>14.6g}"
            f"{str(row['myerson_improves']):>12}"
            f"{row['position_seller_diff']:>18.6g}"
            f"{row['position_sign_closed_form']:>18.6g}"
        )
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="varnetgames",
        description="Expected allocation values for variable network games",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_ex = sub.add_parser("example", help="emit the intermediated-trade problem file")
    p_ex.add_argument("--p", type=float, default=0.5, help="direct trade link probability")
    p_ex.add_argument("--q", type=float, default=0.5, help="intermediary link probability")
    p_ex.add_argument("--institutional", action="store_true",
                      help="condition on the intermediary being connected")
    p_ex.add_argument("--output", help="write to a file instead of stdout")
    p_ex.set_defaults(func=_cmd_example)

    p_c = sub.add_parser("compute", help="expected wealth, values and breakdown")
    p_c.add_argument("problem", help="problem JSON file")
    p_c.add_argument("--format", choices=("json", "table"), default="table")
    p_c.set_defaults(func=_cmd_compute)

    p_v = sub.add_parser("verify", help="run axiom checks")
    p_v.add_argument("problem", nargs="?", help="problem JSON file")
    p_v.add_argument("--tol", type=float, default=1e-8)
    p_v.add_argument("--seed", type=int, default=0)
    p_v.add_argument("--random", type=int, default=0, metavar="N",
                     help="check N random component-additive instances instead")
    p_v.set_defaults(func=_cmd_verify)

    p_cmp = sub.add_parser("compare", help="plain vs institutional trade formation")
    p_cmp.add_argument("--grid", default="0.1,0.3,0.5,0.7,0.9",
                       help="comma-separated values used for both p and q")
    p_cmp.add_argument("--format", choices=("json", "table"), default="table")
    p_cmp.set_defaults(func=_cmd_compare)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except SizeCapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SIZE_CAP
    except (ProblemFormatError, DistributionError, ConditioningError,
            FileNotFoundError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
