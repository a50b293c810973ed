"""CLI entry point: python -m sl2forms.cli"""

import argparse
import logging
import os
import sys

from pydantic import ValidationError

from sl2forms.cli.config import COMMANDS, build_run_spec, load_config, parse_assignments
from sl2forms.cli.runner import run, write_report
from sl2forms.info import DEFAULT_CONFIG_PATH


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(description="Exact verification of the de Rham / Verma module correspondence")
    parser.add_argument(
        "command",
        choices=COMMANDS,
        help="Verification suite to run, or 'all'",
    )
    parser.add_argument(
        "--config",
        default=DEFAULT_CONFIG_PATH,
        help=f"Path to a YAML config with a 'run' section (default: {DEFAULT_CONFIG_PATH})",
    )
    parser.add_argument(
        "-p", "--params",
        nargs="+",
        metavar="my.setting=value",
        default=[],
        help="override params of the config file, e.g. -p 'run.n=3'",
    )
    parser.add_argument("--n", type=int, help="Number of finite marked points (default: from config)")
    parser.add_argument("--bound", type=int, help="Pole order / degree bound of elementary functions (default: from config)")
    parser.add_argument("--grade-bound", type=int, help="Truncation grade of tensor factors (default: from config)")
    parser.add_argument("--degree-max", type=int, help="Largest p1 + p2 for gram and L_-1 checks (default: from config)")
    parser.add_argument("--b-max", type=int, help="Largest b for identities and singular vectors (default: from config)")
    parser.add_argument("--seed", type=int, help="Seed for random marked points (default: from config)")
    parser.add_argument("--samples", type=int, help="Random point tuples per check (default: from config)")
    parser.add_argument("--jobs", type=int, help="Parallel workers, -1 for all cores (default: from config)")
    mode = parser.add_mutually_exclusive_group()
    mode.add_argument(
        "--symbolic",
        action="store_true",
        help="Keep M and k symbolic (default)",
    )
    mode.add_argument(
        "--numeric",
        nargs="+",
        metavar="NAME=VALUE",
        help="Assign rational values, e.g. --numeric k=1/3 M=2/5",
    )
    parser.add_argument(
        "--timings",
        action="store_true",
        help="Record wall-clock seconds per check (default: off, keeps reports reproducible)",
    )
    parser.add_argument(
        "--out",
        default=None,
        help="Directory for report.json (default: print to stdout)",
    )
    parser.add_argument(
        "--verbose",
        action="store_true",
        help="Log at DEBUG level (default: INFO)",
    )
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.INFO,
        format="%(asctime)s [%(name)s] %(levelname)s: %(message)s",
    )

    if not os.path.exists(args.config):
        parser.error(f"config file not found: {args.config}")
    try:
        config = load_config(args.config, args.params)
        overrides = dict(
            n=args.n,
            bound=args.bound,
            grade_bound=args.grade_bound,
            degree_max=args.degree_max,
            b_max=args.b_max,
            seed=args.seed,
            samples=args.samples,
            jobs=args.jobs,
            out=args.out,
            timings=args.timings or None,
        )
        if args.numeric:
            overrides["mode"] = "numeric"
            overrides["values"] = parse_assignments(args.numeric)
        elif args.symbolic:
            overrides["mode"] = "symbolic"
        spec = build_run_spec(args.command, config, overrides)
    except (ValueError, ValidationError, KeyError, TypeError) as exc:
        parser.error(str(exc))

    report = run(spec)
    if spec.out:
        write_report(report, spec.out)
    else:
        sys.stdout.write(report.model_dump_json(indent=2, exclude_none=True) + "\n")
    return report.exit_code


if __name__ == "__main__":
    sys.exit(main())
