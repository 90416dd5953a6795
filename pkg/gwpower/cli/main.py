#!/usr/bin/env python3
"""
gwpower command-line entry point

Exit codes: 0 success / all rows equal, 1 verification or property failure, 2 usage or domain error.
"""

import argparse
import sys
from typing import List, Optional

from loguru import logger

from gwpower import __version__
from gwpower.cli import commands
from gwpower.cli.catalog import load_catalog
from gwpower.cli.grammar import parse_gw, parse_variety
from gwpower.cli.render import Report, render
from gwpower.core.config import get_settings
from gwpower.core.logging import setup_logging
from gwpower.exceptions import GwPowerError
from gwpower.gw.fields import BaseField
from gwpower.schemas.report import ProbeReport
from gwpower.utils.helpers import load_run_config

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


def _common_parser() -> argparse.ArgumentParser:
    settings = get_settings()
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--field",
        default=settings.DEFAULT_FIELD,
        help=f"Base field: Q, R, C or Fp:<p> (default: {settings.DEFAULT_FIELD})",
    )
    common.add_argument(
        "--seed",
        type=int,
        default=settings.DEFAULT_SEED,
        help=f"Seed for sampled cases (default: {settings.DEFAULT_SEED})",
    )
    common.add_argument("--json", action="store_true", help="Emit the JSON report instead of text tables")
    common.add_argument("--catalog", default=None, help="Catalog JSON file (default: CATALOG_PATH or packaged)")
    common.add_argument("--log-level", default=None, help=f"Logging level (default: {settings.LOG_LEVEL})")
    return common


def _input_group(parser: argparse.ArgumentParser, flag: str, help_text: str):
    group = parser.add_mutually_exclusive_group(required=True)
    group.add_argument(flag, dest="source", help=help_text)
    group.add_argument("--catalog-entry", dest="entry", help="Name of a catalog entry")


def build_parser() -> argparse.ArgumentParser:
    """Subcommands chi | an | sym | verify | goettsche | axioms | probe-disc"""
    settings = get_settings()
    common = _common_parser()
    parser = argparse.ArgumentParser(
        prog="gwpower", description="Grothendieck-Witt power structures and symmetric powers"
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    chi = sub.add_parser("chi", parents=[common], help="chi_c of a variety class")
    _input_group(chi, "--class", "Variety expression, e.g. 'P^2 + Et(2)'")

    an = sub.add_parser("an", parents=[common], help="a_n(q) under a_*")
    _input_group(an, "--expr", "GW expression, e.g. '<5>'")
    an.add_argument("--n", type=int, required=True, help="Power n")

    sym = sub.add_parser("sym", parents=[common], help="Symmetric powers and the motivic zeta series")
    _input_group(sym, "--class", "Variety expression")
    sym.add_argument("--order", type=int, default=settings.DEFAULT_ORDER, help="Truncation order")

    verify = sub.add_parser("verify", parents=[common], help="Check chi_c(Sym^n X) = a_n(chi_c(X))")
    _input_group(verify, "--class", "Variety expression, e.g. 'Curve(g=2)'")
    verify.add_argument(
        "--max-n", type=int, default=load_run_config()["verify"]["max_n"], help="Largest n (default: 6)"
    )

    goettsche = sub.add_parser("goettsche", parents=[common], help="Quadratic Goettsche series")
    _input_group(goettsche, "--chi", "GW expression for chi_c of the surface, e.g. 'H + <1>'")
    goettsche.add_argument("--order", type=int, default=settings.DEFAULT_ORDER, help="Truncation order")

    axioms = sub.add_parser("axioms", parents=[common], help="Seeded power-structure axiom check")
    axioms.add_argument("--structure", choices=commands.STRUCTURES, default="a_star", help="Power structure")
    axioms.add_argument("--cases", type=int, default=settings.AXIOM_CASES, help="Number of cases")
    axioms.add_argument("--order", type=int, default=None, help="Series order (default: from config.yaml)")

    sub.add_parser("probe-disc", parents=[common], help="Fit the discriminant exponent of a_n")
    return parser


def _resolve(args: argparse.Namespace, field: BaseField, kind: str):
    """(value, label) from the expression flag or the catalog"""
    if args.entry:
        value = load_catalog(args.catalog).resolve(args.entry, field, kind=kind)
        return value, args.entry
    if args.catalog:
        load_catalog(args.catalog)
    parse = parse_gw if kind == "gw" else parse_variety
    return parse(args.source, field), args.source


def run_command(args: argparse.Namespace) -> Report:
    """Dispatch a parsed command to its module"""
    field = BaseField.parse(args.field)
    logger.info(f"gwpower {args.command} over {field.label}")
    if args.command == "chi":
        c, label = _resolve(args, field, "variety")
        return commands.chi_command(c, label)
    if args.command == "an":
        q, label = _resolve(args, field, "gw")
        return commands.an_command(q, args.n, label)
    if args.command == "sym":
        c, label = _resolve(args, field, "variety")
        return commands.sym_command(c, args.order, label)
    if args.command == "verify":
        c, label = _resolve(args, field, "variety")
        return commands.verify_command(c, args.max_n, label)
    if args.command == "goettsche":
        chi, label = _resolve(args, field, "gw")
        return commands.goettsche_command(chi, args.order, label)
    if args.command == "axioms":
        return commands.axioms_command(args.structure, field, args.seed, args.cases, args.order)
    return commands.probe_command(field, args.seed)


def exit_code(report: Report) -> int:
    if isinstance(report, ProbeReport):
        return EXIT_OK if report.fitted_conventions() else EXIT_FAILED
    return EXIT_OK if report.passed else EXIT_FAILED


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK

    setup_logging(level=args.log_level)
    try:
        report = run_command(args)
    except GwPowerError as e:
        logger.error(f"{args.command} failed: {e}")
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE

    print(render(report, as_json=args.json))
    code = exit_code(report)
    logger.info(f"gwpower {args.command} finished with exit code {code}")
    return code


def run():
    sys.exit(main())


if __name__ == "__main__":
    run()
