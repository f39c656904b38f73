"""Argument parser of the lochmf command line."""

import argparse

from config.models import CheckName, CommandName, EvalObject, OutputFormat

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_BAD_INPUT = 2
EXIT_BUDGET_INFEASIBLE = 3


def _common(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--k", type=int, default=None, help="Weight parameter k (F has weight 2-2k); default 2")
    sub.add_argument("--D", type=int, default=None, help="Positive non-square discriminant; default 5")
    sub.add_argument("--a-max", dest="a_max", type=int, default=None, help="Override EvalParams.a_max")
    sub.add_argument("--n-max", dest="n_max", type=int, default=None, help="Override EvalParams.n_max")
    sub.add_argument("--tol", type=float, default=None, help="Override EvalParams.tol")
    sub.add_argument(
        "--format", dest="output_format", choices=[f.value for f in OutputFormat],
        default=OutputFormat.JSON.value, help="Output format",
    )
    sub.add_argument("--output", dest="output_path", default=None, help="Write to this file instead of stdout")
    sub.add_argument("--profile", default=None, help="Profile under profiles/ (default: LOCHMF_PROFILE)")
    sub.add_argument("--verbose", "-v", action="count", default=0, help="More logging on stderr")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lochmf",
        description="Evaluate and verify locally harmonic Maass forms F_{1-k,D} and the cusp forms f_{k,D}.",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    p_eval = subparsers.add_parser(CommandName.EVAL.value, help="Evaluate F, F' or f at one point")
    _common(p_eval)
    p_eval.add_argument(
        "--object", choices=[o.value for o in EvalObject], default=EvalObject.F.value,
        help="F (locally harmonic), F_prime (primitive forms only) or f (cusp form)",
    )
    p_eval.add_argument("--tau", nargs=2, type=float, metavar=("X", "Y"), required=True, help="Point x + iy")

    p_grid = subparsers.add_parser(CommandName.GRID.value, help="Sample F and the wall set on a grid (CSV)")
    _common(p_grid)
    p_grid.add_argument("--x-range", nargs=2, type=float, default=(-1.0, 1.0), metavar=("X0", "X1"))
    p_grid.add_argument("--y-range", nargs=2, type=float, default=(0.02, 2.0), metavar=("Y0", "Y1"))
    p_grid.add_argument("--steps", nargs=2, type=int, default=(100, 100), metavar=("NX", "NY"))
    p_grid.set_defaults(output_format=OutputFormat.CSV.value)

    p_periods = subparsers.add_parser(CommandName.PERIODS.value, help="Periods and the rationality congruence")
    _common(p_periods)

    p_hecke = subparsers.add_parser(CommandName.HECKE.value, help="Both sides of a Hecke relation")
    _common(p_hecke)
    p_hecke.add_argument("--p", type=int, required=True, help="Prime")
    p_hecke.add_argument("--tau", nargs=2, type=float, metavar=("X", "Y"), default=(0.0, 4.0))
    p_hecke.add_argument(
        "--relation", choices=["full", "holomorphic", "primitive"], default="full",
        help="Relation for F (full), f (holomorphic) or F' (primitive)",
    )

    p_verify = subparsers.add_parser(CommandName.VERIFY.value, help="Run the verification harness")
    _common(p_verify)
    p_verify.add_argument(
        "--checks", nargs="+", choices=[c.value for c in CheckName], default=None,
        help="Checks to run (default: every enabled check of the profile)",
    )
    p_verify.add_argument("--all", dest="run_all", action="store_true", help="Run every check of the profile, enabled or not")
    p_verify.add_argument("--timings", action="store_true", help="Include runtimes in the output (not reproducible)")
    p_verify.set_defaults(output_format=OutputFormat.TABLE.value)

    return parser
