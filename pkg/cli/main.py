"""
Entry point of the lochmf command line.

Exit codes: 0 all good, 1 a check failed, 2 bad input, 3 error budget
infeasible. Records go to stdout (or --output); logging goes to stderr.
"""

import csv
import io
import json
import logging
import sys
from typing import Any, List, Optional, Sequence

from pydantic import ValidationError

from cli.commands import cmd_eval, cmd_grid, cmd_hecke, cmd_periods, cmd_verify, summary_counts, verify_config_for
from cli.parser import EXIT_BAD_INPUT, EXIT_BUDGET_INFEASIBLE, EXIT_CHECK_FAILED, EXIT_OK, build_parser
from config.loader import ConfigurationError, load_config
from config.models import CommandName, GridSpec, OutputFormat, RunConfig
from config.settings import get_settings
from core.errors import BudgetInfeasibleError, DomainError, WallCollisionError
from schemas.records import GRID_COLUMNS, SCHEMA_VERSION, VerifyReport
from utils.check_logger import create_check_logger

logger = logging.getLogger("lochmf.cli")


def configure_logging(verbosity: int = 0) -> None:
    """Root logger on stderr; each -v lowers the threshold one level from LOCHMF_LOG_LEVEL."""
    base = logging.getLevelName(get_settings().log_level.upper())
    if not isinstance(base, int):
        base = logging.WARNING
    level = max(logging.DEBUG, base - 10 * verbosity)
    logging.basicConfig(level=level, format="%(levelname)s: %(message)s", stream=sys.stderr, force=True)


def run_config_from_args(args: Any) -> RunConfig:
    """Validate the parsed arguments; raises pydantic ValidationError."""
    command = CommandName(args.command)
    grid = None
    if command is CommandName.GRID:
        grid = GridSpec(x_range=tuple(args.x_range), y_range=tuple(args.y_range), steps=tuple(args.steps))
    tau = getattr(args, "tau", None)
    return RunConfig(
        command=command,
        object=getattr(args, "object", "F"),
        k=args.k if args.k is not None else 2,
        D=args.D if args.D is not None else 5,
        tau=tuple(tau) if tau is not None else None,
        p=getattr(args, "p", None),
        grid=grid,
        checks=getattr(args, "checks", None) or [],
        a_max=args.a_max,
        n_max=args.n_max,
        tol=args.tol,
        output_format=args.output_format,
        output_path=args.output_path,
    )


def _json(data: Any) -> str:
    return json.dumps(data, indent=2) + "\n"


def _csv(header: Sequence[str], rows: List[Sequence[Any]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([repr(v) if isinstance(v, float) else v for v in row])
    return buffer.getvalue()


def _table(pairs: List[Sequence[Any]]) -> str:
    width = max((len(str(key)) for key, _ in pairs), default=0)
    return "\n".join(f"{str(key).ljust(width)}  {value}" for key, value in pairs) + "\n"


def format_record(record: Any, fmt: OutputFormat) -> str:
    """JSON object, one-row CSV or key/value table of a flat record."""
    data = record.model_dump()
    if fmt is OutputFormat.JSON:
        return _json(data)
    if fmt is OutputFormat.CSV:
        flat = {k: json.dumps(v) if isinstance(v, (list, tuple)) else v for k, v in data.items()}
        return _csv(list(flat), [list(flat.values())])
    return _table(list(data.items()))


def format_report(report: VerifyReport, fmt: OutputFormat, timings: bool = False) -> str:
    """Verification report; runtimes only with timings=True so default output is reproducible."""
    if fmt is OutputFormat.JSON:
        return _json(report.public_dict(include_runtime=timings))
    header = ["name", "passed", "residual", "budget", "error"] + (["runtime"] if timings else [])
    rows = []
    for r in report.records:
        row = [r.name, r.passed, r.residual, r.budget, r.error or ""]
        if timings:
            row.append(r.runtime)
        rows.append(row)
    if fmt is OutputFormat.CSV:
        return _csv(header, rows)
    width = max([len(r.name) for r in report.records] + [4])
    lines = [f"schema_version {SCHEMA_VERSION}"]
    for r in report.records:
        status = "PASS" if r.passed else "FAIL"
        text = f"{status}  {r.name.ljust(width)}  residual {r.residual:.3e}  budget {r.budget:.3e}"
        if r.error:
            text += f"  ({r.error})"
        if timings:
            text += f"  {r.runtime:.2f}s"
        lines.append(text)
    counts = summary_counts(report)
    lines.append(f"{counts['total'] - counts['failed']}/{counts['total']} checks passed")
    return "\n".join(lines) + "\n"


def emit(text: str, output_path: Optional[str]) -> None:
    if output_path:
        with open(output_path, "w", encoding="utf-8", newline="") as f:
            f.write(text)
    else:
        sys.stdout.write(text)


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Run the command line; returns the exit code."""
    parser = build_parser()
    args = parser.parse_args(argv)
    configure_logging(args.verbose)

    try:
        profile = load_config(args.profile)
        cfg = run_config_from_args(args)
    except (ConfigurationError, ValidationError) as e:
        logger.error(f"Invalid input: {e}")
        return EXIT_BAD_INPUT

    params = cfg.eval_params(profile.eval)
    fmt = cfg.output_format
    try:
        if cfg.command is CommandName.EVAL:
            emit(format_record(cmd_eval(cfg, params), fmt), cfg.output_path)
            return EXIT_OK
        if cfg.command is CommandName.GRID:
            rows = cmd_grid(cfg, params)
            if fmt is OutputFormat.JSON:
                text = _json({"schema_version": SCHEMA_VERSION, "columns": list(GRID_COLUMNS), "rows": [list(r) for r in rows]})
            else:
                text = _csv(GRID_COLUMNS, rows)
            emit(text, cfg.output_path)
            return EXIT_OK
        if cfg.command is CommandName.PERIODS:
            record = cmd_periods(cfg, params)
            emit(format_record(record, fmt), cfg.output_path)
            return EXIT_OK if record.passed else EXIT_CHECK_FAILED
        if cfg.command is CommandName.HECKE:
            record = cmd_hecke(cfg, params, args.relation)
            emit(format_record(record, fmt), cfg.output_path)
            return EXIT_OK if record.passed else EXIT_CHECK_FAILED

        verify_config = verify_config_for(
            profile.verify, params, checks=cfg.checks, include_disabled=args.run_all, k=args.k, D=args.D,
        )
        check_logger = create_check_logger(profile.name)
        report = cmd_verify(verify_config, profile.name, check_logger)
        emit(format_report(report, fmt, args.timings), cfg.output_path)
        logger.info(check_logger.format_human_readable())
        return EXIT_OK if report.passed else EXIT_CHECK_FAILED
    except BudgetInfeasibleError as e:
        logger.error(f"Error budget infeasible: {e}")
        return EXIT_BUDGET_INFEASIBLE
    except (DomainError, WallCollisionError) as e:
        logger.error(f"Invalid input: {e}")
        return EXIT_BAD_INPUT


if __name__ == "__main__":
    sys.exit(main())
