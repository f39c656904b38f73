"""
Verification harness.

Expands the configured checks into concrete runs, executes them concurrently
in worker threads and collects one CheckRecord per run. A check that raises
never aborts the run; its exception becomes a failed record.
"""

import asyncio
import itertools
import logging
import time
from typing import Any, Callable, Dict, List, Optional

from config.models import CheckName, CheckSpec, EvalParams, VerifyConfig
from schemas.records import CheckRecord, VerifyReport
from utils.check_logger import CheckLogger
from utils.run_logger import log_check_complete, log_run_complete, log_run_start
from verify import checks

logger = logging.getLogger(__name__)

CHECK_REGISTRY: Dict[CheckName, Callable[..., CheckRecord]] = {
    CheckName.VANISHING: checks.check_vanishing,
    CheckName.CONSTANT: checks.check_constant,
    CheckName.EXPANSION: checks.check_expansion,
    CheckName.XI: checks.check_xi,
    CheckName.MODULARITY: checks.check_modularity,
    CheckName.LAPLACIAN: checks.check_laplacian,
    CheckName.GROWTH: checks.check_growth,
    CheckName.WALL_JUMP: checks.check_wall_jump,
    CheckName.WALL_AVERAGE: checks.check_wall_average,
    CheckName.RATIONALITY: checks.check_rationality,
    CheckName.HECKE: checks.check_hecke,
    CheckName.ZAGIER: checks.check_zagier,
    CheckName.IVAL: checks.check_ival,
    CheckName.COCYCLE: checks.check_cocycle,
}

_FD_CHECKS = {CheckName.XI, CheckName.LAPLACIAN}
_ORDER = {name: i for i, name in enumerate(CheckName)}


class PlannedCheck:
    """One concrete run of a configured check."""

    def __init__(self, spec: CheckSpec, arguments: Dict[str, Any], label: str):
        self.spec = spec
        self.arguments = arguments
        self.label = label

    def __repr__(self) -> str:
        return f"PlannedCheck({self.label})"


def _label(name: CheckName, point: Dict[str, Any]) -> str:
    if not point:
        return name.value
    inner = ",".join(f"{key}={value}" for key, value in point.items())
    return f"{name.value}[{inner}]"


def expand(spec: CheckSpec) -> List[PlannedCheck]:
    """
    Cartesian product of spec.sweep on top of spec.params.

    Sweep keys are taken in configured order, so labels and record order are
    stable for a given profile.
    """
    if not spec.sweep:
        return [PlannedCheck(spec, dict(spec.params), spec.name.value)]
    keys = list(spec.sweep)
    planned = []
    for values in itertools.product(*(spec.sweep[key] for key in keys)):
        point = dict(zip(keys, values))
        planned.append(PlannedCheck(spec, {**spec.params, **point}, _label(spec.name, point)))
    return planned


def plan(config: VerifyConfig) -> List[PlannedCheck]:
    """Enabled checks in acceptance order; configured order breaks ties."""
    specs = sorted(config.get_enabled_checks(), key=lambda s: _ORDER[s.name])
    return [item for spec in specs for item in expand(spec)]


def _call(item: PlannedCheck, base: EvalParams, config: VerifyConfig) -> CheckRecord:
    spec = item.spec
    params = base.with_overrides(**spec.eval_overrides) if spec.eval_overrides else base
    kwargs = dict(item.arguments)
    kwargs.update(params=params, rel_tol=spec.rel_tol, abs_tol=spec.abs_tol)
    if spec.name in _FD_CHECKS:
        kwargs["fd"] = config.finite_difference
    record = CHECK_REGISTRY[spec.name](**kwargs)
    # sweeps report under their label; params stay as run
    return record.model_copy(update={"name": item.label})


async def run_all_async(
    config: VerifyConfig,
    check_logger: Optional[CheckLogger] = None,
    run_id: str = "verify",
) -> List[CheckRecord]:
    """
    Run every enabled check concurrently.

    Args:
        config: Checks, finite-difference settings and shared EvalParams
        check_logger: Optional event log of the run
        run_id: Name written to the run file log

    Returns:
        One record per planned run, in plan order
    """
    planned = plan(config)
    if not planned:
        logger.info("No checks enabled")
        return []

    log_run_start(run_id, [p.label for p in planned], config.eval.model_dump())
    started = time.perf_counter()

    async def run_one(item: PlannedCheck) -> CheckRecord:
        if check_logger:
            check_logger.log_start(item.label, item.arguments)
        return await asyncio.to_thread(_call, item, config.eval, config)

    results = await asyncio.gather(*(run_one(p) for p in planned), return_exceptions=True)

    records: List[CheckRecord] = []
    for item, result in zip(planned, results):
        if isinstance(result, BaseException):
            logger.error(f"Check {item.label} raised {type(result).__name__}: {result}")
            if check_logger:
                check_logger.log_error(item.label, result)
            record = CheckRecord.failure(item.label, result, item.arguments)
        else:
            record = result
            if check_logger:
                check_logger.log_result(
                    item.label, record.residual, record.budget, record.passed,
                    duration_ms=record.runtime * 1000,
                )
            nudges = record.details.get("nudges")
            if check_logger and nudges:
                check_logger.log_nudge(item.label, item.arguments.get("tau"), record.details.get("tau_used"))
        log_check_complete(record.name, record.passed, record.residual, record.budget, record.runtime)
        records.append(record)

    failed = sum(1 for r in records if not r.passed)
    if check_logger:
        check_logger.log_completion(len(records), failed)
    elapsed = time.perf_counter() - started
    log_run_complete(run_id, failed == 0, f"{len(records) - failed}/{len(records)} passed in {elapsed:.1f}s")
    return records


def run_all(
    config: VerifyConfig,
    check_logger: Optional[CheckLogger] = None,
    run_id: str = "verify",
) -> List[CheckRecord]:
    """Synchronous wrapper of run_all_async."""
    return asyncio.run(run_all_async(config, check_logger, run_id))


def build_report(records: List[CheckRecord]) -> VerifyReport:
    return VerifyReport(records=records)
