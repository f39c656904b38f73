"""
Command implementations. Each takes a validated RunConfig plus the profile's
parameters and returns records; formatting and exit codes live in cli.main.
"""

import logging
from typing import Dict, List, Optional, Tuple

import numpy as np

from config.models import CheckName, CheckSpec, EvalObject, EvalParams, RunConfig, VerifyConfig
from core.arithmetic import as_discriminant
from core.errors import DomainError
from core.types import Point
from hecke.relations import verify_hecke, verify_hecke_holomorphic, verify_hecke_primitive
from modeval.evaluators import Evaluation, eval_F, eval_F_primitive, eval_fkD
from periods.polynomials import periods
from periods.rationality import rationality_residual
from qforms.forms import QForm
from qforms.geometry import interior_forms, signature_hash, walls_through
from schemas.records import EvalRecord, HeckeRecord, PeriodsRecord, VerifyReport
from utils.check_logger import CheckLogger
from utils.parallel import ordered_map
from verify.checks import cusp_dimension
from verify.harness import run_all

logger = logging.getLogger(__name__)

_EVALUATORS = {
    EvalObject.F: eval_F,
    EvalObject.F_PRIME: eval_F_primitive,
    EvalObject.CUSP: eval_fkD,
}

_RELATIONS = {
    "full": verify_hecke,
    "holomorphic": verify_hecke_holomorphic,
    "primitive": verify_hecke_primitive,
}


def _point(cfg: RunConfig) -> Point:
    if cfg.tau is None:
        raise DomainError(f"{cfg.command.value} needs --tau")
    return Point(*cfg.tau)


def cmd_eval(cfg: RunConfig, params: EvalParams) -> EvalRecord:
    """Evaluate the chosen object at cfg.tau."""
    disc = as_discriminant(cfg.D)
    tau = _point(cfg)
    ev = _EVALUATORS[cfg.object](cfg.k, disc, tau, params)
    return EvalRecord(
        object=cfg.object.value, k=cfg.k, D=disc.D, tau=(tau.x, tau.y),
        value_re=ev.real, value_im=ev.imag, tail_estimate=ev.tail,
    )


GridRow = Tuple[float, float, float, float, float, str, int]


def cmd_grid(cfg: RunConfig, params: EvalParams) -> List[GridRow]:
    """
    Sample F_{1-k,D} on the grid of cfg.

    Rows come in y-major order (all x for the first y, then the next y).
    The signature hash identifies the connected component of H minus E_D;
    on_wall_flag is 1 within wall_margin of a wall.
    """
    if cfg.grid is None:
        raise DomainError("grid command needs a grid specification")
    disc = as_discriminant(cfg.D)
    evaluator = _EVALUATORS[cfg.object]
    xs = np.linspace(cfg.grid.x_range[0], cfg.grid.x_range[1], cfg.grid.steps[0])
    ys = np.linspace(cfg.grid.y_range[0], cfg.grid.y_range[1], cfg.grid.steps[1])

    def row(y: float) -> List[GridRow]:
        out = []
        for x in xs:
            tau = Point(float(x), float(y))
            ev: Evaluation = evaluator(cfg.k, disc, tau, params)
            on_wall = bool(walls_through(disc, tau, params.wall_margin))
            out.append((
                tau.x, tau.y, ev.real, ev.imag, ev.tail,
                signature_hash(interior_forms(disc, tau)), int(on_wall),
            ))
        return out

    logger.info(f"grid {len(xs)}x{len(ys)} for k={cfg.k} D={disc.D}")
    rows = ordered_map(row, [float(y) for y in ys])
    return [r for chunk in rows for r in chunk]


def cmd_periods(cfg: RunConfig, params: EvalParams, m_max: int = 4) -> PeriodsRecord:
    """Periods of f_{k,D} and the residual of the rationality congruence."""
    disc = as_discriminant(cfg.D)
    period_set = periods(cfg.k, disc, params, m_max=m_max)
    result = rationality_residual(cfg.k, disc, period_set)
    return PeriodsRecord(
        k=cfg.k, D=disc.D,
        periods=list(period_set.r), period_errors=list(period_set.errors),
        residual=result.residual, fitted_constant=result.fitted_constant,
        error_estimate=result.budget, rational_rhs=[int(c) for c in result.rhs.coeffs],
        passed=result.residual <= max(result.budget, params.tol),
    )


def cmd_hecke(cfg: RunConfig, params: EvalParams, relation: str = "full") -> HeckeRecord:
    """Both sides of the chosen Hecke relation at cfg.tau."""
    if cfg.p is None:
        raise DomainError("hecke needs --p")
    try:
        verify = _RELATIONS[relation]
    except KeyError:
        raise DomainError(f"unknown Hecke relation {relation!r}")
    tau = _point(cfg)
    result = verify(cfg.k, cfg.D, cfg.p, tau, params)
    return HeckeRecord(
        relation=relation, k=cfg.k, D=int(cfg.D), p=cfg.p, tau=(result.tau.x, result.tau.y),
        lhs_re=result.lhs.real, lhs_im=result.lhs.imag,
        rhs_re=result.rhs.real, rhs_im=result.rhs.imag,
        residual=result.residual, error_estimate=result.budget,
        nudges=result.nudges, passed=result.passed,
    )


_WALL_CHECKS = {CheckName.WALL_JUMP, CheckName.WALL_AVERAGE}
_K_FREE = {CheckName.ZAGIER, CheckName.COCYCLE}
_NEEDS_ZERO_CUSP_FORM = {CheckName.VANISHING, CheckName.CONSTANT}


def _retarget(spec: CheckSpec, k: Optional[int], D: Optional[int]) -> Optional[CheckSpec]:
    """
    Point a configured check at (k, D); None when it does not apply there.

    The vanishing and constant checks only apply where S_2k is trivial, since
    F equals c_inf in the top component only when f_{k,D} is zero. Wall checks
    need their form Q to have discriminant D and rationality needs even k.
    """
    params = dict(spec.params)
    sweep = dict(spec.sweep)
    if k is not None and spec.name not in _K_FREE:
        if spec.name in _NEEDS_ZERO_CUSP_FORM and cusp_dimension(2 * k) != 0:
            return None
        if spec.name is CheckName.RATIONALITY and k % 2:
            return None
        params["k"] = k
        sweep.pop("k", None)
    if D is not None and spec.name is not CheckName.COCYCLE:
        if spec.name in _WALL_CHECKS and "Q" in params and QForm(*params["Q"]).disc != D:
            return None
        params["D"] = D
        sweep.pop("D", None)
    return spec.model_copy(update={"params": params, "sweep": sweep})


def verify_config_for(
    base: VerifyConfig,
    params: EvalParams,
    checks: Optional[List[str]] = None,
    include_disabled: bool = False,
    k: Optional[int] = None,
    D: Optional[int] = None,
) -> VerifyConfig:
    """The profile's VerifyConfig narrowed to the requested checks and (k, D)."""
    specs = list(base.checks)
    if include_disabled:
        specs = [s.model_copy(update={"enabled": True}) for s in specs]
    if checks:
        wanted = {CheckName(n) for n in checks}
        specs = [s.model_copy(update={"enabled": True}) for s in specs if s.name in wanted]
    if k is not None or D is not None:
        specs = [r for r in (_retarget(s, k, D) for s in specs) if r is not None]
    return base.model_copy(update={"checks": specs, "eval": params})


def cmd_verify(config: VerifyConfig, run_id: str, check_logger: Optional[CheckLogger] = None) -> VerifyReport:
    """Run the harness; the report passes iff every record passes."""
    records = run_all(config, check_logger=check_logger, run_id=run_id)
    return VerifyReport(records=records)


def summary_counts(report: VerifyReport) -> Dict[str, int]:
    return {"total": len(report.records), "failed": len(report.failed)}
