"""
Pydantic models for JSON-based run profiles.

Each profile has a directory in profiles/ with these files:
- eval.json: Truncation radii and tolerances for every lattice sum and quadrature
- verify.json: Check selection, acceptance tolerances and finite-difference steps
"""

from enum import Enum
from typing import Any, Dict, List, Optional, Tuple

from pydantic import BaseModel, Field, field_validator, model_validator


# ============================================================================
# EVALUATION PARAMETERS
# ============================================================================

class EvalParams(BaseModel):
    """Truncation radii and tolerances governing every infinite sum and quadrature."""
    a_max: int = Field(default=2000, ge=1, description="Largest |a| summed exactly")
    n_max: int = Field(default=40, ge=1, description="Half-width of the window of translates around the point")
    tol: float = Field(default=1e-8, gt=0, description="Target absolute error for budgets")
    quad_points: int = Field(default=64, ge=4, description="Samples of the Fourier contour; also quadrature subinterval limit")
    y_cut: float = Field(default=12.0, gt=0, description="Height where Eichler-integral quadrature is truncated")
    wall_margin: float = Field(default=1e-4, gt=0, description="Distance below which a point counts as on a wall")
    chunk_size: int = Field(default=256, ge=1, description="Residue pairs per work chunk (fixed, independent of workers)")

    model_config = {"frozen": True}

    def with_overrides(self, **overrides: Any) -> "EvalParams":
        """Return a copy with the non-None overrides applied."""
        values = {k: v for k, v in overrides.items() if v is not None}
        return self.model_copy(update=values) if values else self


class FiniteDifferenceSettings(BaseModel):
    """Step sizes for the differential-operator checks."""
    h_first: float = Field(default=1e-4, gt=0, description="Step for first derivatives (xi operator)")
    h_second: float = Field(default=1e-3, gt=0, description="Step for second derivatives (Laplacian)")
    richardson_levels: int = Field(default=1, ge=0, description="Step-halving levels used for error estimates")


# ============================================================================
# VERIFICATION CONFIGURATION
# ============================================================================

class CheckName(str, Enum):
    """Checks known to the harness, in acceptance order."""
    VANISHING = "vanishing"
    CONSTANT = "constant"
    EXPANSION = "expansion"
    XI = "xi"
    MODULARITY = "modularity"
    LAPLACIAN = "laplacian"
    GROWTH = "growth"
    WALL_JUMP = "wall_jump"
    WALL_AVERAGE = "wall_average"
    RATIONALITY = "rationality"
    HECKE = "hecke"
    ZAGIER = "zagier"
    IVAL = "ival"
    COCYCLE = "cocycle"


class CheckSpec(BaseModel):
    """One configured check of the harness."""
    name: CheckName = Field(..., description="Which check to run")
    enabled: bool = Field(default=True, description="Whether the check runs")
    rel_tol: float = Field(default=1e-3, gt=0, description="Declared acceptance tolerance (relative to the check's scale)")
    abs_tol: float = Field(default=0.0, ge=0, description="Absolute floor of the acceptance budget")
    params: Dict[str, Any] = Field(default_factory=dict, description="Check-specific arguments (k, D, tau, p, ...)")
    sweep: Dict[str, List[Any]] = Field(default_factory=dict, description="Arguments to run over; one record per combination")
    eval_overrides: Dict[str, Any] = Field(default_factory=dict, description="EvalParams fields overridden for this check")


class VerifyConfig(BaseModel):
    """Configuration of a verification run."""
    checks: List[CheckSpec] = Field(default_factory=list, description="Checks in execution order")
    finite_difference: FiniteDifferenceSettings = Field(default_factory=FiniteDifferenceSettings)
    eval: EvalParams = Field(default_factory=EvalParams, description="Evaluation parameters shared by all checks")

    def get_enabled_checks(self) -> List[CheckSpec]:
        """Get the enabled checks in configured order."""
        return [spec for spec in self.checks if spec.enabled]

    def select(self, names: List[str]) -> "VerifyConfig":
        """Restrict to the named checks, keeping configured order."""
        wanted = {CheckName(n) for n in names}
        return self.model_copy(update={"checks": [c for c in self.checks if c.name in wanted]})


class ProfileConfiguration(BaseModel):
    """Complete profile configuration (all files combined)."""
    name: str = Field(..., description="Profile name")
    eval: EvalParams = Field(default_factory=EvalParams)
    verify: VerifyConfig = Field(default_factory=VerifyConfig)


# ============================================================================
# COMMAND-LINE RUN CONFIGURATION
# ============================================================================

class CommandName(str, Enum):
    """CLI subcommands."""
    EVAL = "eval"
    GRID = "grid"
    PERIODS = "periods"
    HECKE = "hecke"
    VERIFY = "verify"


class EvalObject(str, Enum):
    """Which object an evaluation targets."""
    F = "F"
    F_PRIME = "F_prime"
    CUSP = "f"


class OutputFormat(str, Enum):
    """Emitted output format."""
    JSON = "json"
    CSV = "csv"
    TABLE = "table"


class GridSpec(BaseModel):
    """Rectangular sampling grid in the upper half-plane."""
    x_range: Tuple[float, float] = Field(default=(-1.0, 1.0))
    y_range: Tuple[float, float] = Field(default=(0.02, 2.0))
    steps: Tuple[int, int] = Field(default=(100, 100))

    @model_validator(mode="after")
    def _check_ranges(self) -> "GridSpec":
        if self.x_range[0] >= self.x_range[1] or self.y_range[0] >= self.y_range[1]:
            raise ValueError("grid ranges must be increasing")
        if self.y_range[0] <= 0:
            raise ValueError("grid must lie in the upper half-plane (y > 0)")
        if min(self.steps) < 1:
            raise ValueError("grid steps must be positive")
        return self


class RunConfig(BaseModel):
    """Validated command-line request; fully deterministic (no seeds)."""
    command: CommandName
    object: EvalObject = EvalObject.F
    k: int = Field(default=2, ge=2, description="Weight parameter k (F has weight 2-2k)")
    D: int = Field(default=5, gt=0, description="Positive non-square discriminant")
    tau: Optional[Tuple[float, float]] = Field(default=None, description="(x, y) with y > 0")
    p: Optional[int] = Field(default=None, description="Prime for the Hecke operator")
    grid: Optional[GridSpec] = None
    checks: List[str] = Field(default_factory=list, description="Check names for verify; empty means all")
    a_max: Optional[int] = Field(default=None, ge=1)
    n_max: Optional[int] = Field(default=None, ge=1)
    tol: Optional[float] = Field(default=None, gt=0)
    output_format: OutputFormat = OutputFormat.JSON
    output_path: Optional[str] = None

    @field_validator("tau")
    @classmethod
    def _check_tau(cls, value: Optional[Tuple[float, float]]) -> Optional[Tuple[float, float]]:
        if value is not None and value[1] <= 0:
            raise ValueError("tau must lie in the upper half-plane (y > 0)")
        return value

    def eval_params(self, base: EvalParams) -> EvalParams:
        """Apply the command-line overrides to the profile's parameters."""
        return base.with_overrides(a_max=self.a_max, n_max=self.n_max, tol=self.tol)
