"""
Record schemas emitted by the verification harness and the CLI.

All values that leave the library carry an error estimate; the JSON layout
is documented in docs/output_schema.md.
"""

import math
from typing import Any, Dict, List, Optional, Tuple

from pydantic import BaseModel, Field, model_validator

SCHEMA_VERSION = "1"

GRID_COLUMNS: Tuple[str, ...] = ("x", "y", "F_re", "F_im", "tail_estimate", "signature_hash", "on_wall_flag")


class CheckRecord(BaseModel):
    """Outcome of one numerical check."""
    name: str = Field(..., description="Check name")
    params: Dict[str, Any] = Field(default_factory=dict, description="Arguments the check ran with")
    residual: float = Field(..., description="Measured discrepancy")
    budget: float = Field(..., description="Allowed discrepancy, from tails and step orders")
    passed: bool = Field(..., description="residual <= budget and no error")
    runtime: float = Field(default=0.0, description="Wall-clock seconds")
    error: Optional[str] = Field(default=None, description="Exception text when the check could not run")
    details: Dict[str, Any] = Field(default_factory=dict, description="Check-specific diagnostics")

    @model_validator(mode="after")
    def _pass_matches_budget(self) -> "CheckRecord":
        expected = self.error is None and math.isfinite(self.residual) and self.residual <= self.budget
        if self.passed != expected:
            raise ValueError(f"passed={self.passed} inconsistent with residual {self.residual} vs budget {self.budget}")
        return self

    @classmethod
    def judge(cls, name: str, residual: float, budget: float, **kwargs: Any) -> "CheckRecord":
        """Build a record whose pass flag follows from residual and budget."""
        passed = math.isfinite(residual) and residual <= budget
        return cls(name=name, residual=residual, budget=budget, passed=passed, **kwargs)

    @classmethod
    def failure(cls, name: str, error: Exception, params: Optional[Dict[str, Any]] = None) -> "CheckRecord":
        """Record for a check that raised instead of producing a residual."""
        return cls(
            name=name,
            params=params or {},
            residual=math.inf,
            budget=0.0,
            passed=False,
            error=f"{type(error).__name__}: {error}",
        )

    def public_dict(self, include_runtime: bool = False) -> Dict[str, Any]:
        """JSON-ready dict; runtime is left out unless asked for so output is reproducible."""
        data = self.model_dump(exclude=None if include_runtime else {"runtime"})
        if not math.isfinite(data["residual"]):
            data["residual"] = None
        return data


class VerifyReport(BaseModel):
    """All records of one verification run."""
    schema_version: str = SCHEMA_VERSION
    records: List[CheckRecord] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.records)

    @property
    def failed(self) -> List[CheckRecord]:
        return [r for r in self.records if not r.passed]

    def public_dict(self, include_runtime: bool = False) -> Dict[str, Any]:
        return {
            "schema_version": self.schema_version,
            "passed": self.passed,
            "records": [r.public_dict(include_runtime) for r in self.records],
        }


class EvalRecord(BaseModel):
    """One evaluation emitted by the eval command."""
    schema_version: str = SCHEMA_VERSION
    object: str
    k: int
    D: int
    tau: Tuple[float, float]
    value_re: float
    value_im: float
    tail_estimate: float


class PeriodsRecord(BaseModel):
    """Periods and the rationality congruence for f_{k,D}."""
    schema_version: str = SCHEMA_VERSION
    k: int
    D: int
    periods: List[float]
    period_errors: List[float]
    residual: float
    fitted_constant: float
    error_estimate: float
    rational_rhs: List[int]
    passed: bool


class HeckeRecord(BaseModel):
    """Both sides of a Hecke relation."""
    schema_version: str = SCHEMA_VERSION
    relation: str
    k: int
    D: int
    p: int
    tau: Tuple[float, float]
    lhs_re: float
    lhs_im: float
    rhs_re: float
    rhs_im: float
    residual: float
    error_estimate: float
    nudges: int = 0
    passed: bool
