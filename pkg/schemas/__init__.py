"""Pydantic records emitted by verify and cli."""

from schemas.records import (
    SCHEMA_VERSION,
    GRID_COLUMNS,
    CheckRecord,
    VerifyReport,
    EvalRecord,
    PeriodsRecord,
    HeckeRecord,
)

__all__ = [
    "SCHEMA_VERSION",
    "GRID_COLUMNS",
    "CheckRecord",
    "VerifyReport",
    "EvalRecord",
    "PeriodsRecord",
    "HeckeRecord",
]
