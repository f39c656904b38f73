"""
Structured logger for verification runs.

Records one event per check start, result, nudge and error, and offers the
history as dictionaries, JSON or a human-readable table.
"""

import json
import logging
import time
from dataclasses import asdict, dataclass
from enum import Enum
from typing import Any, Dict, List, Optional


class CheckEventType(str, Enum):
    """Types of harness events."""
    START = "start"
    RESULT = "result"
    NUDGE = "nudge"
    ERROR = "error"
    COMPLETION = "completion"


@dataclass
class CheckEvent:
    """Structured harness event."""
    event_type: CheckEventType
    check: str
    timestamp: float
    duration_ms: Optional[float] = None

    residual: Optional[float] = None
    budget: Optional[float] = None
    passed: Optional[bool] = None
    message: Optional[str] = None
    metadata: Optional[Dict[str, Any]] = None

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary, excluding None values."""
        data = asdict(self)
        return {k: v for k, v in data.items() if v is not None}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def to_human_readable(self) -> str:
        lines = [f"[{self.check}] {self.event_type.value.upper()}"]
        if self.residual is not None:
            lines.append(f"  Residual: {self.residual:.3e}")
        if self.budget is not None:
            lines.append(f"  Budget: {self.budget:.3e}")
        if self.passed is not None:
            lines.append(f"  Result: {'PASS' if self.passed else 'FAIL'}")
        if self.message:
            lines.append(f"  {self.message}")
        if self.duration_ms:
            lines.append(f"  Duration: {self.duration_ms:.0f}ms")
        return "\n".join(lines)


class CheckLogger:
    """
    Event log of one verification run.

    Safe to append from the worker threads of the harness; list.append is atomic.
    """

    def __init__(self, run_id: str):
        """
        Args:
            run_id: Identifier of the run (profile name or command)
        """
        self.run_id = run_id
        self.events: List[CheckEvent] = []
        self.start_time = time.time()
        self.logger = logging.getLogger(f"lochmf.checks.{run_id}")

    def _append(self, event: CheckEvent) -> CheckEvent:
        self.events.append(event)
        return event

    def log_start(self, check: str, params: Optional[Dict[str, Any]] = None) -> CheckEvent:
        self.logger.debug(f"[{check}] starting with {params or {}}")
        return self._append(CheckEvent(CheckEventType.START, check, time.time(), metadata=params))

    def log_result(
        self,
        check: str,
        residual: float,
        budget: float,
        passed: bool,
        duration_ms: Optional[float] = None,
        metadata: Optional[Dict[str, Any]] = None,
    ) -> CheckEvent:
        """
        Log the outcome of a check.

        Args:
            check: Check name
            residual: Measured discrepancy
            budget: Allowed discrepancy
            passed: Whether residual <= budget
            duration_ms: Runtime of the check
            metadata: Extra diagnostics

        Returns:
            Created CheckEvent
        """
        status = "PASS" if passed else "FAIL"
        self.logger.info(f"[{check}] {status}: residual {residual:.3e} vs budget {budget:.3e}")
        return self._append(CheckEvent(
            CheckEventType.RESULT, check, time.time(), duration_ms,
            residual=residual, budget=budget, passed=passed, metadata=metadata,
        ))

    def log_nudge(self, check: str, original: Any, moved: Any) -> CheckEvent:
        message = f"point {original} moved to {moved} to avoid a wall"
        self.logger.warning(f"[{check}] {message}")
        return self._append(CheckEvent(CheckEventType.NUDGE, check, time.time(), message=message))

    def log_error(self, check: str, error: Exception) -> CheckEvent:
        message = f"{type(error).__name__}: {error}"
        self.logger.error(f"[{check}] {message}")
        return self._append(CheckEvent(CheckEventType.ERROR, check, time.time(), passed=False, message=message))

    def log_completion(self, total: int, failed: int) -> CheckEvent:
        duration_ms = (time.time() - self.start_time) * 1000
        self.logger.info(f"[{self.run_id}] {total - failed}/{total} checks passed in {duration_ms:.0f}ms")
        return self._append(CheckEvent(
            CheckEventType.COMPLETION, self.run_id, time.time(), duration_ms,
            passed=failed == 0, metadata={"total": total, "failed": failed},
        ))

    def get_history(self) -> List[Dict[str, Any]]:
        return [event.to_dict() for event in self.events]

    def get_history_json(self, indent: int = 2) -> str:
        return json.dumps(self.get_history(), indent=indent)

    def get_summary(self) -> Dict[str, Any]:
        """Event counts and pass/fail totals."""
        event_counts: Dict[str, int] = {}
        for event in self.events:
            event_counts[event.event_type.value] = event_counts.get(event.event_type.value, 0) + 1
        results = [e for e in self.events if e.event_type is CheckEventType.RESULT]
        return {
            "run_id": self.run_id,
            "total_duration_ms": (time.time() - self.start_time) * 1000,
            "total_events": len(self.events),
            "event_counts": event_counts,
            "passed": sum(1 for e in results if e.passed),
            "failed": sum(1 for e in results if not e.passed) + event_counts.get("error", 0),
        }

    def format_human_readable(self) -> str:
        lines = ["=" * 80, f"Verification run - {self.run_id}", "=" * 80]
        for event in self.events:
            if event.event_type is CheckEventType.START:
                continue
            lines.append(event.to_human_readable())
            lines.append("-" * 80)
        return "\n".join(lines)


def create_check_logger(run_id: str) -> CheckLogger:
    return CheckLogger(run_id)
