"""Shared utilities: worker pool, check event log and the run file log."""

from utils.check_logger import CheckEvent, CheckEventType, CheckLogger, create_check_logger
from utils.parallel import ordered_map, worker_count

__all__ = [
    "CheckEvent",
    "CheckEventType",
    "CheckLogger",
    "create_check_logger",
    "ordered_map",
    "worker_count",
]
