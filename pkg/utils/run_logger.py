"""
Optional file log of verification runs.

Enabled by LOCHMF_LOG_FILE; the handler is attached on first use so that
importing the package never touches the filesystem.
"""

import logging
import threading
from typing import Any, Dict, Optional

from config.settings import get_settings

run_file_logger = logging.getLogger("lochmf.run_file")
run_file_logger.propagate = False

_configured_path: Optional[str] = None
_lock = threading.Lock()


def _ensure_handler() -> bool:
    """Attach the file handler for the configured path; False when file logging is off."""
    global _configured_path
    path = get_settings().log_file
    if not path:
        return False
    with _lock:
        if _configured_path != path:
            for handler in list(run_file_logger.handlers):
                run_file_logger.removeHandler(handler)
                handler.close()
            file_handler = logging.FileHandler(path, mode="a")
            file_handler.setFormatter(logging.Formatter("%(asctime)s - RUN - %(levelname)s - %(message)s"))
            run_file_logger.addHandler(file_handler)
            run_file_logger.setLevel(logging.DEBUG)
            _configured_path = path
    return True


def log_run_start(run_id: str, checks: list, params: Dict[str, Any]) -> None:
    if not _ensure_handler():
        return
    run_file_logger.info("=" * 80)
    run_file_logger.info(f"RUN START: {run_id}")
    run_file_logger.info(f"   Checks: {', '.join(checks) or '(none)'}")
    run_file_logger.info(f"   Parameters: {params}")
    run_file_logger.info("=" * 80)


def log_check_complete(name: str, passed: bool, residual: float, budget: float, runtime: float) -> None:
    if not _ensure_handler():
        return
    level = logging.INFO if passed else logging.ERROR
    status = "PASS" if passed else "FAIL"
    run_file_logger.log(level, f"{status} {name}: residual {residual:.3e}, budget {budget:.3e}, {runtime:.2f}s")


def log_run_complete(run_id: str, success: bool, message: str) -> None:
    if not _ensure_handler():
        return
    run_file_logger.info("=" * 80)
    if success:
        run_file_logger.info(f"RUN COMPLETE: {run_id}")
    else:
        run_file_logger.error(f"RUN FAILED: {run_id}")
    run_file_logger.info(f"   Message: {message}")
    run_file_logger.info("=" * 80)
