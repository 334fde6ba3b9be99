"""
Logger Module
Provides logging for coloring runs, lemma dispatch, solver calls and errors.
"""

import logging
import os
from pathlib import Path
from logging.handlers import RotatingFileHandler


DEFAULT_LOG_DIR = Path.home() / ".strongcolor" / "logs"
LOG_NAME = "StrongColor"
MAX_LOG_BYTES = 10 * 1024 * 1024
LOG_BACKUPS = 5

FILE_FORMAT = logging.Formatter(
    '%(asctime)s [%(levelname)s] %(name)s %(module)s.%(funcName)s:%(lineno)d | %(message)s',
    datefmt='%Y-%m-%d %H:%M:%S'
)
CONSOLE_FORMAT = logging.Formatter('%(levelname)-7s %(message)s')

# status -> level for log_operation
OPERATION_LEVELS = {
    "STARTED": logging.INFO,
    "RUNNING": logging.INFO,
    "SUCCESS": logging.INFO,
    "COMPLETED": logging.INFO,
    "FAILED": logging.ERROR,
    "ERROR": logging.ERROR,
}


def _rotating(path: Path, level: int) -> RotatingFileHandler:
    handler = RotatingFileHandler(path, maxBytes=MAX_LOG_BYTES, backupCount=LOG_BACKUPS, encoding='utf-8')
    handler.setLevel(level)
    handler.setFormatter(FILE_FORMAT)
    return handler


class AppLogger:
    """Process-wide logger: rotating full log, rotating error log, stderr console."""

    _instance = None
    _ready = False

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __init__(self):
        if AppLogger._ready:
            return
        AppLogger._ready = True
        self.logger = logging.getLogger(LOG_NAME)
        self.logger.setLevel(logging.DEBUG)
        self.logger.propagate = False
        self.log_file = None
        self.error_log_file = None
        self.configure(os.environ.get("STRONGCOLOR_LOG_DIR"))

    def configure(self, log_dir: str = None, quiet: bool = False):
        """
        Re-point the handlers after configuration has been loaded.

        Args:
            log_dir: Directory for the rotating log files
            quiet: Only warnings and errors reach the console
        """
        for handler in list(self.logger.handlers):
            self.logger.removeHandler(handler)
            handler.close()

        target = Path(log_dir) if log_dir else DEFAULT_LOG_DIR
        try:
            target.mkdir(parents=True, exist_ok=True)
            self.log_file = target / "strongcolor.log"
            self.error_log_file = target / "strongcolor_errors.log"
            self.logger.addHandler(_rotating(self.log_file, logging.DEBUG))
            self.logger.addHandler(_rotating(self.error_log_file, logging.ERROR))
        except OSError:
            # read-only home: console only
            self.log_file = self.error_log_file = None

        # stderr, so stdout stays free for results
        console = logging.StreamHandler()
        console.setLevel(logging.WARNING if quiet else logging.INFO)
        console.setFormatter(CONSOLE_FORMAT)
        self.logger.addHandler(console)

        self.logger.debug(f"logging to {self.log_file or 'console only'}")

    def debug(self, message: str):
        self.logger.debug(message)

    def info(self, message: str):
        self.logger.info(message)

    def warning(self, message: str):
        self.logger.warning(message)

    def error(self, message: str, exc_info: bool = False):
        self.logger.error(message, exc_info=exc_info)

    def critical(self, message: str, exc_info: bool = False):
        self.logger.critical(message, exc_info=exc_info)

    def exception(self, message: str):
        """Error record with the active traceback."""
        self.logger.exception(message)

    def log_operation(self, operation: str, status: str, details: str = ""):
        """
        Record a step of a user-level operation.

        Args:
            operation: Operation name (e.g., "Color Graph", "Batch")
            status: STARTED / SUCCESS / FAILED; anything else logs at debug
            details: Free text appended after the status
        """
        suffix = f" - {details}" if details else ""
        self.logger.log(OPERATION_LEVELS.get(status, logging.DEBUG), f"[{operation}] {status}{suffix}")

    def log_lemma(self, tag: str, status: str, details: str = ""):
        """
        Record one dispatch of the coloring engine.

        Args:
            tag: Case tag the component was classified as
            status: DISPATCH / DONE / FAILED
            details: Component size, witness, ...
        """
        suffix = f" - {details}" if details else ""
        level = logging.WARNING if status == "FAILED" else logging.DEBUG
        self.logger.log(level, f"[Lemma {tag}] {status}{suffix}")

    def log_solver(self, graph_id: str, k: int, outcome: str, nodes: int = 0, seconds: float = 0.0):
        """One exact solver run; Indeterminate outcomes are warnings."""
        level = logging.WARNING if outcome == "Indeterminate" else logging.DEBUG
        self.logger.log(level, f"[Solver] {graph_id} k={k} -> {outcome} ({nodes} nodes, {seconds:.3f}s)")

    def log_fallback(self, component: str, reason: str):
        self.warning(f"[Fallback] {component} - {reason}")


logger = AppLogger()


def configure(log_dir: str = None, quiet: bool = False):
    logger.configure(log_dir, quiet)


def debug(message: str):
    logger.debug(message)


def info(message: str):
    logger.info(message)


def warning(message: str):
    logger.warning(message)


def error(message: str, exc_info: bool = False):
    logger.error(message, exc_info=exc_info)


def critical(message: str, exc_info: bool = False):
    logger.critical(message, exc_info=exc_info)


def exception(message: str):
    logger.exception(message)


def log_operation(operation: str, status: str, details: str = ""):
    logger.log_operation(operation, status, details)


def log_lemma(tag: str, status: str, details: str = ""):
    logger.log_lemma(tag, status, details)


def log_solver(graph_id: str, k: int, outcome: str, nodes: int = 0, seconds: float = 0.0):
    logger.log_solver(graph_id, k, outcome, nodes, seconds)


def log_fallback(component: str, reason: str):
    logger.log_fallback(component, reason)
