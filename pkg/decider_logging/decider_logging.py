"""
decider_logging.py

Logging setup for the rational immersion decider.

This module centralizes Loguru configuration and provides helpers for:
- pipeline context (problem name, step, differential mode, run guid)
- standard library logging interception
- step-level decorators for timing and error logging

Nothing here writes to stdout; verdicts printed there stay byte-identical
between runs.
"""

from __future__ import annotations

import sys
import time
import loguru
import logging

from functools import wraps
from loguru import logger as _base_logger
from typing import Callable, Optional, Any

from definitions import PipelineStepDefinition
from .decider_log_context import DeciderLogContext
from .decider_log_constants import DeciderLogConstants, get_constants, DEFAULT_EXTRA_FIELDS


# constants
CONSTANTS = get_constants()


# --- Intercept standard logging and redirect to Loguru ------------------------


class InterceptHandler(logging.Handler):
    """Redirect standard logging calls into Loguru."""

    def emit(self, record: logging.LogRecord) -> None:
        try:
            level = _base_logger.level(record.levelname).name
        except ValueError:
            level = record.levelno

        # Forward to Loguru, preserving exception info
        _base_logger.opt(
            depth=6,
            exception=record.exc_info
        ).log(level, record.getMessage())


def intercept_stdlib_logging() -> None:
    """Route the stdlib `logging` module logs (used by libraries) into Loguru."""
    logging.basicConfig(handlers=[InterceptHandler()], level=0, force=True)
    for name in logging.root.manager.loggerDict.keys():
        logging.getLogger(name).handlers = [InterceptHandler()]


# --- Base logger with default extra fields ------------------------------------


def _add_default_extra(record: Any) -> None:
    """
    Add placeholder values for every context field missing from a record,
    so the console format never fails on an unbound logger.
    Args:
        record (Any): The Loguru log record to modify.
    """
    extra = record["extra"]

    for field in DEFAULT_EXTRA_FIELDS:
        extra.setdefault(field, "-")


# This is the base logger patched with default extras.
logger = _base_logger.patch(_add_default_extra)


# --- Public configuration function -------------------------------------------


def configure_logging(
    logging_constants: DeciderLogConstants = CONSTANTS,
    logger: loguru.Logger = logger,
) -> loguru.Logger:
    """
    Configure Loguru logging for the decider.

    Parameters:
        logging_constants (DeciderLogConstants): Configuration constants for logging.
        logger (loguru.Logger): The Loguru logger instance to configure.
    Returns:
        loguru.Logger: The configured Loguru logger instance.
    """

    # Remove all existing sinks
    logger.remove()

    # --- Console Sink (human-friendly, stderr only) ---
    logger.add(
        sys.stderr,
        level=logging_constants.console_log_level.value.upper(),
        colorize=True,
        backtrace=True,
        diagnose=False,
        format=(
            "<green>{time:YYYY-MM-DD HH:mm:ss}</green> | "
            "<level>{level: <8}</level> | "
            "{extra[problem_name]: <20} | "
            "{extra[pipeline_step]: <28} | "
            "{extra[differential_mode]: <13} | "
            "{message}"
        ),
    )

    if logging_constants.file_log:
        logging_constants.log_directory.mkdir(parents=True, exist_ok=True)

        # --- Rotating File Sink (text) ---
        logger.add(
            logging_constants.log_directory / f"{logging_constants.app_name}.log",
            level=logging_constants.file_log_level.value.upper(),
            rotation="7 days",
            retention="30 days",
            compression="zip",
            encoding="utf-8",
            enqueue=True,
            backtrace=True,
            diagnose=False,
        )

        # --- JSON Structured Logs (optional) ---
        if logging_constants.json_log:
            logger.add(
                logging_constants.log_directory /
                f"{logging_constants.app_name}.json",
                level=logging_constants.file_log_level.value.upper(),
                rotation="7 days",
                retention="30 days",
                encoding="utf-8",
                enqueue=True,
                serialize=True,
            )

    intercept_stdlib_logging()

    return logger.bind(
        app_name=logging_constants.app_name,
        run_guid=logging_constants.run_guid
    )


# --- Helpers for pipeline context ---------------------------------------------


def get_decider_logger(
    logger_context: Optional[DeciderLogContext] = None
) -> loguru.Logger:
    """
    Return a logger bound with pipeline context.

    Args:
        logger_context (Optional[DeciderLogContext]): The context to bind.
            If None, a default context with placeholder values is used.
    Returns:
        loguru.Logger: A Loguru logger instance with the context bound.
    """
    if logger_context is None:
        logger_context = DeciderLogContext()

    return logger.bind(**logger_context.to_bind_kwargs())


def log_pipeline_step(
    step: PipelineStepDefinition
):
    """
    Decorator to log the life cycle of a pipeline step.

    - Logs start + end + duration at debug level
    - Binds the step code and phase into the record context
    - Logs full traceback on failure and re-raises

    Args:
        step (PipelineStepDefinition): The step the decorated function implements.
    Returns:
        Callable: The decorated function with step logging.
    """

    def decorator(func: Callable[..., Any]) -> Callable[..., Any]:
        @wraps(func)
        def wrapper(*args, **kwargs):
            step_logger = get_decider_logger(DeciderLogContext(step=step))

            start = time.perf_counter()
            step_logger.debug(f"Starting {step.name}")
            try:
                result = func(*args, **kwargs)
                duration = time.perf_counter() - start
                step_logger.debug(f"Completed {step.name} in {duration:.3f}s")
                return result
            except Exception:
                duration = time.perf_counter() - start
                step_logger.opt(exception=True).debug(
                    f"{step.name} failed after {duration:.3f}s"
                )
                raise

        return wrapper

    return decorator
