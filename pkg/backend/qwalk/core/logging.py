"""Structured logging configuration using structlog"""

import logging
import sys
from fractions import Fraction
from typing import Any

import numpy as np
import structlog
from structlog.processors import CallsiteParameter
from structlog.typing import EventDict, WrappedLogger

from qwalk.core.config import settings

# Third-party loggers that are chatty at DEBUG (font lookup, polys caching)
_QUIET_LOGGERS = ("matplotlib", "PIL", "sympy")


def _plain(value: Any) -> Any:
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, np.generic):
        return value.item()
    if isinstance(value, np.ndarray):
        return value.tolist()
    if isinstance(value, tuple | list):
        return [_plain(item) for item in value]
    return value


def plain_values(_: WrappedLogger, __: str, event_dict: EventDict) -> EventDict:
    """Render fractions and numpy values as JSON-safe builtins"""
    return {key: _plain(value) for key, value in event_dict.items()}


def setup_logging(level: str | None = None) -> None:
    """
    Configure structured logging on stderr; stdout stays reserved for reports.

    Args:
        level: Overrides settings.LOG_LEVEL, e.g. from --log-level
    """
    level_name = (level or settings.LOG_LEVEL).upper()
    logging.basicConfig(
        level=getattr(logging, level_name),
        format="%(message)s",
        stream=sys.stderr,
        force=True,
    )
    for name in _QUIET_LOGGERS:
        logging.getLogger(name).setLevel(max(logging.WARNING, logging.getLogger().level))

    processors = [
        structlog.contextvars.merge_contextvars,
        structlog.stdlib.add_logger_name,
        structlog.stdlib.add_log_level,
        structlog.stdlib.PositionalArgumentsFormatter(),
        plain_values,
        structlog.processors.TimeStamper(fmt="iso"),
        structlog.processors.StackInfoRenderer(),
    ]
    if settings.is_development:
        processors.append(
            structlog.processors.CallsiteParameterAdder(
                parameters=[CallsiteParameter.MODULE, CallsiteParameter.FUNC_NAME]
            )
        )

    if settings.LOG_FORMAT == "json":
        processors.extend(
            [
                structlog.processors.dict_tracebacks,
                structlog.processors.JSONRenderer(sort_keys=True),
            ]
        )
    else:
        traceback = structlog.dev.rich_traceback if settings.is_development else structlog.dev.plain_traceback
        processors.append(
            structlog.dev.ConsoleRenderer(
                colors=settings.is_development and sys.stderr.isatty(),
                exception_formatter=traceback,  # type: ignore[arg-type]
            )
        )

    structlog.configure(
        processors=processors,  # type: ignore[arg-type]
        context_class=dict,
        logger_factory=structlog.stdlib.LoggerFactory(),
        wrapper_class=structlog.stdlib.BoundLogger,
        cache_logger_on_first_use=False,
    )


def bind_run_context(**values: Any) -> None:
    """Attach values (input digest, walk kind) to every later log line of this run"""
    structlog.contextvars.clear_contextvars()
    structlog.contextvars.bind_contextvars(**values)


def get_logger(name: str) -> structlog.stdlib.BoundLogger:
    """Get a configured logger instance"""
    return structlog.get_logger(name)  # type: ignore[no-any-return]


setup_logging()
