# Configuration for the Exponential Congruence Toolkit
# Precedence: command-line flag > environment (.env honoured) > built-in default
import logging
import os
from dataclasses import dataclass
from typing import Optional

from dotenv import load_dotenv

from .utils.constants import (
    DEFAULT_JOBS, DEFAULT_LOG_LEVEL, DEFAULT_MAX_N, ENV_JOBS, ENV_LOG_LEVEL,
    ENV_MAX_N, VECTOR_MODULUS_LIMIT
)
from .utils.exceptions import ConfigurationError

load_dotenv()

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Settings:
    """Resolved runtime settings"""
    max_n: int = DEFAULT_MAX_N
    jobs: int = DEFAULT_JOBS
    log_level: str = DEFAULT_LOG_LEVEL


def _read_int(name: str, raw: str) -> int:
    try:
        return int(raw.strip().replace('_', ''))
    except ValueError as e:
        raise ConfigurationError(f"{name} must be an integer, got {raw!r}") from e


def _check_max_n(value: int, source: str) -> int:
    if not 2 <= value <= VECTOR_MODULUS_LIMIT:
        raise ConfigurationError(
            f"enumeration cap from {source} must lie in [2, {VECTOR_MODULUS_LIMIT}], got {value}"
        )
    return value


def _check_jobs(value: int, source: str) -> int:
    if value < 1:
        raise ConfigurationError(f"jobs from {source} must be at least 1, got {value}")
    return value


def load_settings(max_n: Optional[int] = None,
                  jobs: Optional[int] = None,
                  log_level: Optional[str] = None) -> Settings:
    """
    Resolve settings from explicit overrides, the environment and defaults

    Args:
        max_n (int): Enumeration cap from a command-line flag, if given
        jobs (int): Worker count from a command-line flag, if given
        log_level (str): Logging level name from a command-line flag, if given

    Returns:
        Settings: Frozen settings object
    """
    if max_n is not None:
        resolved_max_n = _check_max_n(max_n, '--max-n')
    elif os.getenv(ENV_MAX_N):
        resolved_max_n = _check_max_n(_read_int(ENV_MAX_N, os.environ[ENV_MAX_N]), ENV_MAX_N)
    else:
        resolved_max_n = DEFAULT_MAX_N

    if jobs is not None:
        resolved_jobs = _check_jobs(jobs, '--jobs')
    elif os.getenv(ENV_JOBS):
        resolved_jobs = _check_jobs(_read_int(ENV_JOBS, os.environ[ENV_JOBS]), ENV_JOBS)
    else:
        resolved_jobs = DEFAULT_JOBS

    resolved_level = (log_level or os.getenv(ENV_LOG_LEVEL) or DEFAULT_LOG_LEVEL).upper()
    if resolved_level not in logging.getLevelNamesMapping():
        raise ConfigurationError(f"unknown log level {resolved_level!r}")

    settings = Settings(max_n=resolved_max_n, jobs=resolved_jobs, log_level=resolved_level)
    logger.debug(f"Resolved settings: {settings}")
    return settings
