# Shared fixtures for the Exponential Congruence Toolkit tests
import pytest
from click.testing import CliRunner

from expcong.calculations.arith import primes_up_to
from expcong.config import load_settings
from expcong.utils.constants import ENV_JOBS, ENV_LOG_LEVEL, ENV_MAX_N


@pytest.fixture(autouse=True)
def clean_environment(monkeypatch):
    """Keep EXPCONG_* settings from the developer's shell out of the tests"""
    for name in (ENV_MAX_N, ENV_JOBS, ENV_LOG_LEVEL):
        monkeypatch.delenv(name, raising=False)


@pytest.fixture
def settings():
    return load_settings()


@pytest.fixture
def odd_primes():
    """Odd primes below 100"""
    return [int(p) for p in primes_up_to(100) if p > 2]


@pytest.fixture
def odd_composites():
    return [9, 15, 21, 25, 27, 33, 35, 45, 49, 63, 77, 91, 105]


@pytest.fixture
def runner():
    return CliRunner(mix_stderr=False)
