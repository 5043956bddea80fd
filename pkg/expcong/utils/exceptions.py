# Exception hierarchy for the Exponential Congruence Toolkit


class ExpCongError(Exception):
    """Base class for all toolkit errors"""


class DomainError(ExpCongError, ValueError):
    """A parameter lies outside the domain of the operation"""


class NotAUnitError(DomainError):
    """An argument that must be invertible modulo n is not"""

    def __init__(self, a: int, n: int):
        super().__init__(f"{a} is not a unit modulo {n} (gcd({a}, {n}) > 1)")
        self.a = a
        self.n = n


class ConfigurationError(DomainError):
    """Invalid configuration from flags or environment"""


class ResourceCapError(ExpCongError):
    """A computation would exceed a configured resource cap"""

    def __init__(self, message: str, cap: int):
        super().__init__(message)
        self.cap = cap


class ConsistencyError(ExpCongError, AssertionError):
    """Two computation paths that must agree produced different results"""
