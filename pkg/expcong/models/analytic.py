from dataclasses import dataclass
from typing import Dict, List, Tuple
import math


@dataclass(frozen=True)
class ComplexSample:
    """A finite complex number as a (re, im) pair"""

    re: float
    im: float

    def __post_init__(self):
        if not (math.isfinite(self.re) and math.isfinite(self.im)):
            raise ValueError(f"complex sample must be finite, got ({self.re}, {self.im})")

    @classmethod
    def from_complex(cls, z: complex) -> 'ComplexSample':
        return cls(float(z.real), float(z.imag))

    def __complex__(self):
        return complex(self.re, self.im)

    def __abs__(self):
        return math.hypot(self.re, self.im)

    def conjugate(self) -> 'ComplexSample':
        return ComplexSample(self.re, -self.im)

    def to_pair(self) -> List[float]:
        return [self.re, self.im]


@dataclass(frozen=True)
class SeriesSample:
    """Truncated Dirichlet series value with its tail estimates"""

    s: complex
    n: int
    k: int
    terms: int  # truncation M
    partial_sum: ComplexSample
    tail_bound: float  # M^(1 - Re s) / (Re s - 1)
    tail_exact: float  # sum over m > M of m^(-Re s)

    def to_dict(self) -> Dict:
        return {
            's': [self.s.real, self.s.imag],
            'n': self.n,
            'k': self.k,
            'terms': self.terms,
            'partial_sum': self.partial_sum.to_pair(),
            'tail_bound': self.tail_bound,
            'tail_exact': self.tail_exact,
        }


@dataclass(frozen=True)
class BoundCheckReport:
    """|S(m)| against |R1| + |R-1| over a range of frequencies m"""

    n: int
    k: int
    m_values: Tuple[int, ...]
    bound: int
    max_abs: float
    max_ratio: float
    argmax_m: int
    violations: Tuple[int, ...] = ()

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_dict(self) -> Dict:
        return {
            'n': self.n,
            'k': self.k,
            'm_min': min(self.m_values) if self.m_values else None,
            'm_max': max(self.m_values) if self.m_values else None,
            'bound': self.bound,
            'max_abs': self.max_abs,
            'max_ratio': self.max_ratio,
            'argmax_m': self.argmax_m,
            'violations': list(self.violations),
            'passed': self.passed,
        }


@dataclass(frozen=True)
class EulerProductReport:
    """Truncated Euler product against the truncated Dirichlet series"""

    s: complex
    n: int
    k: int
    prime_cutoff: int
    terms: int
    product: ComplexSample
    series: ComplexSample
    discrepancy: float
    tolerance: float
    totally_multiplicative: bool

    @property
    def agrees(self) -> bool:
        return self.discrepancy <= self.tolerance

    @property
    def as_expected(self) -> bool:
        """Agreement exactly when the character is totally multiplicative"""
        return self.agrees == self.totally_multiplicative

    def to_dict(self) -> Dict:
        return {
            's': [self.s.real, self.s.imag],
            'n': self.n,
            'k': self.k,
            'prime_cutoff': self.prime_cutoff,
            'terms': self.terms,
            'product': self.product.to_pair(),
            'series': self.series.to_pair(),
            'discrepancy': self.discrepancy,
            'tolerance': self.tolerance,
            'totally_multiplicative': self.totally_multiplicative,
            'agrees': self.agrees,
        }
