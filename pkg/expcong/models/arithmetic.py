from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple
import math


@dataclass(frozen=True)
class FactoredInteger:
    """A positive integer together with its prime-power factorization"""

    value: int
    factors: Tuple[Tuple[int, int], ...] = ()

    def __post_init__(self):
        if self.value < 1:
            raise ValueError(f"FactoredInteger needs a positive value, got {self.value}")
        primes = [p for p, _ in self.factors]
        if any(b <= a for a, b in zip(primes, primes[1:])):
            raise ValueError(f"primes must be strictly increasing: {primes}")
        if any(e < 1 for _, e in self.factors):
            raise ValueError(f"exponents must be positive: {self.factors}")
        if math.prod(p ** e for p, e in self.factors) != self.value:
            raise ValueError(f"factors {self.factors} do not reconstruct {self.value}")

    @property
    def primes(self) -> Tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    @property
    def is_prime(self) -> bool:
        return len(self.factors) == 1 and self.factors[0][1] == 1

    def prime_powers(self) -> Tuple[int, ...]:
        """Pairwise coprime prime-power components p^e"""
        return tuple(p ** e for p, e in self.factors)

    def divisors(self) -> List[int]:
        """All positive divisors in increasing order"""
        divisors = [1]
        for p, e in self.factors:
            divisors = [d * p ** i for d in divisors for i in range(e + 1)]
        return sorted(divisors)

    def to_dict(self) -> Dict:
        return {
            'value': self.value,
            'factors': [[p, e] for p, e in self.factors],
        }

    def __str__(self):
        if not self.factors:
            return "1"
        return " * ".join(f"{p}^{e}" if e > 1 else str(p) for p, e in self.factors)


@dataclass(frozen=True)
class OrderInfo:
    """Multiplicative order of a unit with divisibility flags against k and 2k"""

    base: int
    modulus: int
    order: int
    exponent: Optional[int] = None
    divides_k: bool = False
    divides_2k: bool = False

    def to_dict(self) -> Dict:
        return {
            'base': self.base,
            'modulus': self.modulus,
            'order': self.order,
            'k': self.exponent,
            'divides_k': self.divides_k,
            'divides_2k': self.divides_2k,
        }
