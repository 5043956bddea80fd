from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple


@dataclass(frozen=True)
class ClassicalSymbolValue:
    """Value of a Legendre or Jacobi symbol"""

    value: int

    def __post_init__(self):
        if self.value not in (-1, 0, 1):
            raise ValueError(f"classical symbol value must be -1, 0 or 1, got {self.value}")

    def __int__(self):
        return self.value

    def __mul__(self, other: 'ClassicalSymbolValue') -> 'ClassicalSymbolValue':
        return ClassicalSymbolValue(self.value * other.value)


@dataclass(frozen=True)
class LegendreCoincidenceReport:
    """Agreement of the symbol at k = (p-1)/2 with the Legendre symbol"""

    p: int
    k: int
    agreements: int
    total: int
    mismatches: Tuple[int, ...] = ()

    @property
    def passed(self) -> bool:
        return self.agreements == self.total == self.p

    def to_dict(self) -> Dict:
        return {
            'p': self.p,
            'k': self.k,
            'agreements': self.agreements,
            'total': self.total,
            'mismatches': list(self.mismatches),
            'passed': self.passed,
        }


@dataclass
class JacobiCompatibilityReport:
    """Joint frequencies of (symbol at k = phi(n)/2, Jacobi symbol) over the units"""

    n: int
    k: int
    frequencies: Dict[Tuple[int, int], int] = field(default_factory=dict)
    first_disagreement: Optional[int] = None

    @property
    def agreements(self) -> int:
        return sum(c for (s, j), c in self.frequencies.items() if s == j)

    @property
    def disagreements(self) -> int:
        return sum(c for (s, j), c in self.frequencies.items() if s != j)

    def pairs(self) -> List[Dict]:
        return [
            {'symbol': s, 'jacobi': j, 'count': c}
            for (s, j), c in sorted(self.frequencies.items())
        ]

    def to_dict(self) -> Dict:
        return {
            'n': self.n,
            'k': self.k,
            'pairs': self.pairs(),
            'agreements': self.agreements,
            'disagreements': self.disagreements,
            'first_disagreement': self.first_disagreement,
        }
