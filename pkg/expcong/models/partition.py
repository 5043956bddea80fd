from dataclasses import dataclass
from typing import Dict, Optional, Tuple


@dataclass(frozen=True)
class ResiduePartition:
    """
    Reduced residues modulo n split by the value of the symbol

    r_zero holds only units; non-units are counted separately in non_units.
    All residue tuples are sorted ascending.
    """

    n: int
    k: int
    r_plus: Tuple[int, ...]
    r_minus: Tuple[int, ...]
    r_zero: Tuple[int, ...]
    non_units: int = 0

    @property
    def count_plus(self) -> int:
        return len(self.r_plus)

    @property
    def count_minus(self) -> int:
        return len(self.r_minus)

    @property
    def count_zero(self) -> int:
        return len(self.r_zero)

    @property
    def unit_count(self) -> int:
        return len(self.r_plus) + len(self.r_minus) + len(self.r_zero)

    @property
    def sign_count(self) -> int:
        """|R1| + |R-1|, the size of the k-sign subgroup"""
        return len(self.r_plus) + len(self.r_minus)

    def validate(self) -> bool:
        """Check disjointness, coverage of the units and the coset size law"""
        classes = [set(self.r_plus), set(self.r_minus), set(self.r_zero)]
        if sum(len(c) for c in classes) != len(set().union(*classes)):
            return False
        if self.unit_count + self.non_units != self.n:
            return False
        if self.r_minus and len(self.r_minus) != len(self.r_plus):
            return False
        return True

    def counts_dict(self) -> Dict:
        return {
            'n': self.n,
            'k': self.k,
            'count_plus': self.count_plus,
            'count_minus': self.count_minus,
            'count_zero': self.count_zero,
            'non_units': self.non_units,
        }

    def to_dict(self) -> Dict:
        data = self.counts_dict()
        data.update({
            'r_plus': list(self.r_plus),
            'r_minus': list(self.r_minus),
            'r_zero': list(self.r_zero),
        })
        return data


@dataclass(frozen=True)
class PrimeCountReport:
    """Closed-form counts of +1 and -1 values for an odd prime modulus"""

    p: int
    k: int
    m: int  # p - 1
    g: int  # gcd(k, m)
    count_plus: int
    count_minus: int
    minus_solvable: bool

    def to_dict(self) -> Dict:
        return {
            'p': self.p,
            'k': self.k,
            'm': self.m,
            'g': self.g,
            'count_plus': self.count_plus,
            'count_minus': self.count_minus,
            'minus_solvable': self.minus_solvable,
        }


@dataclass(frozen=True)
class MembershipResult:
    """Position of a residue relative to H = {x : x^k = 1} and its coset gH"""

    a: int
    n: int
    k: int
    membership: str  # kernel, coset, outside, not-a-unit
    representative: Optional[int] = None  # some g with g^k = -1 when the coset exists

    def to_dict(self) -> Dict:
        return {
            'a': self.a,
            'n': self.n,
            'k': self.k,
            'membership': self.membership,
            'representative': self.representative,
        }
