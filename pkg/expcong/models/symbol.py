from dataclasses import dataclass
from typing import Dict, Tuple

from ..utils.constants import MODULUS_CAP
from ..utils.exceptions import DomainError


@dataclass(frozen=True)
class SymbolValue:
    """Ternary value of the exponential congruence symbol"""

    value: int

    def __post_init__(self):
        if self.value not in (-1, 0, 1):
            raise ValueError(f"symbol value must be -1, 0 or 1, got {self.value}")

    def __int__(self):
        return self.value

    def __mul__(self, other: 'SymbolValue') -> 'SymbolValue':
        return SymbolValue(self.value * other.value)

    def __neg__(self) -> 'SymbolValue':
        return SymbolValue(-self.value)

    @property
    def is_zero(self) -> bool:
        return self.value == 0

    def __str__(self):
        return {1: "+1", -1: "-1", 0: "0"}[self.value]


PLUS_ONE = SymbolValue(1)
MINUS_ONE = SymbolValue(-1)
ZERO = SymbolValue(0)


@dataclass(frozen=True)
class SymbolQuery:
    """Arguments (a, n, k) of the symbol; a is kept as given, any sign"""

    a: int
    n: int
    k: int

    def __post_init__(self):
        if self.n < 2:
            raise DomainError(f"modulus n must be at least 2, got {self.n}")
        if self.n > MODULUS_CAP:
            raise DomainError(f"modulus n must not exceed 2^62, got {self.n}")
        if self.k < 1:
            raise DomainError(f"exponent k must be at least 1, got {self.k}")

    @classmethod
    def create(cls, a: int, n: int, k: int) -> 'SymbolQuery':
        """Build a validated query; DomainError on bad n or k"""
        return cls(int(a), int(n), int(k))

    @classmethod
    def validate(cls, n: int, k: int) -> None:
        """Check a modulus and exponent pair without a particular argument"""
        cls(1, n, k)

    @property
    def residue(self) -> int:
        """a reduced into [0, n)"""
        return self.a % self.n

    def with_argument(self, a: int) -> 'SymbolQuery':
        return SymbolQuery(a, self.n, self.k)

    def with_exponent(self, k: int) -> 'SymbolQuery':
        return SymbolQuery(self.a, self.n, k)

    def to_dict(self) -> Dict:
        return {'a': self.a, 'n': self.n, 'k': self.k}


@dataclass(frozen=True)
class SymbolExplanation:
    """Which branch of the definition fired, and the power that decided it"""

    query: SymbolQuery
    residue: int  # a^k mod n
    branch: str
    value: SymbolValue

    def to_dict(self) -> Dict:
        return {
            'value': self.value.value,
            'residue': self.residue,
            'branch': self.branch,
        }


@dataclass(frozen=True)
class SignSubgroup:
    """The units whose k-th power is +1 or -1, with the kernel of a -> a^k"""

    n: int
    k: int
    elements: Tuple[int, ...]
    kernel: Tuple[int, ...]
    image: Tuple[int, ...]

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def index_of_kernel(self) -> int:
        return len(self.elements) // len(self.kernel)

    def to_dict(self) -> Dict:
        return {
            'n': self.n,
            'k': self.k,
            'elements': list(self.elements),
            'kernel': list(self.kernel),
            'image': list(self.image),
        }


@dataclass(frozen=True)
class MultiplicativityCheck:
    """Both sides of symbol(ab) = symbol(a) * symbol(b) for one pair"""

    a: int
    b: int
    n: int
    k: int
    product_value: SymbolValue  # symbol(ab)
    value_product: SymbolValue  # symbol(a) * symbol(b)
    restricted: bool  # a and b both lie in the k-sign subgroup

    @property
    def holds(self) -> bool:
        return self.product_value == self.value_product

    def to_dict(self) -> Dict:
        return {
            'a': self.a,
            'b': self.b,
            'n': self.n,
            'k': self.k,
            'symbol_of_product': self.product_value.value,
            'product_of_symbols': self.value_product.value,
            'both_in_sign_subgroup': self.restricted,
            'holds': self.holds,
        }
