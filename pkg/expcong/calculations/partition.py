# Residue-class partition by symbol value, closed-form counts and coset structure
import logging
import math
from typing import Iterable, Optional, Tuple

import numpy as np

from ..models.partition import MembershipResult, PrimeCountReport, ResiduePartition
from ..models.symbol import MINUS_ONE, PLUS_ONE, ZERO, SymbolQuery, SymbolValue
from ..utils.exceptions import ConsistencyError, DomainError, NotAUnitError
from .arith import discrete_log, is_prime, primitive_root
from .symbol import symbol
from .tables import check_enumeration_cap, symbol_row, unit_mask

logger = logging.getLogger(__name__)

MEMBERSHIP_KERNEL = "kernel"
MEMBERSHIP_COSET = "coset"
MEMBERSHIP_OUTSIDE = "outside"
MEMBERSHIP_NOT_A_UNIT = "not-a-unit"


def enumerate_partition(n: int, k: int, max_n: Optional[int] = None, jobs: int = 1) -> ResiduePartition:
    """
    Split the reduced residues modulo n into R1, R-1 and R0

    Args:
        n (int): Modulus, at least 2
        k (int): Exponent, at least 1
        max_n (int): Enumeration cap (defaults to the configured default)
        jobs (int): Worker count for the chunked scan

    Returns:
        ResiduePartition: Sorted residue classes plus the non-unit count
    """
    SymbolQuery.validate(n, k)
    check_enumeration_cap(n, max_n)

    row = symbol_row(n, k, jobs=jobs)
    units = unit_mask(n)
    partition = ResiduePartition(
        n=n,
        k=k,
        r_plus=tuple(int(a) for a in np.flatnonzero(units & (row == 1))),
        r_minus=tuple(int(a) for a in np.flatnonzero(units & (row == -1))),
        r_zero=tuple(int(a) for a in np.flatnonzero(units & (row == 0))),
        non_units=int(n - units.sum()),
    )
    logger.debug(f"partition n={n} k={k}: {partition.counts_dict()}")
    return partition


def prime_counts(p: int, k: int) -> PrimeCountReport:
    """
    Closed-form sizes of R1 and R-1 for an odd prime p

    With m = p - 1 and g = gcd(k, m), x^k = 1 has g solutions, and x^k = -1
    has g solutions when m/g is even and none otherwise.

    Args:
        p (int): Odd prime
        k (int): Exponent, at least 1

    Returns:
        PrimeCountReport: Counts with the solvability flag
    """
    if p <= 2 or not is_prime(p):
        raise DomainError(f"closed-form counts need an odd prime, got {p}")
    SymbolQuery.validate(p, k)
    m = p - 1
    g = math.gcd(k, m)
    solvable = (m // g) % 2 == 0
    return PrimeCountReport(
        p=p, k=k, m=m, g=g,
        count_plus=g,
        count_minus=g if solvable else 0,
        minus_solvable=solvable,
    )


def coset_of(partition: ResiduePartition, g: int) -> Tuple[int, ...]:
    """The translate g * R1 modulo n, sorted"""
    n = partition.n
    return tuple(sorted({g * h % n for h in partition.r_plus}))


def is_subgroup(residues: Iterable[int], n: int) -> bool:
    """True iff the residues contain 1 and are closed under multiplication mod n"""
    elements = np.unique(np.asarray(list(residues), dtype=np.int64) % n)
    if elements.size == 0 or not np.any(elements == 1 % n):
        return False
    products = np.multiply.outer(elements, elements) % n
    return bool(np.isin(products, elements).all())


def index_two_check(n: int, k: int, max_n: Optional[int] = None) -> bool:
    """
    Whether some unit g has g^k = -1, in which case R1 has index two

    When such g exists, |R1 u R-1| = 2|R1| and R-1 = g * R1 are verified.

    Raises:
        ConsistencyError: a witness exists but the coset structure fails
    """
    partition = enumerate_partition(n, k, max_n=max_n)
    if not partition.r_minus:
        return False
    g = partition.r_minus[0]
    if partition.sign_count != 2 * partition.count_plus:
        raise ConsistencyError(
            f"index-two size law fails for n={n}, k={k}: "
            f"{partition.sign_count} != 2 * {partition.count_plus}"
        )
    if coset_of(partition, g) != partition.r_minus:
        raise ConsistencyError(f"R-1 is not the coset {g} * R1 for n={n}, k={k}")
    return True


def symbol_by_primitive_root(a: int, p: int, k: int) -> SymbolValue:
    """
    Evaluate the symbol modulo an odd prime through the index of a

    With a = g^r for the smallest primitive root g, a^k = g^(rk) is 1 when
    (p - 1) | rk and -1 when rk = (p - 1)/2 mod (p - 1).

    Raises:
        DomainError: p is not an odd prime
        NotAUnitError: p divides a, so a has no index
        ConsistencyError: the result differs from direct evaluation
    """
    q = SymbolQuery(a, p, k)
    g = primitive_root(p)
    if q.residue == 0:
        raise NotAUnitError(a, p)
    r = discrete_log(a, g, p)
    m = p - 1
    exponent = r * k % m
    if exponent == 0:
        value = PLUS_ONE
    elif exponent == m // 2:
        value = MINUS_ONE
    else:
        value = ZERO
    logger.debug(f"ind_{g}({a}) = {r} modulo {p}, rk mod {m} = {exponent}")
    if value != symbol(q):
        raise ConsistencyError(f"primitive-root evaluation disagrees with direct evaluation at {q}")
    return value


def membership(a: int, n: int, k: int, max_n: Optional[int] = None) -> MembershipResult:
    """
    Locate a relative to H = {x : x^k = 1} and the coset {x : x^k = -1}

    Args:
        a (int): Residue, any sign
        n (int): Modulus, at least 2
        k (int): Exponent, at least 1
        max_n (int): Cap for the search of a coset representative

    Returns:
        MembershipResult: Class label and some g with g^k = -1 when one exists
    """
    q = SymbolQuery(a, n, k)
    if math.gcd(q.residue, n) != 1:
        return MembershipResult(a=a, n=n, k=k, membership=MEMBERSHIP_NOT_A_UNIT)

    value = symbol(q)
    if value == MINUS_ONE:
        return MembershipResult(a=a, n=n, k=k, membership=MEMBERSHIP_COSET, representative=q.residue)

    check_enumeration_cap(n, max_n)
    row = symbol_row(n, k)
    witnesses = np.flatnonzero(row == -1)
    representative = int(witnesses[0]) if witnesses.size else None
    label = MEMBERSHIP_KERNEL if value == PLUS_ONE else MEMBERSHIP_OUTSIDE
    return MembershipResult(a=a, n=n, k=k, membership=label, representative=representative)
