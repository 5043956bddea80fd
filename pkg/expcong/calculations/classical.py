# Legendre and Jacobi symbols, power residues, and their relation to the symbol
import logging
from collections import Counter
from typing import Optional

import numpy as np

from ..models.classical import (
    ClassicalSymbolValue, JacobiCompatibilityReport, LegendreCoincidenceReport
)
from ..models.symbol import PLUS_ONE, SymbolQuery
from ..utils.constants import ORACLE_LIMIT
from ..utils.exceptions import ConsistencyError, DomainError, NotAUnitError
from .arith import euler_phi, factorize, is_prime, mod_pow
from .symbol import symbol
from .tables import check_enumeration_cap, power_table, symbol_row, unit_mask

logger = logging.getLogger(__name__)


def _check_odd_prime(p: int) -> None:
    if p <= 2 or not is_prime(p):
        raise DomainError(f"expected an odd prime, got {p}")


def legendre(a: int, p: int) -> ClassicalSymbolValue:
    """
    Legendre symbol by Euler's criterion

    Args:
        a (int): Any integer
        p (int): Odd prime

    Returns:
        ClassicalSymbolValue: 0 if p | a, else +1 or -1
    """
    _check_odd_prime(p)
    r = mod_pow(a, (p - 1) // 2, p)
    return ClassicalSymbolValue(-1 if r == p - 1 else r)


def jacobi(a: int, n: int) -> ClassicalSymbolValue:
    """
    Jacobi symbol by quadratic reciprocity, without factoring n

    Args:
        a (int): Any integer
        n (int): Odd positive modulus

    Returns:
        ClassicalSymbolValue: The Jacobi symbol (a/n)
    """
    if n < 1 or n % 2 == 0:
        raise DomainError(f"Jacobi symbol needs an odd positive modulus, got {n}")
    acc = 1
    a %= n
    while True:
        if n == 1:
            return ClassicalSymbolValue(acc)
        if a == 0:
            return ClassicalSymbolValue(0)
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                acc = -acc
        if a % 4 == 3 and n % 4 == 3:
            acc = -acc
        a, n = n % a, a


def jacobi_by_factorization(a: int, n: int) -> ClassicalSymbolValue:
    """Jacobi symbol as the product of Legendre symbols over the factorization of n"""
    if n < 1 or n % 2 == 0:
        raise DomainError(f"Jacobi symbol needs an odd positive modulus, got {n}")
    value = 1
    for p, e in factorize(n).factors:
        value *= legendre(a, p).value ** e
    return ClassicalSymbolValue(value)


def legendre_coincidence(p: int) -> LegendreCoincidenceReport:
    """
    Compare the symbol at k = (p - 1)/2 with the Legendre symbol for every residue

    The Legendre side is computed by reciprocity, independently of powering.
    """
    _check_odd_prime(p)
    k = (p - 1) // 2
    row = symbol_row(p, k)
    mismatches = tuple(a for a in range(p) if int(row[a]) != jacobi(a, p).value)
    report = LegendreCoincidenceReport(
        p=p, k=k, agreements=p - len(mismatches), total=p, mismatches=mismatches
    )
    if mismatches:
        logger.warning(f"Legendre coincidence fails modulo {p} at {mismatches[:5]}")
    return report


def power_residue_test(a: int, p: int, m: int) -> bool:
    """
    Whether a is an m-th power residue modulo the prime p

    Decided by the symbol at k = (p - 1)/m being +1. Up to the oracle limit
    the answer is confirmed by searching all x with x^m = a.

    Args:
        a (int): Unit modulo p
        p (int): Prime
        m (int): Degree, at least 2 and dividing p - 1

    Returns:
        bool: True iff x^m = a (mod p) is solvable
    """
    if not is_prime(p):
        raise DomainError(f"power residue test needs a prime modulus, got {p}")
    if m < 2 or (p - 1) % m != 0:
        raise DomainError(f"degree m={m} must be at least 2 and divide p - 1 = {p - 1}")
    if a % p == 0:
        raise NotAUnitError(a, p)

    result = symbol(SymbolQuery(a, p, (p - 1) // m)) == PLUS_ONE
    if p <= ORACLE_LIMIT:
        powers = power_table(np.arange(1, p, dtype=np.int64), m, p)
        exhaustive = bool(np.any(powers == a % p))
        if exhaustive != result:
            raise ConsistencyError(
                f"power residue test disagrees with exhaustive search for a={a}, p={p}, m={m}"
            )
    return result


def jacobi_compatibility(n: int, max_n: Optional[int] = None) -> JacobiCompatibilityReport:
    """
    Tabulate (symbol at k = phi(n)/2, Jacobi symbol) over the units modulo n

    The two symbols need not agree for composite n; disagreements are counted
    and logged, never raised.

    Args:
        n (int): Odd composite modulus
        max_n (int): Enumeration cap

    Returns:
        JacobiCompatibilityReport: Joint frequencies and the first disagreement
    """
    if n < 3 or n % 2 == 0:
        raise DomainError(f"Jacobi relation needs an odd modulus n >= 3, got {n}")
    if is_prime(n):
        raise DomainError(f"Jacobi relation needs a composite modulus, got prime {n}")
    check_enumeration_cap(n, max_n)

    k = euler_phi(n) // 2
    row = symbol_row(n, k)
    frequencies: Counter = Counter()
    first_disagreement = None
    for a in np.flatnonzero(unit_mask(n)):
        s, j = int(row[a]), jacobi(int(a), n).value
        frequencies[(s, j)] += 1
        if s != j and first_disagreement is None:
            first_disagreement = int(a)

    report = JacobiCompatibilityReport(
        n=n, k=k, frequencies=dict(frequencies), first_disagreement=first_disagreement
    )
    if report.disagreements:
        logger.warning(
            f"symbol and Jacobi symbol disagree on {report.disagreements} of "
            f"{sum(frequencies.values())} units modulo {n} (first at a={first_disagreement})"
        )
    return report
