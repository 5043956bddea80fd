# Vectorized symbol tables for whole residue systems
#
# Every kernel works in int64 and requires n <= 2^31 so that a product of two
# residues stays below 2^62. Results agree elementwise with the scalar
# operations in arith.py and symbol.py.
import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, List, Optional, Tuple, Union

import numpy as np

from ..models.arithmetic import FactoredInteger
from ..utils.constants import DEFAULT_MAX_N, ENV_MAX_N, MIN_CHUNK_SIZE, VECTOR_MODULUS_LIMIT
from ..utils.exceptions import DomainError, ResourceCapError
from .arith import carmichael_lambda, factorize

logger = logging.getLogger(__name__)

ArrayLike = Union[int, np.ndarray]

# No prime power dividing n <= 2^31 has exponent above 31, so a^k mod n is
# periodic in k with period lambda(n) from here on, for units and non-units alike.
STABLE_EXPONENT = 64


def reduce_exponent(k: int, n: int) -> int:
    """
    Smallest exponent with the same power map as k modulo n

    Exponents up to STABLE_EXPONENT pass through; larger ones become
    STABLE_EXPONENT + ((k - STABLE_EXPONENT) mod lambda(n)), which fits in int64.
    """
    if k <= STABLE_EXPONENT:
        return k
    return STABLE_EXPONENT + (k - STABLE_EXPONENT) % carmichael_lambda(n)


def _check_vector_modulus(n: int) -> None:
    if n < 1:
        raise DomainError(f"modulus must be positive, got {n}")
    if n > VECTOR_MODULUS_LIMIT:
        raise ResourceCapError(
            f"vectorized tables need n <= {VECTOR_MODULUS_LIMIT}, got {n}", VECTOR_MODULUS_LIMIT
        )


def power_table(bases: ArrayLike, exponents: ArrayLike, n: int) -> np.ndarray:
    """
    Elementwise bases^exponents mod n by square-and-multiply

    Args:
        bases (array): Integer bases, broadcast against exponents
        exponents (array): Nonnegative integer exponents; a scalar exponent
            of any size is reduced first
        n (int): Modulus, 1 <= n <= 2^31

    Returns:
        np.ndarray: int64 residues in [0, n)
    """
    _check_vector_modulus(n)
    if isinstance(exponents, (int, np.integer)) and exponents >= 0:
        exponents = reduce_exponent(int(exponents), n)
    base = np.asarray(bases, dtype=np.int64) % n
    exponent = np.asarray(exponents, dtype=np.int64)
    if np.any(exponent < 0):
        raise DomainError("exponents must be nonnegative")
    shape = np.broadcast_shapes(base.shape, exponent.shape)
    base = np.broadcast_to(base, shape).copy()
    exponent = np.broadcast_to(exponent, shape).copy()
    result = np.full(shape, 1 % n, dtype=np.int64)
    while np.any(exponent > 0):
        odd = (exponent & 1).astype(bool)
        result[odd] = result[odd] * base[odd] % n
        base = base * base % n
        exponent >>= 1
    return result


def unit_mask(n: int, start: int = 0, stop: Optional[int] = None) -> np.ndarray:
    """Boolean mask of gcd(a, n) = 1 for a in [start, stop), default [0, n)"""
    stop = n if stop is None else stop
    return np.gcd(np.arange(start, stop, dtype=np.int64), n) == 1


def classify_residues(residues: np.ndarray, n: int) -> np.ndarray:
    """Map powers a^k mod n to symbol values; +1 is tested before -1"""
    return np.where(residues == 1 % n, 1, np.where(residues == n - 1, -1, 0)).astype(np.int8)


def chunk_bounds(n: int, jobs: int) -> List[Tuple[int, int]]:
    """Fixed contiguous chunks of [0, n); deterministic for given (n, jobs)"""
    if jobs <= 1 or n <= MIN_CHUNK_SIZE:
        return [(0, n)]
    size = max(MIN_CHUNK_SIZE, -(-n // jobs))
    return [(lo, min(lo + size, n)) for lo in range(0, n, size)]


def map_chunks(func: Callable[[int, int], np.ndarray], n: int, jobs: int = 1) -> np.ndarray:
    """
    Apply func(start, stop) over chunks of [0, n) and concatenate in order

    The output is identical to func(0, n) whatever the worker count.
    """
    bounds = chunk_bounds(n, jobs)
    if len(bounds) == 1:
        return func(0, n)
    logger.debug(f"scanning [0, {n}) in {len(bounds)} chunks with {jobs} workers")
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        parts = list(pool.map(lambda b: func(*b), bounds))
    return np.concatenate(parts)


def symbol_row(n: int, k: int, jobs: int = 1) -> np.ndarray:
    """
    Symbol values for every a in [0, n) at a fixed exponent

    Args:
        n (int): Modulus, 2 <= n <= 2^31
        k (int): Exponent, at least 1
        jobs (int): Worker count for the chunked scan

    Returns:
        np.ndarray: int8 array of -1, 0, +1 indexed by a
    """
    _check_vector_modulus(n)
    if n < 2 or k < 1:
        raise DomainError(f"need n >= 2 and k >= 1, got n={n}, k={k}")

    def chunk(start: int, stop: int) -> np.ndarray:
        return classify_residues(power_table(np.arange(start, stop), k, n), n)

    return map_chunks(chunk, n, jobs)


def symbol_matrix(n: int, k_max: int) -> np.ndarray:
    """
    Symbol values for a in [0, n) and k = 1..k_max, by direct powering

    Column j holds exponent k = j + 1.
    """
    _check_vector_modulus(n)
    a = np.arange(n, dtype=np.int64)
    matrix = np.empty((n, k_max), dtype=np.int8)
    current = a % n
    for j in range(k_max):
        matrix[:, j] = classify_residues(current, n)
        current = current * a % n
    return matrix


def crt_symbol_matrix(n: int, k_max: int, factored: Optional[FactoredInteger] = None) -> np.ndarray:
    """
    The same matrix as symbol_matrix, assembled from prime-power components

    A sign survives only if every component q sees a^k = 1 (resp. q - 1);
    for q = 2 both tests coincide, so 2-power components never veto a sign
    on their own.
    """
    _check_vector_modulus(n)
    factored = factored or factorize(n)
    a = np.arange(n, dtype=np.int64)
    plus = np.ones((n, k_max), dtype=bool)
    minus = np.ones((n, k_max), dtype=bool)
    for q in factored.prime_powers():
        base = a % q
        current = base.copy()
        for j in range(k_max):
            plus[:, j] &= current == 1 % q
            minus[:, j] &= current == q - 1
            current = current * base % q
    return np.where(plus, 1, np.where(minus, -1, 0)).astype(np.int8)


def order_row(n: int, factored: Optional[FactoredInteger] = None) -> np.ndarray:
    """
    Multiplicative order of every residue modulo n (0 marks non-units)

    Starts every unit at lambda(n) and strips prime factors of lambda(n) while
    the power stays 1.
    """
    _check_vector_modulus(n)
    factored = factored or factorize(n)
    lam = carmichael_lambda(factored)
    units = np.flatnonzero(unit_mask(n))
    orders = np.full(units.shape, lam, dtype=np.int64)
    for q in factorize(lam).primes:
        while True:
            candidates = np.flatnonzero(orders % q == 0)
            if candidates.size == 0:
                break
            trial = power_table(units[candidates], orders[candidates] // q, n)
            shrink = candidates[trial == 1 % n]
            if shrink.size == 0:
                break
            orders[shrink] //= q
    row = np.zeros(n, dtype=np.int64)
    row[units] = orders
    return row


def order_symbol_matrix(n: int, k_max: int, factored: Optional[FactoredInteger] = None) -> np.ndarray:
    """
    The same matrix as symbol_matrix, from multiplicative orders

    +1 where ord | k; where ord | 2k but not k, a^k = -1 is confirmed
    directly, since for non-cyclic unit groups a^k could be another square
    root of 1.
    """
    factored = factored or factorize(n)
    orders = order_row(n, factored)
    units = orders > 0
    safe = np.where(units, orders, 1)[:, None]
    ks = np.arange(1, k_max + 1, dtype=np.int64)[None, :]
    plus = units[:, None] & (ks % safe == 0)
    candidate = units[:, None] & ~plus & ((2 * ks) % safe == 0)
    matrix = np.where(plus, 1, 0).astype(np.int8)
    rows, cols = np.nonzero(candidate)
    if rows.size:
        residues = power_table(rows, cols + 1, n)
        matrix[rows[residues == n - 1], cols[residues == n - 1]] = -1
    return matrix


def shortcut_order_matrix(n: int, k_max: int, factored: Optional[FactoredInteger] = None) -> np.ndarray:
    """
    Order rule without the direct -1 confirmation

    Returns -1 wherever ord | 2k and ord does not divide k. Used only to
    measure where that shortcut disagrees with the true symbol.
    """
    factored = factored or factorize(n)
    orders = order_row(n, factored)
    units = orders > 0
    safe = np.where(units, orders, 1)[:, None]
    ks = np.arange(1, k_max + 1, dtype=np.int64)[None, :]
    plus = units[:, None] & (ks % safe == 0)
    minus = units[:, None] & ~plus & ((2 * ks) % safe == 0)
    return np.where(plus, 1, np.where(minus, -1, 0)).astype(np.int8)


def check_enumeration_cap(n: int, max_n: Optional[int]) -> None:
    """Raise ResourceCapError when enumerating residues modulo n exceeds max_n"""
    cap = DEFAULT_MAX_N if max_n is None else max_n
    if n > cap:
        raise ResourceCapError(
            f"enumerating residues modulo {n} exceeds the cap {cap}; "
            f"raise it with --max-n or {ENV_MAX_N}",
            cap,
        )
    logger.debug(f"enumeration of n={n} within cap {cap}")
