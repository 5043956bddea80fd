# Modular and multiplicative arithmetic for the Exponential Congruence Toolkit
import logging
import math
from collections import Counter
from functools import lru_cache
from typing import List, Optional, Sequence, Tuple, Union

import numpy as np

from ..models.arithmetic import FactoredInteger, OrderInfo
from ..utils.constants import (
    DISCRETE_LOG_LIMIT, MILLER_RABIN_WITNESSES, MODULUS_CAP, RHO_MAX_ROUNDS,
    TRIAL_DIVISION_BOUND
)
from ..utils.exceptions import DomainError, NotAUnitError, ResourceCapError

logger = logging.getLogger(__name__)

IntOrFactored = Union[int, FactoredInteger]


def _check_modulus(n: int, minimum: int = 1) -> None:
    if n < minimum:
        raise DomainError(f"modulus must be at least {minimum}, got {n}")
    if n > MODULUS_CAP:
        raise DomainError(f"modulus {n} exceeds the 2^62 cap")


def primes_up_to(limit: int) -> np.ndarray:
    """
    Primes p <= limit by a sieve of Eratosthenes

    Args:
        limit (int): Inclusive upper bound

    Returns:
        np.ndarray: Sorted int64 array of primes
    """
    if limit < 2:
        return np.array([], dtype=np.int64)
    sieve = np.ones(limit + 1, dtype=bool)
    sieve[:2] = False
    sieve[4::2] = False
    for p in range(3, math.isqrt(limit) + 1, 2):
        if sieve[p]:
            sieve[p * p::2 * p] = False
    return np.flatnonzero(sieve).astype(np.int64)


_SMALL_PRIMES = tuple(int(p) for p in primes_up_to(TRIAL_DIVISION_BOUND))


def mod_pow(a: int, e: int, n: int) -> int:
    """
    Compute a^e mod n exactly

    Args:
        a (int): Base, any sign; reduced into [0, n) first
        e (int): Nonnegative exponent
        n (int): Modulus, 1 <= n <= 2^62

    Returns:
        int: Residue in [0, n)
    """
    _check_modulus(n)
    if e < 0:
        raise DomainError(f"exponent must be nonnegative, got {e}")
    return pow(a % n, e, n)


def modular_inverse(a: int, n: int) -> int:
    """Inverse of a modulo n in [0, n); NotAUnitError when gcd(a, n) > 1"""
    _check_modulus(n)
    if math.gcd(a, n) != 1:
        raise NotAUnitError(a, n)
    return pow(a % n, -1, n)


def is_prime(n: int) -> bool:
    """
    Deterministic Miller-Rabin test

    The fixed witness set is exact for every n below 3.3 * 10^24, so every
    modulus this toolkit accepts is classified without error.
    """
    if n < 2:
        return False
    for p in _SMALL_PRIMES[:12]:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for w in MILLER_RABIN_WITNESSES:
        x = pow(w, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_brent(n: int) -> int:
    """Nontrivial factor of an odd composite n (Brent's variant of rho)"""
    for c in range(1, RHO_MAX_ROUNDS + 1):
        y, r, q, g = 2, 1, 1, 1
        x = ys = 2
        m = 128
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            # batch overshot; back up one step at a time
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g
        logger.debug(f"rho cycle without split for {n} with c={c}, retrying")
    raise ResourceCapError(f"rho failed to split {n} in {RHO_MAX_ROUNDS} rounds", RHO_MAX_ROUNDS)


@lru_cache(maxsize=4096)
def factorize(n: int) -> FactoredInteger:
    """
    Complete prime factorization

    Trial division by the primes below 1000, then Brent-Pollard rho on the
    cofactor with every prime certified by the deterministic primality test.

    Args:
        n (int): 1 <= n <= 2^62

    Returns:
        FactoredInteger: n with its factors in increasing prime order
    """
    if n < 1:
        raise DomainError(f"can only factor positive integers, got {n}")
    if n > MODULUS_CAP:
        raise DomainError(f"{n} exceeds the 2^62 cap")

    counts: Counter = Counter()
    remaining = n
    for p in _SMALL_PRIMES:
        if p * p > remaining:
            break
        while remaining % p == 0:
            remaining //= p
            counts[p] += 1

    stack = [remaining] if remaining > 1 else []
    while stack:
        m = stack.pop()
        if is_prime(m):
            counts[m] += 1
            continue
        root = math.isqrt(m)
        if root * root == m:
            stack.extend((root, root))
            continue
        d = _pollard_brent(m)
        stack.extend((d, m // d))

    factored = FactoredInteger(n, tuple(sorted(counts.items())))
    logger.debug(f"factorize({n}) = {factored}")
    return factored


def _as_factored(n: IntOrFactored) -> FactoredInteger:
    return n if isinstance(n, FactoredInteger) else factorize(n)


def euler_phi(n: IntOrFactored) -> int:
    """
    Euler's totient: the number of units modulo n

    Args:
        n (FactoredInteger or int): Modulus

    Returns:
        int: prod p^(e-1) (p - 1)
    """
    factored = _as_factored(n)
    return math.prod(p ** (e - 1) * (p - 1) for p, e in factored.factors)


def _prime_power_lambda(p: int, e: int) -> int:
    if p == 2:
        return 1 if e == 1 else 2 if e == 2 else 2 ** (e - 2)
    return p ** (e - 1) * (p - 1)


def carmichael_lambda(n: IntOrFactored) -> int:
    """
    Carmichael's function: the exponent of the unit group modulo n

    Args:
        n (FactoredInteger or int): Modulus

    Returns:
        int: Least lambda with a^lambda = 1 for every unit a
    """
    factored = _as_factored(n)
    return math.lcm(1, *(_prime_power_lambda(p, e) for p, e in factored.factors))


def multiplicative_order(a: int, n: IntOrFactored, k: Optional[int] = None) -> OrderInfo:
    """
    Multiplicative order of a unit modulo n

    Starts from lambda(n) and strips each prime factor of lambda(n) while the
    power stays 1, which lands on the least exponent.

    Args:
        a (int): Unit modulo n, any sign
        n (FactoredInteger or int): Modulus, at least 2
        k (int): Optional exponent for the divides_k / divides_2k flags

    Returns:
        OrderInfo: Order with divisibility flags
    """
    factored = _as_factored(n)
    modulus = factored.value
    _check_modulus(modulus, minimum=2)
    base = a % modulus
    if math.gcd(base, modulus) != 1:
        raise NotAUnitError(a, modulus)

    order = carmichael_lambda(factored)
    for q, _ in factorize(order).factors:
        while order % q == 0 and pow(base, order // q, modulus) == 1:
            order //= q

    return OrderInfo(
        base=base,
        modulus=modulus,
        order=order,
        exponent=k,
        divides_k=k is not None and k % order == 0,
        divides_2k=k is not None and (2 * k) % order == 0,
    )


def _check_odd_prime(p: int) -> None:
    if p <= 2 or p > MODULUS_CAP or not is_prime(p):
        raise DomainError(f"{p} is not an odd prime within the 2^62 cap")


def is_primitive_root(g: int, p: int) -> bool:
    """True iff g generates the units modulo the odd prime p"""
    _check_odd_prime(p)
    g %= p
    if g == 0:
        return False
    return all(pow(g, (p - 1) // q, p) != 1 for q in factorize(p - 1).primes)


@lru_cache(maxsize=1024)
def primitive_root(p: int) -> int:
    """
    Smallest primitive root modulo an odd prime

    Args:
        p (int): Odd prime

    Returns:
        int: Least g in [2, p) of order p - 1
    """
    _check_odd_prime(p)
    cofactors = [(p - 1) // q for q in factorize(p - 1).primes]
    for g in range(2, p):
        if all(pow(g, c, p) != 1 for c in cofactors):
            return g
    raise DomainError(f"no primitive root found modulo {p}")


def discrete_log(a: int, g: int, p: int) -> int:
    """
    Index of a to the base g modulo an odd prime (baby-step giant-step)

    Args:
        a (int): Unit modulo p
        g (int): Primitive root modulo p
        p (int): Odd prime, at most 10^10

    Returns:
        int: Unique r in [0, p - 1) with g^r = a (mod p)
    """
    _check_odd_prime(p)
    if p > DISCRETE_LOG_LIMIT:
        raise ResourceCapError(
            f"discrete log is limited to p <= {DISCRETE_LOG_LIMIT}, got {p}", DISCRETE_LOG_LIMIT
        )
    target = a % p
    if target == 0:
        raise NotAUnitError(a, p)
    if not is_primitive_root(g, p):
        raise DomainError(f"{g} is not a primitive root modulo {p}")
    g %= p

    m = math.isqrt(p - 1) + 1
    baby_steps = {}
    current = 1
    for j in range(m):
        baby_steps.setdefault(current, j)
        current = current * g % p

    giant = pow(g, -m, p)
    gamma = target
    for i in range(m):
        j = baby_steps.get(gamma)
        if j is not None:
            return (i * m + j) % (p - 1)
        gamma = gamma * giant % p
    raise DomainError(f"{a} has no logarithm to base {g} modulo {p}")


def crt_combine(residues: Sequence[Tuple[int, int]]) -> Tuple[int, int]:
    """
    Chinese Remainder Theorem reconstruction

    Args:
        residues (list): (r_i, n_i) pairs with pairwise coprime moduli

    Returns:
        tuple: (x, N) with N = prod n_i and x = r_i (mod n_i) for every i
    """
    x, modulus = 0, 1
    for r, m in residues:
        if m < 1:
            raise DomainError(f"CRT moduli must be positive, got {m}")
        if math.gcd(modulus, m) != 1:
            raise DomainError(f"CRT moduli are not pairwise coprime (at {m})")
        t = (r - x) * pow(modulus, -1, m) % m
        x += modulus * t
        modulus *= m
        if modulus > MODULUS_CAP:
            raise DomainError("CRT modulus product exceeds the 2^62 cap")
    return x % modulus, modulus


def reduce_to_components(x: int, factored: IntOrFactored) -> List[Tuple[int, int]]:
    """Reductions (x mod q, q) over the prime-power components q of n"""
    return [(x % q, q) for q in _as_factored(factored).prime_powers()]
