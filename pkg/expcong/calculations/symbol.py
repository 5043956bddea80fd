# Evaluation and algebraic laws of the exponential congruence symbol
import logging
import math
from typing import Optional

import numpy as np

from ..models.arithmetic import FactoredInteger
from ..models.symbol import (
    MINUS_ONE, PLUS_ONE, ZERO, MultiplicativityCheck, SignSubgroup,
    SymbolExplanation, SymbolQuery, SymbolValue
)
from ..utils.constants import (
    BRANCH_MINUS_ONE, BRANCH_NEITHER, BRANCH_NOT_A_UNIT, BRANCH_PLUS_ONE
)
from ..utils.exceptions import ConsistencyError, DomainError
from .arith import factorize, is_prime, modular_inverse, mod_pow, multiplicative_order
from .tables import check_enumeration_cap, power_table, unit_mask

logger = logging.getLogger(__name__)


def _classify(residue: int, n: int) -> SymbolValue:
    # +1 first: for n = 2 the residue 1 is both 1 and -1
    if residue == 1 % n:
        return PLUS_ONE
    if residue == n - 1:
        return MINUS_ONE
    return ZERO


def symbol(q: SymbolQuery) -> SymbolValue:
    """
    Direct evaluation: +1 if a^k = 1, -1 if a^k = -1, 0 otherwise (mod n)

    Args:
        q (SymbolQuery): Validated (a, n, k)

    Returns:
        SymbolValue: The symbol value
    """
    return _classify(mod_pow(q.a, q.k, q.n), q.n)


def evaluate(a: int, n: int, k: int) -> SymbolValue:
    """Convenience wrapper building and validating the query"""
    return symbol(SymbolQuery(a, n, k))


def explain(q: SymbolQuery) -> SymbolExplanation:
    """Report a^k mod n and which branch of the definition fired"""
    residue = mod_pow(q.a, q.k, q.n)
    value = _classify(residue, q.n)
    if value == PLUS_ONE:
        branch = BRANCH_PLUS_ONE
    elif value == MINUS_ONE:
        branch = BRANCH_MINUS_ONE
    elif math.gcd(q.residue, q.n) != 1:
        branch = BRANCH_NOT_A_UNIT
    else:
        branch = BRANCH_NEITHER
    return SymbolExplanation(query=q, residue=residue, branch=branch, value=value)


def symbol_via_crt(q: SymbolQuery, n_factored: Optional[FactoredInteger] = None) -> SymbolValue:
    """
    Evaluate through the prime-power components of n

    The global value is s in {+1, -1} exactly when every component sees
    a^k = s; otherwise it is 0.

    Args:
        q (SymbolQuery): Validated (a, n, k)
        n_factored (FactoredInteger): Factorization of q.n (computed if omitted)

    Returns:
        SymbolValue: The symbol value
    """
    n_factored = n_factored or factorize(q.n)
    if n_factored.value != q.n:
        raise DomainError(f"factorization of {n_factored.value} given for modulus {q.n}")

    plus_everywhere, minus_everywhere = True, True
    for component in n_factored.prime_powers():
        residue = mod_pow(q.a, q.k, component)
        # modulo 2^e with e = 1 the two tests coincide
        plus_everywhere &= residue == 1
        minus_everywhere &= residue == component - 1
        if not (plus_everywhere or minus_everywhere):
            return ZERO
    if plus_everywhere:
        return PLUS_ONE
    return MINUS_ONE if minus_everywhere else ZERO


def symbol_via_order(q: SymbolQuery) -> SymbolValue:
    """
    Evaluate from d = ord_n(a)

    +1 when d | k. When d | 2k but not k, a^k is a square root of 1 other than
    1 and the value is -1 only if that root is n - 1, which is checked
    directly. Non-units give 0 immediately.
    """
    if math.gcd(q.residue, q.n) != 1:
        return ZERO
    info = multiplicative_order(q.a, q.n, q.k)
    if info.divides_k:
        return PLUS_ONE
    if info.divides_2k and mod_pow(q.a, q.k, q.n) == q.n - 1:
        return MINUS_ONE
    return ZERO


def negate_argument(q: SymbolQuery) -> SymbolValue:
    """
    symbol(-a, n, k) from symbol(a, n, k) by the parity rule

    Unchanged for even k, sign flipped for odd k. Modulo 2, -a = a and the
    value is returned unchanged.
    """
    value = symbol(q)
    if q.n == 2 or q.k % 2 == 0:
        return value
    return -value


def invert_argument(q: SymbolQuery) -> SymbolValue:
    """
    symbol(a^-1, n, k), which must equal symbol(a, n, k)

    Raises:
        NotAUnitError: a is not invertible modulo n
        ConsistencyError: the two values differ
    """
    inverse = modular_inverse(q.a, q.n)
    value = symbol(q.with_argument(inverse))
    if value != symbol(q):
        raise ConsistencyError(f"inverse symmetry fails at {q} (inverse {inverse})")
    return value


def power_compat(a: int, t: int, n: int, k: int) -> SymbolValue:
    """
    symbol(a^t, n, k), which must equal symbol(a, n, t*k)

    Raises:
        DomainError: t < 1
        ConsistencyError: the two values differ
    """
    if t < 1:
        raise DomainError(f"power t must be at least 1, got {t}")
    q = SymbolQuery(a, n, k)
    value = symbol(q.with_argument(mod_pow(a, t, n)))
    if value != symbol(q.with_exponent(t * k)):
        raise ConsistencyError(f"power compatibility fails at a={a}, t={t}, n={n}, k={k}")
    return value


def is_in_sign_subgroup(a: int, n: int, k: int) -> bool:
    """True iff a is a unit with a^k = +1 or -1 modulo n"""
    q = SymbolQuery(a, n, k)
    return math.gcd(q.residue, n) == 1 and not symbol(q).is_zero


def is_insoluble(q: SymbolQuery) -> bool:
    """True iff neither a^k = 1 nor a^k = -1 holds modulo n"""
    return symbol(q).is_zero


def multiplicativity_witness(a: int, b: int, n: int, k: int) -> MultiplicativityCheck:
    """Compare symbol(ab) with symbol(a) * symbol(b)"""
    qa, qb = SymbolQuery(a, n, k), SymbolQuery(b, n, k)
    return MultiplicativityCheck(
        a=a, b=b, n=n, k=k,
        product_value=symbol(SymbolQuery(a * b, n, k)),
        value_product=symbol(qa) * symbol(qb),
        restricted=is_in_sign_subgroup(a, n, k) and is_in_sign_subgroup(b, n, k),
    )


def sign_subgroup(n: int, k: int, max_n: Optional[int] = None) -> SignSubgroup:
    """
    The subgroup of units whose k-th power is +1 or -1

    The map a -> a^k sends it onto {1} or {-1, 1}; its kernel is the +1 class.
    """
    SymbolQuery.validate(n, k)
    check_enumeration_cap(n, max_n)
    units = np.flatnonzero(unit_mask(n))
    powers = power_table(units, k, n)
    plus = powers == 1 % n
    minus = ~plus & (powers == n - 1)
    elements = tuple(int(a) for a in units[plus | minus])
    kernel = tuple(int(a) for a in units[plus])
    image = (-1, 1) if minus.any() else (1,)
    logger.debug(f"sign subgroup n={n} k={k}: {len(elements)} elements, image {image}")
    return SignSubgroup(n=n, k=k, elements=elements, kernel=kernel, image=image)


def is_kth_root_of_unity(a: int, p: int, k: int) -> bool:
    """True iff a is a root of X^k - 1 over the field with p elements"""
    if not is_prime(p):
        raise DomainError(f"{p} is not prime")
    return mod_pow(a, k, p) == 1


def roots_of_unity(p: int, k: int) -> list:
    """All a in [1, p) with a^k = 1 modulo the prime p; there are gcd(k, p - 1)"""
    if not is_prime(p):
        raise DomainError(f"{p} is not prime")
    SymbolQuery.validate(p, k)
    residues = np.arange(1, p, dtype=np.int64)
    return [int(a) for a in residues[power_table(residues, k, p) == 1]]
