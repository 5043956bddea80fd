# The symbol as an arithmetic function: character sums, exponential sums, Dirichlet series
import logging
from typing import Iterable, Optional

import numpy as np
from scipy import special

from ..models.analytic import BoundCheckReport, ComplexSample, EulerProductReport, SeriesSample
from ..models.symbol import SymbolQuery, SymbolValue
from ..utils.constants import EXACT_FLOAT_SLACK, FLOAT_SLACK
from ..utils.exceptions import ConsistencyError, DomainError
from .arith import primes_up_to
from .symbol import symbol
from .tables import check_enumeration_cap, symbol_row, unit_mask

logger = logging.getLogger(__name__)


def _check_half_plane(s: complex) -> float:
    sigma = complex(s).real
    if sigma <= 1:
        raise DomainError(f"the series converges only for Re(s) > 1, got s={s}")
    return sigma


def _character_row(n: int, k: int, max_n: Optional[int]) -> np.ndarray:
    SymbolQuery.validate(n, k)
    check_enumeration_cap(n, max_n)
    return symbol_row(n, k)


def chi(m: int, n: int, k: int) -> SymbolValue:
    """The symbol read as a function of m >= 1, periodic modulo n"""
    if m < 1:
        raise DomainError(f"chi is defined for m >= 1, got {m}")
    return symbol(SymbolQuery(m % n, n, k))


def orthogonality_sum(n: int, k: int, max_n: Optional[int] = None) -> int:
    """
    Sum of chi over a full residue system modulo n

    Equals |R1| - |R-1|, which vanishes whenever R-1 is nonempty.

    Raises:
        ConsistencyError: R-1 is nonempty and the sum is not zero
    """
    row = _character_row(n, k, max_n)
    total = int(row.sum(dtype=np.int64))
    if np.any(row == -1) and total != 0:
        raise ConsistencyError(f"orthogonality fails for n={n}, k={k}: sum is {total}")
    return total


def exp_sum(m: int, n: int, k: int, max_n: Optional[int] = None) -> ComplexSample:
    """
    S(m) = sum over a in R1 u R-1 of chi(a) e^(2 pi i a m / n)

    The product a*m is reduced exactly modulo n before the phase is formed, and
    terms are summed in ascending a.

    Args:
        m (int): Frequency, any integer
        n (int): Modulus, at least 2
        k (int): Exponent, at least 1

    Returns:
        ComplexSample: The sum in float64
    """
    row = _character_row(n, k, max_n)
    a = np.flatnonzero(row != 0)
    weights = row[a].astype(np.float64)
    phases = np.exp(2j * np.pi * (a * (m % n) % n) / n)
    return ComplexSample.from_complex(complex(np.sum(weights * phases)))


def exp_sum_spectrum(n: int, k: int, max_n: Optional[int] = None) -> np.ndarray:
    """S(m) for every m in [0, n) at once, as n times the inverse DFT of chi"""
    row = _character_row(n, k, max_n)
    return n * np.fft.ifft(row.astype(np.float64))


def exp_sum_bound_check(n: int, k: int, m_range: Iterable[int], max_n: Optional[int] = None) -> BoundCheckReport:
    """
    Check |S(m)| <= |R1| + |R-1| over a range of frequencies

    Args:
        n (int): Modulus
        k (int): Exponent
        m_range (iterable): Frequencies to test

    Returns:
        BoundCheckReport: Largest modulus and ratio, with any violations
    """
    m_values = tuple(int(m) for m in m_range)
    if not m_values:
        raise DomainError("frequency range is empty")
    row = _character_row(n, k, max_n)
    bound = int(np.count_nonzero(row))
    spectrum = n * np.fft.ifft(row.astype(np.float64))
    magnitudes = np.abs(spectrum[np.asarray(m_values, dtype=np.int64) % n])
    worst = int(np.argmax(magnitudes))
    violations = tuple(m for m, v in zip(m_values, magnitudes) if v > bound + FLOAT_SLACK)
    if violations:
        logger.warning(f"exponential sum bound {bound} exceeded for n={n}, k={k} at m={violations[:5]}")
    return BoundCheckReport(
        n=n,
        k=k,
        m_values=m_values,
        bound=bound,
        max_abs=float(magnitudes[worst]),
        max_ratio=float(magnitudes[worst] / bound),
        argmax_m=m_values[worst],
        violations=violations,
    )


def _series_terms(s: complex, n: int, k: int, terms: int, max_n: Optional[int]) -> complex:
    row = _character_row(n, k, max_n)
    m = np.arange(1, terms + 1, dtype=np.int64)
    values = row[m % n].astype(np.float64)
    support = values != 0
    return complex(np.sum(values[support] * np.exp(-complex(s) * np.log(m[support]))))


def _tail_exact(sigma: float, terms: int) -> float:
    # Hurwitz zeta: sum over m > terms of m^(-sigma)
    return float(special.zeta(sigma, terms + 1))


def l_series_partial(s: complex, n: int, k: int, terms: int, max_n: Optional[int] = None) -> SeriesSample:
    """
    Truncated Dirichlet series L_M(s) = sum_{m <= M} chi(m) m^(-s)

    Args:
        s (complex): Point with Re(s) > 1
        n (int): Modulus
        k (int): Exponent
        terms (int): Truncation M, at least 1

    Returns:
        SeriesSample: Partial sum with the integral tail bound and the exact tail
    """
    sigma = _check_half_plane(s)
    if terms < 1:
        raise DomainError(f"truncation must be at least 1, got {terms}")
    partial = _series_terms(s, n, k, terms, max_n)
    return SeriesSample(
        s=complex(s),
        n=n,
        k=k,
        terms=terms,
        partial_sum=ComplexSample.from_complex(partial),
        tail_bound=terms ** (1 - sigma) / (sigma - 1),
        tail_exact=_tail_exact(sigma, terms),
    )


def euler_product_partial(s: complex, n: int, k: int, prime_cutoff: int) -> ComplexSample:
    """Product over primes p <= P of (1 - chi(p) p^(-s))^(-1); empty for P < 2"""
    _check_half_plane(s)
    SymbolQuery.validate(n, k)
    primes = primes_up_to(prime_cutoff)
    if primes.size == 0:
        return ComplexSample(1.0, 0.0)
    values = np.array([symbol(SymbolQuery(int(p), n, k)).value for p in primes], dtype=np.float64)
    factors = 1.0 / (1.0 - values * np.exp(-complex(s) * np.log(primes)))
    return ComplexSample.from_complex(complex(np.prod(factors)))


def euler_product_comparison(s: complex, n: int, k: int, prime_cutoff: int, terms: int,
                             max_n: Optional[int] = None) -> EulerProductReport:
    """
    Compare the truncated Euler product with the truncated series

    Both truncations converge to the same limit when chi is totally
    multiplicative, so their gap is then within tail(M) + tail(P). A chi that
    vanishes on some unit is not multiplicative and the product generally
    misses the series; that breakage is reported, not raised.
    """
    sigma = _check_half_plane(s)
    series = l_series_partial(s, n, k, terms, max_n=max_n)
    product = euler_product_partial(s, n, k, prime_cutoff)
    row = _character_row(n, k, max_n)
    totally_multiplicative = not bool(np.any(unit_mask(n) & (row == 0)))
    tolerance = series.tail_exact + _tail_exact(sigma, max(prime_cutoff, 1)) + EXACT_FLOAT_SLACK
    discrepancy = abs(complex(product) - complex(series.partial_sum))
    report = EulerProductReport(
        s=complex(s),
        n=n,
        k=k,
        prime_cutoff=prime_cutoff,
        terms=terms,
        product=product,
        series=series.partial_sum,
        discrepancy=discrepancy,
        tolerance=tolerance,
        totally_multiplicative=totally_multiplicative,
    )
    if not report.agrees:
        level = logging.ERROR if totally_multiplicative else logging.WARNING
        logger.log(level, f"Euler product misses the series for n={n}, k={k}, s={s}: "
                          f"gap {discrepancy:.3e} > {tolerance:.3e}")
    return report


def completed_sample(s: complex, n: int, k: int, terms: int, max_n: Optional[int] = None) -> ComplexSample:
    """pi^(-s/2) Gamma(s/2) L_M(s); a numerical sample, no functional equation implied"""
    _check_half_plane(s)
    if terms < 1:
        raise DomainError(f"truncation must be at least 1, got {terms}")
    s = complex(s)
    series = _series_terms(s, n, k, terms, max_n)
    factor = np.power(np.pi, -s / 2) * special.gamma(s / 2)
    return ComplexSample.from_complex(complex(factor * series))
