# Character sum, exponential sum and Dirichlet series tests
import math

import numpy as np
import pytest

from expcong.calculations.analytic import (
    chi, completed_sample, euler_product_comparison, euler_product_partial, exp_sum,
    exp_sum_bound_check, exp_sum_spectrum, l_series_partial, orthogonality_sum
)
from expcong.models.symbol import MINUS_ONE, PLUS_ONE
from expcong.utils.exceptions import DomainError, ResourceCapError


class TestCharacterSums:
    """Test chi and the orthogonality sum"""

    def test_chi_is_periodic(self):
        """Test chi(m) = chi(m + n)"""
        assert chi(2, 5, 2) == MINUS_ONE
        assert chi(7, 5, 2) == MINUS_ONE
        assert chi(11, 5, 2) == PLUS_ONE
        with pytest.raises(DomainError):
            chi(0, 5, 2)

    def test_orthogonality(self):
        """Test that the sum vanishes when R-1 is nonempty"""
        assert orthogonality_sum(5, 2) == 0
        assert orthogonality_sum(13, 3) == 0
        assert orthogonality_sum(15, 2) == 4
        for n in range(2, 60):
            for k in range(1, 8):
                orthogonality_sum(n, k)

    def test_cap(self):
        """Test the enumeration cap"""
        with pytest.raises(ResourceCapError):
            orthogonality_sum(500, 2, max_n=100)

    def test_exponent_beyond_int64(self):
        """Test exponents past 2^63 that act like k = 2 modulo 5 and 15"""
        assert orthogonality_sum(5, 2 ** 63 + 2) == 0
        assert orthogonality_sum(15, 2 ** 64 + 2) == 4
        assert chi(2, 5, 2 ** 63 + 2) == MINUS_ONE
        assert abs(complex(exp_sum(1, 5, 2 ** 63 + 2)) - complex(exp_sum(1, 5, 2))) < 1e-12


class TestExponentialSums:
    """Test Gauss-type sums and their bound"""

    def test_quadratic_gauss_sum_modulo_5(self):
        """Test S(1) = sqrt(5) for the Legendre symbol modulo 5"""
        value = exp_sum(1, 5, 2)
        assert value.re == pytest.approx(math.sqrt(5), abs=1e-12)
        assert value.im == pytest.approx(0.0, abs=1e-12)

    def test_quadratic_gauss_sum_modulo_7(self):
        """Test S(1) = i sqrt(7) for p = 3 (mod 4)"""
        value = exp_sum(1, 7, 3)
        assert value.re == pytest.approx(0.0, abs=1e-12)
        assert value.im == pytest.approx(math.sqrt(7), abs=1e-12)

    @pytest.mark.parametrize("n, k", [(5, 2), (13, 3), (15, 2), (16, 2), (97, 8)])
    def test_spectrum_matches_direct_sums(self, n, k):
        """Test the FFT spectrum against term-by-term sums"""
        spectrum = exp_sum_spectrum(n, k)
        for m in range(n):
            assert abs(spectrum[m] - complex(exp_sum(m, n, k))) < 1e-9

    def test_negative_frequency(self):
        """Test that m is reduced modulo n"""
        assert complex(exp_sum(-1, 13, 3)) == pytest.approx(complex(exp_sum(12, 13, 3)))

    def test_bound_check(self):
        """Test |S(m)| <= |R1| + |R-1|"""
        report = exp_sum_bound_check(5, 2, range(5))
        assert report.passed
        assert report.bound == 4
        assert report.max_abs == pytest.approx(math.sqrt(5))
        for n in (21, 35, 64, 101):
            assert exp_sum_bound_check(n, 2, range(-n, n)).passed

    def test_bound_check_rejects_empty_range(self):
        """Test an empty frequency range"""
        with pytest.raises(DomainError):
            exp_sum_bound_check(5, 2, [])


class TestDirichletSeries:
    """Test truncated series, Euler products and the completed sample"""

    def test_odd_indicator_series(self):
        """Test L(2) for n = 2, k = 1 against pi^2 / 8"""
        sample = l_series_partial(2, 2, 1, 20000)
        assert abs(complex(sample.partial_sum) - math.pi ** 2 / 8) <= sample.tail_exact
        assert sample.tail_exact <= sample.tail_bound

    def test_series_needs_half_plane(self):
        """Test Re(s) <= 1 and bad truncations"""
        with pytest.raises(DomainError):
            l_series_partial(1, 5, 2, 100)
        with pytest.raises(DomainError):
            l_series_partial(2, 5, 2, 0)
        with pytest.raises(DomainError):
            completed_sample(0.5 + 3j, 5, 2, 100)

    def test_completed_sample(self):
        """Test pi^(-1) Gamma(1) L(2) = pi / 8 for n = 2, k = 1"""
        value = completed_sample(2, 2, 1, 20000)
        assert value.re == pytest.approx(math.pi / 8, abs=1e-4)
        assert value.im == pytest.approx(0.0, abs=1e-12)

    def test_empty_euler_product(self):
        """Test that P < 2 gives the empty product"""
        assert complex(euler_product_partial(2, 5, 2, 1)) == 1

    def test_euler_product_agrees_for_legendre_character(self):
        """Test n = 5, k = 2 at a real and a complex point"""
        for s in (2, 1.5 + 2j):
            report = euler_product_comparison(s, 5, 2, 2000, 2000)
            assert report.totally_multiplicative
            assert report.agrees

    def test_euler_product_breaks_modulo_15(self):
        """Test that a character vanishing on units misses the series"""
        report = euler_product_comparison(2, 15, 2, 500, 500)
        assert not report.totally_multiplicative
        assert not report.agrees
        assert report.as_expected
        assert report.discrepancy > 0.05

    def test_series_matches_numpy_reference(self):
        """Test the partial sum against a plain loop"""
        s = 1.25 + 0.5j
        expected = sum(complex(chi(m, 13, 3).value) * m ** (-s) for m in range(1, 301))
        got = complex(l_series_partial(s, 13, 3, 300).partial_sum)
        assert np.isclose(got, expected, rtol=1e-12)
