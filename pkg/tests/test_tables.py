# Vectorized table tests: every kernel must agree with the scalar operations
import numpy as np
import pytest
from sympy.ntheory import n_order

from expcong.calculations.symbol import evaluate
from expcong.calculations.tables import (
    check_enumeration_cap, chunk_bounds, crt_symbol_matrix, order_row, order_symbol_matrix,
    power_table, reduce_exponent, shortcut_order_matrix, symbol_matrix, symbol_row, unit_mask
)
from expcong.utils.exceptions import DomainError, ResourceCapError


class TestPowerTable:
    """Test elementwise modular powering"""

    def test_matches_builtin_pow(self):
        """Test against pow for broadcast bases and exponents"""
        bases = np.arange(-5, 40)
        exponents = np.arange(0, 12)[:, None]
        table = power_table(bases, exponents, 37)
        for i, e in enumerate(range(12)):
            assert list(table[i]) == [pow(int(b), e, 37) for b in bases]

    def test_large_modulus_stays_exact(self):
        """Test residues close to 2^31"""
        n = 2 ** 31 - 1
        bases = np.array([n - 1, n - 2, 123456789])
        assert list(power_table(bases, 65537, n)) == [pow(int(b), 65537, n) for b in bases]

    def test_rejects_bad_input(self):
        """Test negative exponents and moduli above the vector limit"""
        with pytest.raises(DomainError):
            power_table([2], [-1], 7)
        with pytest.raises(ResourceCapError):
            power_table([2], [3], 2 ** 31 + 1)

    def test_reduce_exponent(self):
        """Test that small exponents pass through and large ones land in [64, 64 + lambda)"""
        assert reduce_exponent(5, 15) == 5
        assert reduce_exponent(64, 15) == 64
        assert reduce_exponent(2 ** 64, 15) == 64
        assert reduce_exponent(2 ** 64 + 3, 15) == 67
        assert 64 <= reduce_exponent(3 ** 90, 2 ** 31 - 1) < 64 + 2 ** 31 - 2

    @pytest.mark.parametrize("n", [15, 16, 72, 1024, 3 ** 19, 2 ** 31 - 1])
    def test_exponents_beyond_int64(self, n):
        """Test scalar exponents of any size, units and non-units alike"""
        bases = np.array([0, 1, 2, 3, 6, 12, n - 1])
        for k in [2 ** 63, 2 ** 64 + 5, 3 ** 90]:
            assert list(power_table(bases, k, n)) == [pow(int(b), k, n) for b in bases]


class TestSymbolTables:
    """Test rows and matrices of symbol values"""

    @pytest.mark.parametrize("n", [2, 3, 8, 15, 16, 24, 35, 63, 97, 100])
    def test_three_matrices_agree_with_scalar(self, n):
        """Test direct, CRT and order tables against scalar evaluation"""
        direct = symbol_matrix(n, 12)
        expected = np.array([[evaluate(a, n, k).value for k in range(1, 13)] for a in range(n)])
        assert np.array_equal(direct, expected)
        assert np.array_equal(crt_symbol_matrix(n, 12), expected)
        assert np.array_equal(order_symbol_matrix(n, 12), expected)

    def test_symbol_row_matches_matrix_column(self):
        """Test the single-exponent row"""
        assert np.array_equal(symbol_row(45, 6), symbol_matrix(45, 6)[:, 5])

    def test_symbol_row_is_independent_of_jobs(self):
        """Test that chunked scans reproduce the sequential result"""
        n = 20011
        assert np.array_equal(symbol_row(n, 3, jobs=1), symbol_row(n, 3, jobs=4))

    @pytest.mark.parametrize("n", [15, 16, 45, 97])
    def test_symbol_row_with_huge_exponent(self, n):
        """Test k at and past 2^64 against scalar evaluation"""
        for k in [2 ** 64, 2 ** 64 + 1, 2 ** 63 + 2]:
            assert list(symbol_row(n, k)) == [evaluate(a, n, k).value for a in range(n)]

    def test_chunk_bounds_cover_range(self):
        """Test that chunks are contiguous and cover [0, n)"""
        bounds = chunk_bounds(50000, 4)
        assert bounds[0][0] == 0 and bounds[-1][1] == 50000
        assert all(hi == lo for (_, hi), (lo, _) in zip(bounds, bounds[1:]))
        assert chunk_bounds(100, 8) == [(0, 100)]

    def test_unit_mask(self):
        """Test gcd(a, n) = 1 flags"""
        assert list(np.flatnonzero(unit_mask(15))) == [1, 2, 4, 7, 8, 11, 13, 14]


class TestOrderTables:
    """Test vectorized orders and the order shortcut"""

    @pytest.mark.parametrize("n", [2, 9, 20, 21, 64, 105, 128])
    def test_order_row_matches_sympy(self, n):
        """Test orders of every unit, with 0 at non-units"""
        row = order_row(n)
        for a in range(n):
            assert row[a] == (n_order(a, n) if np.gcd(a, n) == 1 else 0)

    def test_shortcut_fails_for_non_cyclic_group(self):
        """Test that skipping the -1 check is wrong at (3, 8, 1)"""
        assert shortcut_order_matrix(8, 1)[3, 0] == -1
        assert symbol_matrix(8, 1)[3, 0] == 0

    def test_shortcut_holds_for_cyclic_group(self):
        """Test that the shortcut is exact modulo an odd prime power"""
        assert np.array_equal(shortcut_order_matrix(27, 20), symbol_matrix(27, 20))


class TestEnumerationCap:
    """Test the enumeration cap check"""

    def test_cap_is_enforced(self):
        """Test that exceeding the cap raises with the cap attached"""
        with pytest.raises(ResourceCapError) as excinfo:
            check_enumeration_cap(101, 100)
        assert "--max-n" in str(excinfo.value)
        check_enumeration_cap(100, 100)
