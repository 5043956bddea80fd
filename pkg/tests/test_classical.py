# Legendre, Jacobi and power residue tests
import pytest
import sympy

from expcong.calculations.classical import (
    jacobi, jacobi_by_factorization, jacobi_compatibility, legendre, legendre_coincidence,
    power_residue_test
)
from expcong.utils.exceptions import DomainError, NotAUnitError


class TestClassicalSymbols:
    """Test Legendre and Jacobi symbols against sympy"""

    def test_legendre_examples(self):
        """Test hand-checked values"""
        assert legendre(2, 7).value == 1
        assert legendre(3, 7).value == -1
        assert legendre(14, 7).value == 0

    def test_legendre_matches_sympy(self, odd_primes):
        """Test every residue modulo odd primes below 100"""
        for p in odd_primes:
            for a in range(1, p):
                assert legendre(a, p).value == sympy.legendre_symbol(a, p)

    def test_jacobi_matches_sympy(self):
        """Test both Jacobi paths for odd n below 200"""
        for n in range(1, 200, 2):
            for a in range(-3, n + 3):
                expected = sympy.jacobi_symbol(a % n, n)
                assert jacobi(a, n).value == expected
                assert jacobi_by_factorization(a, n).value == expected

    def test_domain_errors(self):
        """Test even moduli and non-primes"""
        with pytest.raises(DomainError):
            jacobi(3, 8)
        with pytest.raises(DomainError):
            legendre(3, 9)
        with pytest.raises(DomainError):
            legendre(1, 2)


class TestLegendreCoincidence:
    """Test the symbol at k = (p - 1)/2 against the Legendre symbol"""

    def test_coincides_for_odd_primes(self, odd_primes):
        """Test every odd prime below 100"""
        for p in odd_primes:
            report = legendre_coincidence(p)
            assert report.passed
            assert report.k == (p - 1) // 2
            assert report.mismatches == ()


class TestPowerResidues:
    """Test the m-th power residue criterion"""

    def test_cubic_residues_modulo_13(self):
        """Test that the cubes modulo 13 are exactly {1, 5, 8, 12}"""
        residues = [a for a in range(1, 13) if power_residue_test(a, 13, 3)]
        assert residues == [1, 5, 8, 12]

    def test_quadratic_residues_match_sympy(self):
        """Test m = 2 against sympy"""
        for p in (5, 7, 11, 13, 29):
            for a in range(1, p):
                assert power_residue_test(a, p, 2) == sympy.is_quad_residue(a, p)

    def test_errors(self):
        """Test bad degrees, composite moduli and non-units"""
        with pytest.raises(DomainError):
            power_residue_test(2, 13, 5)
        with pytest.raises(DomainError):
            power_residue_test(2, 15, 2)
        with pytest.raises(NotAUnitError):
            power_residue_test(13, 13, 3)


class TestJacobiCompatibility:
    """Test the joint distribution of the symbol and the Jacobi symbol"""

    def test_modulus_15(self):
        """Test frequencies and the first disagreement"""
        report = jacobi_compatibility(15)
        assert report.k == 4
        assert report.frequencies == {(1, 1): 4, (1, -1): 4}
        assert report.first_disagreement == 7
        assert report.disagreements == 4
        assert report.to_dict()['pairs'] == [
            {'symbol': 1, 'jacobi': -1, 'count': 4},
            {'symbol': 1, 'jacobi': 1, 'count': 4},
        ]

    def test_frequencies_cover_units(self, odd_composites):
        """Test that every unit is counted once"""
        for n in odd_composites:
            report = jacobi_compatibility(n)
            assert sum(report.frequencies.values()) == sympy.totient(n)

    @pytest.mark.parametrize("n", [2, 1, 16, 13])
    def test_rejects_bad_moduli(self, n):
        """Test even, small and prime moduli"""
        with pytest.raises(DomainError):
            jacobi_compatibility(n)
