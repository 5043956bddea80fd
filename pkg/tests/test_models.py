# Data model tests
import pytest

from expcong.models.analytic import ComplexSample
from expcong.models.arithmetic import FactoredInteger
from expcong.models.output import OutputRecord
from expcong.models.partition import ResiduePartition
from expcong.models.symbol import MINUS_ONE, PLUS_ONE, ZERO, SignSubgroup, SymbolQuery, SymbolValue
from expcong.models.verification import TheoremResult, TheoremStatus, VerificationReport
from expcong.utils.exceptions import DomainError


class TestSymbolModels:
    """Test SymbolValue and SymbolQuery"""

    def test_symbol_value_arithmetic(self):
        """Test products, negation and rendering"""
        assert MINUS_ONE * MINUS_ONE == PLUS_ONE
        assert MINUS_ONE * ZERO == ZERO
        assert -PLUS_ONE == MINUS_ONE
        assert str(PLUS_ONE) == "+1" and str(ZERO) == "0"
        assert int(MINUS_ONE) == -1
        with pytest.raises(ValueError):
            SymbolValue(2)

    def test_query_keeps_argument_and_reduces_residue(self):
        """Test that a is stored as given"""
        q = SymbolQuery(-4, 15, 2)
        assert q.a == -4
        assert q.residue == 11
        assert q.with_exponent(3).k == 3
        assert q.to_dict() == {'a': -4, 'n': 15, 'k': 2}

    def test_validate_checks_modulus_and_exponent(self):
        """Test the argument-free check used before table scans"""
        assert SymbolQuery.validate(15, 2 ** 64) is None
        with pytest.raises(DomainError):
            SymbolQuery.validate(1, 2)
        with pytest.raises(DomainError):
            SymbolQuery.validate(15, 0)
        with pytest.raises(DomainError):
            SymbolQuery.validate(2 ** 62 + 1, 1)

    def test_sign_subgroup_index(self):
        """Test the kernel index"""
        group = SignSubgroup(5, 2, (1, 2, 3, 4), (1, 4), (-1, 1))
        assert group.order == 4
        assert group.index_of_kernel == 2


class TestArithmeticModels:
    """Test FactoredInteger invariants"""

    def test_factored_integer(self):
        """Test reconstruction, divisors and rendering"""
        f = FactoredInteger(360, ((2, 3), (3, 2), (5, 1)))
        assert f.primes == (2, 3, 5)
        assert f.prime_powers() == (8, 9, 5)
        assert len(f.divisors()) == 24
        assert str(f) == "2^3 * 3^2 * 5"
        assert FactoredInteger(7, ((7, 1),)).is_prime
        assert str(FactoredInteger(1)) == "1"

    @pytest.mark.parametrize("value, factors", [
        (0, ()),
        (12, ((3, 1), (2, 2))),
        (12, ((2, 2), (3, 0))),
        (12, ((2, 1), (3, 1))),
    ])
    def test_factored_integer_rejects_bad_input(self, value, factors):
        """Test ordering, exponent and product checks"""
        with pytest.raises(ValueError):
            FactoredInteger(value, factors)


class TestPartitionModel:
    """Test ResiduePartition validation"""

    def test_validate_detects_unequal_cosets(self):
        """Test the size law |R-1| = |R1| when R-1 is nonempty"""
        good = ResiduePartition(5, 2, (1, 4), (2, 3), (), 1)
        bad = ResiduePartition(5, 2, (1,), (2, 3), (4,), 1)
        assert good.validate()
        assert not bad.validate()
        assert good.sign_count == 4
        assert good.to_dict()['r_minus'] == [2, 3]

    def test_validate_detects_overlap_and_gaps(self):
        """Test disjointness and coverage"""
        assert not ResiduePartition(5, 2, (1, 4), (4, 3), (), 1).validate()
        assert not ResiduePartition(5, 2, (1, 4), (2, 3), (), 0).validate()


class TestOutputModels:
    """Test complex samples, output records and verification reports"""

    def test_complex_sample(self):
        """Test finiteness, modulus and conversion"""
        z = ComplexSample(3.0, 4.0)
        assert abs(z) == 5.0
        assert complex(z.conjugate()) == 3 - 4j
        assert z.to_pair() == [3.0, 4.0]
        with pytest.raises(ValueError):
            ComplexSample(float('nan'), 0.0)

    def test_output_record_json(self):
        """Test that records survive JSON serialization"""
        record = OutputRecord('symbol', {'a': 2, 'n': 5, 'k': 2}, {'value': -1}, 'definition')
        assert OutputRecord.from_json(record.to_json()) == record

    def test_output_record_keys(self):
        """Test the top-level keys of an emitted record"""
        record = OutputRecord('symbol', {'a': 2, 'n': 5, 'k': 2}, {'value': -1}, 'definition')
        data = record.to_dict()
        assert set(data) == {'command', 'inputs', 'result', 'paper_ref'}
        assert data['paper_ref'] == 'definition'

    def test_verification_report(self):
        """Test pass logic and the first failure"""
        ok = TheoremResult('a', 'x', TheoremStatus.PASS, checked=3)
        expected = TheoremResult('b', 'y', TheoremStatus.EXPECTED_FAIL_OBSERVED)
        bad = TheoremResult('c', 'z', TheoremStatus.FAIL, counterexample={'a': 1})
        assert VerificationReport('quick', [ok, expected]).passed
        report = VerificationReport('quick', [ok, bad, expected])
        assert not report.passed
        assert report.first_failure is bad
        assert report.to_dict()['results'][1]['status'] == "FAIL"
