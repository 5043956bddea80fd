# Symbol evaluation and algebraic law tests
#
# Test cases:
# - Worked values of the symbol
# - Agreement of the direct, CRT and order evaluation paths
# - Negation, inversion, power and periodicity laws
# - Sign subgroup, multiplicativity and roots of unity

import math

import pytest

from expcong.calculations.arith import carmichael_lambda, factorize, multiplicative_order
from expcong.calculations.symbol import (
    evaluate, explain, invert_argument, is_in_sign_subgroup, is_insoluble,
    is_kth_root_of_unity, multiplicativity_witness, negate_argument, power_compat,
    roots_of_unity, sign_subgroup, symbol, symbol_via_crt, symbol_via_order
)
from expcong.models.symbol import MINUS_ONE, PLUS_ONE, ZERO, SymbolQuery
from expcong.utils.constants import BRANCH_MINUS_ONE, BRANCH_NEITHER, BRANCH_NOT_A_UNIT, BRANCH_PLUS_ONE
from expcong.utils.exceptions import DomainError, NotAUnitError, ResourceCapError


class TestSymbolValues:
    """Test direct evaluation on worked values"""

    @pytest.mark.parametrize("a, n, k, expected", [
        (2, 5, 2, MINUS_ONE),
        (1, 9, 7, PLUS_ONE),
        (7, 15, 2, ZERO),
        (4, 15, 2, PLUS_ONE),
        (3, 8, 1, ZERO),
        (0, 7, 3, ZERO),
        (1, 2, 1, PLUS_ONE),
        (-1, 7, 3, MINUS_ONE),
    ])
    def test_worked_values(self, a, n, k, expected):
        """Test the definition on hand-checked cases"""
        assert symbol(SymbolQuery(a, n, k)) == expected

    def test_one_is_always_plus_one(self):
        """Test (1/n)_k = +1"""
        assert all(evaluate(1, n, k) == PLUS_ONE for n in range(2, 40) for k in range(1, 10))

    def test_query_validation(self):
        """Test n < 2, k < 1 and the modulus cap"""
        for a, n, k in ((1, 1, 1), (1, 0, 1), (1, 5, 0), (1, 2 ** 62 + 1, 1)):
            with pytest.raises(DomainError):
                SymbolQuery.create(a, n, k)

    def test_explain_branches(self):
        """Test the reported power and branch"""
        explanation = explain(SymbolQuery(7, 15, 2))
        assert explanation.residue == 4
        assert explanation.branch == BRANCH_NEITHER
        assert explanation.value == ZERO
        assert explain(SymbolQuery(2, 5, 2)).branch == BRANCH_MINUS_ONE
        assert explain(SymbolQuery(4, 15, 2)).branch == BRANCH_PLUS_ONE
        assert explain(SymbolQuery(6, 15, 2)).branch == BRANCH_NOT_A_UNIT


class TestEvaluationPaths:
    """Test that the three evaluation paths agree"""

    def test_paths_agree_on_small_range(self):
        """Test every a modulo n <= 60 for k <= 12"""
        for n in range(2, 61):
            factored = factorize(n)
            for a in range(n):
                for k in range(1, 13):
                    q = SymbolQuery(a, n, k)
                    value = symbol(q)
                    assert symbol_via_crt(q, factored) == value
                    assert symbol_via_order(q) == value

    def test_order_path_needs_direct_check(self):
        """Test (3/8)_1: the order divides 2k but 3 is not -1 modulo 8"""
        assert symbol_via_order(SymbolQuery(3, 8, 1)) == ZERO

    def test_crt_rejects_wrong_factorization(self):
        """Test that a factorization of another modulus is refused"""
        with pytest.raises(DomainError):
            symbol_via_crt(SymbolQuery(2, 15, 2), factorize(21))


class TestAlgebraicLaws:
    """Test negation, inversion and power compatibility"""

    def test_negation_parity_rule(self):
        """Test symbol(-a) for even and odd k, including n = 2"""
        for n in range(2, 50):
            for a in range(n):
                for k in range(1, 9):
                    q = SymbolQuery(a, n, k)
                    assert negate_argument(q) == symbol(q.with_argument(-a))
        assert negate_argument(SymbolQuery(1, 2, 1)) == PLUS_ONE
        assert negate_argument(SymbolQuery(2, 5, 1)) == ZERO

    def test_inverse_symmetry(self):
        """Test symbol(a^-1) = symbol(a) for units"""
        assert invert_argument(SymbolQuery(2, 5, 2)) == MINUS_ONE
        for n in range(2, 40):
            for a in range(1, n):
                if math.gcd(a, n) == 1:
                    q = SymbolQuery(a, n, 3)
                    assert invert_argument(q) == symbol(q)

    def test_inverse_of_non_unit(self):
        """Test that non-units are refused"""
        with pytest.raises(NotAUnitError):
            invert_argument(SymbolQuery(6, 9, 2))

    def test_power_compatibility(self):
        """Test symbol(a^t, k) = symbol(a, tk)"""
        for n in range(2, 30):
            for a in range(n):
                for t in range(1, 4):
                    for k in range(1, 6):
                        assert power_compat(a, t, n, k) == evaluate(a, n, t * k)

    def test_power_compat_rejects_t_below_one(self):
        """Test t < 1"""
        with pytest.raises(DomainError):
            power_compat(2, 0, 5, 1)

    @pytest.mark.parametrize("n", [191, 193, 197, 199, 391])
    def test_periodic_in_order(self, n):
        """Test symbol(a, k) = symbol(a, k + ord(a)) for every k <= 3 ord(a), orders well past 24"""
        for a in range(2, n, 3):
            if math.gcd(a, n) != 1:
                continue
            r = multiplicative_order(a, n).order
            for k in range(1, 3 * r + 1):
                assert evaluate(a, n, k) == evaluate(a, n, k + r)

    def test_period_divides_lambda_for_huge_exponents(self):
        """Test k near 2^64 against its residue modulo lambda(n)"""
        for n in [97, 120, 391]:
            lam = carmichael_lambda(n)
            for a in range(n):
                for k in [2 ** 64, 2 ** 64 + 7]:
                    assert evaluate(a, n, k) == evaluate(a, n, 64 + (k - 64) % lam)


class TestSignSubgroup:
    """Test the k-sign subgroup and multiplicativity"""

    def test_sign_subgroup_modulo_15(self):
        """Test A(15, 2) = R1 with trivial image"""
        group = sign_subgroup(15, 2)
        assert group.elements == (1, 4, 11, 14)
        assert group.kernel == (1, 4, 11, 14)
        assert group.image == (1,)
        assert group.index_of_kernel == 1

    def test_sign_subgroup_modulo_5(self):
        """Test A(5, 2) = all units with image {-1, 1}"""
        group = sign_subgroup(5, 2)
        assert group.elements == (1, 2, 3, 4)
        assert group.kernel == (1, 4)
        assert group.image == (-1, 1)
        assert group.index_of_kernel == 2

    def test_sign_subgroup_respects_cap(self):
        """Test the enumeration cap"""
        with pytest.raises(ResourceCapError):
            sign_subgroup(1000, 2, max_n=999)

    def test_sign_subgroup_with_huge_exponent(self):
        """Test k = 2^64 + 2, which acts like k = 2 modulo 5"""
        group = sign_subgroup(5, 2 ** 64 + 2)
        assert group.k == 2 ** 64 + 2
        assert group.elements == (1, 2, 3, 4)
        assert group.kernel == (1, 4)
        assert group.image == (-1, 1)

    def test_membership_in_sign_subgroup(self):
        """Test is_in_sign_subgroup and is_insoluble"""
        assert is_in_sign_subgroup(2, 5, 2)
        assert not is_in_sign_subgroup(7, 15, 2)
        assert not is_in_sign_subgroup(5, 15, 2)
        assert is_insoluble(SymbolQuery(7, 15, 2))
        assert not is_insoluble(SymbolQuery(2, 5, 2))

    def test_unrestricted_multiplicativity_fails(self):
        """Test the counterexample (2, 3, 5, 1)"""
        check = multiplicativity_witness(2, 3, 5, 1)
        assert not check.holds
        assert check.product_value == PLUS_ONE
        assert check.value_product == ZERO
        assert not check.restricted

    def test_restricted_multiplicativity_holds(self):
        """Test multiplicativity on A(n, k)"""
        for n in (5, 13, 15, 16, 21, 40):
            for k in range(1, 7):
                elements = sign_subgroup(n, k).elements
                for a in elements:
                    for b in elements:
                        check = multiplicativity_witness(a, b, n, k)
                        assert check.restricted and check.holds


class TestRootsOfUnity:
    """Test the root-of-unity reading modulo a prime"""

    def test_roots_modulo_13(self):
        """Test the fourth roots of unity modulo 13"""
        assert roots_of_unity(13, 4) == [1, 5, 8, 12]
        assert is_kth_root_of_unity(5, 13, 4)
        assert not is_kth_root_of_unity(2, 13, 4)

    def test_root_count(self):
        """Test that X^k - 1 has gcd(k, p - 1) roots"""
        for p in (3, 5, 7, 11, 13, 31, 37):
            for k in range(1, 20):
                assert len(roots_of_unity(p, k)) == math.gcd(k, p - 1)

    def test_requires_prime(self):
        """Test composite moduli"""
        with pytest.raises(DomainError):
            roots_of_unity(15, 2)
        with pytest.raises(DomainError):
            is_kth_root_of_unity(1, 15, 2)
