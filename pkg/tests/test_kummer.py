from __future__ import annotations

from fractions import Fraction
from math import factorial, inf

import pytest

from padic_voa.fock import HeisenbergState
from padic_voa.kummer import (
    KummerFamily,
    kummer_check,
    kummer_index,
    limit_character_check,
    square_bracket_state,
    square_bracket_state_by_substitution,
    u_state,
    v_state,
)
from padic_voa.qchar import eisenstein_G, normalized_character, qseries_padic_distance
from padic_voa.scalars import bernoulli, c_coefficient


class TestSquareBracketState:
    def test_r_one(self):
        state = square_bracket_state(1)
        expected = HeisenbergState.monomial([1, 1]) - HeisenbergState.vacuum(
            Fraction(1, 12)
        )
        assert state == expected

    def test_r_three_support(self):
        state = square_bracket_state(3)
        assert state.coefficient([1, 1]) == 1
        assert state.coefficient([2, 1]) == 3
        assert state.coefficient([3, 1]) == 2
        assert state.coefficient([]) == Fraction(1, 120)
        assert len(state) == 4

    def test_top_monomial_coefficient(self):
        for r in (1, 3, 5, 7, 9):
            assert square_bracket_state(r).coefficient([r, 1]) == factorial(r - 1)

    def test_rejects_even_or_nonpositive(self):
        for bad in (0, -1, 2, 4):
            with pytest.raises(ValueError):
                square_bracket_state(bad)

    def test_substitution_oracle_agrees(self):
        for r in (1, 3, 5):
            assert square_bracket_state_by_substitution(r) == square_bracket_state(r)


class TestVStates:
    def test_half_of_square_bracket(self):
        for r in (1, 3, 5):
            assert v_state(r) == square_bracket_state(r).scale(Fraction(1, 2))

    def test_weight_components(self):
        for r in (3, 5):
            weights = sorted(v_state(r).homogeneous_components())
            assert weights == [0] + list(range(2, r + 2))

    def test_character_is_eisenstein(self):
        for r in (1, 3):
            lhs = normalized_character(v_state(r), 12)
            assert lhs == eisenstein_G(r + 1, 12)


class TestUStates:
    def test_rescaling(self):
        for p in (3, 5):
            for r in (1, 3):
                assert u_state(r, p) == v_state(r).scale(2 * (1 - Fraction(p) ** r))

    def test_p_integrality_away_from_exceptional_branch(self):
        # vacuum coefficient is p-integral when (p-1) does not divide r+1,
        # which holds for p >= 5 in this family (von Staudt-Clausen)
        for p in (5, 7):
            for a in (0, 1):
                assert u_state(kummer_index(p, a), p).sup_norm_exponent(p) <= 0

    def test_character_scales(self):
        p, r = 5, 3
        lhs = normalized_character(u_state(r, p), 10)
        rhs = eisenstein_G(r + 1, 10).scale(2 * (1 - Fraction(p) ** r))
        assert lhs == rhs

    def test_rejects_bad_prime(self):
        with pytest.raises(ValueError):
            u_state(3, 2)
        with pytest.raises(ValueError):
            u_state(3, 15)


class TestCCongruences:
    def test_lemma_congruence(self):
        for p in (3, 5, 7):
            for a in range(3):
                for b in range(a, 3):
                    r = kummer_index(p, a)
                    s = kummer_index(p, b)
                    modulus = p ** (a + 1)
                    for m in range(max(r, s) + 1):
                        assert (c_coefficient(r, m) - c_coefficient(s, m)) % modulus == 0


class TestKummerCheck:
    def test_equal_depths_give_zero(self):
        report = kummer_check(7, 0, 0)
        assert report.is_zero
        assert report.norm_exponent == -inf

    def test_indices(self):
        assert kummer_index(5, 0) == 5
        assert kummer_index(5, 2) == 101
        assert kummer_index(7, 2) == 295

    @pytest.mark.parametrize("p", [5, 7])
    def test_congruence_bound_untwisted_primes(self, p):
        for a in range(3):
            for b in range(a, 3):
                report = kummer_check(p, a, b)
                assert report.norm_exponent <= -(a + 1), (p, a, b)

    def test_p_three_exceptional_branch(self):
        # (p-1) | r+1 for every member at p=3: the vacuum coefficient only
        # satisfies the congruence two powers short of the generic rate
        for a in range(2):
            for b in range(a + 1, 3):
                report = kummer_check(3, a, b)
                assert report.norm_exponent == 1 - a, (a, b)

    def test_rejects_misordered_depths(self):
        with pytest.raises(ValueError):
            kummer_check(5, 2, 1)

    def test_family_container(self):
        family = KummerFamily.build(5, 2)
        assert family.prime == 5 and family.depth == 2
        assert len(family.states) == 3
        assert family.states[0] == u_state(5, 5)
        with pytest.raises(ValueError):
            KummerFamily.build(2, 1)


class TestLimitCharacter:
    @pytest.mark.parametrize("p", [5, 7])
    def test_distance_bound_untwisted_primes(self, p):
        for a in range(2):
            assert limit_character_check(p, a, 10) <= -(a + 1)

    def test_p_three_exceptional_branch(self):
        for a in range(3):
            assert limit_character_check(3, a, 8) == 1 - a

    def test_constant_term_convergence(self):
        # the vacuum coefficients converge to 2 * (p-1)/24 at rate p^(a+1)
        p = 5
        from padic_voa.scalars import valuation

        limit = Fraction(p - 1, 12)
        for a in range(3):
            r = kummer_index(p, a)
            vacuum_coeff = -(1 - Fraction(p) ** r) * bernoulli(r + 1) / (r + 1)
            assert valuation(vacuum_coeff - limit, p) >= a + 1
