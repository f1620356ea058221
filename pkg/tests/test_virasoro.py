from __future__ import annotations

import itertools
from fractions import Fraction

import pytest

from padic_voa.scalars import gen_binomial
from padic_voa.virasoro import (
    VirasoroState,
    L_action,
    vir_bracket_defect,
    vir_grade_basis,
    vir_mode_action,
)

from oracles import partition_counts

CHARGES = (0, 1, 12, Fraction(1, 2))


class TestStateBasics:
    def test_rejects_non_pbw_words(self):
        with pytest.raises(ValueError):
            VirasoroState({(1,): 1}, 1)
        with pytest.raises(ValueError):
            VirasoroState({(2, 3): 1}, 1)

    def test_word_constructor_sorts(self):
        assert VirasoroState.word([2, 3], 1) == VirasoroState.word([3, 2], 1)

    def test_charge_mismatch_rejected(self):
        with pytest.raises(ValueError):
            VirasoroState.vacuum(1) + VirasoroState.vacuum(2)

    def test_render(self):
        state = VirasoroState.word([3, 2, 2], 1, Fraction(-1, 4))
        assert state.render() == "-1/4 L(-3) L(-2)^2 v0"


class TestGradedBasis:
    def test_dimensions_match_generating_function(self):
        oracle = partition_counts(10, min_part=2)
        assert [len(vir_grade_basis(n)) for n in range(11)] == oracle

    def test_grade_six(self):
        assert vir_grade_basis(6) == ((2, 2, 2), (3, 3), (4, 2), (6,))

    def test_grade_one_is_empty(self):
        assert vir_grade_basis(1) == ()


class TestLAction:
    def test_highest_weight_annihilation(self):
        for charge in CHARGES:
            v0 = VirasoroState.vacuum(charge)
            for n in range(0, 4):
                assert L_action(n, v0).is_zero

    def test_quotient_kills_translation_of_vacuum(self):
        assert L_action(-1, VirasoroState.vacuum(1)).is_zero

    def test_central_pairing(self):
        for charge in CHARGES:
            v0 = VirasoroState.vacuum(charge)
            result = L_action(2, L_action(-2, v0))
            assert result == v0.scale(charge), charge

    def test_grading_eigenvalue(self):
        for grade in range(8):
            for word in vir_grade_basis(grade):
                state = VirasoroState.word(word, 1)
                assert L_action(0, state) == state.scale(grade)

    def test_grade_shift(self):
        for n in range(-3, 4):
            for word in vir_grade_basis(5):
                image = L_action(n, VirasoroState.word(word, 12))
                if not image.is_zero:
                    assert image.weight() == 5 - n

    def test_reordering_bracket(self):
        # L(-1) L(-2) v0 = L(-2) L(-1) v0 + L(-3) v0, and the first summand
        # dies in the quotient
        got = L_action(-1, VirasoroState.word([2], 1))
        assert got == VirasoroState.word([3], 1)


class TestBracketDefect:
    def test_central_example(self):
        report = vir_bracket_defect(2, -2, VirasoroState.vacuum(12))
        assert report.is_zero

    def test_equal_modes(self):
        report = vir_bracket_defect(1, 1, VirasoroState.word([2, 2], 7))
        assert report.is_zero

    def test_sweep_small(self):
        for charge in (0, 1, 12):
            for grade in range(5):
                for word in vir_grade_basis(grade):
                    state = VirasoroState.word(word, charge)
                    for m, n in itertools.product(range(-3, 4), repeat=2):
                        report = vir_bracket_defect(m, n, state)
                        assert report.is_zero, (charge, word, m, n)

    def test_integrality_for_integer_charge(self):
        for charge in (0, 1, 12):
            for grade in range(6):
                for word in vir_grade_basis(grade):
                    state = VirasoroState.word(word, charge)
                    for n in range(-4, 5):
                        assert L_action(n, state).is_integral(), (charge, word, n)

    def test_half_integer_charge_stays_rational(self):
        state = L_action(2, L_action(-2, VirasoroState.vacuum(Fraction(1, 2))))
        assert state.coefficient([]) == Fraction(1, 2)


class TestVirModeAction:
    def test_vacuum_mode_is_identity(self):
        b = VirasoroState.word([3, 2], 1)
        assert vir_mode_action(VirasoroState.vacuum(1), -1, b) == b
        assert vir_mode_action(VirasoroState.vacuum(1), 0, b).is_zero

    def test_conformal_vector_grading_mode(self):
        omega = VirasoroState.word([2], 1)
        for grade in range(6):
            for word in vir_grade_basis(grade):
                b = VirasoroState.word(word, 1)
                assert vir_mode_action(omega, 1, b) == b.scale(grade)

    def test_central_charge_mode_identity(self):
        for charge in CHARGES:
            omega = VirasoroState.word([2], charge)
            got = vir_mode_action(omega, 3, omega)
            assert got == VirasoroState.vacuum(charge, charge)

    def test_modes_match_l_action(self):
        omega = VirasoroState.word([2], 12)
        for n in range(-4, 5):
            for grade in range(5):
                for word in vir_grade_basis(grade):
                    b = VirasoroState.word(word, 12)
                    assert vir_mode_action(omega, n + 1, b) == L_action(n, b)

    def test_charge_mismatch_rejected(self):
        with pytest.raises(ValueError):
            vir_mode_action(VirasoroState.vacuum(1), -1, VirasoroState.vacuum(2))


def vir_jacobi_defect(u, v, w, r, s, t):
    lhs = VirasoroState.zero(u.charge)
    for i in range(max(0, u.max_weight() + v.max_weight() - t)):
        product = vir_mode_action(u, t + i, v)
        if product:
            lhs = lhs + vir_mode_action(product, r + s - i, w).scale(gen_binomial(r, i))
    rhs = VirasoroState.zero(u.charge)
    t_sign = -1 if t % 2 else 1
    first = v.max_weight() + w.max_weight() - s
    second = u.max_weight() + w.max_weight() - r
    for i in range(max(0, first, second)):
        coeff = (-1 if i % 2 else 1) * gen_binomial(t, i)
        if coeff == 0:
            continue
        if i < first:
            inner = vir_mode_action(v, s + i, w)
            if inner:
                rhs = rhs + vir_mode_action(u, r + t - i, inner).scale(coeff)
        if i < second:
            inner = vir_mode_action(u, r + i, w)
            if inner:
                rhs = rhs - vir_mode_action(v, s + t - i, inner).scale(coeff * t_sign)
    return lhs - rhs


class TestVirasoroJacobi:
    def test_generator_triple(self):
        omega = VirasoroState.word([2], 12)
        v0 = VirasoroState.vacuum(12)
        for r, s, t in itertools.product(range(-2, 3), repeat=3):
            defect = vir_jacobi_defect(omega, omega, v0, r, s, t)
            assert defect.is_zero, (r, s, t)
