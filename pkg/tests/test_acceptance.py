"""Acceptance suite: one test per contract criterion, each printing a
PASS/FAIL line (run with `pytest -s tests/test_acceptance.py` to see them).

Criteria 2 and 3 include the prime p = 3, for which the required congruence
rate -(a+1) is not mathematically attainable: every even weight k = r+1
satisfies (p-1) | k there, the exceptional branch of the classical Kummer
congruences, and the vacuum coefficients only converge at rate a - 1.  Those
parametrizations are implemented exactly as stated and fail honestly; the
measured exponents appear in the assertion messages.  See the repository
README for the analysis.
"""

from __future__ import annotations

import itertools
import time
from fractions import Fraction
from math import inf

import pytest

from padic_voa.axioms import (
    associator_defect,
    commutator_defect,
    isometry_probe,
    jacobi_defect,
    locality_profile,
)
from padic_voa.cli import random_probe_states
from padic_voa.fock import HeisenbergState, grade_basis
from padic_voa.kummer import (
    kummer_check,
    limit_character_check,
    square_bracket_state,
    square_bracket_state_by_substitution,
    v_state,
)
from padic_voa.modes import h_mode, mode_action, residue_product_mode, virasoro_mode
from padic_voa.qchar import eisenstein_G, normalized_character
from padic_voa.virasoro import VirasoroState, L_action, vir_bracket_defect, vir_grade_basis

VAC = HeisenbergState.vacuum()
H = HeisenbergState.monomial([1])


def basis_states(max_grade: int) -> list[HeisenbergState]:
    return [
        HeisenbergState.monomial(parts)
        for g in range(max_grade + 1)
        for parts in grade_basis(g)
    ]


def report(criterion: str, ok: bool, detail: str = "") -> None:
    status = "PASS" if ok else "FAIL"
    suffix = f" ({detail})" if detail else ""
    print(f"[{status}] {criterion}{suffix}")


def test_criterion_01_eisenstein_match():
    """eta * Z(v_r, q) = G_{r+1} exactly through q^20 for r in {1,3,5,7,9}."""
    start = time.time()
    failures = []
    for r in (1, 3, 5, 7, 9):
        lhs = normalized_character(v_state(r), 20)
        rhs = eisenstein_G(r + 1, 20)
        if lhs != rhs:
            failures.append(r)
    elapsed = time.time() - start
    ok = not failures and elapsed < 60
    report(
        "criterion 1: eta*Z(v_r) = G_{r+1} exactly to q^20, r in {1,3,5,7,9}",
        ok,
        f"elapsed {elapsed:.1f}s",
    )
    assert not failures, f"mismatch at r in {failures}"
    assert elapsed < 60, f"runtime target exceeded: {elapsed:.1f}s"


@pytest.mark.parametrize("p", [3, 5, 7])
def test_criterion_02_kummer_state_congruences(p):
    """sup-norm exponent of u_{1+p^a(p-1)} - u_{1+p^b(p-1)} <= -(a+1) for
    0 <= a <= b <= 2."""
    start = time.time()
    rows = []
    worst = -inf
    for a in range(3):
        for b in range(a, 3):
            exponent = kummer_check(p, a, b).norm_exponent
            rows.append((a, b, exponent))
            worst = max(worst, exponent - (-(a + 1)))
    elapsed = time.time() - start
    ok = worst <= 0 and elapsed < 60
    report(
        f"criterion 2: Kummer state congruences at p={p}",
        ok,
        f"(a,b,exponent) rows {rows}, elapsed {elapsed:.1f}s",
    )
    assert elapsed < 60, f"runtime target exceeded: {elapsed:.1f}s"
    for a, b, exponent in rows:
        assert exponent <= -(a + 1), (
            f"p={p}, (a,b)=({a},{b}): measured exponent {exponent} > bound {-(a + 1)}"
            " (exceptional (p-1) | r+1 branch of the Kummer congruences)"
        )


@pytest.mark.parametrize("p", [3, 5])
def test_criterion_03_g2_star_limit(p):
    """p-adic distance exponent between f(u_{1+p^a(p-1)}) and 2 G_2* over
    q-orders <= 10 is <= -(a+1) for a in {0,1,2}."""
    rows = []
    for a in range(3):
        rows.append((a, limit_character_check(p, a, 10)))
    ok = all(exponent <= -(a + 1) for a, exponent in rows)
    report(f"criterion 3: character distances to 2*G2* at p={p}", ok, f"rows {rows}")
    for a, exponent in rows:
        assert exponent <= -(a + 1), (
            f"p={p}, a={a}: measured distance exponent {exponent} > bound {-(a + 1)}"
            " (exceptional (p-1) | r+1 branch of the Kummer congruences)"
        )


def test_criterion_04_jacobi_sweep():
    """Zero Jacobi defect for all basis triples of grade <= 3 and
    (r,s,t) in [-2,2]^3."""
    start = time.time()
    states = basis_states(3)
    exceptions = 0
    checks = 0
    for u, v, w in itertools.product(states, repeat=3):
        for r, s, t in itertools.product(range(-2, 3), repeat=3):
            checks += 1
            if not jacobi_defect(u, v, w, r, s, t).is_zero:
                exceptions += 1
    elapsed = time.time() - start
    ok = exceptions == 0 and elapsed < 120
    report("criterion 4: Jacobi identity sweep", ok, f"{checks} checks, {elapsed:.1f}s")
    assert exceptions == 0
    assert elapsed < 120, f"runtime target exceeded: {elapsed:.1f}s"


def test_criterion_05_commutator_and_associator():
    """Zero commutator and associator defects on grade <= 4 basis triples,
    indices in [-3,3]."""
    states = basis_states(4)
    window = range(-3, 4)
    for u, v, w in itertools.product(states, repeat=3):
        for r, s in itertools.product(window, repeat=2):
            assert commutator_defect(u, v, w, r, s).is_zero, (
                u.render(), v.render(), w.render(), r, s,
            )
            assert associator_defect(u, v, w, r, s).is_zero, (
                u.render(), v.render(), w.render(), r, s,
            )
    report("criterion 5: commutator and associator formulas", True)


def test_criterion_06_heisenberg_ccr():
    """[h_m, h_n] = m delta_{m+n,0} on grade <= 6 basis, m,n in [-5,5]."""
    states = basis_states(6)
    for m, n in itertools.product(range(-5, 6), repeat=2):
        for b in states:
            bracket = h_mode(m, h_mode(n, b)) - h_mode(n, h_mode(m, b))
            expected = m * b if m + n == 0 else HeisenbergState.zero()
            assert bracket == expected, (m, n, b.render())
    report("criterion 6: Heisenberg canonical commutation relations", True)


def test_criterion_07_virasoro_inside_heisenberg():
    """[L_m, L_n] = (m-n) L_{m+n} + delta_{m+n,0} (m^3-m)/12 at c = 1 on
    grade <= 5 basis, m,n in [-3,3]."""
    states = basis_states(5)
    for m, n in itertools.product(range(-3, 4), repeat=2):
        for b in states:
            bracket = virasoro_mode(m, virasoro_mode(n, b)) - virasoro_mode(
                n, virasoro_mode(m, b)
            )
            expected = (m - n) * virasoro_mode(m + n, b)
            if m + n == 0:
                expected = expected + Fraction(m**3 - m, 12) * b
            assert bracket == expected, (m, n, b.render())
    report("criterion 7: Virasoro bracket at central charge 1", True)


def test_criterion_08_virasoro_voa_over_zp():
    """Virasoro bracket defects vanish on PBW basis grade <= 6 for
    c' in {0, 1, 12}; integer charges produce no denominators."""
    for charge in (0, 1, 12):
        for grade in range(7):
            for word in vir_grade_basis(grade):
                state = VirasoroState.word(word, charge)
                for m, n in itertools.product(range(-4, 5), repeat=2):
                    assert vir_bracket_defect(m, n, state).is_zero, (charge, word, m, n)
                for n in range(-4, 5):
                    assert L_action(n, state).is_integral(), (charge, word, n)
    report("criterion 8: Virasoro vertex algebra over the p-adic integers", True)


@pytest.mark.parametrize("p", [3, 5])
def test_criterion_09_isometry(p):
    """lhs = rhs for 50 pseudo-random integral and rescaled states."""
    mismatches = []
    for state in random_probe_states(grade=3, prime=p, count=50, seed=911 + p):
        lhs, rhs = isometry_probe(state, p, 3, range(-4, 4))
        if lhs != rhs:
            mismatches.append((state.render(), lhs, rhs))
    report(f"criterion 9: isometry of the state-field map at p={p}", not mismatches)
    assert not mismatches, mismatches


def test_criterion_10_locality_decay():
    """Locality profile exactly zero for t >= wt(u)+wt(v) on grade <= 3
    inputs, and nonzero at t = 1 for u = v = h, w = vacuum."""
    states = basis_states(3)
    for u, v, w in itertools.product(states, repeat=3):
        threshold = u.max_weight() + v.max_weight()
        for t, exponent in locality_profile(u, v, w, threshold + 1):
            if t >= threshold:
                assert exponent == -inf, (u.render(), v.render(), w.render(), t)
    generator_profile = dict(locality_profile(H, H, VAC, 2))
    assert generator_profile[1] != -inf
    report("criterion 10: locality decay thresholds", True)


def test_criterion_11_residue_product_consistency():
    """residue_product_mode equals the (u(t)v)(n) path on grade <= 4 states,
    (t,n) in [-3,3]^2."""
    states = basis_states(4)
    for a, b, w in itertools.product(states, repeat=3):
        for t, n in itertools.product(range(-3, 4), repeat=2):
            composed = mode_action(mode_action(a, t, b), n, w)
            assert residue_product_mode(a, b, t, n, w) == composed, (
                a.render(), b.render(), w.render(), t, n,
            )
    report("criterion 11: residue products match composed modes", True)


def test_criterion_12_square_bracket_expansion():
    """Closed-form Stirling/Bernoulli expansion of (r-1)! h[-r]h[-1]|0>
    equals the truncated-substitution oracle for r in {1,3,5}."""
    for r in (1, 3, 5):
        assert square_bracket_state(r) == square_bracket_state_by_substitution(r), r
    report("criterion 12: square-bracket state expansion vs substitution", True)
