"""Defect computations for the vertex-algebra identities: Jacobi, commutator,
associator, locality decay, and isometry of the state-field correspondence.

Each check returns the exact defect state together with its p-adic sup-norm
exponent rather than a boolean: on the algebraic sublattice the defects are
exactly zero, and a nonzero defect's norm exponent makes near-misses
diagnosable (this is the quantitative epsilon-form of the congruence reading
of the axioms).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import inf
from typing import Any, Iterable, Sequence

from .fock import HeisenbergState, grade_basis, _accumulate_terms
from .modes import mode_action
from .scalars import gen_binomial

__all__ = [
    "DefectReport",
    "associator_defect",
    "commutator_defect",
    "isometry_probe",
    "jacobi_defect",
    "locality_profile",
]


@dataclass(frozen=True)
class DefectReport:
    """An exact defect state, its sup-norm exponent at the reporting prime,
    and the parameters that produced it.  The exponent is -inf exactly when
    the defect vanishes."""

    defect: Any
    norm_exponent: int | float
    parameters: dict = field(default_factory=dict)
    prime: int = 2

    @classmethod
    def from_defect(cls, defect, prime: int, parameters: dict) -> "DefectReport":
        return cls(defect, defect.sup_norm_exponent(prime), dict(parameters), prime)

    @property
    def is_zero(self) -> bool:
        return self.norm_exponent == -inf

    def to_json(self) -> dict:
        exponent = None if self.is_zero else self.norm_exponent
        return {"parameters": dict(self.parameters), "norm_exponent": exponent}


def _signed_binomial(t: int, i: int) -> int:
    return (-1 if i % 2 else 1) * gen_binomial(t, i)


def jacobi_defect(
    u: HeisenbergState,
    v: HeisenbergState,
    w: HeisenbergState,
    r: int,
    s: int,
    t: int,
    prime: int = 2,
) -> DefectReport:
    """Left minus right side of the Jacobi identity

        sum_i C(r, i) (u(t+i)v)(r+s-i) w
            = sum_i (-1)^i C(t, i) { u(r+t-i) v(s+i) w
                                     - (-1)^t v(s+t-i) u(r+i) w },

    with every i-sum truncated at its proven grading bound.  Exactly zero on
    finitely supported states.
    """
    params = {"r": r, "s": s, "t": t}
    if u.is_zero or v.is_zero or w.is_zero:
        return DefectReport.from_defect(HeisenbergState.zero(), prime, params)
    wu, wv, ww = u.max_weight(), v.max_weight(), w.max_weight()

    acc: dict = {}
    for i in range(max(0, wu + wv - t)):
        product = mode_action(u, t + i, v)
        if product:
            _accumulate_terms(acc, mode_action(product, r + s - i, w), gen_binomial(r, i))

    t_sign = -1 if t % 2 else 1
    first_bound = wv + ww - s
    second_bound = wu + ww - r
    for i in range(max(0, first_bound, second_bound)):
        coeff = _signed_binomial(t, i)
        if coeff == 0:
            continue
        if i < first_bound:
            inner = mode_action(v, s + i, w)
            if inner:
                _accumulate_terms(acc, mode_action(u, r + t - i, inner), -coeff)
        if i < second_bound:
            inner = mode_action(u, r + i, w)
            if inner:
                _accumulate_terms(acc, mode_action(v, s + t - i, inner), coeff * t_sign)

    return DefectReport.from_defect(HeisenbergState._raw(acc), prime, params)


def commutator_defect(
    u: HeisenbergState,
    v: HeisenbergState,
    w: HeisenbergState,
    r: int,
    s: int,
    prime: int = 2,
) -> DefectReport:
    """Defect of the commutator formula
    [u(r), v(s)] w = sum_i C(r, i) (u(i)v)(r+s-i) w."""
    params = {"r": r, "s": s}
    if u.is_zero or v.is_zero or w.is_zero:
        return DefectReport.from_defect(HeisenbergState.zero(), prime, params)
    acc: dict = {}
    _accumulate_terms(acc, mode_action(u, r, mode_action(v, s, w)), 1)
    _accumulate_terms(acc, mode_action(v, s, mode_action(u, r, w)), -1)
    for i in range(max(0, u.max_weight() + v.max_weight())):
        product = mode_action(u, i, v)
        if product:
            _accumulate_terms(acc, mode_action(product, r + s - i, w), -gen_binomial(r, i))
    return DefectReport.from_defect(HeisenbergState._raw(acc), prime, params)


def associator_defect(
    u: HeisenbergState,
    v: HeisenbergState,
    w: HeisenbergState,
    s: int,
    t: int,
    prime: int = 2,
) -> DefectReport:
    """Defect of the associator formula
    (u(t)v)(s) w = sum_i (-1)^i C(t, i) { u(t-i) v(s+i) w
                                          - (-1)^t v(s+t-i) u(i) w }."""
    params = {"s": s, "t": t}
    if u.is_zero or v.is_zero or w.is_zero:
        return DefectReport.from_defect(HeisenbergState.zero(), prime, params)
    wu, wv, ww = u.max_weight(), v.max_weight(), w.max_weight()
    acc: dict = {}
    product = mode_action(u, t, v)
    if product:
        _accumulate_terms(acc, mode_action(product, s, w), 1)

    t_sign = -1 if t % 2 else 1
    first_bound = wv + ww - s
    second_bound = wu + ww
    for i in range(max(0, first_bound, second_bound)):
        coeff = _signed_binomial(t, i)
        if coeff == 0:
            continue
        if i < first_bound:
            inner = mode_action(v, s + i, w)
            if inner:
                _accumulate_terms(acc, mode_action(u, t - i, inner), -coeff)
        if i < second_bound:
            inner = mode_action(u, i, w)
            if inner:
                _accumulate_terms(acc, mode_action(v, s + t - i, inner), coeff * t_sign)

    return DefectReport.from_defect(HeisenbergState._raw(acc), prime, params)


def locality_profile(
    u: HeisenbergState,
    v: HeisenbergState,
    w: HeisenbergState,
    t_max: int,
    prime: int = 2,
) -> list[tuple[int, int | float]]:
    """Sup-norm exponents of the coefficients of (x-y)^t [Y(u,x), Y(v,y)] w
    for t = 0 .. t_max.

    Coefficients are indexed by mode labels: the (r, s) coefficient
    (of x^(-r-1) y^(-s-1)) is

        sum_{i=0}^{t} (-1)^i C(t, i) [u(r+t-i), v(s+i)] w.

    The (r, s) window is derived from grading: every coefficient lands in
    grade wt(u)+wt(v)+wt(w) - r - s - t - 2, so pairs with r + s above that
    bound vanish and individual labels are clamped to |r|, |s| <= W + 2 with
    W the total weight.  On algebraic states the profile is exactly zero for
    all t >= wt(u) + wt(v).
    """
    if t_max < 0:
        raise ValueError("t_max must be >= 0")
    profile: list[tuple[int, int | float]] = []
    if u.is_zero or v.is_zero or w.is_zero:
        return [(t, -inf) for t in range(t_max + 1)]
    total_weight = u.max_weight() + v.max_weight() + w.max_weight()
    span = total_weight + 2
    for t in range(t_max + 1):
        best: int | float = -inf
        for r in range(-span, span + 1):
            for s in range(-span, span + 1):
                if r + s > total_weight - t - 2:
                    continue
                acc: dict = {}
                for i in range(t + 1):
                    c = _signed_binomial(t, i)
                    a, b = r + t - i, s + i
                    _accumulate_terms(acc, mode_action(u, a, mode_action(v, b, w)), c)
                    _accumulate_terms(acc, mode_action(v, b, mode_action(u, a, w)), -c)
                best = max(best, HeisenbergState._raw(acc).sup_norm_exponent(prime))
        profile.append((t, best))
    return profile


def isometry_probe(
    a: HeisenbergState,
    p: int,
    grade_bound: int,
    index_window: Iterable[int] | Sequence[int],
) -> tuple[int | float, int | float]:
    """Probe of |Y(a, z)| = |a|: returns (lhs, rhs) where

        lhs = sup over n in the window and basis monomials b of grade
              <= grade_bound of log_p |a(n) b|   (basis monomials have norm 1),
        rhs = log_p |a|.

    lhs <= rhs always holds; equality holds whenever the window contains
    n = -1 and the grade bound admits the vacuum, since a(-1)|0> = a.
    """
    if a.is_zero:
        raise ValueError("isometry probe needs a nonzero state")
    lhs: int | float = -inf
    for n in index_window:
        for grade in range(grade_bound + 1):
            for parts in grade_basis(grade):
                image = mode_action(a, n, HeisenbergState.monomial(parts))
                lhs = max(lhs, image.sup_norm_exponent(p))
    return lhs, a.sup_norm_exponent(p)
