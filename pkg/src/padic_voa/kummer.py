"""Square-bracket states, the v_r / u_r families, Kummer-congruence checks in
the state space, and the comparison of limit characters with the p-stabilized
weight-2 Eisenstein series.

The torus-coordinate state h[-r]h[-1]|0> expands over the round-bracket basis
as

    (r-1)! h[-r]h[-1]|0>
        = sum_{m=0}^{r-1} c(r, m) h(-m-1)h(-1)|0>  -  B_{r+1}/(r+1) |0>,

with c(r, m) the Stirling-type integers from `scalars.c_coefficient`.  States
are assembled as exact rationals first; p-adic reduction happens only at the
reporting boundary (norm exponents), after the (1 - p^r) rescaling.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .axioms import DefectReport
from .fock import HeisenbergState
from .qchar import QSeries, eisenstein_G2_star, normalized_character, qseries_padic_distance
from .scalars import bernoulli, c_coefficient, is_prime

__all__ = [
    "KummerFamily",
    "kummer_check",
    "kummer_index",
    "limit_character_check",
    "square_bracket_state",
    "square_bracket_state_by_substitution",
    "u_state",
    "v_state",
]


def _require_odd_positive(r: int) -> None:
    if r < 1 or r % 2 == 0:
        raise ValueError(f"r must be a positive odd integer, got {r}")


def _require_odd_prime(p: int) -> None:
    if p == 2 or not is_prime(p):
        raise ValueError(f"p must be an odd prime, got {p}")


def square_bracket_state(r: int) -> HeisenbergState:
    """The state (r-1)! h[-r]h[-1]|0> in the round-bracket monomial basis,
    via the closed-form Stirling/Bernoulli expansion."""
    _require_odd_positive(r)
    state = HeisenbergState.vacuum(-bernoulli(r + 1) / (r + 1))
    for m in range(r):
        state = state + HeisenbergState.monomial([m + 1, 1], c_coefficient(r, m))
    return state


def square_bracket_state_by_substitution(r: int) -> HeisenbergState:
    """Small-order oracle for `square_bracket_state`: extract the z^(r-1)
    coefficient of (r-1)! e^z Y(h, e^z - 1) h directly, expanding e^z - 1 as
    a truncated power series.

    Y(h, x) h = sum_{k>=1} h(-k)h(-1)|0> x^(k-1) + |0> x^(-2), so after the
    substitution x = e^z - 1 the monomial h(-m-1)h(-1)|0> picks up the
    z^(r-1) coefficient of (r-1)! e^z (e^z-1)^m, and the vacuum picks up the
    z^(r-1) coefficient of (r-1)! e^z (e^z-1)^(-2).  The (e^z-1)^(-2) factor
    is computed as z^(-2) times the inverse square of (e^z-1)/z.
    """
    _require_odd_positive(r)
    order = r + 2
    factorials = [1]
    for i in range(1, order + 2):
        factorials.append(factorials[-1] * i)
    exp_z = QSeries([Fraction(1, factorials[i]) for i in range(order + 1)])
    expm1 = QSeries([0] + [Fraction(1, factorials[i]) for i in range(1, order + 1)])
    scale = Fraction(factorials[r - 1])

    state = HeisenbergState.zero()
    power = QSeries.one(order)
    for m in range(r):
        # coefficient of z^(r-1) in e^z (e^z - 1)^m
        coeff = scale * (exp_z * power).coefficient(r - 1)
        if coeff:
            state = state + HeisenbergState.monomial([m + 1, 1], coeff)
        power = power * expm1

    # (e^z - 1)^(-2) = z^(-2) * ((e^z - 1)/z)^(-2)
    ratio = QSeries([Fraction(1, factorials[i + 1]) for i in range(order + 1)])
    inv2 = ratio.inverse() * ratio.inverse()
    vac_coeff = scale * (exp_z * inv2).coefficient(r + 1)
    return state + HeisenbergState.vacuum(vac_coeff)


def v_state(r: int) -> HeisenbergState:
    """v_r = (1/2)(r-1)! h[-r]h[-1]|0>; its rescaled character is G_{r+1}."""
    return square_bracket_state(r).scale(Fraction(1, 2))


def u_state(r: int, p: int) -> HeisenbergState:
    """The p-rescaled family member u_r = 2 (1 - p^r) v_r."""
    _require_odd_prime(p)
    return square_bracket_state(r).scale(1 - Fraction(p) ** r)


def kummer_index(p: int, a: int) -> int:
    """The weight index r = 1 + p^a (p-1) of depth a in the family."""
    if a < 0:
        raise ValueError("depth must be >= 0")
    return 1 + p**a * (p - 1)


@dataclass(frozen=True)
class KummerFamily:
    """The states u_{1 + p^a (p-1)} for a = 0 .. depth."""

    prime: int
    depth: int
    states: tuple[HeisenbergState, ...]

    @classmethod
    def build(cls, p: int, depth: int) -> "KummerFamily":
        _require_odd_prime(p)
        states = tuple(u_state(kummer_index(p, a), p) for a in range(depth + 1))
        return cls(p, depth, states)


def kummer_check(p: int, a: int, b: int) -> DefectReport:
    """Difference of family members u_r - u_s for r = 1 + p^a(p-1) and
    s = 1 + p^b(p-1), a <= b, reported with its sup-norm exponent.

    The congruence target is exponent <= -(a+1).  The c(r, m) coefficients
    meet it for every odd prime; the vacuum (Bernoulli) coefficient meets it
    when (p-1) does not divide r+1, which excludes p = 3 where the measured
    exponent is exactly 1 - a.
    """
    if a > b:
        raise ValueError("need a <= b")
    r = kummer_index(p, a)
    s = kummer_index(p, b)
    defect = u_state(r, p) - u_state(s, p)
    return DefectReport.from_defect(
        defect, p, {"p": p, "a": a, "b": b, "r": r, "s": s, "bound": -(a + 1)}
    )


def limit_character_check(p: int, a: int, n_max: int) -> int | float:
    """p-adic distance exponent between the rescaled character of
    u_{1 + p^a(p-1)} and 2 G_2* through q-order n_max."""
    _require_odd_prime(p)
    u = u_state(kummer_index(p, a), p)
    target = eisenstein_G2_star(p, n_max).scale(2)
    return qseries_padic_distance(normalized_character(u, n_max), target, p)
