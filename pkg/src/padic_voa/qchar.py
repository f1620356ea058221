"""q-series arithmetic and the character map: graded traces Z(v, q), the eta
normalization, and classical and p-stabilized Eisenstein series.

A QSeries is a dense truncated expansion sum_n a_n q^(offset+n) with exact
rational coefficients and a rational exponent offset (e.g. -1/24), carried
symbolically so that eta * Z lands exactly on integer exponents.
"""

from __future__ import annotations

from fractions import Fraction
from math import inf

from .fock import HeisenbergState, grade_basis
from .modes import zero_mode
from .scalars import bernoulli, is_prime, valuation

__all__ = [
    "QSeries",
    "character",
    "coprime_divisor_sum",
    "divisor_power_sum",
    "eisenstein_G",
    "eisenstein_G2_star",
    "eta_series",
    "normalized_character",
    "qseries_padic_distance",
]

Coefficient = Fraction | int


class QSeries:
    """Truncated q-expansion: coefficient(n) multiplies q^(offset + n).

    Coefficients are stored densely on [0, order].  Addition requires equal
    offsets; multiplication adds offsets and truncates to the smaller order.
    """

    __slots__ = ("offset", "coeffs")

    def __init__(self, coeffs, offset: Coefficient = 0) -> None:
        self.coeffs: tuple[Fraction, ...] = tuple(Fraction(c) for c in coeffs)
        if not self.coeffs:
            raise ValueError("a QSeries needs at least the constant coefficient")
        self.offset = Fraction(offset)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def one(cls, order: int) -> "QSeries":
        return cls([1] + [0] * order)

    def coefficient(self, n: int) -> Fraction:
        return self.coeffs[n]

    def truncate(self, order: int) -> "QSeries":
        if order > self.order:
            raise ValueError("cannot extend a truncated series")
        return QSeries(self.coeffs[: order + 1], self.offset)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, QSeries):
            return NotImplemented
        return self.offset == other.offset and self.coeffs == other.coeffs

    def __add__(self, other: "QSeries") -> "QSeries":
        if not isinstance(other, QSeries):
            return NotImplemented
        if self.offset != other.offset:
            raise ValueError(f"offset mismatch: {self.offset} vs {other.offset}")
        order = min(self.order, other.order)
        return QSeries(
            [self.coeffs[i] + other.coeffs[i] for i in range(order + 1)], self.offset
        )

    def __sub__(self, other: "QSeries") -> "QSeries":
        return self + (-other)

    def __neg__(self) -> "QSeries":
        return QSeries([-c for c in self.coeffs], self.offset)

    def scale(self, scalar: Coefficient) -> "QSeries":
        scalar = Fraction(scalar)
        return QSeries([scalar * c for c in self.coeffs], self.offset)

    def __rmul__(self, scalar: Coefficient) -> "QSeries":
        return self.scale(scalar)

    def __mul__(self, other) -> "QSeries":
        if not isinstance(other, QSeries):
            return self.scale(other)
        order = min(self.order, other.order)
        coeffs = [Fraction(0)] * (order + 1)
        for i, a in enumerate(self.coeffs[: order + 1]):
            if not a:
                continue
            for j in range(order + 1 - i):
                b = other.coeffs[j]
                if b:
                    coeffs[i + j] += a * b
        return QSeries(coeffs, self.offset + other.offset)

    def inverse(self) -> "QSeries":
        """Multiplicative inverse of a series with unit constant term."""
        if not self.coeffs[0]:
            raise ValueError("series with zero constant term has no inverse")
        inv = [1 / self.coeffs[0]]
        for n in range(1, self.order + 1):
            acc = Fraction(0)
            for i in range(1, n + 1):
                acc += self.coeffs[i] * inv[n - i]
            inv.append(-acc / self.coeffs[0])
        return QSeries(inv, -self.offset)

    def to_json(self) -> dict:
        return {
            "offset": str(self.offset),
            "coeffs": [str(c) for c in self.coeffs],
            "order": self.order,
        }

    def __repr__(self) -> str:
        head = ", ".join(str(c) for c in self.coeffs[:6])
        tail = ", ..." if self.order > 5 else ""
        return f"QSeries(q^({self.offset}) * [{head}{tail}]; order {self.order})"


def character(v: HeisenbergState, n_max: int) -> QSeries:
    """Graded trace Z(v, q) = q^(-1/24) sum_n Tr(o(v) on grade n) q^n.

    Traces are accumulated matrix-free: o(v) is applied to each basis
    monomial and the diagonal coefficient read off.
    """
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    o_v = zero_mode(v)
    coeffs = []
    for n in range(n_max + 1):
        trace = Fraction(0)
        for parts in grade_basis(n):
            image = o_v(HeisenbergState.monomial(parts))
            trace += image.coefficient(parts)
        coeffs.append(trace)
    return QSeries(coeffs, Fraction(-1, 24))


def eta_series(n_max: int) -> QSeries:
    """Dedekind eta: q^(1/24) prod_{n>=1} (1 - q^n), by Euler's pentagonal
    number expansion."""
    coeffs = [Fraction(0)] * (n_max + 1)
    coeffs[0] = Fraction(1)
    k = 1
    while k * (3 * k - 1) // 2 <= n_max:
        sign = -1 if k % 2 else 1
        for expo in (k * (3 * k - 1) // 2, k * (3 * k + 1) // 2):
            if expo <= n_max:
                coeffs[expo] += sign
        k += 1
    return QSeries(coeffs, Fraction(1, 24))


def normalized_character(v: HeisenbergState, n_max: int) -> QSeries:
    """The rescaled character f(v) = eta * Z(v, q), landing on integer
    exponents (offset 0)."""
    return eta_series(n_max) * character(v, n_max)


def divisor_power_sum(n: int, k: int) -> int:
    """sigma_k(n) = sum of d^k over divisors d of n."""
    if n < 1:
        raise ValueError("n must be >= 1")
    total = 0
    d = 1
    while d * d <= n:
        if n % d == 0:
            total += d**k
            e = n // d
            if e != d:
                total += e**k
        d += 1
    return total


def coprime_divisor_sum(n: int, p: int) -> int:
    """sigma*(n): sum of the divisors of n coprime to p."""
    return sum(d for d in range(1, n + 1) if n % d == 0 and d % p != 0)


def eisenstein_G(k: int, n_max: int) -> QSeries:
    """Weight-k Eisenstein series G_k = -B_k/2k + sum_n sigma_{k-1}(n) q^n."""
    if k < 2 or k % 2:
        raise ValueError("k must be even and >= 2")
    coeffs = [-bernoulli(k) / (2 * k)]
    coeffs += [Fraction(divisor_power_sum(n, k - 1)) for n in range(1, n_max + 1)]
    return QSeries(coeffs)


def eisenstein_G2_star(p: int, n_max: int) -> QSeries:
    """The p-stabilized weight-2 Eisenstein series

        G_2*(q) = (p-1)/24 + sum_{n>=1} sigma*(n) q^n,

    equal to G_2(q) - p G_2(q^p) and to the p-adic limit of G_k along
    weights k = 2 + p^a (p-1).
    """
    if p == 2 or not is_prime(p):
        raise ValueError("p must be an odd prime")
    coeffs = [Fraction(p - 1, 24)]
    coeffs += [Fraction(coprime_divisor_sum(n, p)) for n in range(1, n_max + 1)]
    return QSeries(coeffs)


def qseries_padic_distance(a: QSeries, b: QSeries, p: int) -> int | float:
    """log_p of the sup-norm distance between two q-expansions with equal
    offsets: max over n of -v_p(a_n - b_n); -inf when they agree."""
    if a.offset != b.offset:
        raise ValueError(f"offset mismatch: {a.offset} vs {b.offset}")
    best: int | float = -inf
    for n in range(min(a.order, b.order) + 1):
        diff = a.coeffs[n] - b.coeffs[n]
        if diff:
            best = max(best, -valuation(diff, p))
    return best
