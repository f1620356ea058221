"""Exact scalar arithmetic: rationals, capped-precision p-adic numbers, and
the combinatorial number sequences (Bernoulli, Stirling, generalized binomial)
that the state and q-series layers consume.

All state and series construction elsewhere in the package happens over exact
`fractions.Fraction` values; `PadicScalar` enters only at reporting boundaries
(norms and congruence checks), which keeps precision bookkeeping out of the
recursive mode engine.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial, inf

__all__ = [
    "DEFAULT_PRECISION",
    "PadicScalar",
    "bernoulli",
    "c_coefficient",
    "gen_binomial",
    "is_prime",
    "padic_reduce",
    "stirling2",
    "valuation",
]

DEFAULT_PRECISION = 16


def is_prime(n: int) -> bool:
    """Trial-division primality test; the primes used here are tiny."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def valuation(q: Fraction | int, p: int) -> int:
    """p-adic valuation v_p(q) of a nonzero rational.

    Raises ValueError on q = 0 (the valuation of zero is +infinity and is
    handled by callers, never by a sentinel integer).
    """
    if q == 0:
        raise ValueError("valuation of zero is infinite")
    num = q.numerator if isinstance(q, Fraction) else q
    den = q.denominator if isinstance(q, Fraction) else 1
    v = 0
    while num % p == 0:
        num //= p
        v += 1
    while den % p == 0:
        den //= p
        v -= 1
    return v


@dataclass(frozen=True)
class PadicScalar:
    """A p-adic number at capped relative precision.

    Represents x = p^valuation * unit with unit known modulo p^precision,
    i.e. x is known modulo p^(valuation + precision).  The norm is
    |x| = p^(-valuation).  Zero is the distinguished element with
    valuation = +inf and unit = 0.
    """

    prime: int
    valuation: int | float
    unit: int
    precision: int

    def __post_init__(self) -> None:
        if not is_prime(self.prime):
            raise ValueError(f"prime required, got {self.prime}")
        if self.precision < 1:
            raise ValueError("precision must be >= 1")
        if self.valuation == inf:
            if self.unit != 0:
                raise ValueError("zero element must have unit 0")
        else:
            modulus = self.prime**self.precision
            if not (1 <= self.unit < modulus) or self.unit % self.prime == 0:
                raise ValueError("unit must lie in [1, p^N) and be coprime to p")

    @classmethod
    def zero(cls, p: int, precision: int = DEFAULT_PRECISION) -> "PadicScalar":
        return cls(p, inf, 0, precision)

    @property
    def is_zero(self) -> bool:
        return self.valuation == inf

    @property
    def norm_exponent(self) -> int | float:
        """log_p of the norm: -valuation, -inf for zero."""
        return -self.valuation

    def lift(self) -> Fraction:
        """The canonical rational representative p^v * unit."""
        if self.is_zero:
            return Fraction(0)
        v = int(self.valuation)
        if v >= 0:
            return Fraction(self.unit * self.prime**v)
        return Fraction(self.unit, self.prime**-v)

    def _check_compatible(self, other: "PadicScalar") -> None:
        if self.prime != other.prime or self.precision != other.precision:
            raise ValueError("operands must share prime and precision")

    def __neg__(self) -> "PadicScalar":
        if self.is_zero:
            return self
        modulus = self.prime**self.precision
        return PadicScalar(self.prime, self.valuation, modulus - self.unit, self.precision)

    def __add__(self, other: "PadicScalar") -> "PadicScalar":
        self._check_compatible(other)
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        v = min(int(self.valuation), int(other.valuation))
        modulus = self.prime**self.precision
        total = self.unit * self.prime ** (int(self.valuation) - v) + other.unit * self.prime ** (
            int(other.valuation) - v
        )
        if total % modulus == 0:
            # All digits known at this precision cancelled.
            return PadicScalar.zero(self.prime, self.precision)
        shift = 0
        while total % self.prime == 0:
            total //= self.prime
            shift += 1
        return PadicScalar(self.prime, v + shift, total % modulus, self.precision)

    def __sub__(self, other: "PadicScalar") -> "PadicScalar":
        return self + (-other)

    def __mul__(self, other: "PadicScalar") -> "PadicScalar":
        self._check_compatible(other)
        if self.is_zero or other.is_zero:
            return PadicScalar.zero(self.prime, self.precision)
        modulus = self.prime**self.precision
        return PadicScalar(
            self.prime,
            int(self.valuation) + int(other.valuation),
            (self.unit * other.unit) % modulus,
            self.precision,
        )

    def __repr__(self) -> str:
        if self.is_zero:
            return f"PadicScalar(0; p={self.prime}, N={self.precision})"
        return (
            f"PadicScalar({self.prime}^{self.valuation} * {self.unit}"
            f" mod {self.prime}^{self.valuation + self.precision})"
        )


def padic_reduce(q: Fraction | int, p: int, precision: int = DEFAULT_PRECISION) -> PadicScalar:
    """Capped-precision image of a rational in Q_p.

    The valuation is v_p(numerator) - v_p(denominator) and the unit part is
    the residue of the prime-to-p part modulo p^precision.  Integers x with
    0 <= x < p^precision round-trip exactly through `lift`.
    """
    if not is_prime(p):
        raise ValueError(f"prime required, got {p}")
    if precision < 1:
        raise ValueError("precision must be >= 1")
    q = Fraction(q)
    if q == 0:
        return PadicScalar.zero(p, precision)
    num, den = q.numerator, q.denominator
    v = 0
    while num % p == 0:
        num //= p
        v += 1
    while den % p == 0:
        den //= p
        v -= 1
    modulus = p**precision
    unit = (num * pow(den, -1, modulus)) % modulus
    return PadicScalar(p, v, unit, precision)


_BERNOULLI: list[Fraction] = [Fraction(1)]


def bernoulli(k: int) -> Fraction:
    """k-th Bernoulli number, from the defining series z/(e^z - 1).

    Computed by the equivalent recurrence sum_{j=0}^{k} C(k+1, j) B_j = 0
    (k >= 1) with memoization, so B_1 = -1/2 and B_k = 0 for odd k >= 3.
    """
    if k < 0:
        raise ValueError("k must be >= 0")
    while len(_BERNOULLI) <= k:
        m = len(_BERNOULLI)
        acc = Fraction(0)
        for j in range(m):
            if _BERNOULLI[j]:
                acc += comb(m + 1, j) * _BERNOULLI[j]
        _BERNOULLI.append(-acc / (m + 1))
    return _BERNOULLI[k]


_STIRLING: dict[tuple[int, int], int] = {}


def stirling2(n: int, k: int) -> int:
    """Stirling number of the second kind S(n, k), by the triangle recurrence."""
    if n < 0 or k < 0:
        raise ValueError("indices must be nonnegative")
    if n == k:
        return 1
    if k == 0 or k > n:
        return 0
    key = (n, k)
    cached = _STIRLING.get(key)
    if cached is None:
        cached = k * stirling2(n - 1, k) + stirling2(n - 1, k - 1)
        _STIRLING[key] = cached
    return cached


def c_coefficient(r: int, m: int) -> int:
    """The torus-to-sphere change-of-basis integer

        c(r, m) = sum_{j=0}^{m} (-1)^(m+j) C(m, j) (j+1)^(r-1),

    equal to m! * S(r, m+1); in particular c(r, m) = 0 for m >= r and
    c(r, r-1) = (r-1)!.
    """
    if r < 1:
        raise ValueError("r must be >= 1")
    if m < 0:
        raise ValueError("m must be >= 0")
    total = 0
    for j in range(m + 1):
        term = comb(m, j) * (j + 1) ** (r - 1)
        total += term if (m + j) % 2 == 0 else -term
    return total


def gen_binomial(t: int, i: int) -> int:
    """Binomial coefficient C(t, i) for arbitrary integer upper index t.

    C(t, i) = t(t-1)...(t-i+1) / i!, so C(-1, i) = (-1)^i and more generally
    C(t, i) = (-1)^i C(-t+i-1, i) for t < 0.
    """
    if i < 0:
        raise ValueError("lower index must be >= 0")
    num = 1
    for j in range(i):
        num *= t - j
    return num // factorial(i)
