"""Mode actions on the Fock space: the generator modes h(m), the generic
recursive engine computing v(n)b for arbitrary states, Virasoro modes at
central charge 1, zero modes, residue products, and the translation operator.

The engine expands Y(v, z) = sum_n v(n) z^(-n-1) by peeling the largest
creation part off each monomial of v and applying the associator formula

    (h(-k)u)(n)b = sum_{i>=0} C(k+i-1, i) * h(-k-i) (u(n+i) b)
                 - (-1)^k sum_{i>=0} C(k+i-1, i) * u(n-k-i) (h(i) b),

where C(k+i-1, i) = (-1)^i C(-k, i).  Both sums terminate: u(j)b vanishes
once j >= wt(u) + wt(b) because the grading is nonnegative, and h(i)b
vanishes for i > wt(b).  Every infinite sum is truncated by these proven
grading bounds, never by thresholds, so all results are exact.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Callable

from .fock import HeisenbergState, Partition, _accumulate_terms
from .scalars import gen_binomial

__all__ = [
    "clear_mode_cache",
    "h_mode",
    "mode_action",
    "residue_product_mode",
    "translation",
    "virasoro_mode",
    "zero_mode",
]

_Terms = dict[Partition, Fraction]
_accumulate = _accumulate_terms


def h_mode(m: int, b: HeisenbergState) -> HeisenbergState:
    """Action of the generator mode h(m): multiplication by h(m) for m < 0,
    the derivation m * d/dh(-m) for m > 0, and zero for m = 0 (the rank-1
    algebra has no index-0 generator)."""
    if m == 0 or b.is_zero:
        return HeisenbergState.zero()
    terms: _Terms = {}
    if m < 0:
        part = -m
        for parts, coeff in b._terms.items():
            key = tuple(sorted(parts + (part,), reverse=True))
            total = terms.get(key, 0) + coeff
            if total:
                terms[key] = total
            else:
                del terms[key]
    else:
        for parts, coeff in b._terms.items():
            mult = parts.count(m)
            if mult == 0:
                continue
            reduced = list(parts)
            reduced.remove(m)
            key = tuple(reduced)
            total = terms.get(key, 0) + coeff * m * mult
            if total:
                terms[key] = total
            else:
                del terms[key]
    return HeisenbergState._raw(terms)


_MODE_CACHE: dict[tuple[Partition, int, Partition], HeisenbergState] = {}


def clear_mode_cache() -> None:
    _MODE_CACHE.clear()


def _monomial_mode(pv: Partition, n: int, pb: Partition) -> HeisenbergState:
    """v(n) applied to a basis monomial, for v a basis monomial.

    Cached on the triple (pv, n, pb); cached states are shared and must not
    be mutated by callers.
    """
    key = (pv, n, pb)
    cached = _MODE_CACHE.get(key)
    if cached is not None:
        return cached

    if not pv:
        result = HeisenbergState.monomial(pb) if n == -1 else HeisenbergState.zero()
    elif pv == (1,):
        result = h_mode(n, HeisenbergState.monomial(pb))
    else:
        k = pv[0]
        u = pv[1:]
        wu = sum(u)
        wb = sum(pb)
        acc: _Terms = {}
        for i in range(max(0, wu + wb - n)):
            inner = _monomial_mode(u, n + i, pb)
            if inner:
                _accumulate(acc, h_mode(-k - i, inner), comb(k + i - 1, i))
        outer_sign = -1 if k % 2 else 1
        for i in sorted(set(pb)):
            lowered = h_mode(i, HeisenbergState.monomial(pb))
            for pr, cr in lowered.items():
                inner = _monomial_mode(u, n - k - i, pr)
                if inner:
                    _accumulate(acc, inner, -outer_sign * comb(k + i - 1, i) * cr)
        result = HeisenbergState._raw(acc)

    _MODE_CACHE[key] = result
    return result


def mode_action(v: HeisenbergState, n: int, b: HeisenbergState) -> HeisenbergState:
    """The mode v(n) of Y(v, z) applied to b, extended bilinearly from the
    monomial case.  For homogeneous inputs the result is homogeneous of
    weight wt(v) + wt(b) - n - 1, and vanishes once n >= wt(v) + wt(b)."""
    if v.is_zero or b.is_zero:
        return HeisenbergState.zero()
    acc: _Terms = {}
    for pv, cv in v._terms.items():
        for pb, cb in b._terms.items():
            term = _monomial_mode(pv, n, pb)
            if term:
                _accumulate(acc, term, cv * cb)
    return HeisenbergState._raw(acc)


def virasoro_mode(n: int, b: HeisenbergState) -> HeisenbergState:
    """The Virasoro mode L(n) inside the Heisenberg algebra (central charge 1):
    L(n) = 1/2 sum_j h(j) h(n-j) for n != 0, and L(0) acts on a homogeneous
    state as multiplication by its weight."""
    if b.is_zero:
        return HeisenbergState.zero()
    if n == 0:
        acc: _Terms = {}
        for w, component in b.homogeneous_components().items():
            if w:
                _accumulate(acc, component, w)
        return HeisenbergState._raw(acc)
    parts_seen = {part for parts in b._terms for part in parts}
    candidates = set(range(min(0, n) + 1, max(0, n)))
    candidates |= parts_seen | {n - q for q in parts_seen}
    candidates.discard(0)
    candidates.discard(n)
    acc = {}
    for j in sorted(candidates):
        term = h_mode(j, h_mode(n - j, b))
        if term:
            _accumulate(acc, term, Fraction(1, 2))
    return HeisenbergState._raw(acc)


def zero_mode(v: HeisenbergState) -> Callable[[HeisenbergState], HeisenbergState]:
    """The grade-preserving zero mode o(v): for homogeneous v of weight k this
    is v(k-1), extended linearly over homogeneous components otherwise."""
    components = v.homogeneous_components()

    def apply(b: HeisenbergState) -> HeisenbergState:
        acc: _Terms = {}
        for w, component in components.items():
            _accumulate(acc, mode_action(component, w - 1, b), 1)
        return HeisenbergState._raw(acc)

    return apply


def residue_product_mode(
    a: HeisenbergState, b: HeisenbergState, t: int, n: int, w: HeisenbergState
) -> HeisenbergState:
    """n-th mode of the t-th residue product of the fields of a and b,
    applied to w:

        (a(z)_t b(z))(n) w = sum_{i>=0} (-1)^i C(t, i)
            { a(t-i)(b(n+i)w) - (-1)^t b(t+n-i)(a(i)w) },

    with both sums truncated by the grading bounds.  Agrees exactly with
    mode_action(a(t)b, n, w)."""
    if a.is_zero or b.is_zero or w.is_zero:
        return HeisenbergState.zero()
    ww = w.max_weight()
    first_bound = b.max_weight() + ww - n
    second_bound = a.max_weight() + ww
    t_sign = -1 if t % 2 else 1
    acc: _Terms = {}
    for i in range(max(0, first_bound, second_bound)):
        coeff = (-1 if i % 2 else 1) * gen_binomial(t, i)
        if coeff == 0:
            continue
        if i < first_bound:
            inner = mode_action(b, n + i, w)
            if inner:
                _accumulate(acc, mode_action(a, t - i, inner), coeff)
        if i < second_bound:
            inner = mode_action(a, i, w)
            if inner:
                _accumulate(acc, mode_action(b, t + n - i, inner), -coeff * t_sign)
    return HeisenbergState._raw(acc)


def translation(a: HeisenbergState) -> HeisenbergState:
    """The canonical derivation T(a) = a(-2)|0>, satisfying
    T(a)(n) = -n a(n-1)."""
    return mode_action(a, -2, HeisenbergState.vacuum())
