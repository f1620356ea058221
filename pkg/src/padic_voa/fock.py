"""The rank-1 bosonic Fock space: a polynomial ring in the creation variables
h(-1), h(-2), ..., graded by total degree with deg h(-n) = n.

Basis monomials are indexed by integer partitions written as weakly
decreasing tuples of positive parts; the empty partition is the vacuum.  A
state is a finite rational linear combination of monomials.  The family of
norms |.|_r with r = p^e restricted to the value group of Q_p is carried on
the exponent scale: sup over terms of (-v_p(coefficient) + e * weight).
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import inf
from typing import Iterable, Iterator, Mapping

from .scalars import valuation

__all__ = [
    "HeisenbergState",
    "Partition",
    "grade_basis",
    "partition_count",
    "partitions_of",
]

Partition = tuple[int, ...]

Coefficient = Fraction | int


@lru_cache(maxsize=None)
def partitions_of(n: int, min_part: int = 1) -> tuple[Partition, ...]:
    """All partitions of n into parts >= min_part, in lexicographic order."""
    if n < 0:
        raise ValueError("n must be >= 0")

    def gen(remaining: int, cap: int) -> Iterator[Partition]:
        if remaining == 0:
            yield ()
            return
        for first in range(min(cap, remaining), min_part - 1, -1):
            for rest in gen(remaining - first, first):
                yield (first, *rest)

    return tuple(sorted(gen(n, n)))


def grade_basis(n: int) -> tuple[Partition, ...]:
    """Monomial basis of the degree-n graded piece; its length is p(n)."""
    return partitions_of(n)


def partition_count(n: int) -> int:
    return len(partitions_of(n))


def _normalize_terms(terms: Mapping[Partition, Coefficient] | Iterable[tuple[Partition, Coefficient]]) -> dict[Partition, Fraction]:
    items = terms.items() if hasattr(terms, "items") else terms
    out: dict[Partition, Fraction] = {}
    for parts, coeff in items:
        if not isinstance(coeff, Fraction):
            coeff = Fraction(coeff)
        if coeff:
            out[tuple(parts)] = coeff
    return out


def _accumulate_terms(
    acc: dict[Partition, Fraction], state: "HeisenbergState", scalar: Fraction | int
) -> None:
    """acc += scalar * state, dropping entries that cancel to zero."""
    for parts, coeff in state._terms.items():
        total = acc.get(parts, 0) + scalar * coeff
        if total:
            acc[parts] = total
        else:
            acc.pop(parts, None)


class HeisenbergState:
    """A finite rational linear combination of Fock monomials.

    Instances are treated as immutable values: all arithmetic returns fresh
    states.  An optional `grade_cutoff` marks a truncation of an element of
    the sup-norm completion; when set, every stored partition has weight at
    most the cutoff.
    """

    __slots__ = ("_terms", "grade_cutoff")

    def __init__(
        self,
        terms: Mapping[Partition, Coefficient] | Iterable[tuple[Partition, Coefficient]] = (),
        *,
        grade_cutoff: int | None = None,
    ) -> None:
        self._terms = _normalize_terms(terms)
        if grade_cutoff is not None:
            bad = [p for p in self._terms if sum(p) > grade_cutoff]
            if bad:
                raise ValueError(f"terms above grade cutoff {grade_cutoff}: {bad}")
        self.grade_cutoff = grade_cutoff

    @classmethod
    def _raw(cls, terms: dict[Partition, Fraction]) -> "HeisenbergState":
        """Trusted constructor for canonical internal term dicts (sorted
        tuple keys, nonzero Fraction values); skips normalization."""
        state = object.__new__(cls)
        state._terms = terms
        state.grade_cutoff = None
        return state

    @classmethod
    def zero(cls) -> "HeisenbergState":
        return cls()

    @classmethod
    def vacuum(cls, coeff: Coefficient = 1) -> "HeisenbergState":
        return cls({(): Fraction(coeff)})

    @classmethod
    def monomial(cls, parts: Iterable[int], coeff: Coefficient = 1) -> "HeisenbergState":
        """The monomial with the given creation parts (any order), e.g.
        monomial([2, 1]) is h(-2)h(-1)|0>."""
        key = tuple(sorted(parts, reverse=True))
        if any(p < 1 for p in key):
            raise ValueError("parts must be positive integers")
        return cls({key: Fraction(coeff)})

    def items(self) -> list[tuple[Partition, Fraction]]:
        """Terms in a deterministic (weight, partition) order."""
        return sorted(self._terms.items(), key=lambda kv: (sum(kv[0]), kv[0]))

    def coefficient(self, parts: Iterable[int]) -> Fraction:
        return self._terms.get(tuple(sorted(parts, reverse=True)), Fraction(0))

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, HeisenbergState):
            return NotImplemented
        return self._terms == other._terms

    def __add__(self, other: "HeisenbergState") -> "HeisenbergState":
        if not isinstance(other, HeisenbergState):
            return NotImplemented
        merged = dict(self._terms)
        for parts, coeff in other._terms.items():
            acc = merged.get(parts, 0) + coeff
            if acc:
                merged[parts] = acc
            else:
                merged.pop(parts, None)
        return HeisenbergState._raw(merged)

    def __sub__(self, other: "HeisenbergState") -> "HeisenbergState":
        if not isinstance(other, HeisenbergState):
            return NotImplemented
        merged = dict(self._terms)
        for parts, coeff in other._terms.items():
            acc = merged.get(parts, 0) - coeff
            if acc:
                merged[parts] = acc
            else:
                merged.pop(parts, None)
        return HeisenbergState._raw(merged)

    def __neg__(self) -> "HeisenbergState":
        return HeisenbergState._raw({p: -c for p, c in self._terms.items()})

    def scale(self, scalar: Coefficient) -> "HeisenbergState":
        if not isinstance(scalar, Fraction):
            scalar = Fraction(scalar)
        if not scalar:
            return HeisenbergState()
        return HeisenbergState._raw({p: scalar * c for p, c in self._terms.items()})

    def __rmul__(self, scalar: Coefficient) -> "HeisenbergState":
        return self.scale(scalar)

    def __mul__(self, scalar: Coefficient) -> "HeisenbergState":
        return self.scale(scalar)

    def weight(self) -> int:
        """L(0)-weight of a homogeneous nonzero state."""
        weights = {sum(p) for p in self._terms}
        if not weights:
            raise ValueError("zero state has no weight")
        if len(weights) > 1:
            raise ValueError(f"state is inhomogeneous, weights {sorted(weights)}")
        return weights.pop()

    def max_weight(self) -> int:
        """Largest monomial weight present; 0 for the zero state."""
        return max((sum(p) for p in self._terms), default=0)

    def is_homogeneous(self) -> bool:
        return len({sum(p) for p in self._terms}) <= 1

    def homogeneous_components(self) -> dict[int, "HeisenbergState"]:
        buckets: dict[int, dict[Partition, Fraction]] = {}
        for parts, coeff in self._terms.items():
            buckets.setdefault(sum(parts), {})[parts] = coeff
        return {w: HeisenbergState(t) for w, t in sorted(buckets.items())}

    def truncated(self, cutoff: int) -> "HeisenbergState":
        """Drop all terms of weight above the cutoff and mark the result as a
        truncation of a completion element."""
        kept = {p: c for p, c in self._terms.items() if sum(p) <= cutoff}
        return HeisenbergState(kept, grade_cutoff=cutoff)

    def sup_norm_exponent(self, p: int) -> int | float:
        """log_p of the sup-norm |.|_1: max over terms of -v_p(coefficient);
        -inf for the zero state."""
        return self.r_norm_exponent(p, 0)

    def r_norm_exponent(self, p: int, e: int) -> int | float:
        """log_p of |.|_r at r = p^e: max over terms of
        (-v_p(coefficient) + e * weight)."""
        if not self._terms:
            return -inf
        return max(-valuation(c, p) + e * sum(parts) for parts, c in self._terms.items())

    def render(self, vacuum: str = "|0>") -> str:
        """Canonical text form, e.g. '1/2 h(-2)^2 h(-1) |0> - 1/12 |0>'."""
        if not self._terms:
            return "0"
        chunks: list[str] = []
        for parts, coeff in self.items():
            factors = []
            seen: dict[int, int] = {}
            for part in parts:
                seen[part] = seen.get(part, 0) + 1
            for part in sorted(seen, reverse=True):
                exp = seen[part]
                factors.append(f"h(-{part})" + (f"^{exp}" if exp > 1 else ""))
            factors.append(vacuum)
            magnitude = abs(coeff)
            body = (f"{magnitude} " if magnitude != 1 or not parts else "") + " ".join(factors)
            if not chunks:
                chunks.append(body if coeff > 0 else f"-{body}")
            else:
                chunks.append(("+ " if coeff > 0 else "- ") + body)
        return " ".join(chunks)

    def __repr__(self) -> str:
        return f"HeisenbergState({self.render()})"
