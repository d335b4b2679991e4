"""Probability ranges and the interval arithmetic built on an algebra.

Values are plain 1-based indices: ``e1`` is certainty, ``en`` impossibility,
so a *larger* index is a *smaller* probability.  A range ``[el,eu]`` keeps
its lower bound (largest index) first, matching the way the tables print.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import TYPE_CHECKING, Iterator

if TYPE_CHECKING:
    from ftopa.algebra import Algebra


class DomainError(ValueError):
    """Raised when a division is requested outside its guaranteed domain."""


@dataclass(frozen=True, order=False)
class PRange:
    """Contiguous set of probability values ``{v : lower <= v <= upper}``.

    ``lower`` and ``upper`` are indices, so ``lower >= upper`` numerically.
    """

    lower: int
    upper: int

    def __post_init__(self) -> None:
        if self.upper < 1:
            raise ValueError(f"index must be >= 1, got e{self.upper}")
        if self.lower < self.upper:
            raise ValueError(
                f"lower bound e{self.lower} is above upper bound e{self.upper}")

    @classmethod
    def point(cls, k: int) -> PRange:
        return cls(k, k)

    @property
    def is_singleton(self) -> bool:
        return self.lower == self.upper

    @property
    def width(self) -> int:
        """Number of probability values covered."""
        return self.lower - self.upper + 1

    def __iter__(self) -> Iterator[int]:
        return iter(range(self.upper, self.lower + 1))

    def __contains__(self, k: object) -> bool:
        return isinstance(k, int) and self.upper <= k <= self.lower

    def issubset(self, other: PRange) -> bool:
        return other.upper <= self.upper and self.lower <= other.lower

    def __str__(self) -> str:
        return format_belief(self)


_LITERAL = re.compile(r"^\s*(?:e(\d+)|\[\s*e(\d+)\s*,\s*e(\d+)\s*\])\s*$")


def format_belief(r: PRange) -> str:
    if r.is_singleton:
        return f"e{r.lower}"
    return f"[e{r.lower},e{r.upper}]"


def parse_belief(text: str) -> PRange:
    """Parse ``e<k>`` or ``[e<l>,e<u>]`` (lower bound first)."""
    m = _LITERAL.match(text)
    if m is None:
        raise ValueError(f"not a belief literal: {text!r}")
    if m.group(1) is not None:
        return PRange.point(int(m.group(1)))
    return PRange(int(m.group(2)), int(m.group(3)))


def hull(indices) -> PRange:
    """Smallest range containing every index of a nonempty iterable."""
    ks = list(indices)
    if not ks:
        raise ValueError("hull of an empty set")
    return PRange(max(ks), min(ks))


def _check(alg: Algebra, r: PRange) -> None:
    if r.lower > alg.n:
        raise ValueError(f"e{r.lower} is outside an algebra of size {alg.n}")


def range_product(alg: Algebra, a: PRange, b: PRange) -> PRange:
    """Endpoint-wise product; equals the pointwise image because ``*`` is monotone."""
    _check(alg, a)
    _check(alg, b)
    return PRange(alg.product(a.lower, b.lower), alg.product(a.upper, b.upper))


def range_solve(alg: Algebra, num: PRange, den: PRange) -> PRange:
    """Solve ``num / den`` over ranges.

    Requires ``lower(num) <= upper(den)`` in probability order.  When the
    numerator's top exceeds the denominator's bottom the two ranges overlap
    and certainty itself becomes a solution.
    """
    _check(alg, num)
    _check(alg, den)
    a, b = num.lower, num.upper
    c, d = den.lower, den.upper
    if a < d:
        raise DomainError(f"{format_belief(num)} / {format_belief(den)}: "
                          f"numerator bottom e{a} exceeds denominator top e{d}")
    low = alg.solve(a, d).lower
    if b >= c:
        return PRange(low, alg.solve(b, c).upper)
    return PRange(low, 1)


def range_inverse(alg: Algebra, r: PRange) -> PRange:
    _check(alg, r)
    return PRange(alg.inverse(r.upper), alg.inverse(r.lower))
