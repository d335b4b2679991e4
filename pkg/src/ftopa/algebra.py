"""Legal finite totally ordered probability algebras.

An algebra of size ``n`` lives on ``e1 > e2 > ... > en``.  It is fixed by
its set of idempotent indices, which always contains ``1``, ``n-1`` and
``n``; everything else (product, inverse, solution table) follows.
"""
from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from functools import cached_property

from ftopa.ranges import DomainError, PRange


class AlgebraError(ValueError):
    """Invalid algebra parameters or a table that fails the axioms."""


@dataclass(frozen=True)
class AlgebraSpec:
    n: int
    idempotents: tuple[int, ...]

    def __post_init__(self) -> None:
        idem = tuple(sorted(set(self.idempotents)))
        object.__setattr__(self, "idempotents", idem)
        if self.n < 3:
            raise AlgebraError(f"algebra size must be at least 3, got {self.n}")
        bad = [k for k in idem if not 1 <= k <= self.n]
        if bad:
            raise AlgebraError(f"idempotent indices out of range 1..{self.n}: {bad}")
        missing = {1, self.n - 1, self.n} - set(idem)
        if missing:
            raise AlgebraError(
                f"idempotents must include 1, n-1 and n; missing {sorted(missing)}")

    @property
    def short(self) -> str:
        return f"{self.n}:{{{','.join(map(str, self.idempotents))}}}"

    @property
    def line(self) -> str:
        return f"n={self.n}; idempotents={','.join(map(str, self.idempotents))}"

    def __str__(self) -> str:
        return self.short

    @classmethod
    def parse(cls, text: str) -> AlgebraSpec:
        """Accept ``8:{1,5,7,8}`` or ``n=8; idempotents=1,5,7,8``."""
        s = text.strip()
        m = re.fullmatch(r"(\d+)\s*:\s*\{([\d,\s]*)\}", s)
        if m is None:
            m = re.fullmatch(r"n\s*=\s*(\d+)\s*;\s*idempotents\s*=\s*([\d,\s]*)", s)
        if m is None:
            raise AlgebraError(f"cannot parse algebra spec {text!r}")
        return cls(int(m.group(1)), _parse_indices(m.group(2)))


def _parse_indices(text: str) -> tuple[int, ...]:
    parts = [p.strip() for p in text.split(",") if p.strip()]
    try:
        return tuple(int(p) for p in parts)
    except ValueError:
        raise AlgebraError(f"bad index list {text!r}") from None


def parse_idempotents(text: str) -> tuple[int, ...]:
    return _parse_indices(text)


def build_product_table(spec: AlgebraSpec) -> tuple[tuple[int, ...], ...]:
    """Product table (0-based rows/cols holding 1-based results) for ``spec``.

    Either operand idempotent, or operands in different blocks: the smaller
    probability wins.  Both strictly inside the block ``(i_l, i_{l+1}]``:
    ``min(j + k - i_l, i_{l+1})``.
    """
    n, idem = spec.n, spec.idempotents
    # block floor for each index: largest idempotent strictly below it
    floor = [0] * (n + 1)
    for k in range(2, n + 1):
        floor[k] = max(i for i in idem if i < k)
    ceiling = {k: min(i for i in idem if i >= k) for k in range(1, n + 1)}
    idem_set = set(idem)
    rows = []
    for j in range(1, n + 1):
        row = []
        for k in range(1, n + 1):
            if j in idem_set or k in idem_set or floor[j] != floor[k]:
                row.append(max(j, k))
            else:
                base = floor[j]
                row.append(min(j + k - base, ceiling[j]))
        rows.append(tuple(row))
    return tuple(rows)


@dataclass(frozen=True, eq=False)
class Algebra:
    """An immutable legal algebra; build with :func:`make_algebra`."""

    spec: AlgebraSpec
    product_table: tuple[tuple[int, ...], ...]
    _solutions: dict[tuple[int, int], PRange] = field(repr=False)

    @property
    def n(self) -> int:
        return self.spec.n

    @property
    def idempotents(self) -> tuple[int, ...]:
        return self.spec.idempotents

    def _valid(self, *ks: int) -> None:
        for k in ks:
            if not (isinstance(k, int) and 1 <= k <= self.n):
                raise IndexError(f"e{k} is not an element of an algebra of size {self.n}")

    def product(self, p: int, q: int) -> int:
        self._valid(p, q)
        return self.product_table[p - 1][q - 1]

    def inverse(self, p: int) -> int:
        self._valid(p)
        return self.n + 1 - p

    @cached_property
    def inverse_map(self) -> tuple[int, ...]:
        return tuple(self.n + 1 - k for k in range(1, self.n + 1))

    def solve(self, p: int, q: int) -> PRange:
        """All ``r`` with ``q * r = p``; needs ``p <= q`` as probabilities."""
        self._valid(p, q)
        if p < q:
            raise DomainError(f"e{p}/e{q}: numerator above denominator, no solution guaranteed")
        return self._solutions[p, q]

    @property
    def solution_table(self) -> dict[tuple[int, int], PRange]:
        """Cells ``(p, q)`` with ``p <= q`` and ``q`` not the zero element."""
        return {key: r for key, r in self._solutions.items() if key[1] != self.n}

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Algebra) and self.spec == other.spec

    def __hash__(self) -> int:
        return hash(self.spec)

    def __repr__(self) -> str:
        return f"Algebra({self.spec.short})"


def _solutions_by_row(n: int, table) -> dict[tuple[int, int], PRange]:
    # invert each denominator row in one pass, tracking the r-span per product value
    out: dict[tuple[int, int], PRange] = {}
    for q in range(1, n + 1):
        span: dict[int, list[int]] = {}
        for r in range(1, n + 1):
            p = table[q - 1][r - 1]
            lo_hi = span.setdefault(p, [r, r])
            lo_hi[0] = min(lo_hi[0], r)
            lo_hi[1] = max(lo_hi[1], r)
        for p in range(q, n + 1):
            if p not in span:
                raise AlgebraError(f"no solution for e{p}/e{q}")
            top, bottom = span[p]
            out[p, q] = PRange(bottom, top)
    return out


def make_algebra(spec: AlgebraSpec | str) -> Algebra:
    from ftopa.oracle import check_axioms

    if isinstance(spec, str):
        spec = AlgebraSpec.parse(spec)
    table = build_product_table(spec)
    report = check_axioms(spec.n, table)
    if not report.passed:
        raise AlgebraError(f"constructed table for {spec} fails axioms: {report.summary()}")
    found = tuple(k for k in range(1, spec.n + 1) if table[k - 1][k - 1] == k)
    if found != spec.idempotents:
        raise AlgebraError(f"{spec} yields idempotents {found}")
    return Algebra(spec, table, _solutions_by_row(spec.n, table))


def enumerate_algebras(n: int) -> list[AlgebraSpec]:
    """All ``2**(n-3)`` legal specs of size ``n``, lexicographic on the index set."""
    if n < 3:
        raise AlgebraError(f"algebra size must be at least 3, got {n}")
    optional = range(2, n - 1)
    specs = [
        AlgebraSpec(n, tuple(sorted({1, n - 1, n, *chosen})))
        for size in range(len(optional) + 1)
        for chosen in itertools.combinations(optional, size)
    ]
    specs.sort(key=lambda s: s.idempotents)
    return specs


def idempotents_of(alg: Algebra) -> set[int]:
    return {k for k in range(1, alg.n + 1) if alg.product(k, k) == k}
