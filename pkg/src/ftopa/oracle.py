"""Brute-force ground truth: axiom checking, set-semantics division and
exhaustive search over every candidate product table.

Nothing here uses the closed-form construction in :mod:`ftopa.algebra`;
tables are plain nested sequences with ``table[j-1][k-1] = index(e_j * e_k)``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from ftopa.ranges import DomainError, PRange

Table = Sequence[Sequence[int]]

MAX_SEARCH_N = 7

AXIOMS = {
    1: "closed and order preserving",
    2: "commutative",
    3: "associative",
    4: "product below both operands",
    5: "no non-trivial zero",
    6: "solutions exist",
    7: "bounded by 0 and 1",
    8: "unit law",
    9: "inverse strictly decreasing",
    10: "inverse involutive",
}


@dataclass
class AxiomReport:
    n: int
    counterexamples: dict[int, tuple | None] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(v is None for v in self.counterexamples.values())

    def failed(self) -> list[int]:
        return [k for k, v in sorted(self.counterexamples.items()) if v is not None]

    def summary(self) -> str:
        if self.passed:
            return "all 10 conditions hold"
        return "; ".join(f"cond {k} ({AXIOMS[k]}) fails at {self.counterexamples[k]}"
                         for k in self.failed())


def _first(gen):
    return next(gen, None)


def check_axioms(n: int, table: Table, inverse: Sequence[int] | None = None) -> AxiomReport:
    """Exhaustively test all ten conditions on a candidate table.

    ``inverse`` defaults to ``e_k -> e_{n+1-k}``, the only possible choice.
    Counterexamples are index tuples.
    """
    if len(table) != n or any(len(row) != n for row in table):
        raise ValueError(f"table must be {n}x{n}")
    if inverse is None:
        inverse = [n + 1 - k for k in range(1, n + 1)]
    if len(inverse) != n:
        raise ValueError(f"inverse map must have length {n}")

    P = range(1, n + 1)

    def t(a: int, b: int) -> int:
        return table[a - 1][b - 1]

    def inv(a: int) -> int:
        return inverse[a - 1]

    closed = all(1 <= t(a, b) <= n for a in P for b in P)
    rep = AxiomReport(n)
    if not closed:
        bad = _first((a, b) for a in P for b in P if not 1 <= t(a, b) <= n)
        rep.counterexamples = {k: None for k in AXIOMS}
        rep.counterexamples[1] = bad
        rep.counterexamples[7] = bad
        # remaining conditions are meaningless on an open table
        return rep

    # larger index = smaller probability, so order preservation means
    # a >= a' (index) implies t(a, b) >= t(a', b)
    rep.counterexamples[1] = _first(
        (a, a2, b) for a in P for a2 in P if a >= a2 for b in P
        if t(a, b) < t(a2, b) or t(b, a) < t(b, a2))
    rep.counterexamples[2] = _first(
        (a, b) for a in P for b in P if t(a, b) != t(b, a))
    rep.counterexamples[3] = _first(
        (a, b, c) for a in P for b in P for c in P
        if t(t(a, b), c) != t(a, t(b, c)))
    rep.counterexamples[4] = _first(
        (a, b) for a in P for b in P if t(a, b) < max(a, b))
    rep.counterexamples[5] = _first(
        (a, b) for a in P for b in P if t(a, b) == n and a != n and b != n)
    rep.counterexamples[6] = _first(
        (p, q) for q in P for p in P if p >= q
        and not any(t(r, q) == p for r in P))
    rep.counterexamples[7] = None
    rep.counterexamples[8] = _first((a,) for a in P if t(a, 1) != a)
    inv_ok = all(1 <= inv(a) <= n for a in P)
    rep.counterexamples[9] = _first(
        (a, b) for a in P for b in P if a > b and not (inv_ok and inv(a) < inv(b)))
    rep.counterexamples[10] = _first(
        (a,) for a in P if not inv_ok or inverse[inv(a) - 1] != a)
    return rep


def brute_solve(n: int, table: Table, p: int, q: int) -> PRange:
    """The set ``{r : q * r = p}`` as a range; checks it is nonempty and contiguous."""
    if not (1 <= p <= n and 1 <= q <= n):
        raise IndexError(f"e{p}/e{q} outside size {n}")
    if p < q:
        raise DomainError(f"e{p}/e{q}: numerator above denominator")
    sols = [r for r in range(1, n + 1) if table[q - 1][r - 1] == p]
    if not sols:
        raise AssertionError(f"e{p}/e{q} has no solution; table is not legal")
    if sols != list(range(sols[0], sols[-1] + 1)):
        raise AssertionError(f"e{p}/e{q} solution set {sols} is not contiguous")
    return PRange(sols[-1], sols[0])


def exhaustive_search(n: int) -> list[tuple[tuple[int, ...], ...]]:
    """Every product table on ``n`` elements that passes :func:`check_axioms`.

    Row/column of ``e1`` (unit) and ``en`` (absorbing zero) are fixed; the
    remaining upper-triangle cells are filled row by row under monotonicity
    and the bound ``max(j, k) <= e_j*e_k <= n-1`` (no non-trivial zero), with
    associativity checked on every partial assignment.
    """
    if n < 3:
        raise ValueError(f"size must be at least 3, got {n}")
    if n > MAX_SEARCH_N:
        raise ValueError(
            f"exhaustive search is limited to n <= {MAX_SEARCH_N} "
            f"(the search space grows too quickly beyond that); got {n}")

    t = [[0] * (n + 1) for _ in range(n + 1)]  # 1-based, 0 = unassigned
    for a in range(1, n + 1):
        t[1][a] = t[a][1] = a
        t[n][a] = t[a][n] = n
    inner = range(2, n)
    cells = [(i, j) for i in inner for j in inner if i <= j]
    found: list[tuple[tuple[int, ...], ...]] = []

    def associative_so_far() -> bool:
        for x in inner:
            for y in inner:
                xy = t[x][y]
                if not xy:
                    continue
                for z in inner:
                    yz = t[y][z]
                    if not yz:
                        continue
                    left, right = t[xy][z], t[x][yz]
                    if left and right and left != right:
                        return False
        return True

    def extend(pos: int) -> None:
        if pos == len(cells):
            table = tuple(tuple(t[a][1:]) for a in range(1, n + 1))
            if check_axioms(n, table).passed:
                found.append(table)
            return
        i, j = cells[pos]
        lo = max(j, t[i - 1][j], t[i][j - 1])
        for v in range(lo, n):
            t[i][j] = t[j][i] = v
            if associative_so_far():
                extend(pos + 1)
        t[i][j] = t[j][i] = 0

    extend(0)
    found.sort()
    return found


def idempotents_of_table(table: Table) -> set[int]:
    return {k for k in range(1, len(table) + 1) if table[k - 1][k - 1] == k}


def verify_theorem1(n: int) -> bool:
    """Exhaustive search and the idempotent-set construction agree, with 2**(n-3) algebras."""
    from ftopa.algebra import enumerate_algebras, make_algebra

    searched = set(exhaustive_search(n))
    built = {make_algebra(s).product_table for s in enumerate_algebras(n)}
    return searched == built and len(searched) == 2 ** (n - 3)
