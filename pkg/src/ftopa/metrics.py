"""Pathology measures of an algebra, counted directly from its tables."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ftopa.algebra import Algebra, AlgebraSpec, enumerate_algebras, make_algebra
from ftopa.ranges import PRange


@dataclass(frozen=True)
class MetricsRecord:
    A: int
    M: int
    R: Fraction
    O_d: int
    O_m: int

    def check_identities(self, n: int) -> list[str]:
        """Return the closed-form identities this record violates (empty if none)."""
        problems = []
        if self.A != (n - 1) * (n - 2) // 2:
            problems.append(f"A={self.A} != (n-1)(n-2)/2")
        if self.R != Fraction(n - 2, n + 2):
            problems.append(f"R={self.R} != (n-2)/(n+2)")
        if self.O_d + self.O_m != (n - 2) * (n - 3) // 2:
            problems.append(f"O_d+O_m={self.O_d + self.O_m} != (n-2)(n-3)/2")
        return problems


def ambiguity_amount(alg: Algebra) -> int:
    """Sum of ``width - 1`` over the solution table (zero denominator excluded)."""
    return sum(r.width - 1 for r in alg.solution_table.values())


def solution_cell_count(alg: Algebra) -> int:
    return len(alg.solution_table)


def relative_ambiguity(alg: Algebra) -> Fraction:
    return Fraction(ambiguity_amount(alg), solution_cell_count(alg))


def denominator_indifference(alg: Algebra) -> int:
    # only a singleton answer equal to the numerator counts; ranges never do
    total = 0
    for j in range(2, alg.n):
        d_j = sum(1 for k in range(1, j + 1) if alg.solve(j, k) == PRange.point(j))
        total += d_j - 1
    return total


def mobility(alg: Algebra) -> int:
    """Unordered pairs ``{a, b}`` (``a == b`` allowed) whose product drops below both."""
    n = alg.n
    return sum(1 for a in range(1, n + 1) for b in range(a, n + 1)
               if alg.product(a, b) > max(a, b))


def denominator_indifference_closed_form(idempotents) -> int:
    i = sorted(idempotents)
    k = len(i)
    # 1-based i_m in the formula becomes i[m - 1]
    return sum((i[m - 1] - 1) * (i[m] - i[m - 1]) for m in range(2, k - 1))


def mobility_closed_form(idempotents) -> int:
    i = sorted(idempotents)
    return sum(gap * (gap - 1) // 2
               for gap in (b - a for a, b in zip(i[:-2], i[1:-1])))


def metrics(alg: Algebra) -> MetricsRecord:
    A = ambiguity_amount(alg)
    M = solution_cell_count(alg)
    return MetricsRecord(A, M, Fraction(A, M), denominator_indifference(alg), mobility(alg))


def metrics_report(n: int) -> list[tuple[AlgebraSpec, MetricsRecord]]:
    return [(spec, metrics(make_algebra(spec))) for spec in enumerate_algebras(n)]


TSV_HEADER = "n\tidempotents\tA\tM\tR\tO_d\tO_m"


def format_row(spec: AlgebraSpec, rec: MetricsRecord) -> str:
    idem = ",".join(map(str, spec.idempotents))
    R = f"{rec.R.numerator}/{rec.R.denominator}"
    return f"{spec.n}\t{idem}\t{rec.A}\t{rec.M}\t{R}\t{rec.O_d}\t{rec.O_m}"
