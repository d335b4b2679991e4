"""Text renderings: product/solution tables and the smoke/alarm experiment."""
from __future__ import annotations

from dataclasses import dataclass, field

from ftopa.algebra import Algebra, AlgebraSpec, enumerate_algebras, make_algebra
from ftopa.inference import (ABDUCTIVE, QUERY_LABELS, FtopaCalculus, KnowledgeBase,
                             QueryError, QueryReport, RealCalculus, run_smoke_alarm)
from ftopa.ranges import PRange, format_belief


def render_tables(alg: Algebra) -> str:
    """Product table, blank line, solution table (rows ``q``, columns ``p``)."""
    n = alg.n
    head = [f"e{k}" for k in range(1, n + 1)]
    lines = ["*\t" + "\t".join(head)]
    for j in range(1, n + 1):
        lines.append(f"e{j}\t" + "\t".join(f"e{alg.product(j, k)}" for k in range(1, n + 1)))
    lines.append("")
    lines.append("q\\p\t" + "\t".join(head))
    for q in range(1, n):
        cells = ["" if p < q else format_belief(alg.solve(p, q)) for p in range(1, n + 1)]
        lines.append(f"e{q}\t" + "\t".join(cells))
    return "\n".join(lines) + "\n"


CLASS_DESCRIPTIONS = {
    "a": "p(f|s), p(f|a), p(f|s&a) identical singleton",
    "b": "p(f|s), p(f|a), p(f|s&a) identical non-singleton range",
    "c": "other",
}


def classify(report: QueryReport) -> str:
    fire = (report.f_s, report.f_a, report.f_sa)
    if any(not isinstance(v, PRange) for v in fire) or len(set(fire)) != 1:
        return "c"
    return "a" if fire[0].is_singleton else "b"


@dataclass
class ExperimentReport:
    n: int
    rows: list[tuple[AlgebraSpec, QueryReport, str]]
    real: QueryReport
    counts: dict[str, int] = field(default_factory=dict)

    def members(self, cls: str) -> list[AlgebraSpec]:
        return [spec for spec, _, c in self.rows if c == cls]


def run_experiment(n: int, kb: KnowledgeBase) -> ExperimentReport:
    if kb.max_index > n:
        raise ValueError(f"knowledge base uses e{kb.max_index}, too large for size {n}")
    rows = []
    for spec in enumerate_algebras(n):
        rep = run_smoke_alarm(FtopaCalculus(make_algebra(spec)), kb)
        rows.append((spec, rep, classify(rep)))
    counts = {c: sum(1 for *_, k in rows if k == c) for c in "abc"}
    return ExperimentReport(n, rows, run_smoke_alarm(RealCalculus(), kb), counts)


def _cell(value, calc_render) -> str:
    if isinstance(value, QueryError):
        return "ERR"
    return calc_render(value)


def experiment_tsv(rep: ExperimentReport) -> str:
    head = ["model"] + list(QUERY_LABELS.values()) + ["class"]
    lines = ["\t".join(head)]
    for spec, qr, cls in rep.rows:
        cells = [_cell(v, format_belief) for _, v in qr.items()]
        lines.append("\t".join([spec.short, *cells, cls]))
    real = [_cell(v, lambda x: f"{x:.6f}") for _, v in rep.real.items()]
    lines.append("\t".join(["real", *real, "-"]))
    return "\n".join(lines) + "\n"


def experiment_text(rep: ExperimentReport, reference_f_a: float = 0.37) -> str:
    """Aligned human view with classification summary and membership."""
    head = ["model"] + list(QUERY_LABELS.values()) + ["class"]
    body = []
    for spec, qr, cls in rep.rows:
        body.append([spec.short, *(str(v) if isinstance(v, QueryError) else format_belief(v)
                                   for _, v in qr.items()), cls])
    body.append(["real", *(f"{v:.4f}" if isinstance(v, float) else str(v)
                           for _, v in rep.real.items()), "-"])
    widths = [max(len(r[i]) for r in [head, *body]) for i in range(len(head))]
    fmt = lambda r: "  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip()
    out = [fmt(head), fmt(["-" * w for w in widths]), *map(fmt, body), ""]
    out.append("case order for p(a): ~f&~t, ~f&t, f&~t, f&t; two-case splits lead with the negated case")
    out.append(f"abductive queries: {', '.join(QUERY_LABELS[k] for k in ABDUCTIVE)}")
    out.append("")
    total = len(rep.rows)
    for cls, desc in CLASS_DESCRIPTIONS.items():
        out.append(f"class {cls}: {rep.counts[cls]:3d} / {total}  ({desc})")
        out.append(("    " + " ".join(s.short for s in rep.members(cls))).rstrip())
    errors = sum(1 for _, qr, _ in rep.rows for _, v in qr.items() if isinstance(v, QueryError))
    out.append(f"undefined query results: {errors}")
    f_a = rep.real.f_a
    if isinstance(f_a, float) and abs(f_a - reference_f_a) > 0.01:
        out.append(f"note: real p(f|a) = {f_a:.4f} from these entries only; "
                   f"the full prior set gives {reference_f_a}")
    return "\n".join(out) + "\n"
