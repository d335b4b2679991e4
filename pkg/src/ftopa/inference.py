"""Bayes' theorem and reasoning by cases over a pluggable belief calculus,
plus the four-node smoke/alarm network (fire, tampering -> smoke, alarm).

Two calculi are provided: ranges over a finite algebra, and ordinary reals
in [0, 1].  Reasoning by cases has no ``+`` to lean on, so a sum of case
terms ``t_1 .. t_M`` is encoded with inverse and division::

    f_1 = i[t_1]
    f_m = i[t_m / (f_1 * ... * f_{m-1})]
    sum = i[f_1 * ... * f_M]

On reals this telescopes to ``t_1 + ... + t_M``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, fields
from functools import cached_property
from importlib import resources
from pathlib import Path
from typing import Any, Sequence

from ftopa.algebra import Algebra
from ftopa.ranges import (DomainError, PRange, format_belief, range_inverse,
                          range_product, range_solve)

REAL_TOL = 1e-12


class BeliefCalculus:
    """prod / inv / div over some belief carrier."""

    name = "abstract"

    @property
    def unit(self) -> Any:
        raise NotImplementedError

    @property
    def zero(self) -> Any:
        raise NotImplementedError

    def prod(self, x, y):
        raise NotImplementedError

    def inv(self, x):
        raise NotImplementedError

    def div(self, x, y):
        raise NotImplementedError

    def from_entry(self, index: int, real: float):
        """Pick this calculus' value out of a knowledge-base entry."""
        raise NotImplementedError

    def render(self, x) -> str:
        raise NotImplementedError


class FtopaCalculus(BeliefCalculus):
    def __init__(self, alg: Algebra):
        self.alg = alg
        self.name = alg.spec.short

    @property
    def unit(self) -> PRange:
        return PRange.point(1)

    @property
    def zero(self) -> PRange:
        return PRange.point(self.alg.n)

    @staticmethod
    def _lift(x) -> PRange:
        return PRange.point(x) if isinstance(x, int) else x

    def prod(self, x, y):
        return range_product(self.alg, self._lift(x), self._lift(y))

    def inv(self, x):
        return range_inverse(self.alg, self._lift(x))

    def div(self, x, y):
        return range_solve(self.alg, self._lift(x), self._lift(y))

    def from_entry(self, index, real):
        if not 1 <= index <= self.alg.n:
            raise ValueError(f"e{index} is outside an algebra of size {self.alg.n}")
        return PRange.point(index)

    def render(self, x) -> str:
        return format_belief(self._lift(x))


class RealCalculus(BeliefCalculus):
    name = "real"
    unit = 1.0
    zero = 0.0

    def prod(self, x, y):
        return x * y

    def inv(self, x):
        return 1.0 - x

    def div(self, x, y):
        if y == 0:
            raise DomainError(f"{x} / 0")
        return x / y

    def from_entry(self, index, real):
        return float(real)

    def render(self, x) -> str:
        return f"{x:.6f}"


def bayes(calc: BeliefCalculus, likelihood, prior, evidence):
    """``likelihood * prior / evidence``, product first."""
    return calc.div(calc.prod(likelihood, prior), evidence)


def sum_cases(calc: BeliefCalculus, terms: Sequence):
    if not terms:
        raise ValueError("sum_cases needs at least one term")
    acc = calc.inv(terms[0])
    for t in terms[1:]:
        acc = calc.prod(acc, calc.inv(calc.div(t, acc)))
    result = calc.inv(acc)
    if isinstance(calc, RealCalculus) and not -REAL_TOL <= result <= 1 + REAL_TOL:
        raise ValueError(f"case sum {result} outside [0, 1]; inconsistent inputs")
    return result


def cases2(calc: BeliefCalculus, pA_given_B, pB, pA_given_notB, pnotB):
    """Two-case split, the not-B case first."""
    return sum_cases(calc, [calc.prod(pA_given_notB, pnotB), calc.prod(pA_given_B, pB)])


# --- knowledge base -------------------------------------------------------

EVENTS = ("fire", "tampering", "smoke", "alarm")

KB_KEYS = (
    "fire",
    "tampering",
    "smoke|fire",
    "smoke|~fire",
    "alarm|fire&tampering",
    "alarm|~fire&tampering",
    "alarm|fire&~tampering",
    "alarm|~fire&~tampering",
)

_ENTRY = re.compile(
    r"^p\(\s*(?P<event>[a-z]+)\s*(?:\|\s*(?P<cond>[~a-z&\s]+?))?\s*\)\s*=\s*"
    r"e(?P<index>\d+)\s*,\s*(?P<real>[0-9.eE+-]+)\s*$")


class KBParseError(ValueError):
    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


@dataclass(frozen=True)
class KnowledgeBase:
    entries: dict[str, tuple[int, float]]

    def __post_init__(self) -> None:
        missing = [k for k in KB_KEYS if k not in self.entries]
        if missing:
            raise ValueError(f"knowledge base is missing {', '.join('p(' + k + ')' for k in missing)}")
        for key, (index, real) in self.entries.items():
            if index < 1:
                raise ValueError(f"p({key}): bad index e{index}")
            if not 0.0 <= real <= 1.0:
                raise ValueError(f"p({key}): real value {real} outside [0, 1]")

    def __getitem__(self, key: str) -> tuple[int, float]:
        return self.entries[key]

    @property
    def max_index(self) -> int:
        return max(i for i, _ in self.entries.values())


def _canonical_condition(cond: str, lineno: int) -> str:
    lits = [c.strip() for c in cond.split("&")]
    order = []
    for lit in lits:
        name = lit.lstrip("~").strip()
        if name not in EVENTS:
            raise KBParseError(lineno, f"unknown event {name!r}")
        order.append((EVENTS.index(name), "~" + name if lit.startswith("~") else name))
    return "&".join(lit for _, lit in sorted(order))


def parse_kb(text: str) -> KnowledgeBase:
    """Parse ``p(event|cond) = e<k> , <real>`` lines; ``#`` starts a comment."""
    entries: dict[str, tuple[int, float]] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        m = _ENTRY.match(line)
        if m is None:
            raise KBParseError(lineno, f"cannot parse {raw.strip()!r}")
        event = m.group("event")
        if event not in EVENTS:
            raise KBParseError(lineno, f"unknown event {event!r}")
        key = event
        if m.group("cond"):
            key += "|" + _canonical_condition(m.group("cond"), lineno)
        if key not in KB_KEYS:
            raise KBParseError(lineno, f"p({key}) is not a knowledge-base entry for this network")
        if key in entries:
            raise KBParseError(lineno, f"duplicate entry p({key})")
        try:
            real = float(m.group("real"))
        except ValueError:
            raise KBParseError(lineno, f"bad real value {m.group('real')!r}") from None
        entries[key] = (int(m.group("index")), real)
    try:
        return KnowledgeBase(entries)
    except ValueError as exc:
        raise KBParseError(0, str(exc)) from None


def load_kb(path: str | Path | None = None) -> KnowledgeBase:
    """Load a knowledge base; ``None`` gives the bundled defaults."""
    if path is None:
        text = resources.files("ftopa").joinpath("data/table1.kb").read_text()
    else:
        text = Path(path).read_text()
    return parse_kb(text)


# --- smoke / alarm queries ------------------------------------------------

QUERY_LABELS = {
    "s_f": "p(s|f)",
    "a_f": "p(a|f)",
    "s_t": "p(s|t)",
    "a_t": "p(a|t)",
    "f_s": "p(f|s)",
    "f_a": "p(f|a)",
    "f_sa": "p(f|s&a)",
    "t_s": "p(t|s)",
    "t_a": "p(t|a)",
    "t_sa": "p(t|s&a)",
}
DEDUCTIVE = ("s_f", "a_f", "s_t", "a_t")
ABDUCTIVE = ("f_s", "f_a", "f_sa", "t_s", "t_a", "t_sa")


@dataclass(frozen=True)
class QueryError:
    """Stands in for a query whose derivation hit a division outside its domain."""

    message: str

    def __str__(self) -> str:
        return "ERR"


@dataclass(frozen=True)
class QueryReport:
    s_f: Any
    a_f: Any
    s_t: Any
    a_t: Any
    f_s: Any
    f_a: Any
    f_sa: Any
    t_s: Any
    t_a: Any
    t_sa: Any

    def items(self):
        return [(f.name, getattr(self, f.name)) for f in fields(self)]


class SmokeAlarm:
    """Derivation of every query; intermediates are cached per instance.

    Marginals used as Bayes denominators are themselves derived by cases.
    Smoke depends only on fire, so ``p(s|f&a) = p(s|f)`` and
    ``p(s|~f&a) = p(s|~f)``.
    """

    def __init__(self, calc: BeliefCalculus, kb: KnowledgeBase):
        self.c = calc
        self.kb = kb

    def _p(self, key):
        return self.c.from_entry(*self.kb[key])

    @cached_property
    def f(self):
        return self._p("fire")

    @cached_property
    def t(self):
        return self._p("tampering")

    @cached_property
    def nf(self):
        return self.c.inv(self.f)

    @cached_property
    def nt(self):
        return self.c.inv(self.t)

    @cached_property
    def s_f(self):
        return self._p("smoke|fire")

    @cached_property
    def s_nf(self):
        return self._p("smoke|~fire")

    def a_given(self, fire: bool, tamper: bool):
        return self._p(f"alarm|{'' if fire else '~'}fire&{'' if tamper else '~'}tampering")

    @cached_property
    def s(self):
        return cases2(self.c, self.s_f, self.f, self.s_nf, self.nf)

    @cached_property
    def a(self):
        c = self.c
        terms = [
            c.prod(c.prod(self.a_given(False, False), self.nf), self.nt),
            c.prod(c.prod(self.a_given(False, True), self.nf), self.t),
            c.prod(c.prod(self.a_given(True, False), self.f), self.nt),
            c.prod(c.prod(self.a_given(True, True), self.f), self.t),
        ]
        return sum_cases(c, terms)

    @cached_property
    def a_f(self):
        return cases2(self.c, self.a_given(True, True), self.t, self.a_given(True, False), self.nt)

    @cached_property
    def s_t(self):
        # fire and tampering are independent, so p(f|t) = p(f)
        return cases2(self.c, self.s_f, self.f, self.s_nf, self.nf)

    @cached_property
    def a_t(self):
        return cases2(self.c, self.a_given(True, True), self.f, self.a_given(False, True), self.nf)

    @cached_property
    def f_s(self):
        return bayes(self.c, self.s_f, self.f, self.s)

    @cached_property
    def f_a(self):
        return bayes(self.c, self.a_f, self.f, self.a)

    @cached_property
    def s_a(self):
        return cases2(self.c, self.s_f, self.f_a, self.s_nf, self.c.inv(self.f_a))

    @cached_property
    def f_sa(self):
        return bayes(self.c, self.s_f, self.f_a, self.s_a)

    @cached_property
    def t_s(self):
        return bayes(self.c, self.s_t, self.t, self.s)

    @cached_property
    def t_a(self):
        return bayes(self.c, self.a_t, self.t, self.a)

    @cached_property
    def f_ta(self):
        return bayes(self.c, self.a_given(True, True), self.f, self.a_t)

    @cached_property
    def s_ta(self):
        return cases2(self.c, self.s_f, self.f_ta, self.s_nf, self.c.inv(self.f_ta))

    @cached_property
    def t_sa(self):
        return bayes(self.c, self.s_ta, self.t_a, self.s_a)


def run_smoke_alarm(calc: BeliefCalculus, kb: KnowledgeBase) -> QueryReport:
    """Evaluate the ten queries; a failed derivation yields a :class:`QueryError`."""
    d = SmokeAlarm(calc, kb)
    out = {}
    for name in QUERY_LABELS:
        try:
            out[name] = getattr(d, name)
        except DomainError as exc:
            out[name] = QueryError(str(exc))
    return QueryReport(**out)
