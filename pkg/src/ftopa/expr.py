"""Tiny evaluator for belief expressions such as ``e2*(e5/e5)`` or ``i[e3*e4]``.

``*`` and ``/`` share one precedence level and associate left, so
``e2*e5/e5`` means ``(e2*e5)/e5``.
"""
from __future__ import annotations

import re

from ftopa.algebra import Algebra
from ftopa.ranges import PRange, range_inverse, range_product, range_solve


class ExprError(ValueError):
    pass


_TOKEN = re.compile(r"\s*(?:(i\[)|e(\d+)|([\[\](),*/]))")


def tokenize(text: str) -> list[tuple[str, str]]:
    tokens = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ExprError(f"unexpected character at {pos}: {text[pos:pos + 10]!r}")
        if m.group(1):
            tokens.append(("inv", "i["))
        elif m.group(2):
            tokens.append(("val", m.group(2)))
        else:
            tokens.append((m.group(3), m.group(3)))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, alg: Algebra, tokens):
        self.alg = alg
        self.tokens = tokens
        self.i = 0

    def peek(self):
        return self.tokens[self.i][0] if self.i < len(self.tokens) else None

    def take(self, kind):
        if self.peek() != kind:
            got = self.tokens[self.i][1] if self.i < len(self.tokens) else "end of input"
            raise ExprError(f"expected {kind!r}, got {got!r}")
        tok = self.tokens[self.i]
        self.i += 1
        return tok[1]

    def value(self) -> int:
        k = int(self.take("val"))
        if not 1 <= k <= self.alg.n:
            raise ExprError(f"e{k} is outside an algebra of size {self.alg.n}")
        return k

    def expr(self) -> PRange:
        acc = self.atom()
        while self.peek() in ("*", "/"):
            op = self.take(self.peek())
            rhs = self.atom()
            if op == "*":
                acc = range_product(self.alg, acc, rhs)
            else:
                acc = range_solve(self.alg, acc, rhs)
        return acc

    def atom(self) -> PRange:
        kind = self.peek()
        if kind == "val":
            return PRange.point(self.value())
        if kind == "(":
            self.take("(")
            r = self.expr()
            self.take(")")
            return r
        if kind == "inv":
            self.take("inv")
            r = self.expr()
            self.take("]")
            return range_inverse(self.alg, r)
        if kind == "[":
            self.take("[")
            lo = self.value()
            self.take(",")
            hi = self.value()
            self.take("]")
            try:
                return PRange(lo, hi)
            except ValueError as exc:
                raise ExprError(str(exc)) from None
        raise ExprError(f"unexpected {self.tokens[self.i][1] if kind else 'end of input'!r}")


def evaluate(alg: Algebra, text: str) -> PRange:
    """Evaluate ``text``; division outside its domain raises ``DomainError``."""
    p = _Parser(alg, tokenize(text))
    result = p.expr()
    if p.peek() is not None:
        raise ExprError(f"trailing input at {p.tokens[p.i][1]!r}")
    return result
