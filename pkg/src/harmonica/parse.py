"""Text syntax for elements.

Grammar (juxtaposition is the product, ``(#)`` is the unit)::

    expr   := ['+'|'-'] term (('+'|'-') term)*
    term   := factor (['*'] factor)*
    factor := '-' factor | atom ['^' ['-'] INT]
    atom   := INT ['/' INT] | GENERATOR | '(' expr ')' | '(#)'
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .algebra import VB, VB2, VDR, VDR2, Algebra, Element, NotInvertible


class ParseError(ValueError):
    def __init__(self, message: str, position: int, text: str = ""):
        super().__init__(f"{message} at position {position}")
        self.position = position
        self.text = text


class UnknownGenerator(ParseError):
    pass


_TOKEN = re.compile(r"\s*(?:(\(#\))|([A-Za-z][A-Za-z0-9]*)|(\d+)|(\S))")


@dataclass(frozen=True)
class Token:
    kind: str  # unit, name, int, sym, end
    text: str
    pos: int


def tokenize(text: str) -> list[Token]:
    out = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            break
        start = m.start(m.lastindex) if m.lastindex else pos
        if m.group(1):
            out.append(Token("unit", m.group(1), start))
        elif m.group(2):
            out.append(Token("name", m.group(2), start))
        elif m.group(3):
            out.append(Token("int", m.group(3), start))
        elif m.group(4):
            out.append(Token("sym", m.group(4), start))
        pos = m.end()
    out.append(Token("end", "", len(text)))
    return out


class _Parser:
    def __init__(self, text: str, algebra: Algebra):
        self.text = text
        self.alg = algebra
        self.names = set(algebra.generator_names())
        self.toks = [p for t in tokenize(text) for p in self._split(t)]
        self.i = 0

    def _split(self, t: Token) -> list[Token]:
        """Break a run such as X0X1 into known generator names when possible."""
        if t.kind != "name" or t.text in self.names:
            return [t]
        out, pos = [], 0
        while pos < len(t.text):
            for n in sorted(self.names, key=len, reverse=True):
                if t.text.startswith(n, pos):
                    out.append(Token("name", n, t.pos + pos))
                    pos += len(n)
                    break
            else:
                return [t]
        return out

    @property
    def cur(self) -> Token:
        return self.toks[self.i]

    def eat(self, kind: str, text: str | None = None) -> Token | None:
        t = self.cur
        if t.kind == kind and (text is None or t.text == text):
            self.i += 1
            return t
        return None

    def fail(self, msg: str):
        raise ParseError(msg, self.cur.pos, self.text)

    def parse(self) -> Element:
        if self.cur.kind == "end":
            self.fail("empty expression")
        e = self.expr()
        if self.cur.kind != "end":
            self.fail(f"unexpected {self.cur.text!r}")
        return e

    def expr(self) -> Element:
        sign = 1
        if self.eat("sym", "-"):
            sign = -1
        else:
            self.eat("sym", "+")
        acc = self.term().scale(sign)
        while True:
            if self.eat("sym", "+"):
                acc = acc + self.term()
            elif self.eat("sym", "-"):
                acc = acc - self.term()
            else:
                return acc

    def _starts_factor(self) -> bool:
        t = self.cur
        return t.kind in ("unit", "name", "int") or (t.kind == "sym" and t.text in "(")

    def term(self) -> Element:
        acc = self.factor()
        while True:
            if self.eat("sym", "*"):
                acc = acc * self.factor()
            elif self._starts_factor():
                acc = acc * self.factor()
            else:
                return acc

    def factor(self) -> Element:
        if self.eat("sym", "-"):
            return -self.factor()
        base_pos = self.cur.pos
        base = self.atom()
        if self.eat("sym", "^"):
            neg = bool(self.eat("sym", "-"))
            t = self.eat("int")
            if t is None:
                self.fail("expected an integer exponent")
            n = -int(t.text) if neg else int(t.text)
            try:
                return base**n
            except NotInvertible:
                raise ParseError("negative power of a non-invertible element", base_pos, self.text) from None
        return base

    def atom(self) -> Element:
        t = self.cur
        if self.eat("unit"):
            return self.alg.one()
        if t.kind == "int":
            self.i += 1
            if self.eat("sym", "/"):
                d = self.eat("int")
                if d is None:
                    self.fail("expected a denominator")
                if int(d.text) == 0:
                    raise ParseError("zero denominator", d.pos, self.text)
                return self.alg.scalar(Fraction(int(t.text), int(d.text)))
            return self.alg.scalar(int(t.text))
        if t.kind == "name":
            if t.text not in self.names:
                raise UnknownGenerator(f"unknown generator {t.text!r} for {self.alg.name}", t.pos, self.text)
            self.i += 1
            return self.alg.gen(t.text)
        if self.eat("sym", "("):
            e = self.expr()
            if not self.eat("sym", ")"):
                self.fail("expected ')'")
            return e
        self.fail(f"unexpected {t.text!r}" if t.kind != "end" else "unexpected end of input")


def _algebras() -> dict[str, Algebra]:
    from .braid_betti import P5
    from .braid_derham import UP5

    return {"VB": VB, "VB2": VB2, "VDR": VDR, "VDR2": VDR2, "P5": P5, "UP5": UP5}


ALGEBRA_IDS = ("VB", "VB2", "VDR", "VDR2", "P5", "UP5")


def get_algebra(name: str) -> Algebra:
    try:
        return _algebras()[name]
    except KeyError:
        raise ValueError(f"unknown algebra {name!r}; choose from {', '.join(ALGEBRA_IDS)}") from None


def infer_algebra(text: str) -> str:
    """Pick the smallest standard algebra whose generators cover the text."""
    names = set(re.findall(r"[A-Za-z][A-Za-z0-9]*", text))
    if any(n.startswith("x") for n in names):
        return "P5"
    if any(n.startswith("t") for n in names):
        return "UP5"
    if names & {"Y0", "Y1"}:
        return "VB2"
    if names & {"f0", "f1", "finf"}:
        return "VDR2"
    if any(n.startswith("e") for n in names):
        return "VDR"
    return "VB"


def parse(text: str, algebra: Algebra | str | None = None) -> Element:
    if algebra is None:
        algebra = infer_algebra(text)
    if isinstance(algebra, str):
        algebra = get_algebra(algebra)
    return _Parser(text, algebra).parse()
