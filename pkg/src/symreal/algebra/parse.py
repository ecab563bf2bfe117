"""Parser for the polynomial text grammar.

Grammar::

    expr   := term (('+' | '-') term)*
    term   := unary ('*' unary)*
    unary  := ('+' | '-') unary | power
    power  := atom ('^' INT)*
    atom   := INT ['/' INT] | NAME | '(' expr ')'

Juxtaposition is not multiplication: ``2x`` is a syntax error.
"""

import re
from fractions import Fraction

from .multipoly import MultiPoly

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z][A-Za-z0-9_]*)|(\S))")


class PolySyntaxError(ValueError):
    def __init__(self, message, text, pos):
        super().__init__(f"{message} at position {pos}: {text!r}")
        self.pos = pos
        self.text = text


def _tokenize(text):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            break
        if m.group(1) is not None:
            tokens.append(("int", m.group(1), m.start(1)))
        elif m.group(2) is not None:
            tokens.append(("name", m.group(2), m.start(2)))
        elif m.group(3) is not None:
            ch = m.group(3)
            if ch not in "+-*^()/":
                raise PolySyntaxError(f"unexpected character {ch!r}", text, m.start(3))
            tokens.append(("op", ch, m.start(3)))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text, vars):
        self.text = text
        self.vars = tuple(vars)
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def error(self, msg, tok=None):
        tok = tok or self.peek()
        raise PolySyntaxError(msg, self.text, tok[2])

    def parse(self):
        if self.peek()[0] == "end":
            self.error("empty expression")
        p = self.expr()
        if self.peek()[0] != "end":
            self.error(f"unexpected token {self.peek()[1]!r}")
        return p

    def expr(self):
        p = self.term()
        while self.peek()[:2] in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            q = self.term()
            p = p + q if op == "+" else p - q
        return p

    def term(self):
        p = self.unary()
        while self.peek()[:2] == ("op", "*"):
            self.take()
            p = p * self.unary()
        return p

    def unary(self):
        tok = self.peek()
        if tok[:2] == ("op", "-"):
            self.take()
            return -self.unary()
        if tok[:2] == ("op", "+"):
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        p = self.atom()
        while self.peek()[:2] == ("op", "^"):
            self.take()
            tok = self.peek()
            if tok[0] != "int":
                self.error("exponent must be a nonnegative integer literal")
            self.take()
            p = p ** int(tok[1])
        return p

    def atom(self):
        tok = self.take()
        kind, val, _ = tok
        if kind == "int":
            num = int(val)
            if self.peek()[:2] == ("op", "/"):
                self.take()
                den_tok = self.peek()
                if den_tok[0] != "int":
                    self.error("'/' is only allowed between integer literals", den_tok)
                self.take()
                den = int(den_tok[1])
                if den == 0:
                    self.error("zero denominator", den_tok)
                value = Fraction(num, den)
            else:
                value = Fraction(num)
            nxt = self.peek()
            if nxt[0] in ("name", "int") or nxt[:2] == ("op", "("):
                self.error("implicit multiplication is not allowed", nxt)
            return MultiPoly.const(value, self.vars)
        if kind == "name":
            if val not in self.vars:
                self.i -= 1
                self.error(f"unknown variable {val!r}")
            nxt = self.peek()
            if nxt[0] in ("name", "int") or nxt[:2] == ("op", "("):
                self.error("implicit multiplication is not allowed", nxt)
            return MultiPoly.var(val, self.vars)
        if (kind, val) == ("op", "("):
            p = self.expr()
            if self.peek()[:2] != ("op", ")"):
                self.error("expected ')'")
            self.take()
            return p
        if (kind, val) == ("op", "/"):
            self.i -= 1
            self.error("'/' is only allowed between integer literals")
        self.i -= 1
        self.error(f"unexpected token {val!r}" if val else "unexpected end of input")


def poly_parse(text, vars):
    """Parse ``text`` into the canonical MultiPoly over ``vars``."""
    return _Parser(text, vars).parse()
