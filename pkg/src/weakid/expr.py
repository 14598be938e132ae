"""Surface syntax for free-algebra expressions.

Grammar (whitespace between tokens is ignored):

    expr     := ("+" | "-")? term (("+" | "-") term)*
    term     := factor ("*" factor)*
    factor   := atom ("^" nat)?
    atom     := rational | var | "(" expr ")"
              | "[" expr ("," expr)+ "]"            left-normed commutator
              | "o(" expr "," expr ")"              circle product
              | "S" nat "(" expr ("," expr)* ")"    standard polynomial
              | "ad(" expr "," expr "," nat ")"     g (ad f)^m
    var      := "x" nat | "x" | "y"                 x = x1, y = x2
    rational := int ("/" posint)?

Errors carry 1-based line and column positions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .freealg import NcPoly, circ, comm, left_normed, render, standard_poly, substitute

__all__ = ["ParseError", "parse", "elaborate", "parse_poly", "render"]


class ParseError(Exception):
    def __init__(self, message, line, col):
        super().__init__(f"{line}:{col}: {message}")
        self.line = line
        self.col = col
        self.reason = message


@dataclass(frozen=True)
class Token:
    kind: str  # NUM, NAME, or a literal symbol
    text: str
    line: int
    col: int


_SYMBOLS = set("+-*/^()[],")


def _tokenize(src):
    tokens = []
    line, col = 1, 1
    i = 0
    while i < len(src):
        ch = src[i]
        if ch == "\n":
            line += 1
            col = 1
            i += 1
            continue
        if ch.isspace():
            col += 1
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < len(src) and src[j].isdigit():
                j += 1
            tokens.append(Token("NUM", src[i:j], line, col))
            col += j - i
            i = j
            continue
        if ch.isalpha():
            j = i
            while j < len(src) and (src[j].isalnum() or src[j] == "_"):
                j += 1
            tokens.append(Token("NAME", src[i:j], line, col))
            col += j - i
            i = j
            continue
        if ch in _SYMBOLS:
            tokens.append(Token(ch, ch, line, col))
            col += 1
            i += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", line, col)
    tokens.append(Token("EOF", "", line, col))
    return tokens


# Expression nodes: tagged tuples.
#   ("num", Fraction)  ("var", i)  ("sum", [(sign, expr), ...])
#   ("prod", [expr, ...])  ("pow", expr, nat)  ("bracket", [expr, ...])
#   ("circ", e1, e2)  ("std", k, [expr, ...])  ("ad", f, g, m)


class _Parser:
    def __init__(self, tokens):
        self.tokens = tokens
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos]

    def next(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind):
        tok = self.next()
        if tok.kind != kind:
            got = tok.text or "end of input"
            raise ParseError(f"expected {kind!r}, found {got!r}", tok.line, tok.col)
        return tok

    def fail(self, message):
        tok = self.peek()
        raise ParseError(message, tok.line, tok.col)

    def parse_expr(self):
        signs = []
        if self.peek().kind in "+-":
            signs.append(1 if self.next().kind == "+" else -1)
        else:
            signs.append(1)
        terms = [self.parse_term()]
        while self.peek().kind in "+-":
            signs.append(1 if self.next().kind == "+" else -1)
            terms.append(self.parse_term())
        return ("sum", list(zip(signs, terms)))

    def parse_term(self):
        factors = [self.parse_factor()]
        while self.peek().kind == "*":
            self.next()
            factors.append(self.parse_factor())
        return ("prod", factors)

    def parse_factor(self):
        atom = self.parse_atom()
        if self.peek().kind == "^":
            self.next()
            tok = self.expect("NUM")
            return ("pow", atom, int(tok.text))
        return atom

    def parse_nat(self):
        tok = self.expect("NUM")
        return int(tok.text)

    def parse_atom(self):
        tok = self.peek()
        if tok.kind == "NUM":
            self.next()
            num = int(tok.text)
            if self.peek().kind == "/":
                self.next()
                den_tok = self.expect("NUM")
                den = int(den_tok.text)
                if den == 0:
                    raise ParseError("zero denominator", den_tok.line, den_tok.col)
                return ("num", Fraction(num, den))
            return ("num", Fraction(num))
        if tok.kind == "(":
            self.next()
            e = self.parse_expr()
            self.expect(")")
            return e
        if tok.kind == "[":
            self.next()
            args = [self.parse_expr()]
            while self.peek().kind == ",":
                self.next()
                args.append(self.parse_expr())
            self.expect("]")
            if len(args) < 2:
                raise ParseError("commutator brackets need at least 2 arguments",
                                 tok.line, tok.col)
            return ("bracket", args)
        if tok.kind == "NAME":
            return self.parse_name()
        self.fail(f"unexpected {tok.text or 'end of input'!r}")

    def parse_name(self):
        tok = self.next()
        name = tok.text
        if name == "y":
            return ("var", 2)
        if name == "x":
            return ("var", 1)
        if name.startswith("x") and name[1:].isdigit():
            idx = int(name[1:])
            if idx < 1:
                raise ParseError("variable indices start at 1", tok.line, tok.col)
            return ("var", idx)
        if name == "o":
            self.expect("(")
            e1 = self.parse_expr()
            self.expect(",")
            e2 = self.parse_expr()
            self.expect(")")
            return ("circ", e1, e2)
        if name == "ad":
            self.expect("(")
            f = self.parse_expr()
            self.expect(",")
            g = self.parse_expr()
            self.expect(",")
            m = self.parse_nat()
            self.expect(")")
            return ("ad", f, g, m)
        if name.startswith("S") and name[1:].isdigit():
            k = int(name[1:])
            if k < 1:
                raise ParseError("standard polynomials need k >= 1", tok.line, tok.col)
            self.expect("(")
            args = [self.parse_expr()]
            while self.peek().kind == ",":
                self.next()
                args.append(self.parse_expr())
            self.expect(")")
            if len(args) != k:
                raise ParseError(
                    f"S{k} takes {k} arguments, found {len(args)}", tok.line, tok.col)
            return ("std", k, args)
        raise ParseError(f"unknown identifier {name!r}", tok.line, tok.col)


def parse(src):
    """Parse source text into an expression tree."""
    parser = _Parser(_tokenize(src))
    e = parser.parse_expr()
    tok = parser.peek()
    if tok.kind != "EOF":
        raise ParseError(f"unexpected trailing input {tok.text!r}", tok.line, tok.col)
    return e


def elaborate(node):
    """Expression tree -> noncommutative polynomial."""
    tag = node[0]
    if tag == "num":
        return NcPoly.scalar(node[1])
    if tag == "var":
        return NcPoly.variable(node[1])
    if tag == "sum":
        acc = NcPoly.zero()
        for sign, term in node[1]:
            t = elaborate(term)
            acc = acc + t if sign > 0 else acc - t
        return acc
    if tag == "prod":
        acc = NcPoly.one()
        for factor in node[1]:
            acc = acc * elaborate(factor)
        return acc
    if tag == "pow":
        return elaborate(node[1]) ** node[2]
    if tag == "bracket":
        return left_normed(*(elaborate(a) for a in node[1]))
    if tag == "circ":
        return circ(elaborate(node[1]), elaborate(node[2]))
    if tag == "std":
        k, args = node[1], node[2]
        values = {i + 1: elaborate(a) for i, a in enumerate(args)}
        return substitute(standard_poly(k), values)
    if tag == "ad":
        f = elaborate(node[1])
        g = elaborate(node[2])
        for _ in range(node[3]):
            g = comm(g, f)
        return g
    raise ValueError(f"unknown node {tag!r}")


def parse_poly(src):
    """Parse and elaborate in one step."""
    return elaborate(parse(src))
