"""Text grammar for polynomials and maps, plus the deterministic formatter.

Grammar (whitespace insignificant, explicit ``*`` required between
factors, ``^`` binds tighter than unary minus)::

    expr     := term (("+" | "-") term)*
    term     := factor ("*" factor)*
    factor   := "-" factor | base ("^" uint)?
    base     := rational | variable | "(" expr ")"
    rational := int ("/" uint)?

``parse_polynomial(format_polynomial(p)) == p`` for every polynomial, and
formatting the same value twice is byte-identical.  Terms print in
ascending total degree; within one degree the lexicographically larger
exponent vector (first variable weighs most) prints first, which matches
how the exponential maps are usually written: linear part first, higher
corrections after.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional, Sequence

from .errors import ArityMismatch, ParseError, UnknownVariable
from .exactpoly import Polynomial, default_variable_names

_OPERATORS = set("+-*^/(),")


class _Token:
    __slots__ = ("kind", "text", "line", "column")

    def __init__(self, kind, text, line, column):
        self.kind = kind  # "int" | "name" | one of _OPERATORS | "end"
        self.text = text
        self.line = line
        self.column = column


def _tokenize(text: str) -> list[_Token]:
    tokens = []
    line, column = 1, 1
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch == "\n":
            line += 1
            column = 1
            i += 1
            continue
        if ch.isspace():
            column += 1
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(_Token("int", text[i:j], line, column))
            column += j - i
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(_Token("name", text[i:j], line, column))
            column += j - i
            i = j
            continue
        if ch in _OPERATORS:
            tokens.append(_Token(ch, ch, line, column))
            column += 1
            i += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", line, column)
    tokens.append(_Token("end", "", line, column))
    return tokens


class _Parser:
    def __init__(self, tokens: list[_Token], names: Sequence[str], dimension: int):
        self.tokens = tokens
        self.pos = 0
        self.names = {name: i for i, name in enumerate(names)}
        self.dimension = dimension

    def peek(self) -> _Token:
        return self.tokens[self.pos]

    def advance(self) -> _Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind: str) -> _Token:
        tok = self.peek()
        if tok.kind != kind:
            raise ParseError(
                f"expected {kind!r}, found {tok.text or 'end of input'!r}", tok.line, tok.column
            )
        return self.advance()

    def parse_expr(self) -> Polynomial:
        value = self.parse_term()
        while self.peek().kind in ("+", "-"):
            op = self.advance().kind
            rhs = self.parse_term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def parse_term(self) -> Polynomial:
        value = self.parse_factor()
        while self.peek().kind == "*":
            self.advance()
            value = value * self.parse_factor()
        return value

    def parse_factor(self) -> Polynomial:
        if self.peek().kind == "-":
            self.advance()
            return -self.parse_factor()
        value = self.parse_base()
        if self.peek().kind == "^":
            self.advance()
            tok = self.expect("int")
            value = value ** int(tok.text)
        return value

    def parse_base(self) -> Polynomial:
        tok = self.peek()
        if tok.kind == "int":
            self.advance()
            value = Fraction(int(tok.text))
            if self.peek().kind == "/":
                self.advance()
                den_tok = self.expect("int")
                den = int(den_tok.text)
                if den == 0:
                    raise ParseError("denominator must be positive", den_tok.line, den_tok.column)
                value = Fraction(value, den)
            return Polynomial.constant(self.dimension, value)
        if tok.kind == "name":
            self.advance()
            index = self.names.get(tok.text)
            if index is None:
                raise UnknownVariable(f"unknown variable {tok.text!r}", tok.line, tok.column)
            return Polynomial.variable(index, self.dimension)
        if tok.kind == "(":
            self.advance()
            value = self.parse_expr()
            self.expect(")")
            return value
        raise ParseError(
            f"expected a rational, a variable or '(', found {tok.text or 'end of input'!r}",
            tok.line,
            tok.column,
        )


def parse_polynomial(
    text: str, dimension: int = 3, names: Optional[Sequence[str]] = None
) -> Polynomial:
    """Parse an expression into a polynomial of the given dimension."""
    if names is None:
        names = default_variable_names(dimension)
    parser = _Parser(_tokenize(text), names, dimension)
    value = parser.parse_expr()
    tok = parser.peek()
    if tok.kind != "end":
        raise ParseError(f"unexpected {tok.text!r} after expression", tok.line, tok.column)
    return value


def _split_components(parser: _Parser) -> list[Polynomial]:
    parser.expect("(")
    components = [parser.parse_expr()]
    while parser.peek().kind == ",":
        parser.advance()
        components.append(parser.parse_expr())
    parser.expect(")")
    tok = parser.peek()
    if tok.kind != "end":
        raise ParseError(f"unexpected {tok.text!r} after map literal", tok.line, tok.column)
    return components


def parse_map(
    text: str, dimension: Optional[int] = None, names: Optional[Sequence[str]] = None
) -> tuple[Polynomial, ...]:
    """Parse a ``(e1, ..., en)`` literal into a tuple of polynomials.

    With ``dimension=None`` the arity is inferred by counting top-level
    commas; otherwise a wrong component count raises ArityMismatch.
    """
    tokens = _tokenize(text)
    if dimension is None:
        depth = 0
        commas = 0
        for tok in tokens:
            if tok.kind == "(":
                depth += 1
            elif tok.kind == ")":
                depth -= 1
            elif tok.kind == "," and depth == 1:
                commas += 1
        dimension = commas + 1
    if names is None:
        names = default_variable_names(dimension)
    parser = _Parser(tokens, names, dimension)
    components = _split_components(parser)
    if len(components) != dimension:
        raise ArityMismatch(f"map literal has {len(components)} components, expected {dimension}")
    return tuple(components)


# -- formatting --------------------------------------------------------


def format_rational(value) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def _term_order_key(exps):
    return (sum(exps),) + tuple(-e for e in exps)


def format_polynomial(p: Polynomial, names: Optional[Sequence[str]] = None) -> str:
    """Deterministic canonical rendering; ``parse_polynomial`` inverts it."""
    if names is None:
        names = default_variable_names(p.dimension)
    if p.is_zero():
        return "0"
    pieces = []
    for exps in sorted(p.terms, key=_term_order_key):
        coeff = p.terms[exps]
        sign = "-" if coeff < 0 else "+"
        factors = []
        magnitude = -coeff if coeff < 0 else coeff
        monomial = [
            (names[i], e) for i, e in enumerate(exps) if e
        ]
        if magnitude != 1 or not monomial:
            factors.append(format_rational(magnitude))
        for name, e in monomial:
            factors.append(name if e == 1 else f"{name}^{e}")
        pieces.append((sign, "*".join(factors)))
    first_sign, first_body = pieces[0]
    out = first_body if first_sign == "+" else f"-{first_body}"
    for sign, body in pieces[1:]:
        out += f" {sign} {body}"
    return out


def format_map(components: Sequence[Polynomial], names: Optional[Sequence[str]] = None) -> str:
    return "(" + ", ".join(format_polynomial(c, names) for c in components) + ")"
