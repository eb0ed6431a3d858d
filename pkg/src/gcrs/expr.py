"""Recursive-descent parser for polynomial expressions and field literals.

Grammar (whitespace insignificant, positions reported 1-based):

    poly    := ['-'] term (('+'|'-') term)*
    term    := coeff ('*' factor)* | factor ('*' factor)*
    factor  := ident ('^' nat)? | '@' ('^' nat)?
    coeff   := nat | '(' extpoly ')'
    extpoly := ['-'] extterm (('+'|'-') extterm)*
    extterm := nat ('*' '@' ('^' nat)?)? | '@' ('^' nat)?

Subtraction folds through field negation.  Bare '@' factors are accepted and
folded into the coefficient; canonical output always parenthesizes extension
coefficients, so serialized text stays inside the stricter core grammar.
"""

from __future__ import annotations

from .errors import BadCoefficientError, ParseError, UnknownGeneratorError
from .ring import MAX_EXPONENT, Polynomial

_IDENT_START = set("abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ_")
_IDENT_CONT = _IDENT_START | set("0123456789")
_DIGITS = set("0123456789")


class _Token:
    __slots__ = ("kind", "value", "line", "col")

    def __init__(self, kind, value, line, col):
        self.kind = kind
        self.value = value
        self.line = line
        self.col = col

    def __repr__(self):
        return f"{self.kind}({self.value!r})@{self.line}:{self.col}"


def _tokenize(text, line, col):
    tokens = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch == "\n":
            line += 1
            col = 1
            i += 1
            continue
        if ch in " \t\r":
            i += 1
            col += 1
            continue
        start_col = col
        if ch in _DIGITS:
            j = i
            while j < n and text[j] in _DIGITS:
                j += 1
            if j < n and text[j] in _IDENT_START:
                raise ParseError("identifiers may not start with a digit", line, start_col)
            tokens.append(_Token("nat", int(text[i:j]), line, start_col))
            col += j - i
            i = j
            continue
        if ch in _IDENT_START:
            j = i
            while j < n and text[j] in _IDENT_CONT:
                j += 1
            tokens.append(_Token("ident", text[i:j], line, start_col))
            col += j - i
            i = j
            continue
        if ch in "@^*+-()":
            tokens.append(_Token(ch, ch, line, start_col))
            i += 1
            col += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", line, start_col)
    tokens.append(_Token("end", None, line, col))
    return tokens


class _Parser:
    def __init__(self, tokens):
        self.tokens = tokens
        self.pos = 0

    @property
    def cur(self):
        return self.tokens[self.pos]

    def advance(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind, what):
        if self.cur.kind != kind:
            raise ParseError(
                f"expected {what}, found {self.cur.value!r}"
                if self.cur.kind != "end" else f"expected {what}, found end of input",
                self.cur.line, self.cur.col,
            )
        return self.advance()

    def fail(self, message):
        raise ParseError(message, self.cur.line, self.cur.col)


def _at_power(parser, field, tok):
    """Parse the optional '^ nat' after '@' and return the field code of @^k."""
    if field.r == 1:
        raise BadCoefficientError(
            f"'@' has no meaning in the prime field F_{field.p}", tok.line, tok.col
        )
    k = 1
    if parser.cur.kind == "^":
        parser.advance()
        k = parser.expect("nat", "an exponent").value
    return field.pow(field.element([0, 1]).code, k)


def _parse_ext_poly(parser, field, open_tok):
    """Extension-field literal: a polynomial in '@' evaluated in the field."""
    total = 0
    negate = False
    if parser.cur.kind == "-":
        parser.advance()
        negate = True
    while True:
        tok = parser.cur
        if tok.kind == "nat":
            parser.advance()
            code = tok.value % field.p
            if parser.cur.kind == "*":
                parser.advance()
                at = parser.expect("@", "'@'")
                code = field.mul(code, _at_power(parser, field, at))
        elif tok.kind == "@":
            parser.advance()
            code = _at_power(parser, field, tok)
        else:
            parser.fail("expected a number or '@' inside an extension coefficient")
        if negate:
            code = field.neg(code)
        total = field.add(total, code)
        if parser.cur.kind in ("+", "-"):
            negate = parser.advance().kind == "-"
            continue
        return total


def _parse_factor(parser, ring, exps):
    """One 'ident(^nat)?' or '@(^nat)?' factor; returns a coefficient code or None."""
    tok = parser.cur
    if tok.kind == "ident":
        parser.advance()
        j = ring._index.get(tok.value)
        if j is None:
            raise UnknownGeneratorError(tok.value, tok.line, tok.col)
        k = 1
        if parser.cur.kind == "^":
            parser.advance()
            k = parser.expect("nat", "an exponent").value
        exps[j] += k
        if exps[j] > MAX_EXPONENT:
            raise ParseError(
                f"exponent of {tok.value!r} exceeds the representable maximum {MAX_EXPONENT}",
                tok.line, tok.col,
            )
        return None
    if tok.kind == "@":
        parser.advance()
        return _at_power(parser, ring.field, tok)
    parser.fail("expected a generator name")


def _parse_term(parser, ring):
    field = ring.field
    exps = [0] * ring.n
    coeff = 1
    tok = parser.cur
    if tok.kind == "nat":
        parser.advance()
        coeff = tok.value % field.p
    elif tok.kind == "(":
        open_tok = parser.advance()
        coeff = _parse_ext_poly(parser, field, open_tok)
        parser.expect(")", "')'")
    elif tok.kind in ("ident", "@"):
        extra = _parse_factor(parser, ring, exps)
        if extra is not None:
            coeff = field.mul(coeff, extra)
    else:
        parser.fail("expected a term")
    while parser.cur.kind == "*":
        parser.advance()
        extra = _parse_factor(parser, ring, exps)
        if extra is not None:
            coeff = field.mul(coeff, extra)
    packed = 0
    for j, e in enumerate(exps):
        packed |= e << (8 * j)
    return packed, coeff


def parse_polynomial(text, ring, line=1, col=1):
    """Parse an expression into a canonical Polynomial of the given ring."""
    tokens = _tokenize(text, line, col)
    parser = _Parser(tokens)
    terms = []
    negate = False
    if parser.cur.kind == "-":
        parser.advance()
        negate = True
    while True:
        packed, code = _parse_term(parser, ring)
        if negate:
            code = ring.field.neg(code)
        terms.append((packed, code))
        if parser.cur.kind in ("+", "-"):
            negate = parser.advance().kind == "-"
            continue
        break
    parser.expect("end", "'+', '-', '*', or end of expression")
    return ring.from_terms(terms)


def parse_field_literal(text, field, line=1, col=1):
    """Parse a standalone field literal: an integer or a polynomial in '@'."""
    tokens = _tokenize(text, line, col)
    parser = _Parser(tokens)
    code = _parse_ext_poly(parser, field, parser.cur)
    parser.expect("end", "end of literal")
    return field.from_code(code)


def parse_at_coefficients(text, p, line=1, col=1):
    """Parse a polynomial in '@' into its raw coefficient list over F_p.

    Used for modulus clauses, where the '@'-polynomial defines the extension
    instead of living inside it.
    """
    tokens = _tokenize(text, line, col)
    parser = _Parser(tokens)
    coeffs = {}

    def add(power, value):
        coeffs[power] = (coeffs.get(power, 0) + value) % p

    negate = False
    if parser.cur.kind == "-":
        parser.advance()
        negate = True
    while True:
        tok = parser.cur
        if tok.kind == "nat":
            parser.advance()
            value = tok.value % p
            power = 0
            if parser.cur.kind == "*":
                parser.advance()
                at = parser.expect("@", "'@'")
                power = 1
                if parser.cur.kind == "^":
                    parser.advance()
                    power = parser.expect("nat", "an exponent").value
        elif tok.kind == "@":
            parser.advance()
            value = 1
            power = 1
            if parser.cur.kind == "^":
                parser.advance()
                power = parser.expect("nat", "an exponent").value
        else:
            parser.fail("expected a number or '@' in the modulus polynomial")
        add(power, -value if negate else value)
        if parser.cur.kind in ("+", "-"):
            negate = parser.advance().kind == "-"
            continue
        break
    parser.expect("end", "end of modulus polynomial")
    if not coeffs:
        return [0]
    top = max(coeffs)
    return [coeffs.get(i, 0) for i in range(top + 1)]
