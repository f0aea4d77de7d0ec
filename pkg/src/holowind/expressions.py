"""Textual Laurent/rational expressions over z.

Grammar (whitespace ignored):

    start    := sum [ "/" sum ]
    sum      := [sign] term { ("+"|"-") term }
    term     := factor { "*" factor }
    factor   := NUMBER | zpow | "(" sum ")"
    zpow     := "z" [ "^" exponent ]
    exponent := [sign] INT | "(" [sign] INT ")"

Numbers are floats, optionally suffixed with "j" for the imaginary unit.
A bare sum parses to a LaurentExpression; a ratio parses to a
RationalFunction (poles at the origin become a z**k denominator).
"""

from __future__ import annotations

import re

from .boundary import ComplexPolynomial, LaurentExpression
from .errors import ParseError
from .oracle import RationalFunction

_TOKEN = re.compile(
    r"(?P<ws>\s+)"
    r"|(?P<num>(\d+\.?\d*|\.\d+)([eE][+-]?\d+)?j?)"
    r"|(?P<z>z)"
    r"|(?P<op>[-+*/^()])"
)


def _tokenize(text):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        if m.lastgroup != "ws":
            tokens.append((m.lastgroup, m.group(), pos))
        pos = m.end()
    tokens.append(("eof", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def advance(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, kind, value=None):
        tok = self.peek()
        if tok[0] != kind or (value is not None and tok[1] != value):
            want = value or kind
            raise ParseError(f"expected {want}, found {tok[1] or 'end of input'}", tok[2])
        return self.advance()

    # --- grammar -----------------------------------------------------------

    def parse(self):
        num = self.sum()
        tok = self.peek()
        if tok[0] == "op" and tok[1] == "/":
            self.advance()
            den = self.sum()
            self.expect("eof")
            return _ratio(num, den, self.text)
        self.expect("eof")
        return num

    def sum(self) -> LaurentExpression:
        sign = 1.0
        tok = self.peek()
        if tok[0] == "op" and tok[1] in "+-":
            self.advance()
            sign = -1.0 if tok[1] == "-" else 1.0
        acc = sign * self.term()
        while True:
            tok = self.peek()
            if tok[0] == "op" and tok[1] in "+-":
                self.advance()
                nxt = self.term()
                acc = acc + (nxt if tok[1] == "+" else -1.0 * nxt)
            else:
                return acc

    def term(self) -> LaurentExpression:
        acc = self.factor()
        while True:
            tok = self.peek()
            if tok[0] == "op" and tok[1] == "*":
                self.advance()
                acc = acc * self.factor()
            else:
                return acc

    def factor(self) -> LaurentExpression:
        tok = self.peek()
        if tok[0] == "num":
            self.advance()
            return LaurentExpression(((0, complex(tok[1])),))
        if tok[0] == "z":
            self.advance()
            nxt = self.peek()
            k = 1
            if nxt[0] == "op" and nxt[1] == "^":
                self.advance()
                k = self.exponent()
            return LaurentExpression(((k, 1.0),))
        if tok[0] == "op" and tok[1] == "(":
            self.advance()
            inner = self.sum()
            self.expect("op", ")")
            return inner
        raise ParseError(
            f"expected a number or z, found {tok[1] or 'end of input'}", tok[2]
        )

    def exponent(self) -> int:
        tok = self.peek()
        if tok[0] == "op" and tok[1] == "(":
            self.advance()
            k = self._signed_int()
            self.expect("op", ")")
            return k
        return self._signed_int()

    def _signed_int(self) -> int:
        sign = 1
        tok = self.peek()
        if tok[0] == "op" and tok[1] in "+-":
            self.advance()
            sign = -1 if tok[1] == "-" else 1
        tok = self.expect("num")
        if not tok[1].isdigit():
            raise ParseError(f"expected integer exponent, found {tok[1]}", tok[2])
        return sign * int(tok[1])


def _laurent_to_pair(expr: LaurentExpression):
    """Split L = numerator / z**shift with a plain-polynomial numerator."""
    shift = max(0, -expr.min_exponent)
    shifted = expr.shifted(shift)
    coeffs = [0j] * (max(shifted.max_exponent, 0) + 1)
    for m, c in shifted.terms:
        coeffs[m] = c
    return ComplexPolynomial(coeffs), shift


def _ratio(num: LaurentExpression, den: LaurentExpression, text: str) -> RationalFunction:
    if den.is_zero:
        raise ParseError("denominator is identically zero", len(text))
    pn, sn = _laurent_to_pair(num)
    pd, sd = _laurent_to_pair(den)
    # (pn / z^sn) / (pd / z^sd) = pn * z^sd / (pd * z^sn)
    return RationalFunction(pn.shifted(sd), pd.shifted(sn))


def parse(text: str):
    """Parse expression text; returns LaurentExpression or RationalFunction."""
    return _Parser(text).parse()


def _format_complex(c: complex) -> str:
    if c.imag == 0:
        return repr(c.real)
    if c.real == 0:
        return f"{c.imag!r}j"
    sign = "+" if c.imag >= 0 else "-"
    return f"({c.real!r}{sign}{abs(c.imag)!r}j)"


def _format_term(m: int, c: complex) -> str:
    coef = _format_complex(c)
    if m == 0:
        return coef
    z = "z" if m == 1 else f"z^{m}"
    return z if c == 1 else f"{coef}*{z}"


def laurent_to_text(expr: LaurentExpression) -> str:
    if expr.is_zero:
        return "0.0"
    parts = [_format_term(m, c) for m, c in sorted(expr.terms, reverse=True)]
    out = parts[0]
    for part in parts[1:]:
        if part.startswith("-"):
            out += " - " + part[1:]
        else:
            out += " + " + part
    return out


def polynomial_to_text(p: ComplexPolynomial) -> str:
    return laurent_to_text(LaurentExpression.from_polynomial(p))


def rational_to_text(r: RationalFunction) -> str:
    return (f"({polynomial_to_text(r.numerator)})"
            f"/({polynomial_to_text(r.denominator)})")


def to_text(obj) -> str:
    if isinstance(obj, LaurentExpression):
        return laurent_to_text(obj)
    if isinstance(obj, RationalFunction):
        return rational_to_text(obj)
    if isinstance(obj, ComplexPolynomial):
        return polynomial_to_text(obj)
    raise TypeError(f"cannot print {type(obj).__name__}")
