"""Text grammar, parser and canonical printer for noncommutative polynomials.

Grammar (whitespace insignificant)::

    poly   := term (('+' | '-') term)*
    term   := ('-')? factor ('*' factor)*
    factor := var ('^' nat)? | coeff | '(' poly ')'
    var    := 'X' nat            # nat >= 1
    coeff  := int ('/' posnat)?

Multiplication must be written explicitly: "X1X2" is rejected, since "X12"
would be ambiguous between X1*X2 and variable 12.  Exponents are nonnegative
integers and X^0 parses to 1.  Coefficients are exact rationals "a/b" (or
residues in prime-field mode); no decimal literals exist.

`format_poly` emits terms in deglex order with coefficient 1 elided except on
the unit word, and its output always re-parses to the same polynomial.
"""

from __future__ import annotations

from typing import List, NamedTuple, Optional

from .freealg import NcPoly, deglex_key
from .scalars import Field, QQ, ScalarParseError


class PolyParseError(ValueError):
    """Lexical or syntax error; `position` is a 0-based offset into the text."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class _Token(NamedTuple):
    kind: str  # 'int', 'var', or one of + - * / ^ ( ) 'end'
    text: str
    pos: int


def _tokenize(text: str) -> List[_Token]:
    tokens = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch in "+-*/^()":
            tokens.append(_Token(ch, ch, i))
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(_Token("int", text[i:j], i))
            i = j
            continue
        if ch == "X":
            j = i + 1
            while j < n and text[j].isdigit():
                j += 1
            if j == i + 1:
                raise PolyParseError("variable 'X' needs an index", i)
            tokens.append(_Token("var", text[i:j], i))
            i = j
            continue
        raise PolyParseError(f"unexpected character {ch!r}", i)
    tokens.append(_Token("end", "", n))
    return tokens


class _Parser:
    def __init__(self, tokens: List[_Token], field: Field):
        self.tokens = tokens
        self.i = 0
        self.field = field

    def peek(self) -> _Token:
        return self.tokens[self.i]

    def take(self, kind: Optional[str] = None) -> _Token:
        tok = self.tokens[self.i]
        if kind is not None and tok.kind != kind:
            raise PolyParseError(f"expected {kind!r}, found {tok.text or 'end of input'!r}", tok.pos)
        self.i += 1
        return tok

    def parse_poly(self) -> NcPoly:
        total = self.parse_term()
        while self.peek().kind in "+-":
            op = self.take()
            term = self.parse_term()
            total = total + term if op.kind == "+" else total - term
        return total

    def parse_term(self) -> NcPoly:
        negate = False
        if self.peek().kind == "-":
            self.take()
            negate = True
        prod = self.parse_factor()
        while self.peek().kind == "*":
            self.take()
            prod = prod * self.parse_factor()
        return -prod if negate else prod

    def parse_factor(self) -> NcPoly:
        tok = self.peek()
        if tok.kind == "var":
            self.take()
            index = int(tok.text[1:])
            if index < 1:
                raise PolyParseError("variable index 0 is not allowed", tok.pos)
            exponent = 1
            if self.peek().kind == "^":
                self.take()
                exponent = int(self.take("int").text)
            return NcPoly.word((index,) * exponent, field=self.field)
        if tok.kind == "int":
            self.take()
            literal = tok.text
            if self.peek().kind == "/":
                self.take()
                den = self.take("int")
                if int(den.text) == 0:
                    raise PolyParseError("zero denominator", den.pos)
                literal += "/" + den.text
            try:
                value = self.field.parse(literal)
            except ScalarParseError as exc:
                raise PolyParseError(str(exc), tok.pos) from None
            return NcPoly.constant(value, field=self.field)
        if tok.kind == "(":
            self.take()
            inner = self.parse_poly()
            self.take(")")
            return inner
        raise PolyParseError(
            f"expected a variable, number or '(', found {tok.text or 'end of input'!r}", tok.pos
        )


def parse_poly(text: str, field: Field = QQ) -> NcPoly:
    """Parse the grammar above into a canonical NcPoly."""
    parser = _Parser(_tokenize(text), field)
    poly = parser.parse_poly()
    parser.take("end")
    return poly


def _word_str(word) -> str:
    # run-length encode repeated letters: (1, 1, 2) -> "X1^2*X2"
    pieces = []
    i = 0
    while i < len(word):
        j = i
        while j < len(word) and word[j] == word[i]:
            j += 1
        run = j - i
        pieces.append(f"X{word[i]}" + (f"^{run}" if run > 1 else ""))
        i = j
    return "*".join(pieces)


def format_poly(poly: NcPoly) -> str:
    """Canonical text form: deglex term order, '-' absorbed into the term sign."""
    if poly.is_zero:
        return "0"
    one = poly.field.one
    out = []
    for word, coeff in sorted(poly.terms.items(), key=lambda item: deglex_key(item[0])):
        negative = False
        coeff_str = str(coeff)
        if coeff_str.startswith("-"):
            negative = True
            coeff_str = coeff_str[1:]
        body = _word_str(word)
        if not word:
            piece = coeff_str
        elif coeff == one or (negative and coeff == -one):
            piece = body
        else:
            piece = f"{coeff_str}*{body}"
        if not out:
            out.append(f"-{piece}" if negative else piece)
        else:
            out.append(f"- {piece}" if negative else f"+ {piece}")
    return " ".join(out)
