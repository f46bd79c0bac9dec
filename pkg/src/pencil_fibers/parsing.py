"""Polynomial expressions and the sectioned input file.

Grammar (``^`` and ``**`` are both accepted for powers)::

    expr   := term (('+' | '-') term)*
    term   := unary (('*' | '/') unary)*
    unary  := ('+' | '-') unary | power
    power  := atom (('^' | '**') INT)?
    atom   := INT | NAME | '(' expr ')'

Division is only allowed by a nonzero constant.
"""

import re
from dataclasses import dataclass, field as dc_field
from fractions import Fraction

from .base_points import Pencil
from .errors import InputError, NonHomogeneous, ParseError, UnknownSymbol
from .field import QQ, NumberField
from .poly import PLANE_VARS, MultiPoly

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(\*\*|[-+*/^()]))")


@dataclass
class _Tok:
    kind: str  # 'num', 'name', 'op', 'end'
    text: str
    pos: int


def _tokenize(text, where):
    toks = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            bad = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise ParseError(f"unexpected character {text[bad]!r}", *where(bad))
        start = m.start(m.lastindex)
        kind = ("num", "name", "op")[m.lastindex - 1]
        toks.append(_Tok(kind, m.group(m.lastindex), start))
        pos = m.end()
    toks.append(_Tok("end", "", len(text)))
    return toks


class _Parser:
    def __init__(self, text, field, variables, symbol, aliases, line, column):
        self.text = text
        self.field = field
        self.variables = tuple(variables)
        self.symbol = symbol
        self.aliases = aliases or {}
        self.line = line
        self.column = column
        self.toks = _tokenize(text, self.where)
        self.i = 0

    def where(self, pos):
        before = self.text[:pos]
        nl = before.count("\n")
        if nl:
            return self.line + nl, pos - before.rfind("\n")
        return self.line, self.column + pos

    def error(self, msg, tok=None, cls=ParseError):
        tok = tok or self.peek()
        return cls(msg, *self.where(tok.pos))

    def peek(self):
        return self.toks[self.i]

    def take(self):
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def accept(self, *ops):
        tok = self.peek()
        if tok.kind == "op" and tok.text in ops:
            self.i += 1
            return tok
        return None

    def const(self, value):
        return MultiPoly.constant(self.field, self.variables, value)

    def parse(self):
        if self.peek().kind == "end":
            raise self.error("empty expression")
        value = self.expr()
        tok = self.peek()
        if tok.kind != "end":
            raise self.error(f"unexpected {tok.text!r}")
        return value

    def expr(self):
        value = self.term()
        while True:
            if self.accept("+"):
                value = value + self.term()
            elif self.accept("-"):
                value = value - self.term()
            else:
                return value

    def term(self):
        value = self.unary()
        while True:
            if self.accept("*"):
                value = value * self.unary()
            elif self.peek().kind == "op" and self.peek().text == "/":
                tok = self.take()
                den = self.unary()
                if den.total_degree() > 0:
                    raise self.error("division by a non-constant expression", tok)
                if den.is_zero():
                    raise self.error("division by zero", tok)
                value = value * den.coefficient((0,) * len(self.variables)).inverse()
            else:
                return value

    def unary(self):
        if self.accept("-"):
            return -self.unary()
        if self.accept("+"):
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.accept("^", "**"):
            tok = self.take()
            if tok.kind != "num":
                raise self.error("exponent must be a non-negative integer literal", tok)
            return base ** int(tok.text)
        return base

    def atom(self):
        tok = self.take()
        if tok.kind == "num":
            return self.const(Fraction(int(tok.text)))
        if tok.kind == "name":
            if tok.text in self.variables:
                return MultiPoly.variable(self.field, self.variables, self.variables.index(tok.text))
            if self.symbol is not None and tok.text == self.symbol:
                return self.const(self.field.gen)
            if tok.text in self.aliases:
                return self.const(self.aliases[tok.text])
            raise self.error(f"unknown symbol {tok.text!r}", tok, UnknownSymbol)
        if tok.kind == "op" and tok.text == "(":
            value = self.expr()
            if not self.accept(")"):
                raise self.error("expected ')'")
            return value
        if tok.kind == "end":
            raise self.error("unexpected end of expression", tok)
        raise self.error(f"unexpected {tok.text!r}", tok)


def parse_polynomial(text, field, variables=PLANE_VARS, homogeneous=False, symbol=None,
                     aliases=None, line=1, column=1):
    """Parse an expression into a MultiPoly over ``field``.

    ``symbol`` names the field generator (defaults to ``field.symbol`` for a
    proper extension); ``aliases`` maps extra names to field elements.
    ``line``/``column`` locate the text inside a larger document for errors.
    """
    if symbol is None and field.degree > 1:
        symbol = field.symbol
    poly = _Parser(text, field, variables, symbol, aliases, line, column).parse()
    if homogeneous and not poly.is_homogeneous():
        raise NonHomogeneous(f"{line}:{column}: expression is not homogeneous")
    return poly


def parse_field_element(text, field, symbol=None, aliases=None, line=1, column=1):
    poly = parse_polynomial(text, field, variables=(), symbol=symbol, aliases=aliases,
                            line=line, column=column)
    return poly.coefficient(())


# --- input document ----------------------------------------------------------------

@dataclass
class _Value:
    text: str
    line: int
    column: int


@dataclass
class InputDocument:
    field: NumberField
    symbol: str
    min_poly: tuple
    F_text: str
    G_text: str
    pencil: Pencil
    constants: dict = dc_field(default_factory=dict)

    def echo(self):
        return {
            "field": {"symbol": self.symbol, "min_poly": [str(c) for c in self.min_poly]},
            "constants": {k: v for k, v in self.constants.items()},
            "pencil": {"F": self.F_text, "G": self.G_text},
        }


_HEADER = re.compile(r"^\s*\[\s*([A-Za-z_]+)\s*\]\s*$")
_KEYVAL = re.compile(r"^\s*([A-Za-z_][A-Za-z0-9_]*)\s*=\s*(.*?)\s*$")


def _read_sections(text):
    sections = {}
    current = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0] if '"' not in raw else _strip_comment(raw)
        if not line.strip():
            continue
        m = _HEADER.match(line)
        if m:
            current = m.group(1).lower()
            if current in sections:
                raise ParseError(f"duplicate section [{current}]", lineno, 1)
            sections[current] = {}
            continue
        m = _KEYVAL.match(line)
        if not m:
            raise ParseError("expected 'key = \"value\"' or a [section] header", lineno, 1)
        if current is None:
            raise ParseError("key outside of any section", lineno, 1)
        key, val = m.group(1), m.group(2)
        col = m.start(2) + 1
        if len(val) >= 2 and val[0] == val[-1] == '"':
            val, col = val[1:-1], col + 1
        elif val.startswith('"'):
            raise ParseError("unterminated string", lineno, col)
        if key in sections[current]:
            raise ParseError(f"duplicate key {key!r}", lineno, m.start(1) + 1)
        sections[current][key] = _Value(val, lineno, col)
    return sections


def _strip_comment(raw):
    out, inside = [], False
    for ch in raw:
        if ch == '"':
            inside = not inside
        if ch == "#" and not inside:
            break
        out.append(ch)
    return "".join(out)


def _parse_min_poly(val):
    text = val.text.strip()
    offset = 0
    if text.startswith("[") and text.endswith("]"):
        text, offset = text[1:-1], 1
    coeffs = []
    pos = offset
    for part in text.split(","):
        piece = part.strip()
        try:
            coeffs.append(Fraction(piece))
        except (ValueError, ZeroDivisionError):
            col = val.column + pos + (len(part) - len(part.lstrip()))
            raise ParseError(f"bad rational coefficient {piece!r}", val.line, col) from None
        pos += len(part) + 1
    return tuple(coeffs)


def read_input(text):
    """Parse an input document into a validated Pencil."""
    sections = _read_sections(text)
    fsec = sections.get("field", {})
    symbol = fsec["symbol"].text.strip() if "symbol" in fsec else "a"
    if not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", symbol) or symbol in PLANE_VARS:
        where = fsec["symbol"] if "symbol" in fsec else _Value("", 1, 1)
        raise ParseError(f"invalid generator symbol {symbol!r}", where.line, where.column)
    if "min_poly" in fsec:
        min_poly = _parse_min_poly(fsec["min_poly"])
        field = NumberField(min_poly, symbol)
    else:
        min_poly = QQ.min_poly
        field = QQ
    unknown = set(fsec) - {"symbol", "min_poly"}
    if unknown:
        key = sorted(unknown)[0]
        raise ParseError(f"unknown key {key!r} in [field]", fsec[key].line, 1)
    gen_symbol = symbol if field.degree > 1 else None

    aliases, const_text = {}, {}
    for name, val in sections.get("constants", {}).items():
        if name in PLANE_VARS or name == symbol:
            raise ParseError(f"constant {name!r} shadows a variable or the generator", val.line, 1)
        aliases[name] = parse_field_element(val.text, field, symbol=gen_symbol, aliases=aliases,
                                            line=val.line, column=val.column)
        const_text[name] = val.text

    psec = sections.get("pencil")
    if psec is None:
        raise InputError("missing [pencil] section")
    forms = {}
    for key in ("F", "G"):
        if key not in psec:
            raise InputError(f"missing key {key} in [pencil]")
        val = psec[key]
        forms[key] = parse_polynomial(val.text, field, PLANE_VARS, homogeneous=False, symbol=gen_symbol,
                                      aliases=aliases, line=val.line, column=val.column)
        if not forms[key].is_homogeneous():
            raise NonHomogeneous(f"{val.line}:{val.column}: {key} is not homogeneous")
    pencil = Pencil(field, forms["F"], forms["G"])
    return InputDocument(field, symbol, min_poly, psec["F"].text, psec["G"].text, pencil, const_text)
