"""
Pratt parser for superpolynomial expressions.

    expr   := term (('+' | '-') term)*
    term   := factor ('*'? factor)*          juxtaposition multiplies
    factor := integer | name | '(' expr ')' | factor '^' integer | '-' factor

'/' divides by a nonzero constant only, so rationals are written 1/2*x.
Names resolve to ring variables and to bound elements of the active ring.
"""

from __future__ import annotations

import re
from typing import Any, Iterator, NamedTuple

from algebra.grassmann import Ambient, SuperPolynomial
from errors import ParseError

IMPLICIT_LBP = 20


class Token(NamedTuple):
    type: str
    value: Any
    where: tuple[int, int]


_TOKENS = {
    "name": r"[A-Za-z_][A-Za-z0-9_]*",
    "num": r"\d+",
    "op": r"[+\-*/^(),]",
    "skip": r"[ \t]+",
    "error": r".",
}
_REGEX = re.compile("|".join(f"(?P<{name}>{text})" for name, text in _TOKENS.items()))


def tokenize(source: str, line: int = 1) -> Iterator[Token]:
    for mo in _REGEX.finditer(source):
        kind = str(mo.lastgroup)
        value = mo.group()
        where = mo.start(), mo.end()
        if kind == "skip":
            continue
        if kind == "error":
            raise ParseError(source, where, f"unexpected character '{value}'", line)
        if kind == "num":
            value = int(value)
        yield Token(kind, value, where)


class Symbol:
    id = ""
    lbp = 0
    starts_factor = False

    def __init__(self, parser: "Parser", value: Any = None, where: tuple[int, int] = (0, 0)):
        self.parser = parser
        self.value = self.id if value is None else value
        self.where = where
        self.first = None
        self.second = None

    def nud(self) -> "Symbol":
        raise self.parser.error(self, f"unexpected '{self.value}'")

    def led(self, left: "Symbol") -> "Symbol":
        raise self.parser.error(self, f"unexpected '{self.value}'")

    def evaluate(self, scope: "Scope") -> SuperPolynomial:
        raise NotImplementedError


class Literal(Symbol):
    starts_factor = True

    def nud(self) -> Symbol:
        return self


class Infix(Symbol):
    right_assoc = False

    def led(self, left: Symbol) -> Symbol:
        self.first = left
        self.second = self.parser.expression(self.lbp - int(self.right_assoc))
        return self


class Parser:
    def __init__(self) -> None:
        self.source = ""
        self.line = 1
        self.symbol_table: dict[str, type[Symbol]] = {}
        self.define("end")
        self.tokens: Iterator[Token] = iter([])
        self.token: Any = None

    def define(self, sid: str, lbp: int = 0, symbol_class=Symbol):
        self.symbol_table[sid] = type(symbol_class.__name__, (symbol_class,), {"id": sid, "lbp": lbp})

        def wrapper(cls: type[Symbol]) -> type[Symbol]:
            cls.id = sid
            cls.lbp = lbp
            self.symbol_table[sid] = cls
            return cls

        return wrapper

    def error(self, symbol: Symbol, message: str) -> ParseError:
        return ParseError(self.source, symbol.where, message, self.line)

    def expression(self, rbp: int) -> Symbol:
        tok = self.token
        self.advance()
        left = tok.nud()
        while True:
            tok = self.token
            if rbp < tok.lbp:
                self.advance()
                left = tok.led(left)
            elif tok.starts_factor and rbp < IMPLICIT_LBP:
                left = Times(self, "*", tok.where).led(left)
            else:
                return left

    def advance(self, value: str | None = None) -> Symbol:
        symbol = self.token
        if value and symbol.value != value:
            raise self.error(symbol, f"expected '{value}'")
        try:
            token = next(self.tokens)
            if token.type in self.symbol_table:
                symbol_class = self.symbol_table[token.type]
            elif token.value in self.symbol_table:
                symbol_class = self.symbol_table[token.value]
            else:
                raise ParseError(self.source, token.where, f"unknown symbol '{token.value}'", self.line)
            self.token = symbol_class(self, token.value, token.where)
        except StopIteration:
            end = len(self.source)
            self.token = self.symbol_table["end"](self, "end of input", (end, end + 1))
        return self.token

    def parse(self, source: str, tokens: list[Token], line: int = 1) -> Symbol:
        try:
            self.source, self.line = source, line
            self.tokens = iter(tokens)
            self.advance()
            tree = self.expression(0)
            if self.token.id != "end":
                raise self.error(self.token, f"unexpected '{self.token.value}'")
            return tree
        finally:
            self.tokens = iter([])
            self.token = None


class Scope(NamedTuple):
    ambient: Ambient
    names: dict


expr_parser = Parser()
expr_parser.define(",")
expr_parser.define(")")


@expr_parser.define("num")
class Number(Literal):
    def evaluate(self, scope: Scope) -> SuperPolynomial:
        return SuperPolynomial.constant(scope.ambient, self.value)


@expr_parser.define("name")
class Reference(Literal):
    def evaluate(self, scope: Scope) -> SuperPolynomial:
        try:
            return scope.names[self.value]
        except KeyError:
            raise self.parser.error(self, f"unknown variable '{self.value}'") from None


@expr_parser.define("+", 10)
class Plus(Infix):
    def evaluate(self, scope: Scope) -> SuperPolynomial:
        return self.first.evaluate(scope) + self.second.evaluate(scope)


@expr_parser.define("-", 10)
class Minus(Infix):
    def nud(self) -> Symbol:
        self.first = self.parser.expression(25)
        return self

    def evaluate(self, scope: Scope) -> SuperPolynomial:
        if self.second is None:
            return -self.first.evaluate(scope)
        return self.first.evaluate(scope) - self.second.evaluate(scope)


@expr_parser.define("*", IMPLICIT_LBP)
class Times(Infix):
    def evaluate(self, scope: Scope) -> SuperPolynomial:
        return self.first.evaluate(scope) * self.second.evaluate(scope)


@expr_parser.define("/", IMPLICIT_LBP)
class Divide(Infix):
    def evaluate(self, scope: Scope) -> SuperPolynomial:
        numerator = self.first.evaluate(scope)
        divisor = self.second.evaluate(scope)
        if not divisor.is_even_only() or not divisor.component(0).is_ground:
            raise self.parser.error(self, "division is only by nonzero constants")
        c = divisor.component(0).LC if divisor else None
        if not c:
            raise self.parser.error(self, "division by zero")
        K = scope.ambient.field.domain
        return numerator.scale(K.quo(K.one, c))


@expr_parser.define("^", 30)
class Power(Infix):
    right_assoc = True

    def led(self, left: Symbol) -> Symbol:
        super().led(left)
        if not isinstance(self.second, Number):
            raise self.parser.error(self.second, "exponent must be a natural number")
        return self

    def evaluate(self, scope: Scope) -> SuperPolynomial:
        return self.first.evaluate(scope) ** self.second.value


@expr_parser.define("(")
class Group(Symbol):
    starts_factor = True

    def nud(self) -> Symbol:
        expr = self.parser.expression(0)
        self.parser.advance(")")
        return expr


def variable_scope(ambient: Ambient, bound: dict | None = None) -> Scope:
    """Scope with the ring's variables plus bound elements (variables win)."""
    names = dict(bound or {})
    for i, name in enumerate(ambient.evens):
        names[name] = SuperPolynomial.even_variable(ambient, i)
    for i, name in enumerate(ambient.odds, 1):
        names[name] = SuperPolynomial.odd_variable(ambient, i)
    return Scope(ambient, names)


def parse_expr(text: str, scope: Scope | Ambient, line: int = 1) -> SuperPolynomial:
    if isinstance(scope, Ambient):
        scope = variable_scope(scope)
    tokens = list(tokenize(text, line))
    if not tokens:
        raise ParseError(text, (0, 1), "empty expression", line)
    return expr_parser.parse(text, tokens, line).evaluate(scope)


def split_top_level(text: str, separator: str = ",") -> list[tuple[str, int]]:
    """Split on separator outside parentheses; returns (piece, start) pairs."""
    pieces, depth, start = [], 0, 0
    for i, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == separator and depth == 0:
            pieces.append((text[start:i], start))
            start = i + 1
    pieces.append((text[start:], start))
    return pieces


def is_generator_list(text: str) -> bool:
    """True when text is one parenthesized group '( ... )'."""
    text = text.strip()
    if not text.startswith("("):
        return False
    depth = 0
    for i, ch in enumerate(text):
        depth += (ch == "(") - (ch == ")")
        if depth == 0:
            return i == len(text) - 1
    return False


def parse_generator_list(text: str, scope: Scope | Ambient, line: int = 1) -> list[SuperPolynomial]:
    """Parse '(g1, g2, ...)'; zero generators are dropped, so '()' and '(0)' are empty."""
    lead = len(text) - len(text.lstrip())
    if not is_generator_list(text):
        raise ParseError(text, (lead, lead + 1), "expected a generator list '(g1, g2, ...)'", line)
    inner = text.strip()[1:-1]
    if not inner.strip():
        return []
    out = []
    for piece, start in split_top_level(inner):
        shift = lead + 1 + start
        if not piece.strip():
            raise ParseError(text, (shift, shift + 1), "empty generator", line)
        try:
            g = parse_expr(piece, scope, line)
        except ParseError as exc:
            raise exc.shifted(text, shift) from None
        if g:
            out.append(g)
    return out
