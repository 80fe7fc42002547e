"""
Surface syntax of elements::

    [x1] # [x2, x3]                 shuffle ⊔ (alias ⊔)
    P([x1]) <> [x2]                 right shift and product ⋄ (alias ⋄)
    [x1^2*x2] + (1/2)L*[x1]         coefficients in ℚ[L], L^k powers (alias λ)
    [x1 + 2, x2]                    letters are expanded multilinearly
    []                              the empty word, scalar 1 of Ш⁺

A bare coefficient c stands for c·[1], its image under the unit map.
"""

from __future__ import annotations

import json
import re

from fractions import Fraction
from typing import (
    TYPE_CHECKING,
    Any,
    Dict,
    Iterable,
    List,
    NamedTuple,
    Optional,
    Type,
    Union,
)

from tdalgebra.base import BaseElement
from tdalgebra.coefficients import LAMBDA, Coefficient
from tdalgebra.exceptions import GeneratorMismatch, ParseError, SpaceMismatch
from tdalgebra.tensors import Space, TensorElement
from tdalgebra.utils import GENERATOR_PREFIX, WEIGHT_SYMBOL

if TYPE_CHECKING:  # pragma: no cover
    from tdalgebra.products import ShuffleAlgebra

Value = Union[Coefficient, TensorElement]

ALIASES = {"⊔": "#", "⋄": "<>", "λ": WEIGHT_SYMBOL}

TOKEN_RE = re.compile(
    r"(?P<num>\d+)"
    rf"|(?P<gen>{GENERATOR_PREFIX}\d+)"
    rf"|(?P<weight>{WEIGHT_SYMBOL}|λ)"
    r"|(?P<shift>P)"
    r"|(?P<op><>|[-+*/^#()\[\],]|⊔|⋄)"
)

DESCRIPTIONS = {
    "num": "<number>",
    "gen": "<generator>",
    "end": "<end of input>",
}


class Token(NamedTuple):
    type: str
    value: Any
    where: int


def _byte_offset(source: str, index: int) -> int:
    return len(source[:index].encode("utf-8"))


def tokenize(source: str) -> List[Token]:
    tokens = []
    index = 0
    while index < len(source):
        if source[index].isspace():
            index += 1
            continue
        match = TOKEN_RE.match(source, index)
        if match is None:
            raise ParseError(
                source,
                _byte_offset(source, index),
                f"unexpected character {source[index]!r}",
            )
        kind = match.lastgroup
        text = match.group()
        where = _byte_offset(source, index)
        if kind == "num":
            tokens.append(Token("num", int(text), where))
        elif kind == "gen":
            tokens.append(Token("gen", int(text[len(GENERATOR_PREFIX) :]), where))
        elif kind == "weight":
            tokens.append(Token(WEIGHT_SYMBOL, text, where))
        elif kind == "shift":
            tokens.append(Token("P", text, where))
        else:
            op = ALIASES.get(text, text)
            tokens.append(Token(op, text, where))
        index = match.end()
    tokens.append(Token("end", None, _byte_offset(source, len(source))))
    return tokens


# ---------------------------------- Symbols --------------------------------- #


class Symbol:
    """A node of the expression tree, built by top-down operator precedence"""

    id = ""
    lbp = 0

    def __init__(self, parser: Parser, token: Token) -> None:
        self.parser = parser
        self.token = token
        self.first: Optional[Symbol] = None
        self.second: Optional[Symbol] = None

    @property
    def where(self) -> int:
        return self.token.where

    def describe(self) -> str:
        if self.id in DESCRIPTIONS:
            return DESCRIPTIONS[self.id]
        return f"'{self.token.value}'"

    def nud(self) -> Symbol:
        raise self.parser.error(
            self, f"unexpected {self.describe()}", self.parser.prefix_ids()
        )

    def led(self, left: Symbol) -> Symbol:
        raise self.parser.error(
            self, f"unexpected {self.describe()}", self.parser.infix_ids()
        )

    def eval(self) -> Value:
        raise NotImplementedError

    def __repr__(self) -> str:
        parts = [repr(p) for p in (self.first, self.second) if p is not None]
        return f"({self.id} {' '.join(parts)})" if parts else f"{self.id}"


class Literal(Symbol):
    def nud(self) -> Symbol:
        return self


class Infix(Symbol):
    def led(self, left: Symbol) -> Symbol:
        self.first = left
        self.second = self.parser.expression(self.lbp)
        return self

    def eval(self) -> Value:
        try:
            return self.combine(self.first.eval(), self.second.eval())  # type: ignore
        except (SpaceMismatch, GeneratorMismatch) as error:
            raise self.parser.error(self, str(error)) from error

    def combine(self, left: Value, right: Value) -> Value:
        raise NotImplementedError


class Parser:
    """
    Pratt parser over the token list of one source string. ``algebra`` is
    needed for words and the operator P; coefficient-only input can be
    parsed without it.
    """

    def __init__(self, algebra: Optional[ShuffleAlgebra] = None) -> None:
        self.algebra = algebra
        self.source = ""
        self.tokens: Iterable[Token] = iter([])
        self.token: Any = None
        self.symbol_table: Dict[str, Type[Symbol]] = dict(SYMBOLS)
        self._end: Optional[Token] = None

    # --------------------------------------------------------------- Driving

    def error(
        self, symbol: Symbol, message: str, expected: Iterable[str] = ()
    ) -> ParseError:
        return ParseError(self.source, symbol.where, message, expected)

    def prefix_ids(self) -> List[str]:
        return self._describe(
            sid for sid, cls in self.symbol_table.items() if cls.nud is not Symbol.nud
        )

    def infix_ids(self) -> List[str]:
        ids = [
            sid for sid, cls in self.symbol_table.items() if cls.led is not Symbol.led
        ]
        return self._describe(ids + ["end"])

    @staticmethod
    def _describe(ids: Iterable[str]) -> List[str]:
        return sorted(DESCRIPTIONS.get(sid, f"'{sid}'") for sid in ids)

    def expression(self, rbp: int) -> Symbol:
        token = self.token
        self.advance()
        left = token.nud()
        while rbp < self.token.lbp:
            token = self.token
            self.advance()
            left = token.led(left)
        return left

    def advance(self, expected_id: Optional[str] = None) -> Symbol:
        if expected_id is not None and self.token.id != expected_id:
            raise self.error(
                self.token,
                f"expected '{expected_id}', found {self.token.describe()}",
                self._describe([expected_id]),
            )
        token = next(self.tokens, self._end)  # type: ignore[call-overload]
        self.token = self.symbol_table[token.type](self, token)
        return self.token

    def parse(self, source: str) -> Symbol:
        """Parse ``source`` into an expression tree"""
        self.source = source
        tokens = tokenize(source)
        self._end = tokens[-1]
        self.tokens = iter(tokens)
        try:
            self.advance()
            tree = self.expression(0)
            if self.token.id != "end":
                raise self.error(
                    self.token, f"unexpected {self.token.describe()}", self.infix_ids()
                )
            return tree
        finally:
            self.tokens = iter([])

    def require_algebra(self, symbol: Symbol) -> ShuffleAlgebra:
        if self.algebra is None:
            raise self.error(symbol, "words are not allowed in a coefficient")
        return self.algebra

    def as_element(self, value: Value) -> TensorElement:
        if isinstance(value, Coefficient):
            return self.algebra.unit(value)  # type: ignore[union-attr]
        return value

    # --------------------------------------------------------------- Letters

    def letter_sum(self) -> BaseElement:
        value = self.letter_term()
        while self.token.id in ("+", "-"):
            sign = self.token.id
            self.advance()
            term = self.letter_term()
            value = value + term if sign == "+" else value - term
        return value

    def letter_term(self) -> BaseElement:
        negative = self.token.id == "-"
        if negative:
            self.advance()
        value = self.letter_power()
        while True:
            if self.token.id == "*":
                self.advance()
                value = value * self.letter_power()
            elif self.token.id == "/":
                symbol = self.token
                self.advance()
                divisor = self.letter_power()
                inverse = Coefficient.constant(1) / self._scalar(symbol, divisor)
                value = value.scale(inverse)
            elif self.token.id in LETTER_STARTS:
                value = value * self.letter_power()
            else:
                break
        return -value if negative else value

    def letter_power(self) -> BaseElement:
        value = self.letter_atom()
        if self.token.id == "^":
            self.advance()
            power = self.token
            self.advance("num")
            result = self.algebra.base.unit()  # type: ignore[union-attr]
            for _ in range(power.token.value):
                result = result * value
            value = result
        return value

    def letter_atom(self) -> BaseElement:
        symbol = self.token
        base = self.algebra.base  # type: ignore[union-attr]
        if symbol.id == "num":
            self.advance()
            return base.unit().scale(symbol.token.value)
        if symbol.id == WEIGHT_SYMBOL:
            self.advance()
            return base.unit().scale(LAMBDA)
        if symbol.id == "gen":
            self.advance()
            index = symbol.token.value
            if not 1 <= index <= base.nvars:
                raise self.error(
                    symbol,
                    f"unknown generator {GENERATOR_PREFIX}{index} "
                    f"(this algebra has {GENERATOR_PREFIX}1.."
                    f"{GENERATOR_PREFIX}{base.nvars})",
                )
            return base.generator(index)
        if symbol.id == "(":
            self.advance()
            value = self.letter_sum()
            self.advance(")")
            return value
        raise self.error(
            symbol,
            f"expected a monomial, found {symbol.describe()}",
            self._describe(LETTER_STARTS),
        )

    def _scalar(self, symbol: Symbol, value: BaseElement) -> Coefficient:
        unit = self.algebra.base.one()  # type: ignore[union-attr]
        items = value.items()
        if len(items) != 1 or items[0][0] != unit or not items[0][1].is_constant():
            raise self.error(symbol, "can only divide by a nonzero rational")
        return items[0][1]


# Tokens a letter factor may start with
LETTER_STARTS = ("num", WEIGHT_SYMBOL, "gen", "(")


class Number(Literal):
    def eval(self) -> Value:
        return Coefficient.constant(self.token.value)


class Weight(Symbol):
    """L, L^k, and implicit multiplication as in (1/2)L"""

    power = 1

    def _power(self) -> None:
        if self.parser.token.id == "^":
            self.parser.advance()
            exponent = self.parser.token
            self.parser.advance("num")
            self.power = exponent.token.value

    def nud(self) -> Symbol:
        self._power()
        return self

    def led(self, left: Symbol) -> Symbol:
        self.first = left
        self._power()
        return self

    def eval(self) -> Value:
        value: Value = LAMBDA**self.power
        if self.first is not None:
            left = self.first.eval()
            if not isinstance(left, Coefficient):
                raise self.parser.error(self, "L must follow a coefficient")
            value = left * value
        return value


class Generator(Symbol):
    def nud(self) -> Symbol:
        raise self.parser.error(self, "generators must appear inside a word, e.g. [x1]")


class WordLiteral(Symbol):
    """``[letter, letter, ...]`` or ``[]``"""

    def nud(self) -> Symbol:
        parser = self.parser
        parser.require_algebra(self)
        letters: List[BaseElement] = []
        if parser.token.id != "]":
            letters.append(parser.letter_sum())
            while parser.token.id == ",":
                parser.advance()
                letters.append(parser.letter_sum())
        parser.advance("]")
        space = Space.LAMBDA if letters else Space.PLUS
        self.value = TensorElement.from_pure(letters, space)
        return self

    def eval(self) -> Value:
        return self.value


class Group(Symbol):
    def nud(self) -> Symbol:
        expression = self.parser.expression(0)
        self.parser.advance(")")
        return expression


class Shift(Symbol):
    """``P(expression)``"""

    def nud(self) -> Symbol:
        parser = self.parser
        parser.require_algebra(self)
        parser.advance("(")
        if parser.token.id == ")":
            raise parser.error(parser.token, "P takes exactly one argument")
        self.first = parser.expression(0)
        if parser.token.id == ",":
            raise parser.error(parser.token, "P takes exactly one argument", ["')'"])
        parser.advance(")")
        return self

    def eval(self) -> Value:
        element = self.parser.as_element(self.first.eval())  # type: ignore[union-attr]
        try:
            return self.parser.algebra.p_shift(element.to_lambda())  # type: ignore
        except SpaceMismatch as error:
            raise self.parser.error(self, str(error)) from error


class Plus(Infix):
    def combine(self, left: Value, right: Value) -> Value:
        if isinstance(left, Coefficient) and isinstance(right, Coefficient):
            return left + right
        left, right = _same_space(self.parser, left, right)
        return left + right


class Minus(Infix):
    def nud(self) -> Symbol:
        self.first = self.parser.expression(25)
        return self

    def eval(self) -> Value:
        if self.second is None:
            return -self.first.eval()  # type: ignore[union-attr]
        return super().eval()

    def combine(self, left: Value, right: Value) -> Value:
        if isinstance(left, Coefficient) and isinstance(right, Coefficient):
            return left - right
        left, right = _same_space(self.parser, left, right)
        return left - right


class Times(Infix):
    def combine(self, left: Value, right: Value) -> Value:
        if isinstance(left, Coefficient):
            return right * left
        if isinstance(right, Coefficient):
            return left * right
        raise self.parser.error(self, "use '<>' or '#' to multiply two elements")


class Divide(Infix):
    def combine(self, left: Value, right: Value) -> Value:
        if not isinstance(right, Coefficient) or not right.is_constant() or not right:
            raise self.parser.error(self, "can only divide by a nonzero rational")
        if isinstance(left, Coefficient):
            return left / right
        return left.scale(Coefficient.constant(Fraction(1) / right.constant_term))


class ShuffleProduct(Infix):
    def combine(self, left: Value, right: Value) -> Value:
        algebra = self.parser.require_algebra(self)
        as_element = self.parser.as_element
        return algebra.shuffle(as_element(left), as_element(right))


class DiamondProduct(Infix):
    def combine(self, left: Value, right: Value) -> Value:
        algebra = self.parser.require_algebra(self)
        left = self.parser.as_element(left).to_lambda()
        right = self.parser.as_element(right).to_lambda()
        return algebra.diamond(left, right)


def _same_space(parser: Parser, left: Value, right: Value):
    left, right = parser.as_element(left), parser.as_element(right)
    if left.space is not right.space:
        left, right = left.to_plus(), right.to_plus()
    return left, right


# Symbol id: (left binding power, class)
_BINDINGS: Dict[str, tuple] = {
    "end": (0, Symbol),
    ",": (0, Symbol),
    ")": (0, Symbol),
    "]": (0, Symbol),
    "^": (0, Symbol),
    "num": (0, Number),
    "gen": (0, Generator),
    "[": (0, WordLiteral),
    "(": (0, Group),
    "P": (0, Shift),
    "+": (10, Plus),
    "-": (10, Minus),
    "#": (20, ShuffleProduct),
    "<>": (20, DiamondProduct),
    "*": (30, Times),
    "/": (30, Divide),
    WEIGHT_SYMBOL: (30, Weight),
}
SYMBOLS: Dict[str, Type[Symbol]] = {
    sid: type(cls.__name__, (cls,), {"id": sid, "lbp": lbp})
    for sid, (lbp, cls) in _BINDINGS.items()
}


# ---------------------------------- Helpers --------------------------------- #


def parse(source: str, algebra: Optional[ShuffleAlgebra] = None) -> Symbol:
    return Parser(algebra).parse(source)


def evaluate(source: str, algebra: ShuffleAlgebra) -> Value:
    """Parse and elaborate, keeping coefficients as coefficients"""
    return parse(source, algebra).eval()


def parse_element(source: str, algebra: ShuffleAlgebra) -> TensorElement:
    parser = Parser(algebra)
    return parser.as_element(parser.parse(source).eval())


def parse_coefficient(source: str) -> Coefficient:
    parser = Parser()
    value = parser.parse(source).eval()
    if not isinstance(value, Coefficient):  # pragma: no cover
        raise ParseError(source, 0, "expected a coefficient")
    return value


def parse_json(data: Union[str, list], algebra: ShuffleAlgebra) -> TensorElement:
    """Inverse of the JSON rendering of a TensorElement"""
    if isinstance(data, str):
        try:
            data = json.loads(data)
        except json.JSONDecodeError as error:
            raise ParseError(data, error.pos, f"invalid JSON: {error.msg}") from error
    if not isinstance(data, list):
        raise TypeError("Expected a JSON array of terms")
    terms: Dict[tuple, Coefficient] = {}
    for term in data:
        word = tuple(tuple(letter) for letter in term["word"])
        for letter in word:
            algebra.base.validate_monomial(letter)
        terms[word] = terms.get(word, Coefficient()) + parse_coefficient(term["coeff"])
    space = Space.PLUS if () in terms else Space.LAMBDA
    return TensorElement(terms, space)
