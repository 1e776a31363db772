"""Formal words in the operator generators: AST, lexer, parser, printer.

The grammar covers integer and rational literals, the parameter ``c``, the
grading variable ``t`` (for polynomial text), the generators ``x``, ``D``,
``e+``, ``e-``, ``s``, grouping parentheses and the operations ``^`` (integer
power, tightest), unary minus, ``*`` (noncommutative product) and binary
``+``/``-``.  Whitespace between tokens is insignificant; ``e+``/``e-`` and
rational literals ``a/b`` are single lexemes.  Implicit multiplication is
rejected so the grammar stays LL(1) and errors stay precise.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union


class ParseError(ValueError):
    """Syntax error with byte offset and the tokens that were expected."""

    def __init__(self, message: str, position: int, expected: tuple[str, ...] = ()):
        self.position = position
        self.expected = tuple(expected)
        detail = f"{message} at offset {position}"
        if expected:
            detail += f" (expected one of: {', '.join(expected)})"
        super().__init__(detail)


# -- AST ----------------------------------------------------------------------


@dataclass(frozen=True)
class Lit:
    value: Fraction


@dataclass(frozen=True)
class Sym:
    name: str  # one of: c t x D e+ e- s


@dataclass(frozen=True)
class Neg:
    operand: "Word"


@dataclass(frozen=True)
class Add:
    left: "Word"
    right: "Word"


@dataclass(frozen=True)
class Sub:
    left: "Word"
    right: "Word"


@dataclass(frozen=True)
class Mul:
    left: "Word"
    right: "Word"


@dataclass(frozen=True)
class Pow:
    base: "Word"
    exponent: int


Word = Union[Lit, Sym, Neg, Add, Sub, Mul, Pow]

GENERATOR_NAMES = ("x", "D", "e+", "e-", "s")
SYMBOL_NAMES = GENERATOR_NAMES + ("c", "t")


# -- lexer --------------------------------------------------------------------


@dataclass(frozen=True)
class _Token:
    kind: str  # INT SYM ( ) ^ * + - / END
    text: str
    position: int


def _tokenize(source: str) -> list[_Token]:
    tokens = []
    i = 0
    n = len(source)
    while i < n:
        ch = source[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            start = i
            while i < n and source[i].isdigit():
                i += 1
            tokens.append(_Token("INT", source[start:i], start))
            continue
        if ch == "e":
            if i + 1 < n and source[i + 1] in "+-":
                tokens.append(_Token("SYM", "e" + source[i + 1], i))
                i += 2
                continue
            raise ParseError("'e' must be followed immediately by '+' or '-'", i)
        if ch in "ctxDs":
            tokens.append(_Token("SYM", ch, i))
            i += 1
            continue
        if ch in "()^*+-/":
            tokens.append(_Token(ch, ch, i))
            i += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", i)
    tokens.append(_Token("END", "", n))
    return tokens


# -- parser -------------------------------------------------------------------
#
# expr  := term (('+'|'-') term)*
# term  := unary ('*' unary)*
# unary := '-' unary | power
# power := atom ('^' ['-'] INT)?
# atom  := INT ('/' INT)? | SYM | '(' expr ')'


class _Parser:
    def __init__(self, tokens: list[_Token]):
        self.tokens = tokens
        self.index = 0

    def peek(self) -> _Token:
        return self.tokens[self.index]

    def advance(self) -> _Token:
        tok = self.tokens[self.index]
        self.index += 1
        return tok

    def expect(self, kind: str) -> _Token:
        tok = self.peek()
        if tok.kind != kind:
            raise ParseError(f"unexpected {tok.kind or 'end'}", tok.position, (kind,))
        return self.advance()

    def parse(self) -> Word:
        node = self.expr()
        tok = self.peek()
        if tok.kind != "END":
            raise ParseError(
                f"unexpected {tok.text!r}", tok.position, ("+", "-", "*", "^", "end")
            )
        return node

    def expr(self) -> Word:
        node = self.term()
        while self.peek().kind in ("+", "-"):
            op = self.advance()
            rhs = self.term()
            node = Add(node, rhs) if op.kind == "+" else Sub(node, rhs)
        return node

    def term(self) -> Word:
        node = self.unary()
        while True:
            tok = self.peek()
            if tok.kind == "*":
                self.advance()
                node = Mul(node, self.unary())
            elif tok.kind in ("INT", "SYM", "("):
                raise ParseError(
                    "implicit multiplication is not allowed", tok.position, ("*",)
                )
            else:
                return node

    def unary(self) -> Word:
        if self.peek().kind == "-":
            self.advance()
            return Neg(self.unary())
        return self.power()

    def power(self) -> Word:
        base = self.atom()
        if self.peek().kind == "^":
            self.advance()
            sign = 1
            if self.peek().kind == "-":
                self.advance()
                sign = -1
            tok = self.expect("INT")
            return Pow(base, sign * int(tok.text))
        return base

    def atom(self) -> Word:
        tok = self.peek()
        if tok.kind == "INT":
            self.advance()
            if self.peek().kind == "/":
                self.advance()
                den = self.expect("INT")
                if int(den.text) == 0:
                    raise ParseError("zero denominator", den.position)
                return Lit(Fraction(int(tok.text), int(den.text)))
            return Lit(Fraction(int(tok.text)))
        if tok.kind == "SYM":
            self.advance()
            return Sym(tok.text)
        if tok.kind == "(":
            self.advance()
            node = self.expr()
            self.expect(")")
            return node
        raise ParseError(
            f"unexpected {tok.text or 'end of input'!r}",
            tok.position,
            ("INT", "SYM", "("),
        )


def parse(source: str) -> Word:
    """Parse an operator or polynomial expression into its AST."""
    return _Parser(_tokenize(source)).parse()


# -- printer ------------------------------------------------------------------

_LEVEL_ADD = 1
_LEVEL_MUL = 2
_LEVEL_UNARY = 3
_LEVEL_POW = 4
_LEVEL_ATOM = 5


def _level(word: Word) -> int:
    if isinstance(word, (Lit, Sym)):
        return _LEVEL_ATOM
    if isinstance(word, Pow):
        return _LEVEL_POW
    if isinstance(word, Neg):
        return _LEVEL_UNARY
    if isinstance(word, Mul):
        return _LEVEL_MUL
    return _LEVEL_ADD


def _wrap(word: Word, minimum: int) -> str:
    text = print_word(word)
    return f"({text})" if _level(word) < minimum else text


def print_word(word: Word) -> str:
    """Render an AST back to parseable text (inverse of :func:`parse`)."""
    if isinstance(word, Lit):
        v = word.value
        return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"
    if isinstance(word, Sym):
        return word.name
    if isinstance(word, Neg):
        return "-" + _wrap(word.operand, _LEVEL_UNARY)
    if isinstance(word, Pow):
        return f"{_wrap(word.base, _LEVEL_ATOM)}^{word.exponent}"
    if isinstance(word, Mul):
        return f"{_wrap(word.left, _LEVEL_MUL)} * {_wrap(word.right, _LEVEL_UNARY)}"
    if isinstance(word, Add):
        return f"{_wrap(word.left, _LEVEL_ADD)} + {_wrap(word.right, _LEVEL_MUL)}"
    if isinstance(word, Sub):
        return f"{_wrap(word.left, _LEVEL_ADD)} - {_wrap(word.right, _LEVEL_MUL)}"
    raise TypeError(f"not a word: {word!r}")


def as_action_poly(word: Word):
    """Evaluate a commutative ``c``/``t`` word into an :class:`ActionPoly`.

    Operator generators are rejected; this is the reading path for polynomial
    text produced by the polynomial printers.
    """
    from .poly import ActionPoly, CoefPoly

    def ev(node) -> ActionPoly:
        if isinstance(node, Lit):
            return ActionPoly(node.value)
        if isinstance(node, Sym):
            if node.name == "c":
                return ActionPoly(CoefPoly({1: 1}))
            if node.name == "t":
                return ActionPoly({1: 1})
            raise ValueError(f"{node.name!r} is not allowed in a polynomial")
        if isinstance(node, Neg):
            return -ev(node.operand)
        if isinstance(node, Add):
            return ev(node.left) + ev(node.right)
        if isinstance(node, Sub):
            return ev(node.left) - ev(node.right)
        if isinstance(node, Mul):
            return ev(node.left) * ev(node.right)
        if isinstance(node, Pow):
            if node.exponent < 0:
                raise ValueError("negative power in a polynomial")
            return ev(node.base) ** node.exponent
        raise TypeError(f"not a word: {node!r}")

    return ev(word)
