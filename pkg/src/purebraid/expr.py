"""A small expression language for pure braids.

    expr := term { term }
    term := atom [ '^' signed-int ]
    atom := 'p[' int ',' int ']' | '[' expr ',' expr ']' | '(' expr ')'

Juxtaposition is multiplication and [x, y] means x^-1 y^-1 x y. An expr with
a single term is that term itself, so "(p[1,2])" parses to Gen(1, 2).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Union

from .braid import BraidWord, PureGenerator, concat, identity, invert
from .commutator import Bracket, Leaf, Tree


@dataclass(frozen=True)
class Gen:
    a: int
    b: int

    def __post_init__(self):
        if not 1 <= self.a < self.b:
            raise ValueError(f"need 1 <= a < b, got p[{self.a},{self.b}]")


@dataclass(frozen=True)
class Power:
    base: Expr
    exp: int

    def __post_init__(self):
        if self.exp == 0:
            raise ValueError("exponent must be nonzero")


@dataclass(frozen=True)
class Product:
    items: tuple[Expr, ...] = ()


@dataclass(frozen=True)
class Commutator:
    left: Expr
    right: Expr


Expr = Union[Gen, Power, Product, Commutator]


class ParseError(ValueError):
    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} at position {pos}")
        self.pos = pos


_TOKEN = re.compile(r"\s*(?:(?P<int>[+-]?\d+)|(?P<sym>[][(),^p]))")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens, pos = [], 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if m is None:
            bad = len(text) - len(text[pos:].lstrip())
            raise ParseError(f"unexpected character {text[bad]!r}", bad)
        kind = "int" if m.group("int") is not None else "sym"
        tokens.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self) -> tuple[str, str, int]:
        return self.tokens[self.i]

    def take(self, value: str | None = None, kind: str = "sym") -> tuple[str, str, int]:
        tok = self.peek()
        if tok[0] != kind or (value is not None and tok[1] != value):
            want = value if value is not None else kind
            got = tok[1] or "end of input"
            raise ParseError(f"expected {want!r}, got {got!r}", tok[2])
        self.i += 1
        return tok

    def expr(self) -> Expr:
        items = []
        while self.peek()[1] in ("p", "[", "("):
            items.append(self.term())
        return items[0] if len(items) == 1 else Product(tuple(items))

    def term(self) -> Expr:
        base = self.atom()
        if self.peek()[1] != "^":
            return base
        self.take("^")
        _, value, pos = self.take(kind="int")
        if int(value) == 0:
            raise ParseError("exponent must be nonzero", pos)
        return Power(base, int(value))

    def atom(self) -> Expr:
        _, sym, pos = self.peek()
        if sym == "p":
            self.take("p")
            self.take("[")
            a = self._index()
            self.take(",")
            b = self._index()
            self.take("]")
            if a >= b:
                raise ParseError(f"need a < b in p[{a},{b}]", pos)
            return Gen(a, b)
        if sym == "[":
            self.take("[")
            left = self.expr()
            self.take(",")
            right = self.expr()
            self.take("]")
            return Commutator(left, right)
        self.take("(")
        inner = self.expr()
        self.take(")")
        return inner

    def _index(self) -> int:
        _, value, pos = self.take(kind="int")
        if not value.isdigit() or int(value) < 1:
            raise ParseError(f"strand index must be a positive integer, got {value}", pos)
        return int(value)


def max_index(e: Expr) -> int:
    if isinstance(e, Gen):
        return e.b
    if isinstance(e, Power):
        return max_index(e.base)
    if isinstance(e, Commutator):
        return max(max_index(e.left), max_index(e.right))
    return max((max_index(x) for x in e.items), default=0)


def parse(text: str, n: int | None = None) -> Expr:
    """Parse text; with n given, every index must be at most n."""
    p = _Parser(text)
    e = p.expr()
    p.take(kind="end")
    if n is not None and max_index(e) > n:
        raise ValueError(f"index {max_index(e)} exceeds n={n}")
    return e


def infer_n(e: Expr, n: int | None = None) -> int:
    """The given n, or the largest index mentioned (at least 1)."""
    m = max_index(e)
    if n is None:
        return max(m, 1)
    if m > n:
        raise ValueError(f"index {m} exceeds n={n}")
    return n


def to_text(e: Expr) -> str:
    """Print e so that parse(to_text(e)) == e."""
    if isinstance(e, Gen):
        return f"p[{e.a},{e.b}]"
    if isinstance(e, Commutator):
        return f"[{to_text(e.left)},{to_text(e.right)}]"
    if isinstance(e, Power):
        inner = to_text(e.base)
        if not isinstance(e.base, (Gen, Commutator)):
            inner = f"({inner})"
        return f"{inner}^{e.exp}"
    parts = []
    for x in e.items:
        s = to_text(x)
        # a nested product would otherwise merge into this one
        parts.append(f"({s})" if isinstance(x, Product) else s)
    return " ".join(parts)


def lower_to_word(e: Expr, n: int) -> BraidWord:
    if isinstance(e, Gen):
        if e.b > n:
            raise ValueError(f"p[{e.a},{e.b}] out of range for n={n}")
        return BraidWord(n, (PureGenerator(e.a, e.b),))
    if isinstance(e, Power):
        w = lower_to_word(e.base, n)
        if e.exp < 0:
            w = invert(w)
        return concat(identity(n), *[w] * abs(e.exp))
    if isinstance(e, Commutator):
        x, y = lower_to_word(e.left, n), lower_to_word(e.right, n)
        return concat(invert(x), invert(y), x, y)
    return concat(identity(n), *(lower_to_word(x, n) for x in e.items))


def to_tree(e: Expr, n: int) -> Tree:
    """The commutator tree of e; leaves must be generators or their inverses."""
    if isinstance(e, Gen):
        return Leaf(PureGenerator(e.a, e.b), n)
    if isinstance(e, Power) and isinstance(e.base, Gen) and abs(e.exp) == 1:
        return Leaf(PureGenerator(e.base.a, e.base.b, e.exp), n)
    if isinstance(e, Commutator):
        return Bracket(to_tree(e.left, n), to_tree(e.right, n))
    raise ValueError(f"{to_text(e)!r} is not a commutator tree")


def from_tree(t: Tree) -> Expr:
    if isinstance(t, Leaf):
        g = Gen(t.gen.a, t.gen.b)
        return g if t.gen.sign == 1 else Power(g, -1)
    return Commutator(from_tree(t.left), from_tree(t.right))


def tree_text(t: Tree) -> str:
    return to_text(from_tree(t))
