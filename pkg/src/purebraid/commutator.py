"""Commutator trees over signed pure generators, with [x, y] = x^-1 y^-1 x y.

A tree is monic when every bracket in it is nontrivial in P_n. Trees are
immutable and cache their evaluated word and their Garside normal form; a
bracket's form is built from its children's, so deep trees stay cheap.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Union

from . import artin, garside
from .braid import BraidWord, PureGenerator, concat, invert
from .retraction import StrandSet


@dataclass(frozen=True)
class Leaf:
    gen: PureGenerator
    n: int

    def __post_init__(self):
        if self.gen.b > self.n:
            raise ValueError(f"{self.gen} out of range for n={self.n}")

    @property
    def leaves(self) -> int:
        return 1

    @cached_property
    def strands(self) -> frozenset[int]:
        return self.gen.strands

    @cached_property
    def word(self) -> BraidWord:
        return BraidWord(self.n, (self.gen,))

    @cached_property
    def normal_form(self) -> garside.NormalForm:
        return artin.normal_form(self.word)

    def __str__(self):
        return str(self.gen)


@dataclass(frozen=True)
class Bracket:
    left: Tree
    right: Tree
    n: int = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        if self.left.n != self.right.n:
            raise ValueError(f"ambient mismatch: {self.left.n} vs {self.right.n}")
        object.__setattr__(self, "n", self.left.n)

    @cached_property
    def leaves(self) -> int:
        return self.left.leaves + self.right.leaves

    @cached_property
    def strands(self) -> frozenset[int]:
        return self.left.strands | self.right.strands

    @cached_property
    def word(self) -> BraidWord:
        x, y = self.left.word, self.right.word
        return concat(invert(x), invert(y), x, y)

    @cached_property
    def normal_form(self) -> garside.NormalForm:
        x, y = self.left.normal_form, self.right.normal_form
        xy = garside.multiply(x, y)
        yx = garside.multiply(y, x)
        return garside.multiply(garside.inverse(yx), xy)

    @cached_property
    def nontrivial(self) -> bool:
        return self.normal_form != garside.IDENTITY

    def __str__(self):
        return f"[{self.left},{self.right}]"


Tree = Union[Leaf, Bracket]


def leaf(a: int, b: int, sign: int = 1, *, n: int) -> Leaf:
    return Leaf(PureGenerator(a, b, sign), n)


def evaluate(t: Tree) -> BraidWord:
    return t.word


def leaf_support(t: Tree) -> StrandSet:
    return StrandSet(t.n, t.strands)


def is_monic(t: Tree) -> bool:
    if isinstance(t, Leaf):
        return True
    return t.nontrivial and is_monic(t.left) and is_monic(t.right)


def bracket(x: Tree, y: Tree) -> Bracket | None:
    """[x, y] if it is nontrivial, else None."""
    t = Bracket(x, y)
    return t if t.nontrivial else None


def subtrees(t: Tree):
    """Yield every subtree, root first."""
    yield t
    if isinstance(t, Bracket):
        yield from subtrees(t.left)
        yield from subtrees(t.right)
