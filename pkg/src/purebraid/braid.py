"""Pure braid words over the generators p_{a,b}.

Words are stored literally: no relations are applied and no normal form is
computed here. The only simplification offered is free cancellation of
adjacent inverse letters.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable


@dataclass(frozen=True, order=True)
class PureGenerator:
    """The letter p_{a,b}^{sign}, with 1 <= a < b."""

    a: int
    b: int
    sign: int = 1

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {self.sign}")
        if not 1 <= self.a < self.b:
            raise ValueError(f"need 1 <= a < b, got a={self.a}, b={self.b}")

    def inverse(self) -> PureGenerator:
        return PureGenerator(self.a, self.b, -self.sign)

    @property
    def strands(self) -> frozenset[int]:
        return frozenset((self.a, self.b))

    def __str__(self):
        return f"p[{self.a},{self.b}]" + ("^-1" if self.sign < 0 else "")


@dataclass(frozen=True)
class BraidWord:
    """A word in the p_{a,b}^{±1}, living in P_n."""

    n: int
    letters: tuple[PureGenerator, ...] = ()

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"strand count must be >= 1, got {self.n}")
        letters = tuple(self.letters)
        for g in letters:
            if not isinstance(g, PureGenerator):
                raise TypeError(f"expected PureGenerator, got {g!r}")
            if g.b > self.n:
                raise ValueError(f"letter {g} out of range for n={self.n}")
        object.__setattr__(self, "letters", letters)

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __mul__(self, other: BraidWord) -> BraidWord:
        return concat(self, other)

    def __invert__(self) -> BraidWord:
        return invert(self)

    def __str__(self):
        return " ".join(map(str, self.letters))

    @classmethod
    def from_tuples(cls, n: int, letters: Iterable[tuple[int, ...]]) -> BraidWord:
        """Build a word from (a, b) or (a, b, sign) tuples."""
        return cls(n, tuple(PureGenerator(*t) for t in letters))


def identity(n: int) -> BraidWord:
    return BraidWord(n)


def make_generator(a: int, b: int, sign: int, n: int) -> BraidWord:
    if n < 2:
        raise ValueError(f"P_{n} has no generators")
    if not 1 <= a < b <= n:
        raise ValueError(f"need 1 <= a < b <= n, got a={a}, b={b}, n={n}")
    return BraidWord(n, (PureGenerator(a, b, sign),))


def concat(*words: BraidWord) -> BraidWord:
    """Juxtapose words. No cancellation is performed."""
    if not words:
        raise ValueError("concat needs at least one word")
    n = words[0].n
    for w in words[1:]:
        if w.n != n:
            raise ValueError(f"strand count mismatch: {n} vs {w.n}")
    return BraidWord(n, tuple(g for w in words for g in w.letters))


def invert(w: BraidWord) -> BraidWord:
    return BraidWord(w.n, tuple(g.inverse() for g in reversed(w.letters)))


def free_cancel(w: BraidWord) -> BraidWord:
    """Remove adjacent pairs p^s p^-s until none remain (free reduction)."""
    stack: list[PureGenerator] = []
    for g in w.letters:
        if stack and stack[-1] == g.inverse():
            stack.pop()
        else:
            stack.append(g)
    return BraidWord(w.n, tuple(stack))


def all_generators(n: int) -> list[PureGenerator]:
    """Every p_{a,b}^{±1} in P_n, positive before negative for each pair."""
    return [
        PureGenerator(a, b, s)
        for a in range(1, n + 1)
        for b in range(a + 1, n + 1)
        for s in (1, -1)
    ]
