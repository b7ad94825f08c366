"""Word problem in P_n via the Artin action on the free group F_n.

Free words are tuples of nonzero ints: ``i`` stands for x_i and ``-i`` for
x_i^{-1}. A ``FreeAutomorphism`` stores the reduced image of each x_i.

Composition convention: ``compose(f, g)`` is "apply f, then g", so the
automorphism of a braid word is the composite of its letters read left to
right. Braid words act on the right of F_n.

Reduced images grow exponentially with word length, so ``is_trivial``
decides the same question through the Garside normal form of the sigma
expansion (polynomial time). ``acts_trivially`` is the direct image check;
the two are cross-checked in the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from . import garside
from .braid import BraidWord, PureGenerator, concat, invert

FreeWord = tuple[int, ...]


def reduce(letters: Iterable[int]) -> FreeWord:
    stack: list[int] = []
    for x in letters:
        if x == 0:
            raise ValueError("0 is not a free generator")
        if stack and stack[-1] == -x:
            stack.pop()
        else:
            stack.append(x)
    return tuple(stack)


def inverse_word(w: FreeWord) -> FreeWord:
    return tuple(-x for x in reversed(w))


@dataclass(frozen=True)
class FreeAutomorphism:
    n: int
    images: tuple[FreeWord, ...]

    def __post_init__(self):
        if len(self.images) != self.n:
            raise ValueError(f"need {self.n} images, got {len(self.images)}")

    @classmethod
    def identity(cls, n: int) -> FreeAutomorphism:
        return cls(n, tuple((i,) for i in range(1, n + 1)))

    def is_identity(self) -> bool:
        return all(img == (i,) for i, img in enumerate(self.images, 1))

    def __call__(self, w: Iterable[int]) -> FreeWord:
        return apply(self, reduce(w))


def apply(aut: FreeAutomorphism, w: FreeWord) -> FreeWord:
    out: list[int] = []
    for x in w:
        if abs(x) > aut.n:
            raise ValueError(f"x_{abs(x)} outside rank {aut.n}")
        img = aut.images[x - 1] if x > 0 else inverse_word(aut.images[-x - 1])
        # reduce incrementally against the running prefix
        for y in img:
            if out and out[-1] == -y:
                out.pop()
            else:
                out.append(y)
    return tuple(out)


def compose(*auts: FreeAutomorphism) -> FreeAutomorphism:
    """Apply ``auts[0]``, then ``auts[1]``, and so on."""
    if not auts:
        raise ValueError("compose needs at least one automorphism")
    result = auts[0]
    for g in auts[1:]:
        if g.n != result.n:
            raise ValueError(f"rank mismatch: {result.n} vs {g.n}")
        result = FreeAutomorphism(result.n, tuple(apply(g, img) for img in result.images))
    return result


@lru_cache(maxsize=None)
def sigma_automorphism(i: int, sign: int, n: int) -> FreeAutomorphism:
    """Artin generator sigma_i^{±1}: x_i -> x_i x_{i+1} x_i^-1, x_{i+1} -> x_i."""
    if not 1 <= i <= n - 1:
        raise ValueError(f"sigma_{i} not defined in rank {n}")
    images = [(j,) for j in range(1, n + 1)]
    if sign == 1:
        images[i - 1] = (i, i + 1, -i)
        images[i] = (i,)
    elif sign == -1:
        images[i - 1] = (i + 1,)
        images[i] = (-(i + 1), i, i + 1)
    else:
        raise ValueError(f"sign must be +1 or -1, got {sign}")
    return FreeAutomorphism(n, tuple(images))


def sigma_word(g: PureGenerator) -> list[tuple[int, int]]:
    """p_{a,b}^{±1} as (i, sign) letters in the sigma_i.

    p_{a,b} = (s_{b-1} ... s_{a+1}) s_a^-2 (s_{a+1}^-1 ... s_{b-1}^-1).

    The full twist is negative with respect to the sigma action above. With
    a positive twist the conjugated commutation relation and both commutation
    identities in ``relations`` fail; with this one they hold, along with the
    commuting relation and the triple relation read backwards.
    """
    conj = [(i, 1) for i in range(g.b - 1, g.a, -1)]
    core = [(g.a, -g.sign), (g.a, -g.sign)]
    return conj + core + [(i, -s) for i, s in reversed(conj)]


@lru_cache(maxsize=None)
def pure_generator_automorphism(g: PureGenerator, n: int) -> FreeAutomorphism:
    if g.b > n:
        raise ValueError(f"{g} out of range for rank {n}")
    return compose(FreeAutomorphism.identity(n), *(sigma_automorphism(i, s, n) for i, s in sigma_word(g)))


def braid_automorphism(w: BraidWord) -> FreeAutomorphism:
    images = [(i,) for i in range(1, w.n + 1)]
    for g in w.letters:
        aut = pure_generator_automorphism(g, w.n)
        images = [apply(aut, img) for img in images]
    return FreeAutomorphism(w.n, tuple(images))


def acts_trivially(w: BraidWord) -> bool:
    """Whether the Artin automorphism of w fixes every x_i, from explicit images.

    Exact but exponential in the length of w; ``is_trivial`` is the fast path.
    """
    return braid_automorphism(w).is_identity()


def normal_form(w: BraidWord) -> garside.NormalForm:
    """Garside left normal form of w in B_n; equal braids have equal forms."""
    return garside.normal_form(w.n, [x for g in w.letters for x in sigma_word(g)])


def is_trivial(w: BraidWord) -> bool:
    """Whether w = 1 in P_n."""
    return w.n == 1 or normal_form(w) == garside.IDENTITY


def are_equal(w1: BraidWord, w2: BraidWord) -> bool:
    if w1.n != w2.n:
        raise ValueError(f"strand count mismatch: {w1.n} vs {w2.n}")
    return is_trivial(concat(w1, invert(w2)))


def is_conjugate_of(w: FreeWord, i: int) -> bool:
    """Whether the reduced word w has the form u x_i u^-1."""
    k = len(w) // 2
    return len(w) % 2 == 1 and w[k] == i and w[:k] == inverse_word(w[k + 1:])
