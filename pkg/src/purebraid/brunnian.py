"""Brunnian and k-decomposable braids, linking numbers, generator enumeration.

A family of strand sets S_1 .. S_m picks out the subgroup of braids that
become trivial whenever all strands of any one S_i are deleted. Singletons
give the Brunnian braids; all k-subsets give the k-decomposable ones.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator

from .braid import BraidWord, all_generators
from .commutator import Bracket, Leaf, Tree, is_monic
from .retraction import StrandSet, in_Q


@dataclass(frozen=True)
class ConstraintFamily:
    n: int
    sets: tuple[StrandSet, ...] = ()

    def __post_init__(self):
        sets = tuple(self.sets)
        for S in sets:
            if S.n != self.n:
                raise ValueError(f"set {S} lives in n={S.n}, expected {self.n}")
            if not S.members:
                raise ValueError("empty constraint set: deleting nothing only kills the identity")
        object.__setattr__(self, "sets", sets)

    @classmethod
    def of(cls, n: int, sets: Iterable[Iterable[int]]) -> ConstraintFamily:
        return cls(n, tuple(StrandSet.of(n, s) for s in sets))

    @classmethod
    def singletons(cls, n: int) -> ConstraintFamily:
        return cls.of(n, ([i] for i in range(1, n + 1)))

    @classmethod
    def k_subsets(cls, n: int, k: int) -> ConstraintFamily:
        return cls.of(n, combinations(range(1, n + 1), k))

    def __iter__(self):
        return iter(self.sets)

    def __len__(self):
        return len(self.sets)


def in_intersection(w: BraidWord, f: ConstraintFamily) -> bool:
    if f.n != w.n:
        raise ValueError(f"family in n={f.n}, word in n={w.n}")
    return all(in_Q(S, w) for S in f.sets)


def is_brunnian(w: BraidWord) -> bool:
    return in_intersection(w, ConstraintFamily.singletons(w.n))


def is_k_decomposable(w: BraidWord, k: int) -> bool:
    if not 1 <= k <= w.n - 1:
        raise ValueError(f"k must lie in 1..{w.n - 1}, got {k}")
    return in_intersection(w, ConstraintFamily.k_subsets(w.n, k))


def linking_number(w: BraidWord, i: int, j: int) -> int:
    """Exponent sum of p_{i,j} in the literal word."""
    if not 1 <= i < j <= w.n:
        raise ValueError(f"need 1 <= i < j <= {w.n}, got ({i}, {j})")
    return sum(g.sign for g in w.letters if (g.a, g.b) == (i, j))


def linking_numbers(w: BraidWord) -> dict[tuple[int, int], int]:
    return {(i, j): linking_number(w, i, j) for i, j in combinations(range(1, w.n + 1), 2)}


def in_commutator_subgroup(w: BraidWord) -> bool:
    return not any(linking_numbers(w).values())


def tree_key(t: Tree) -> tuple:
    """Nested-tuple serialization used to order trees of equal size."""
    if isinstance(t, Leaf):
        return (0, t.gen.a, t.gen.b, t.gen.sign)
    return (1, tree_key(t.left), tree_key(t.right))


def monic_trees(n: int, leaves: int, _cache: dict | None = None) -> list[Tree]:
    """Every monic tree in P_n with exactly ``leaves`` leaves, sorted by tree_key."""
    cache = {} if _cache is None else _cache
    if leaves in cache:
        return cache[leaves]
    if leaves == 1:
        out = [Leaf(g, n) for g in all_generators(n)]
    else:
        out = []
        for k in range(1, leaves):
            for x in monic_trees(n, k, cache):
                for y in monic_trees(n, leaves - k, cache):
                    t = Bracket(x, y)
                    if t.nontrivial:
                        out.append(t)
    out.sort(key=tree_key)
    cache[leaves] = out
    return out


def enumerate_generators(f: ConstraintFamily, max_leaves: int) -> Iterator[Tree]:
    """Monic trees whose support meets every set of f, smallest first.

    Distinct trees may evaluate to the same braid; no deduplication is done.
    """
    if max_leaves < 1:
        raise ValueError(f"max_leaves must be >= 1, got {max_leaves}")
    cache: dict = {}
    for k in range(1, max_leaves + 1):
        for t in monic_trees(f.n, k, cache):
            if all(t.strands & S.members for S in f.sets):
                yield t


def check_generator(t: Tree, f: ConstraintFamily) -> bool:
    return is_monic(t) and in_intersection(t.word, f)
