"""Commutator collection: sort a pure braid word into buckets by support.

Subsets of strands are visited in an order refining inclusion. At the stage
for subset T, the leftmost tree y with support T is moved to the front of
the tail past the larger-support trees x_1 ... x_t before it, using

    x y = y x [x, y],

so the tail becomes y x_1 [x_1, y] x_2 [x_2, y] ... x_t [x_t, y] z. Every
correction [x_i, y] has support T(x_i) | T, which comes strictly later in
the order, so the count of support-T trees drops by one per move.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

from .artin import is_trivial
from .braid import BraidWord, concat, identity
from .commutator import Bracket, Leaf, Tree, evaluate
from .retraction import StrandSet, in_Q

log = logging.getLogger(__name__)


class NotInIntersection(ValueError):
    """The word is not killed by phi_S for the reported witness S."""

    def __init__(self, witness: StrandSet):
        super().__init__(f"phi_{witness} does not trivialize the word")
        self.witness = witness


class InternalInconsistency(RuntimeError):
    pass


class BudgetExceeded(RuntimeError):
    """Raised when collection holds more leaves than the caller allowed."""

    def __init__(self, limit: int, stage: frozenset[int]):
        super().__init__(f"more than {limit} leaves held while collecting support {sorted(stage)}")
        self.limit = limit
        self.stage = stage


@dataclass(frozen=True)
class SubsetOrder:
    n: int
    subsets: tuple[frozenset[int], ...]

    def __post_init__(self):
        universe = frozenset(range(1, self.n + 1))
        if len(set(self.subsets)) != 2**self.n or len(self.subsets) != 2**self.n:
            raise ValueError("order must list every subset exactly once")
        if any(not s <= universe for s in self.subsets):
            raise ValueError(f"subset outside 1..{self.n}")
        for i, s in enumerate(self.subsets):
            for t in self.subsets[:i]:
                if s < t:
                    raise ValueError(f"{sorted(s)} is a proper subset of earlier {sorted(t)}")

    def __len__(self):
        return len(self.subsets)

    def __iter__(self):
        return iter(self.subsets)

    def index(self, s: Iterable[int]) -> int:
        return self._positions[frozenset(s)]

    @cached_property
    def _positions(self) -> dict[frozenset[int], int]:
        return {s: i for i, s in enumerate(self.subsets)}


def subset_order(n: int) -> SubsetOrder:
    """Subsets by cardinality, ties broken lexicographically."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    subsets = [frozenset(c) for k in range(n + 1) for c in combinations(range(1, n + 1), k)]
    return SubsetOrder(n, tuple(subsets))


@dataclass(frozen=True)
class Decomposition:
    order: SubsetOrder
    buckets: tuple[tuple[Tree, ...], ...]

    def __post_init__(self):
        if len(self.buckets) != len(self.order):
            raise ValueError("need one bucket per subset")

    @property
    def n(self) -> int:
        return self.order.n

    def items(self):
        return zip(self.order.subsets, self.buckets)

    def trees(self) -> list[Tree]:
        return [t for b in self.buckets for t in b]

    def bucket_sizes(self) -> dict[tuple[int, ...], int]:
        return {tuple(sorted(s)): len(b) for s, b in self.items() if b}


def to_tree_word(w: BraidWord) -> list[Tree]:
    return [Leaf(g, w.n) for g in w.letters]


def collect(
    w: BraidWord,
    order: SubsetOrder | None = None,
    strict: bool = False,
    max_leaves: int | None = None,
) -> Decomposition:
    """Decompose w into support-graded buckets of commutator trees.

    By default trivial correction brackets are dropped as they arise, so every
    bucket holds monic trees. With ``strict=True`` they are kept, and the
    evaluated result freely reduces to the same word as ``w``.

    The number of trees can grow doubly exponentially with the length of w,
    and their depth with it. ``max_leaves`` bounds the total leaf count of all
    trees held at any moment; exceeding it raises BudgetExceeded instead of
    truncating.
    """
    if order is None:
        order = subset_order(w.n)
    if order.n != w.n:
        raise ValueError(f"order is for n={order.n}, word has n={w.n}")
    tail = to_tree_word(w)
    buckets: list[tuple[Tree, ...]] = []
    held = len(tail)
    for T in order.subsets:
        bucket = []
        while True:
            j = next((k for k, t in enumerate(tail) if t.strands == T), None)
            if j is None:
                break
            y = tail[j]
            moved: list[Tree] = []
            for x in tail[:j]:
                moved.append(x)
                c = Bracket(x, y)
                if strict or c.nontrivial:
                    moved.append(c)
                    held += c.leaves
                    if max_leaves is not None and held > max_leaves:
                        raise BudgetExceeded(max_leaves, T)
            bucket.append(y)
            tail = moved + tail[j + 1:]
        buckets.append(tuple(bucket))
    assert not tail, "every tree support appears in the order"
    d = Decomposition(order, tuple(buckets))
    log.debug("collect n=%d len=%d buckets=%s", w.n, len(w), d.bucket_sizes())
    return d


def evaluate_decomposition(d: Decomposition) -> BraidWord:
    return concat(identity(d.n), *(evaluate(t) for t in d.trees()))


def _check_family(n: int, constraints: Sequence[StrandSet]):
    for S in constraints:
        if S.n != n:
            raise ValueError(f"constraint {S} lives in n={S.n}, expected {n}")


def _witness(w: BraidWord, constraints: Sequence[StrandSet]) -> StrandSet | None:
    return next((S for S in constraints if not in_Q(S, w)), None)


def prune(d: Decomposition, constraints: Sequence[StrandSet]) -> Decomposition:
    """Empty every bucket whose support misses some constraint set.

    Requires the evaluated decomposition to lie in every Q_S. Each removed
    bucket is checked to be trivial, smallest supports first.
    """
    _check_family(d.n, constraints)
    witness = _witness(evaluate_decomposition(d), constraints)
    if witness is not None:
        raise NotInIntersection(witness)
    buckets = list(d.buckets)
    positions = sorted(range(len(buckets)), key=lambda i: len(d.order.subsets[i]))
    for i in positions:
        T = d.order.subsets[i]
        if not buckets[i] or all(T & S.members for S in constraints):
            continue
        product = concat(identity(d.n), *(evaluate(t) for t in buckets[i]))
        if not is_trivial(product):
            raise InternalInconsistency(f"bucket {sorted(T)} is nontrivial but misses a constraint")
        buckets[i] = ()
    return Decomposition(d.order, tuple(buckets))


def express_in_generators(
    w: BraidWord,
    constraints: Sequence[StrandSet],
    order: SubsetOrder | None = None,
    max_leaves: int | None = None,
) -> list[Tree]:
    """Monic trees meeting every constraint set whose product equals w."""
    _check_family(w.n, constraints)
    witness = _witness(w, constraints)
    if witness is not None:
        raise NotInIntersection(witness)
    return prune(collect(w, order, max_leaves=max_leaves), constraints).trees()
