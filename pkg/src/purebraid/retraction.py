"""Strand-deletion retractions phi_S, supports, and P_S / Q_S membership.

phi_S keeps the strand count: deleted strands stay as (unused) indices, so
phi_S is an endomorphism of P_n and phi_S1 . phi_S2 = phi_(S1 | S2) holds
letter for letter.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .artin import are_equal, is_trivial
from .braid import BraidWord


@dataclass(frozen=True)
class StrandSet:
    n: int
    members: frozenset[int] = frozenset()

    def __post_init__(self):
        members = frozenset(self.members)
        bad = [i for i in members if not 1 <= i <= self.n]
        if bad:
            raise ValueError(f"strands {sorted(bad)} outside 1..{self.n}")
        object.__setattr__(self, "members", members)

    @classmethod
    def of(cls, n: int, members: Iterable[int] = ()) -> StrandSet:
        return cls(n, frozenset(members))

    def __contains__(self, i):
        return i in self.members

    def __iter__(self):
        return iter(sorted(self.members))

    def __len__(self):
        return len(self.members)

    def __or__(self, other: StrandSet) -> StrandSet:
        return union(self, other)

    def __str__(self):
        return "{" + ",".join(map(str, self)) + "}"


def _check(S: StrandSet, w: BraidWord):
    if S.n != w.n:
        raise ValueError(f"ambient mismatch: set in n={S.n}, word in n={w.n}")


def complement(S: StrandSet) -> StrandSet:
    return StrandSet(S.n, frozenset(range(1, S.n + 1)) - S.members)


def union(S1: StrandSet, S2: StrandSet) -> StrandSet:
    if S1.n != S2.n:
        raise ValueError(f"ambient mismatch: {S1.n} vs {S2.n}")
    return StrandSet(S1.n, S1.members | S2.members)


def phi(S: StrandSet, w: BraidWord) -> BraidWord:
    """Delete every letter touching a strand of S."""
    _check(S, w)
    return BraidWord(w.n, tuple(g for g in w.letters if g.a not in S.members and g.b not in S.members))


def support(w: BraidWord) -> StrandSet:
    """Smallest S with w in P_S.

    One deletion test per strand suffices because P_S1 ∩ P_S2 = P_(S1 ∩ S2).
    """
    return StrandSet(w.n, frozenset(i for i in range(1, w.n + 1) if not are_equal(phi(StrandSet(w.n, frozenset((i,))), w), w)))


def in_P(S: StrandSet, w: BraidWord) -> bool:
    _check(S, w)
    return are_equal(phi(complement(S), w), w)


def in_Q(S: StrandSet, w: BraidWord) -> bool:
    _check(S, w)
    return is_trivial(phi(S, w))
