"""Defining relations of P_n and two commutation identities, as word pairs."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator

from .artin import are_equal
from .braid import BraidWord


@dataclass(frozen=True)
class Relation:
    family: str
    indices: tuple[int, ...]
    lhs: BraidWord
    rhs: BraidWord

    def holds(self) -> bool:
        return are_equal(self.lhs, self.rhs)

    def __str__(self):
        return f"{self.family}{self.indices}: {self.lhs} = {self.rhs}"


def _w(n: int, *letters) -> BraidWord:
    return BraidWord.from_tuples(n, letters)


def triple_relations(n: int) -> Iterator[Relation]:
    """p_ab p_ac p_bc = p_ac p_bc p_ab = p_bc p_ab p_ac, as two equations."""
    for a, b, c in combinations(range(1, n + 1), 3):
        left = _w(n, (a, b), (a, c), (b, c))
        mid = _w(n, (a, c), (b, c), (a, b))
        right = _w(n, (b, c), (a, b), (a, c))
        yield Relation("triple", (a, b, c), left, mid)
        yield Relation("triple", (a, b, c), mid, right)


def commuting_relations(n: int) -> Iterator[Relation]:
    """Disjoint and nested pairs commute."""
    for a, b, c, d in combinations(range(1, n + 1), 4):
        yield Relation("commute", (a, b, c, d), _w(n, (a, b), (c, d)), _w(n, (c, d), (a, b)))
        yield Relation("commute", (a, b, c, d), _w(n, (a, d), (b, c)), _w(n, (b, c), (a, d)))


def conjugated_relations(n: int) -> Iterator[Relation]:
    """p_ac commutes with p_bd conjugated by p_bc."""
    for a, b, c, d in combinations(range(1, n + 1), 4):
        conj = [(b, c, -1), (b, d), (b, c)]
        yield Relation("conjugate", (a, b, c, d), _w(n, (a, c), *conj), _w(n, *conj, (a, c)))


def presentation(n: int) -> Iterator[Relation]:
    yield from triple_relations(n)
    yield from commuting_relations(n)
    yield from conjugated_relations(n)


def commutation_identities() -> list[Relation]:
    """p12 commutes with p23 p13, and p13 with p24 conjugated by p23."""
    return [
        Relation("identity", (1, 2, 3), _w(3, (1, 2), (2, 3), (1, 3)), _w(3, (2, 3), (1, 3), (1, 2))),
        Relation(
            "identity",
            (1, 2, 3, 4),
            _w(4, (1, 3), (2, 3, -1), (2, 4), (2, 3)),
            _w(4, (2, 3, -1), (2, 4), (2, 3), (1, 3)),
        ),
    ]


def failures(n: int) -> list[Relation]:
    """Every presentation relation in P_m, m <= n, that does not hold."""
    return [r for m in range(3, n + 1) for r in presentation(m) if not r.holds()]
