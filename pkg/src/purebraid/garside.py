"""Left normal form in B_n, used to decide the word problem quickly.

A simple braid is stored as the permutation it induces on positions:
``perm[k]`` is the label of the strand that ends at position k (labels are
the starting positions 0 .. n-1). A braid is written Δ^k s_1 ... s_r with
each s_i simple, s_i not 1 or Δ, and every adjacent pair left-weighted:
the left descents of s_{i+1} lie among the right descents of s_i.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable

Perm = tuple[int, ...]


def _swap_positions(p: Perm, i: int) -> Perm:
    q = list(p)
    q[i - 1], q[i] = q[i], q[i - 1]
    return tuple(q)


def _swap_labels(p: Perm, i: int) -> Perm:
    return tuple(i if x == i - 1 else i - 1 if x == i else x for x in p)


@lru_cache(maxsize=None)
def right_descents(p: Perm) -> frozenset[int]:
    """i such that p = p' sigma_i with p' simple."""
    return frozenset(i for i in range(1, len(p)) if p[i - 1] > p[i])


@lru_cache(maxsize=None)
def left_descents(p: Perm) -> frozenset[int]:
    """i such that p = sigma_i p' with p' simple."""
    pos = [0] * len(p)
    for k, x in enumerate(p):
        pos[x] = k
    return frozenset(i for i in range(1, len(p)) if pos[i - 1] > pos[i])


@lru_cache(maxsize=None)
def tau(p: Perm) -> Perm:
    """Conjugation by Δ, sending sigma_i to sigma_{n-i}."""
    n = len(p)
    return tuple(n - 1 - p[n - 1 - k] for k in range(n))


@lru_cache(maxsize=1 << 20)
def _left_weight(a: Perm, b: Perm) -> tuple[Perm, Perm]:
    while True:
        ra = right_descents(a)
        i = next((i for i in sorted(left_descents(b)) if i not in ra), None)
        if i is None:
            return a, b
        a, b = _swap_positions(a, i), _swap_labels(b, i)


NormalForm = tuple[int, tuple[Perm, ...]]


def _complement(p: Perm) -> Perm:
    """The simple d with p d = Δ."""
    n = len(p)
    pos = [0] * n
    for k, x in enumerate(p):
        pos[x] = k
    return tuple(pos[n - 1 - k] for k in range(n))


def _tau_power(p: Perm, k: int) -> Perm:
    return tau(p) if k % 2 else p


def _absorb(power: int, head: list[Perm], tail: Iterable[Perm]) -> NormalForm:
    """Right-multiply the left-weighted ``head`` by the simples in ``tail``."""
    n = len(head[0]) if head else None
    out = list(head)
    for b in tail:
        n = len(b)
        out.append(b)
        j = len(out) - 1
        while j > 0:
            a, c = _left_weight(out[j - 1], out[j])
            if (a, c) == (out[j - 1], out[j]):
                break
            out[j - 1], out[j] = a, c
            j -= 1
        ident = tuple(range(n))
        while out and out[-1] == ident:
            out.pop()
    if n is not None:
        delta = tuple(range(n - 1, -1, -1))
        while out and out[0] == delta:
            out.pop(0)
            power += 1
    return power, tuple(out)


def normal_form(n: int, letters: Iterable[tuple[int, int]]) -> NormalForm:
    """Left normal form (k, [s_1 .. s_r]) of a word in sigma_i^{±1}.

    ``letters`` holds (i, sign) pairs with 1 <= i <= n-1.
    """
    ident = tuple(range(n))
    delta = tuple(reversed(ident))
    # Each sigma_i^-1 becomes Δ^-1 (Δ sigma_i^-1); pulling Δ^-1 to the front
    # applies tau to every earlier factor, tracked lazily by parity.
    raw: list[tuple[Perm, int]] = []
    negatives = 0
    for i, sign in letters:
        if not 1 <= i <= n - 1:
            raise ValueError(f"sigma_{i} not in B_{n}")
        if sign == 1:
            raw.append((_swap_positions(ident, i), negatives))
        else:
            negatives += 1
            raw.append((_swap_positions(delta, i), negatives))
    factors = [p if (negatives - c) % 2 == 0 else tau(p) for p, c in raw]

    return _absorb(-negatives, [], factors)


def multiply(x: NormalForm, y: NormalForm) -> NormalForm:
    """Normal form of the product x y."""
    (kx, fx), (ky, fy) = x, y
    return _absorb(kx + ky, [_tau_power(p, ky) for p in fx], fy)


def inverse(x: NormalForm) -> NormalForm:
    """Normal form of x^-1, using s^-1 = Δ^-1 tau(∂s) for each simple s."""
    k, f = x
    r = len(f)
    factors = [_tau_power(_complement(f[r - i]), r - i + 1 + k) for i in range(1, r + 1)]
    return _absorb(-(r + k), [], factors)


IDENTITY: NormalForm = (0, ())


def is_trivial_sigma(n: int, letters: Iterable[tuple[int, int]]) -> bool:
    if n == 1:
        return True
    return normal_form(n, letters) == IDENTITY
