"""The normal-form backend against the explicit Artin images."""

import random

import pytest

from purebraid import garside
from purebraid.artin import FreeAutomorphism, compose, sigma_automorphism


def sigma_letters(rng, n, length):
    return [(rng.randint(1, n - 1), rng.choice((1, -1))) for _ in range(length)]


def images(n, letters):
    return compose(FreeAutomorphism.identity(n), *(sigma_automorphism(i, s, n) for i, s in letters))


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_multiply_and_inverse_match_normal_form(n):
    rng = random.Random(n)
    for _ in range(200):
        u, v = sigma_letters(rng, n, rng.randint(0, 12)), sigma_letters(rng, n, rng.randint(0, 12))
        x, y = garside.normal_form(n, u), garside.normal_form(n, v)
        assert garside.multiply(x, y) == garside.normal_form(n, u + v)
        inv = [(i, -s) for i, s in reversed(u)]
        assert garside.inverse(x) == garside.normal_form(n, inv)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_normal_form_equality_matches_artin_images(n):
    rng = random.Random(10 + n)
    for _ in range(300):
        u = sigma_letters(rng, n, rng.randint(0, 7))
        # either insert a cancelling pair or draw an unrelated word
        v = list(u)
        if rng.random() < 0.5 and len(v) >= 1:
            k = rng.randrange(len(v) + 1)
            i = rng.randint(1, n - 1)
            v[k:k] = [(i, 1), (i, -1)]
        else:
            v = sigma_letters(rng, n, rng.randint(0, 7))
        same_nf = garside.normal_form(n, u) == garside.normal_form(n, v)
        same_img = images(n, u) == images(n, v)
        assert same_nf == same_img


def test_braid_relations_in_normal_form():
    # s1 s2 s1 = s2 s1 s2 and s1 s3 = s3 s1
    assert garside.normal_form(4, [(1, 1), (2, 1), (1, 1)]) == garside.normal_form(4, [(2, 1), (1, 1), (2, 1)])
    assert garside.normal_form(4, [(1, 1), (3, 1)]) == garside.normal_form(4, [(3, 1), (1, 1)])
    assert garside.normal_form(3, [(1, 1), (1, -1)]) == garside.IDENTITY


def test_descents_and_tau():
    p = (1, 0, 2)  # the simple element s1 in B_3
    assert garside.right_descents(p) == garside.left_descents(p) == frozenset({1})
    assert garside.tau(p) == (0, 2, 1)
