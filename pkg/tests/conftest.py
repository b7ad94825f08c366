import random

from hypothesis import strategies as st

from purebraid.braid import BraidWord, PureGenerator, all_generators


def W(n, *letters):
    """Shorthand: W(4, (1, 3), (2, 4, -1)) is p13 p24^-1 in P_4."""
    return BraidWord.from_tuples(n, letters)


@st.composite
def generators(draw, n):
    a = draw(st.integers(1, n - 1))
    b = draw(st.integers(a + 1, n))
    return PureGenerator(a, b, draw(st.sampled_from((1, -1))))


@st.composite
def words(draw, n=None, max_len=10, min_n=2, max_n=4):
    if n is None:
        n = draw(st.integers(min_n, max_n))
    letters = draw(st.lists(generators(n), max_size=max_len))
    return BraidWord(n, tuple(letters))


def random_word(rng: random.Random, n: int, length: int) -> BraidWord:
    gens = all_generators(n)
    return BraidWord(n, tuple(rng.choice(gens) for _ in range(length)))


ACCEPTANCE: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE:
            terminalreporter.write_line(line)
