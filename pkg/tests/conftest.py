import random

import pytest

from invqm.words import FreeWord, commutator, conjugate, generator


def rand_word(rng: random.Random, rank: int, max_len: int) -> FreeWord:
    """Random reduced word of length <= max_len."""
    letters = []
    for _ in range(rng.randint(0, max_len)):
        while True:
            x = rng.choice([s * g for g in range(1, rank + 1) for s in (1, -1)])
            if not letters or letters[-1] != -x:
                break
        letters.append(x)
    return FreeWord(rank, tuple(letters))


def rand_commutator_word(rng: random.Random, rank: int,
                         max_len: int) -> FreeWord:
    """Random element of the commutator subgroup: a product of conjugated
    commutators of generators, truncated to the length budget."""
    w = FreeWord(rank)
    while True:
        i = rng.randint(1, rank)
        j = rng.randint(1, rank)
        if i == j:
            continue
        g = rand_word(rng, rank, 3)
        piece = conjugate(g, commutator(generator(rank, i),
                                        generator(rank, j)))
        if len(w * piece) > max_len:
            return w
        w = w * piece


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20260824)
