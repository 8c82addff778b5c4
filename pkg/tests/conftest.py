"""Shared strategies and brute-force helpers for the test suite."""

from __future__ import annotations

import itertools
import random
from typing import Iterator, Sequence

import pytest
from hypothesis import strategies as st

from ample.words import Word, invert, multiply


def random_reduced_word(rng: random.Random, rank: int, length: int) -> Word:
    """Uniformly random freely reduced word of exactly the given length
    (shorter only when length 0)."""
    codes: list[int] = []
    letters = [c for k in range(1, rank + 1) for c in (k, -k)]
    while len(codes) < length:
        choices = [c for c in letters if not codes or c != -codes[-1]]
        codes.append(rng.choice(choices))
    return Word(codes)


def words(max_rank: int = 3, max_len: int = 8) -> st.SearchStrategy[Word]:
    """Hypothesis strategy for freely reduced words (reduction applied)."""
    letters = st.integers(min_value=1, max_value=max_rank).flatmap(
        lambda k: st.sampled_from([k, -k]))
    return st.lists(letters, max_size=max_len).map(Word)


def nonempty_words(max_rank: int = 3, max_len: int = 8) -> st.SearchStrategy[Word]:
    return words(max_rank, max_len).filter(lambda w: len(w) > 0)


def all_reduced_words(rank: int, max_len: int) -> Iterator[Word]:
    """Every freely reduced word of length <= max_len, identity included."""
    yield Word()
    letters = [c for k in range(1, rank + 1) for c in (k, -k)]
    frontier: list[tuple[int, ...]] = [()]
    for _ in range(max_len):
        nxt = []
        for codes in frontier:
            for c in letters:
                if codes and c == -codes[-1]:
                    continue
                new = codes + (c,)
                yield Word(new)
                nxt.append(new)
        frontier = nxt


def naive_products(generators: Sequence[Word], max_factors: int) -> set[Word]:
    """All products of at most max_factors generator-or-inverse factors."""
    factors = []
    for g in generators:
        if g:
            factors.append(g)
            factors.append(invert(g))
    out = {Word()}
    frontier = {Word()}
    for _ in range(max_factors):
        nxt = set()
        for w in frontier:
            for f in factors:
                p = multiply(w, f)
                if p not in out:
                    out.add(p)
                    nxt.add(p)
        frontier = nxt
    return out


@pytest.fixture
def rng() -> random.Random:
    return random.Random(0xA3B1E)
