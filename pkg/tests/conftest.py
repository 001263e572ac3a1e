import random
from pathlib import Path

import pytest

from stockbraid import BraidWord, parse_csv

DATA_DIR = Path(__file__).parent / "data"
DOW4_CSV = DATA_DIR / "dow4_2013.csv"


@pytest.fixture(scope="session")
def dow4_text() -> str:
    return DOW4_CSV.read_text(encoding="utf-8")


@pytest.fixture(scope="session")
def dow4_series(dow4_text):
    return parse_csv(dow4_text)


@pytest.fixture()
def rand_word():
    """Factory for seeded random braid words."""

    def make(rng: random.Random, n: int | None = None, max_len: int = 10) -> BraidWord:
        if n is None:
            n = rng.choice([2, 3, 4, 5, 6])
        length = rng.randrange(0, max_len + 1)
        if n == 1:
            return BraidWord(1)
        ints = [rng.choice([1, -1]) * rng.randrange(1, n) for _ in range(length)]
        return BraidWord.from_ints(n, ints)

    return make
