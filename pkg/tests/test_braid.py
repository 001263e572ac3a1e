import random

import pytest

from stockbraid import (
    BraidWord,
    Generator,
    WordFormatError,
    compose,
    format_word,
    free_reduce,
    inverse,
    parse_word,
    permutation,
    writhe,
)


def test_generator_validation():
    with pytest.raises(WordFormatError):
        Generator(0, 1)
    with pytest.raises(WordFormatError):
        Generator(1, 2)
    with pytest.raises(WordFormatError):
        BraidWord(2, (Generator(2, 1),))  # index must be <= n-1


def test_compose_identity_element():
    w = parse_word("3: 1 -2")
    assert compose(BraidWord(3), w) == w
    assert compose(w, BraidWord(3)) == w


def test_compose_is_concatenation():
    left = parse_word("3: 1 2")
    right = parse_word("3: 2 1")
    assert format_word(compose(left, right)) == "3: 1 2 2 1"
    pair = compose(parse_word("2: 1"), parse_word("2: -1"))
    assert len(pair) == 2  # reduction is a separate operation


def test_compose_strand_mismatch():
    with pytest.raises(WordFormatError):
        compose(parse_word("2: 1"), parse_word("3: 1"))


def test_inverse_examples():
    assert inverse(BraidWord(4)) == BraidWord(4)
    assert format_word(inverse(parse_word("3: 1 -2"))) == "3: 2 -1"


def test_inverse_cancels_under_free_reduction(rand_word):
    rng = random.Random(2024)
    for _ in range(100):
        w = rand_word(rng)
        assert free_reduce(compose(w, inverse(w))).generators == ()


def test_free_reduce_examples():
    assert free_reduce(parse_word("2: 1 -1")).generators == ()
    assert format_word(free_reduce(parse_word("3: 1 2 -2 1"))) == "3: 1 1"


def test_free_reduce_idempotent(rand_word):
    rng = random.Random(7)
    for _ in range(100):
        w = rand_word(rng)
        once = free_reduce(w)
        assert free_reduce(once) == once


def test_free_reduce_preserves_permutation_and_writhe(rand_word):
    rng = random.Random(8)
    for _ in range(100):
        w = rand_word(rng)
        r = free_reduce(w)
        assert permutation(r) == permutation(w)
        assert writhe(r) == writhe(w)


def test_permutation_examples():
    assert permutation(BraidWord(4)) == (1, 2, 3, 4)
    assert permutation(parse_word("2: 1")) == (2, 1)
    # hand composition: sigma1 sends 1<->2, then sigma2 sends 2<->3;
    # bottom strand 1 ends at position 3, strand 2 at 1, strand 3 at 2
    assert permutation(parse_word("3: 1 2")) == (3, 1, 2)
    # exponent-insensitive
    assert permutation(parse_word("3: -1 -2")) == (3, 1, 2)


def test_permutation_composes_in_word_order(rand_word):
    rng = random.Random(9)
    for _ in range(50):
        n = rng.choice([2, 3, 4, 5])
        a, b = rand_word(rng, n=n), rand_word(rng, n=n)
        pa, pb = permutation(a), permutation(b)
        composed = tuple(pb[pa[i] - 1] for i in range(n))
        assert permutation(compose(a, b)) == composed


def test_writhe_examples():
    assert writhe(parse_word("3: 1 2 -1 2")) == 2  # 3 positive, 1 negative
    assert writhe(BraidWord(5)) == 0
    assert writhe(parse_word("3: 1 -2 1")) == 1


def test_writhe_additive(rand_word):
    rng = random.Random(10)
    for _ in range(50):
        n = rng.choice([2, 3, 4])
        a, b = rand_word(rng, n=n), rand_word(rng, n=n)
        assert writhe(compose(a, b)) == writhe(a) + writhe(b)
        assert writhe(inverse(a)) == -writhe(a)


def test_parse_and_format():
    w = parse_word("4: 1 -2 3")
    assert w.n_strands == 4
    assert w.to_ints() == [1, -2, 3]
    assert format_word(w) == "4: 1 -2 3"
    assert parse_word("2:") == BraidWord(2)
    assert format_word(BraidWord(2)) == "2:"


@pytest.mark.parametrize("bad", ["3: 5", "3: 0", "3: -3", "3 1", "x: 1", "3: one"])
def test_parse_errors(bad):
    with pytest.raises(WordFormatError):
        parse_word(bad)


def test_round_trip_random_words(rand_word):
    rng = random.Random(11)
    for _ in range(100):
        w = rand_word(rng)
        assert parse_word(format_word(w)) == w
