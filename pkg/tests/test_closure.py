import random

import pytest

from stockbraid import (
    BraidWord,
    ClosureError,
    component_count,
    diagram_stats,
    free_reduce,
    minima_count,
    parse_word,
    permutation,
    plat_close,
    trace_close,
)


def test_plat_requires_even_strands():
    with pytest.raises(ClosureError, match="2k"):
        plat_close(parse_word("3: 1"))


def test_component_count_examples():
    assert component_count(plat_close(BraidWord(4))) == 2  # caps meet caps
    assert component_count(trace_close(BraidWord(5))) == 5
    assert component_count(trace_close(parse_word("2: 1"))) == 1  # unknot
    # trefoil: (1 2)^3 = (1 2) has a single cycle under trace pairing
    assert component_count(trace_close(parse_word("2: 1 1 1"))) == 1
    assert component_count(plat_close(parse_word("2: 1"))) == 1  # kinked unknot


def test_minima_count():
    assert minima_count(plat_close(BraidWord(4))) == 2
    assert minima_count(plat_close(BraidWord(2))) == 1
    assert minima_count(plat_close(BraidWord(8))) == 4
    with pytest.raises(ClosureError):
        minima_count(trace_close(BraidWord(3)))


def _cycle_count(perm: tuple[int, ...]) -> int:
    seen, cycles = set(), 0
    for start in range(len(perm)):
        if start in seen:
            continue
        cycles += 1
        p = start
        while p not in seen:
            seen.add(p)
            p = perm[p] - 1
    return cycles


def _trace_components_by_union_find(word: BraidWord) -> int:
    """Independent route: union-find over 2n endpoints with side arcs."""
    n = word.n_strands
    parent = list(range(2 * n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(a, b):
        parent[find(a)] = find(b)

    perm = permutation(word)
    for p in range(n):
        union(p, n + perm[p] - 1)  # strand arc
        union(p, n + p)  # closure arc
    return len({find(x) for x in range(2 * n)})


def test_trace_components_cross_checked_against_union_find(rand_word):
    rng = random.Random(21)
    for _ in range(100):
        w = rand_word(rng)
        k = trace_close(w)
        assert component_count(k) == _cycle_count(permutation(w))
        assert component_count(k) == _trace_components_by_union_find(w)


def test_component_count_bounds_fuzz(rand_word):
    rng = random.Random(22)
    for _ in range(100):
        w = rand_word(rng)
        assert 1 <= component_count(trace_close(w)) <= w.n_strands
        if w.n_strands % 2 == 0:
            assert 1 <= component_count(plat_close(w)) <= w.n_strands


def test_component_count_invariant_under_free_reduce(rand_word):
    rng = random.Random(23)
    for _ in range(100):
        w = rand_word(rng)
        assert component_count(trace_close(w)) == component_count(
            trace_close(free_reduce(w))
        )
        if w.n_strands % 2 == 0:
            assert component_count(plat_close(w)) == component_count(
                plat_close(free_reduce(w))
            )


def test_diagram_stats():
    k = plat_close(parse_word("4: 1 -2 3"))
    stats = diagram_stats(k)
    assert stats.crossings == 3
    assert stats.minima == 2
    assert stats.writhe == 1
    assert stats.to_json() == {
        "components": stats.components,
        "minima": 2,
        "crossings": 3,
        "writhe": 1,
    }
    trace_stats = diagram_stats(trace_close(parse_word("3: 1")))
    assert trace_stats.minima is None
