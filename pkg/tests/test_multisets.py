import random

import pytest

from treegen.errors import RankError
from treegen.multisets import (
    enumerate_multisets,
    find_multiset,
    multiset_count,
    rank_multiset,
)


def ints(n):
    return lambda: iter(range(n))


def test_multiset_count_examples():
    assert multiset_count(1, 5) == 1
    assert multiset_count(3, 0) == 1
    # all multisets of size 2 over {a,b,c}: aa ab ac bb bc cc
    assert multiset_count(3, 2) == 6
    assert multiset_count(0, 3) == 0
    assert multiset_count(0, 0) == 1


def test_enumeration_order_n3_k2():
    got = list(enumerate_multisets(ints(3), 2))
    assert got == [(0, 0), (1, 0), (1, 1), (2, 0), (2, 1), (2, 2)]


def test_enumeration_degenerate_cases():
    assert list(enumerate_multisets(ints(3), 0)) == [()]
    assert list(enumerate_multisets(ints(1), 3)) == [(0, 0, 0)]
    assert list(enumerate_multisets(ints(0), 2)) == []


def test_upper_bound_restricts_base():
    got = list(enumerate_multisets(ints(5), 2, upper_bound=2))
    assert got == [(0, 0), (1, 0), (1, 1)]


def test_find_multiset_examples():
    assert find_multiset(3, 2, 0) == (0, 0)
    assert find_multiset(3, 2, 3) == (2, 0)
    for n in range(1, 7):
        for k in range(5):
            last = multiset_count(n, k) - 1
            assert find_multiset(n, k, last) == (n - 1,) * k


def test_rank_multiset_examples():
    assert rank_multiset(3, 2, (0, 0)) == 0
    assert rank_multiset(3, 2, (2, 0)) == 3
    assert rank_multiset(3, 2, (2, 2)) == 5
    # order of the input does not matter
    assert rank_multiset(3, 2, (0, 2)) == 3


def test_round_trip_and_stream_agreement():
    for n in range(0, 7):
        for k in range(0, 5):
            stream = list(enumerate_multisets(ints(n), k))
            assert len(stream) == multiset_count(n, k)
            for i, ms in enumerate(stream):
                assert find_multiset(n, k, i) == ms
                assert rank_multiset(n, k, ms) == i


def test_first_multiset_with_largest_element():
    # the first multiset whose largest element is l has rank CC(l, k)
    for n in range(2, 7):
        for k in range(1, 5):
            for el in range(n):
                rank = multiset_count(el, k)
                assert find_multiset(n, k, rank)[0] == el


def test_random_round_trips_big_base():
    rng = random.Random(7)
    for _ in range(200):
        n = rng.randrange(1, 10**6)
        k = rng.randrange(0, 6)
        i = rng.randrange(multiset_count(n, k))
        ms = find_multiset(n, k, i)
        assert len(ms) == k
        assert all(ms[j] >= ms[j + 1] for j in range(k - 1))
        assert rank_multiset(n, k, ms) == i


def test_rank_errors():
    with pytest.raises(RankError):
        find_multiset(3, 2, 6)
    with pytest.raises(RankError):
        find_multiset(3, 2, -1)
    with pytest.raises(RankError):
        find_multiset(0, 2, 0)
    with pytest.raises(ValueError):
        rank_multiset(3, 2, (3, 0))
    with pytest.raises(ValueError):
        rank_multiset(3, 2, (0,))
