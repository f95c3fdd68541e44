"""Order-consistent enumeration, unranking and ranking of fixed-size
multisets over an abstractly enumerated base set.

Multisets of k items over a base stream are ordered lexicographically by
their non-increasing sequence of base-stream indices; ``find_multiset`` and
``rank_multiset`` address exactly that order, so position j of
``enumerate_multisets`` equals ``find_multiset(n, k, j)`` resolved through
the stream.
"""
from __future__ import annotations

from math import comb

from ._engine import iter_multisets
from .errors import RankError


def multiset_count(i: int, j: int) -> int:
    """Number of multisets of j elements over a set of i elements:
    comb(i-1+j, j), with CC(i,0)=1 for all i and CC(0,j)=0 for j>0."""
    if j == 0:
        return 1
    if i == 0:
        return 0
    return comb(i - 1 + j, j)


def enumerate_multisets(base, k: int, upper_bound=None):
    """Yield the multisets of k elements drawn from the first upper_bound
    elements of the base stream (the entire stream when None).

    ``base`` must be restartable: a zero-argument callable returning a fresh
    deterministic iterator.  Multisets come out as tuples, largest stream
    index first.
    """
    return iter_multisets(base, k, upper_bound)


def find_multiset(n: int, k: int, i: int) -> tuple[int, ...]:
    """The i-th multiset of k elements from the integers [0, n), as a
    non-increasing index tuple."""
    if i < 0 or i >= multiset_count(n, k):
        raise RankError("multiset rank %d out of range for n=%d, k=%d" % (i, n, k))
    out = []
    while k > 0 and n > 1:
        # Largest integer l with CC(l, k) <= i: the first multiset whose
        # largest element is l has rank exactly CC(l, k).
        lo, hi = 0, n - 1
        while lo < hi:
            mid = (lo + hi + 1) // 2
            if multiset_count(mid, k) <= i:
                lo = mid
            else:
                hi = mid - 1
        out.append(lo)
        i -= multiset_count(lo, k)
        n, k = lo + 1, k - 1
    out.extend([0] * k)
    return tuple(out)


def rank_multiset(n: int, k: int, elements) -> int:
    """Rank of a multiset of k elements from [0, n); inverse of
    find_multiset."""
    seq = sorted(elements, reverse=True)
    if len(seq) != k:
        raise ValueError("expected %d elements, got %d" % (k, len(seq)))
    if seq and (seq[0] >= n or seq[-1] < 0):
        raise ValueError("multiset element out of range [0, %d)" % n)
    rank = 0
    for pos, el in enumerate(seq):
        rank += multiset_count(el, k - pos)
    return rank
