"""Enumeration, unranking, ranking and uniform sampling of rooted trees,
forests and free trees, plus the deterministic parallel chunking driver.

Ranks are zero-based and always refer to the enumeration order documented in
``treegen._engine_py``; ``unrank_*(i)`` is structurally identical to the i-th
emission of the matching ``enumerate_*`` stream, and ``rank_*`` inverts it.
"""
from __future__ import annotations

import random
from dataclasses import dataclass

from . import _engine as engine
from .counting import CountTable
from .errors import EmptySpaceError, RankError
from .multisets import find_multiset, rank_multiset
from .trees import Forest, Tree

SAMPLING_ALGORITHM = "mt19937-rejection"


def _ci(table, color):
    return table.scheme.color_index(color)


def _half_bound(w):
    # integer form of "heaviest subtree weight < w/2", both parities
    return (w + 1) // 2 - 1


# -- enumeration -------------------------------------------------------------


def enumerate_rooted(table: CountTable, w: int, color: str, m: int | None = None):
    """Stream the rooted trees of weight w and the given root color whose
    root subtrees weigh at most m (no bound when m is None)."""
    table._check(w)
    ci = _ci(table, color)
    return engine.iter_rooted(table.params, w, ci, w if m is None else m)


def enumerate_forests(table: CountTable, w: int, color: str, m: int | None = None):
    """Stream the forests of weight w of trees colored `color` with tree
    weights at most m, wrapped as Forest objects."""
    table._check(w)
    ci = _ci(table, color)
    bound = w if m is None else m
    for trees in engine.iter_forests(table.params, w, ci, bound):
        yield Forest(trees)


def enumerate_free(table: CountTable, w: int):
    """Stream the canonical centroid-rooted trees of weight w: all
    monocentroidal, then bicentroidal, then tricentroidal ones."""
    table._check(w)
    return engine.iter_free(
        table.params,
        w,
        table.scheme.root_color_indices(),
        table.scheme_bi_pairs(),
        table.scheme_tri_colors(),
    )


# -- unranking ---------------------------------------------------------------


def _unrank_rooted(table, w, ci, m, i):
    size = table.rt_le(w, ci, m)
    if not 0 <= i < size:
        raise RankError("rooted rank %d out of range [0, %d)" % (i, size))
    minw, maxw, mintw, chld = table.params
    d = chld[ci]
    for r in range(minw[ci], min(maxw[ci], w) + 1):
        rem = w - r
        mb = min(m, rem)
        block = table.f_le(rem, d, mb)
        if i < block:
            return engine.node(r, ci, _unrank_forest_le(table, rem, d, mb, i))
        i -= block
    raise AssertionError("rooted-tree unrank fell through")


def _unrank_forest_le(table, w, ci, m, i):
    if w == 0:
        if i != 0:
            raise RankError("forest rank %d out of range" % i)
        return ()
    size = table.f_le(w, ci, m)
    if not 0 <= i < size:
        raise RankError("forest rank %d out of range [0, %d)" % (i, size))
    _, _, mintw, _ = table.params
    m1 = mintw[ci]
    while table.f_le(w, ci, m1) <= i:
        m1 += 1
    i -= table.f_le(w, ci, m1 - 1)
    mu = 1
    while table.f_le_mu(w, ci, m1, mu) <= i:
        mu += 1
    i -= table.f_le_mu(w, ci, m1, mu - 1)
    return _unrank_forest_exact(table, w, ci, m1, mu, i)


def _unrank_forest_exact(table, w, ci, m, mu, i):
    rem = w - mu * m
    mb = min(rem, m - 1)
    j = table.f_le(rem, ci, mb)
    high_index, low_index = divmod(i, j)
    indices = find_multiset(table.rt(m, ci), mu, high_index)
    high = tuple(_unrank_rooted(table, m, ci, m, ix) for ix in indices)
    low = _unrank_forest_le(table, rem, ci, mb, low_index)
    return high + low


def unrank_rooted(table: CountTable, w: int, color: str, i: int,
                  m: int | None = None) -> Tree:
    """The i-th rooted tree of weight w with the given root color (root
    subtrees bounded by m when given)."""
    table._check(w)
    return _unrank_rooted(table, w, _ci(table, color), w if m is None else m, i)


def unrank_forest(table: CountTable, w: int, color: str, i: int,
                  m: int | None = None, mu: int | None = None) -> Forest:
    """The i-th forest of weight w.  With mu=None the space is the forests
    with tree weights at most m; otherwise it is the forests whose largest
    tree weighs exactly m and occurs exactly mu times."""
    table._check(w)
    ci = _ci(table, color)
    if mu is None:
        return Forest(_unrank_forest_le(table, w, ci, w if m is None else m, i))
    if m is None:
        raise ValueError("mu requires an explicit largest tree weight m")
    size = table.f_le_mu(w, ci, m, mu) - table.f_le_mu(w, ci, m, mu - 1)
    if not 0 <= i < size:
        raise RankError("forest rank %d out of range [0, %d)" % (i, size))
    return Forest(_unrank_forest_exact(table, w, ci, m, mu, i))


def unrank_free(table: CountTable, w: int, i: int) -> Tree:
    """The i-th canonical centroid-rooted tree of weight w."""
    parts = table.free_parts(w)
    if not 0 <= i < parts.total:
        raise RankError("free-tree rank %d out of range [0, %d)" % (i, parts.total))
    minw, maxw, mintw, chld = table.params
    hb = _half_bound(w)
    for ci, count in parts.mono:
        if i >= count:
            i -= count
            continue
        d = chld[ci]
        for r in range(minw[ci], min(maxw[ci], w) + 1):
            rem = w - r
            mb = min(rem, hb)
            block = table.f_le(rem, d, mb)
            if i < block:
                return engine.node(r, ci, _unrank_forest_le(table, rem, d, mb, i))
            i -= block
        raise AssertionError("mono segment fell through")
    h = w // 2
    for a, b, count in parts.bi:
        if i >= count:
            i -= count
            continue
        if a == b:
            i1, i2 = find_multiset(table.rt_le(h, a, h - 1), 2, i)
            t1 = _unrank_rooted(table, h, a, h - 1, i1)
            t2 = _unrank_rooted(table, h, a, h - 1, i2)
        else:
            i1, i2 = divmod(i, table.rt_le(h, b, h - 1))
            t1 = _unrank_rooted(table, h, a, h - 1, i1)
            t2 = _unrank_rooted(table, h, b, h - 1, i2)
        return engine.join(t1, t2)
    for ci, count in parts.tri:
        if i >= count:
            i -= count
            continue
        i1, i2 = find_multiset(table.rt(h, chld[ci]), 2, i)
        t1 = _unrank_rooted(table, h, chld[ci], h, i1)
        t2 = _unrank_rooted(table, h, chld[ci], h, i2)
        return engine.node(0, ci, (t1, t2))
    raise AssertionError("free-tree unrank fell through")


# -- ranking -----------------------------------------------------------------


def _rank_rooted(table, t, m):
    minw, maxw, mintw, chld = table.params
    ci, w, r = t.ci, t.w, t.rw
    if w < mintw[ci]:
        raise ValueError("tree weight %d below mintw of its color" % w)
    if not minw[ci] <= r <= maxw[ci]:
        raise ValueError("root weight %d outside [minw, maxw] of its color" % r)
    d = chld[ci]
    rank = 0
    for r1 in range(minw[ci], r):
        rem = w - r1
        rank += table.f_le(rem, d, min(m, rem))
    rem = w - r
    return rank + _rank_forest_le(table, t.kids, d, min(m, rem), rem)


def _rank_forest_le(table, trees, ci, m, w):
    if sum(t.w for t in trees) != w:
        raise ValueError("forest weight mismatch")
    if w == 0:
        return 0
    m1 = max(t.w for t in trees)
    if m1 > m:
        raise ValueError("largest tree weight %d exceeds bound %d" % (m1, m))
    mu = sum(1 for t in trees if t.w == m1)
    rank = table.f_le(w, ci, m1 - 1) + table.f_le_mu(w, ci, m1, mu - 1)
    return rank + _rank_forest_exact(table, trees, ci, m1, mu, w)


def _rank_forest_exact(table, trees, ci, m, mu, w):
    for t in trees:
        if t.ci != ci:
            raise ValueError("forest tree color does not match the space")
    high = [t for t in trees if t.w == m]
    low = [t for t in trees if t.w < m]
    if len(high) != mu:
        raise ValueError("forest multiplicity mismatch")
    rem = w - mu * m
    mb = min(rem, m - 1)
    indices = [_rank_rooted(table, t, m) for t in high]
    high_index = rank_multiset(table.rt(m, ci), mu, indices)
    low_index = _rank_forest_le(table, low, ci, mb, rem)
    return high_index * table.f_le(rem, ci, mb) + low_index


def rank_rooted(table: CountTable, t: Tree, m: int | None = None) -> int:
    """Rank of a rooted tree within its (optionally bounded) space."""
    table._check(t.w)
    return _rank_rooted(table, t, t.w if m is None else m)


def rank_forest(table: CountTable, forest, color: str | None = None,
                m: int | None = None, mu: int | None = None) -> int:
    """Rank of a forest (Forest or iterable of trees) within the space
    addressed like unrank_forest.  The color is taken from the trees when
    not given; an empty forest needs it explicitly."""
    trees = tuple(forest)
    w = sum(t.w for t in trees)
    table._check(w)
    if color is not None:
        ci = _ci(table, color)
    elif trees:
        ci = trees[0].ci
    else:
        raise ValueError("empty forest needs an explicit color")
    if mu is None:
        return _rank_forest_le(table, trees, ci, w if m is None else m, w)
    if m is None:
        raise ValueError("mu requires an explicit largest tree weight m")
    return _rank_forest_exact(table, trees, ci, m, mu, w)


def rank_free(table: CountTable, t: Tree) -> int:
    """Rank of a canonical centroid-rooted tree in the free enumeration."""
    w = t.w
    parts = table.free_parts(w)
    minw, maxw, mintw, chld = table.params
    half_kids = [k for k in t.kids if 2 * k.w == w]
    if len(half_kids) == 0:
        hb = _half_bound(w)
        offset = 0
        for ci, count in parts.mono:
            if ci == t.ci:
                break
            offset += count
        else:
            raise ValueError("root color is not a free-tree root color")
        if w < mintw[t.ci]:
            raise ValueError("tree weight %d below mintw of its color" % w)
        if not minw[t.ci] <= t.rw <= maxw[t.ci]:
            raise ValueError("root weight %d outside [minw, maxw]" % t.rw)
        d = chld[t.ci]
        local = 0
        for r1 in range(minw[t.ci], t.rw):
            rem = w - r1
            local += table.f_le(rem, d, min(rem, hb))
        rem = w - t.rw
        local += _rank_forest_le(table, t.kids, d, min(rem, hb), rem)
        if local >= count:
            raise ValueError("tree is not a canonical centroid-rooted emission")
        return offset + local
    offset = sum(count for _, count in parts.mono)
    h = w // 2
    if len(half_kids) == 1:
        t2 = half_kids[0]
        rest = list(t.kids)
        rest.remove(t2)
        t1 = engine.node(t.rw, t.ci, rest)
        for a, b, count in parts.bi:
            if {a, b} == {t1.ci, t2.ci}:
                if a == b:
                    i1 = _rank_rooted(table, t1, h - 1)
                    i2 = _rank_rooted(table, t2, h - 1)
                    return offset + rank_multiset(
                        table.rt_le(h, a, h - 1), 2, (i1, i2))
                major, minor = (t1, t2) if t1.ci == a else (t2, t1)
                i1 = _rank_rooted(table, major, h - 1)
                i2 = _rank_rooted(table, minor, h - 1)
                return offset + i1 * table.rt_le(h, b, h - 1) + i2
            offset += count
        raise ValueError("no bicentroidal segment for this color pair")
    if len(half_kids) == 2 and t.rw == 0:
        offset += parts.bi_total
        for ci, count in parts.tri:
            if ci == t.ci:
                d = chld[ci]
                indices = [_rank_rooted(table, k, h) for k in half_kids]
                return offset + rank_multiset(table.rt(h, d), 2, indices)
            offset += count
        raise ValueError("no tricentroidal segment for this color")
    raise ValueError("tree is not a canonical centroid-rooted emission")


# -- sampling ----------------------------------------------------------------


@dataclass(frozen=True)
class SampleResult:
    tree: Tree
    rank: int
    size: int
    seed: int
    algorithm: str = SAMPLING_ALGORITHM


def _uniform_below(rng: random.Random, n: int) -> int:
    # rejection over the minimal bit width keeps the draw exactly uniform
    # for arbitrary-precision sizes
    bits = n.bit_length()
    while True:
        x = rng.getrandbits(bits)
        if x < n:
            return x


def sample_uar(table: CountTable, w: int, seed: int) -> SampleResult:
    """One free tree of weight w chosen uniformly at random from a seeded
    deterministic generator; identical seed means identical output."""
    size = table.free_parts(w).total
    if size == 0:
        raise EmptySpaceError("no free trees of weight %d under this scheme" % w)
    rank = _uniform_below(random.Random(seed), size)
    return SampleResult(unrank_free(table, w, rank), rank, size, seed)


def sample_many(table: CountTable, w: int, seed: int, count: int):
    """Stream `count` independent uniform draws from one seeded generator."""
    size = table.free_parts(w).total
    if size == 0:
        raise EmptySpaceError("no free trees of weight %d under this scheme" % w)
    rng = random.Random(seed)
    for _ in range(count):
        rank = _uniform_below(rng, size)
        yield SampleResult(unrank_free(table, w, rank), rank, size, seed)


# -- parallel chunking ---------------------------------------------------------


@dataclass(frozen=True)
class Chunk:
    """A contiguous rank range assigned to one worker."""

    table: CountTable
    w: int
    worker: int
    start: int
    stop: int  # exclusive

    def __len__(self):
        return self.stop - self.start

    def trees(self):
        for i in range(self.start, self.stop):
            yield unrank_free(self.table, self.w, i)


def parallel_enumerate(table: CountTable, w: int, workers: int):
    """Split the free enumeration of weight w into `workers` ordered chunks
    of ranks; concatenating the chunks reproduces the sequential stream.

    Worker p gets ranks [p*k, (p+1)*k) with k = floor(N/workers); the last
    worker also takes the remainder ranks >= workers*k.
    """
    if workers < 1:
        raise ValueError("worker count must be at least 1")
    size = table.free_parts(w).total
    k = size // workers
    chunks = []
    for p in range(workers):
        start = p * k
        stop = (p + 1) * k if p < workers - 1 else size
        chunks.append(Chunk(table, w, p, start, stop))
    return chunks


# -- ranked spaces -------------------------------------------------------------


@dataclass(frozen=True)
class RankedSpace:
    """A uniformly addressable space of objects: kind `rooted`, `forest` or
    `free` with its parameters; ranks live in [0, size)."""

    table: CountTable
    kind: str
    w: int
    color: str | None = None
    m: int | None = None
    mu: int | None = None

    @property
    def size(self) -> int:
        t, w = self.table, self.w
        if self.kind == "rooted":
            ci = _ci(t, self.color)
            return t.rt_le(w, ci, w if self.m is None else self.m)
        if self.kind == "forest":
            ci = _ci(t, self.color)
            if self.mu is None:
                return t.f_le(w, ci, w if self.m is None else self.m)
            return t.f_le_mu(w, ci, self.m, self.mu) - t.f_le_mu(
                w, ci, self.m, self.mu - 1)
        if self.kind == "free":
            return t.free_parts(w).total
        raise ValueError("unknown space kind %r" % self.kind)

    def enumerate(self):
        if self.kind == "rooted":
            return enumerate_rooted(self.table, self.w, self.color, self.m)
        if self.kind == "forest":
            if self.mu is not None:
                raise ValueError("enumeration of exact-mu spaces is not exposed")
            return enumerate_forests(self.table, self.w, self.color, self.m)
        return enumerate_free(self.table, self.w)

    def unrank(self, i: int):
        if self.kind == "rooted":
            return unrank_rooted(self.table, self.w, self.color, i, self.m)
        if self.kind == "forest":
            return unrank_forest(self.table, self.w, self.color, i, self.m, self.mu)
        return unrank_free(self.table, self.w, i)

    def rank(self, obj) -> int:
        if self.kind == "rooted":
            return rank_rooted(self.table, obj, self.m)
        if self.kind == "forest":
            return rank_forest(self.table, obj, self.color, self.m, self.mu)
        return rank_free(self.table, obj)
