"""Pure-Python enumeration engine.

This module holds the hot kernels: the tree node type and the mutually
recursive generators that stream rooted trees, forests and free trees for a
color scheme.  A compiled twin with identical semantics lives in
``_speedups.pyx``; ``treegen._engine`` picks one at import time.  The two
implementations must stay in lockstep -- the test suite compares their
streams element-wise.

Stream order contract (the zero-based rank of every object):

* forests of weight w, tree weights in [mintw(c), m]: largest-tree weight
  m' ascending, then multiplicity mu ascending, then multisets of the mu
  weight-m' trees (outer) x the remaining forest with bound m'-1 (inner);
* multisets of k trees: lexicographic on the non-increasing sequence of
  base-stream indices;
* rooted trees of weight w, subtree bound m: root weight ascending, then
  the forest stream of the remaining weight;
* free trees of weight w: monocentroidal trees (root colors in scheme
  order, root weight ascending), then bicentroidal pairs (one segment per
  mutual color pair; same-color pairs in multiset order, distinct-color
  pairs in product order with the first-listed color as major index), then
  tricentroidal trees (zero-weight center colors in scheme order, child
  pairs in multiset order).
"""
from itertools import islice

ENGINE = "python"


class TreeNode:
    """Unlabeled, unordered rooted tree with a (weight, color) at each vertex.

    Children are stored sorted by canonical code, descending, so structural
    equality of codes coincides with rooted isomorphism.  Nodes are immutable
    and freely shared between trees.
    """

    __slots__ = ("rw", "ci", "kids", "w", "code")

    def __init__(self, rw, ci, kids=()):
        kids = tuple(sorted(kids, key=_code_of, reverse=True))
        w = rw
        for k in kids:
            w += k.w
        self.rw = rw
        self.ci = ci
        self.kids = kids
        self.w = w
        # AHU-style structural key: equal iff rooted-isomorphic.  Leading
        # with the total weight makes the child order weight-major.
        self.code = (w, rw, ci) + tuple(k.code for k in kids)

    def __eq__(self, other):
        return isinstance(other, TreeNode) and self.code == other.code

    def __hash__(self):
        return hash(self.code)

    def __repr__(self):
        return "TreeNode(w=%d, rw=%d, ci=%d, kids=%d)" % (
            self.w, self.rw, self.ci, len(self.kids))


def _code_of(t):
    return t.code


def node(rw, ci, kids=()):
    return TreeNode(rw, ci, kids)


def join(a, b):
    """Join two rooted trees by an edge between their roots, rooting the
    result at the root of the code-wise smaller tree (the centroid-rooted
    orientation of a bicentroidal free tree)."""
    if a.code > b.code:
        a, b = b, a
    return TreeNode(a.rw, a.ci, a.kids + (b,))


def iter_multisets(factory, k, upper_bound):
    """All multisets of k items from the first upper_bound items of the
    stream produced by factory() (entire stream when upper_bound is None).

    Emits tuples with the largest-index item first; order is lexicographic
    on the non-increasing index sequences.
    """
    if k == 0:
        yield ()
        return
    stream = factory() if upper_bound is None else islice(factory(), upper_bound)
    i = 0
    for item in stream:
        i += 1
        for rest in iter_multisets(factory, k - 1, i):
            yield (item,) + rest


def iter_forests(sp, w, ci, m):
    """Forests of total weight w whose trees are colored ci with weights in
    [mintw(ci), m], as tuples of TreeNode (largest trees first)."""
    if w == 0:
        yield ()
        return
    minw, maxw, mintw, chld = sp
    lo = mintw[ci]
    if m < lo:
        return
    for m1 in range(lo, m + 1):
        for mu in range(1, w // m1 + 1):
            rem = w - mu * m1
            mb = rem if m1 - 1 > rem else m1 - 1
            for high in iter_multisets(lambda: iter_rooted(sp, m1, ci, m1), mu, None):
                for low in iter_forests(sp, rem, ci, mb):
                    yield high + low


def iter_rooted(sp, w, ci, m):
    """Rooted trees of weight w colored ci whose root subtrees weigh at
    most m."""
    minw, maxw, mintw, chld = sp
    if w < mintw[ci]:
        return
    d = chld[ci]
    top = maxw[ci] if maxw[ci] < w else w
    for r in range(minw[ci], top + 1):
        rem = w - r
        mb = rem if m > rem else m
        for forest in iter_forests(sp, rem, d, mb):
            yield TreeNode(r, ci, forest)


def iter_free(sp, w, root_cis, bi_pairs, tri_cis):
    """Canonical centroid-rooted trees of weight w: monocentroidal per root
    color, then bicentroidal per color pair, then tricentroidal per
    zero-weight center color.  The segment plans (root_cis, bi_pairs,
    tri_cis) come from the scheme."""
    minw, maxw, mintw, chld = sp
    hb = (w + 1) // 2 - 1
    for ci in root_cis:
        if w < mintw[ci]:
            continue
        d = chld[ci]
        top = maxw[ci] if maxw[ci] < w else w
        for r in range(minw[ci], top + 1):
            rem = w - r
            mb = rem if hb > rem else hb
            for forest in iter_forests(sp, rem, d, mb):
                yield TreeNode(r, ci, forest)
    if w % 2:
        return
    h = w // 2
    for a, b in bi_pairs:
        if a == b:
            pairs = iter_multisets(lambda: iter_rooted(sp, h, a, h - 1), 2, None)
            for t2, t1 in pairs:
                yield join(t1, t2)
        else:
            for t1 in iter_rooted(sp, h, a, h - 1):
                for t2 in iter_rooted(sp, h, b, h - 1):
                    yield join(t1, t2)
    for ci in tri_cis:
        pairs = iter_multisets(lambda: iter_rooted(sp, h, chld[ci], h), 2, None)
        for t2, t1 in pairs:
            yield TreeNode(0, ci, (t1, t2))
