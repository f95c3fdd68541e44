# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled twin of treegen._engine_py.

Same API, same stream orders, same node semantics; the test suite compares
the two engines element-wise.  Keep any change here in lockstep with the
pure-Python module.
"""
from itertools import islice

ENGINE = "cython"


cdef class TreeNode:
    """Unlabeled, unordered rooted tree with a (weight, color) per vertex.

    Children are stored sorted by canonical code, descending, so structural
    equality of codes coincides with rooted isomorphism.
    """

    cdef readonly long long rw
    cdef readonly long ci
    cdef readonly tuple kids
    cdef readonly long long w
    cdef readonly tuple code

    def __init__(self, long long rw, long ci, kids=()):
        cdef TreeNode k, other
        cdef long long w = rw
        cdef list ordered
        cdef Py_ssize_t n, i, j
        n = len(kids)
        if n == 0:
            self.kids = ()
            self.rw = rw
            self.ci = ci
            self.w = rw
            self.code = (rw, rw, ci)
            return
        if n == 1:
            self.kids = tuple(kids)
        else:
            # insertion sort by code, descending; comparing the code tuples
            # directly avoids a key-function call per element
            ordered = list(kids)
            for i in range(1, n):
                k = ordered[i]
                j = i - 1
                while j >= 0:
                    other = ordered[j]
                    if other.code >= k.code:
                        break
                    ordered[j + 1] = other
                    j -= 1
                ordered[j + 1] = k
            self.kids = tuple(ordered)
        for k in self.kids:
            w += k.w
        self.rw = rw
        self.ci = ci
        self.w = w
        self.code = (w, rw, ci) + tuple([k.code for k in self.kids])

    def __eq__(self, other):
        if not isinstance(other, TreeNode):
            return NotImplemented
        return self.code == (<TreeNode>other).code

    def __hash__(self):
        return hash(self.code)

    def __repr__(self):
        return "TreeNode(w=%d, rw=%d, ci=%d, kids=%d)" % (
            self.w, self.rw, self.ci, len(self.kids))


def _code_of(TreeNode t):
    return t.code


def node(rw, ci, kids=()):
    return TreeNode(rw, ci, kids)


def join(TreeNode a, TreeNode b):
    """Join two rooted trees by an edge between their roots, rooting the
    result at the root of the code-wise smaller tree."""
    if a.code > b.code:
        a, b = b, a
    return TreeNode(a.rw, a.ci, a.kids + (b,))


def iter_multisets(factory, Py_ssize_t k, upper_bound):
    if k == 0:
        yield ()
        return
    stream = factory() if upper_bound is None else islice(factory(), upper_bound)
    cdef Py_ssize_t i = 0
    for item in stream:
        i += 1
        for rest in iter_multisets(factory, k - 1, i):
            yield (item,) + rest


def iter_forests(sp, long long w, long ci, long long m):
    if w == 0:
        yield ()
        return
    minw, maxw, mintw, chld = sp
    cdef long long lo = mintw[ci]
    if m < lo:
        return
    cdef long long m1, mu, rem, mb
    for m1 in range(lo, m + 1):
        for mu in range(1, w // m1 + 1):
            rem = w - mu * m1
            mb = rem if m1 - 1 > rem else m1 - 1
            for high in iter_multisets(
                    lambda: iter_rooted(sp, m1, ci, m1), mu, None):
                for low in iter_forests(sp, rem, ci, mb):
                    yield high + low


def iter_rooted(sp, long long w, long ci, long long m):
    minw, maxw, mintw, chld = sp
    if w < <long long>mintw[ci]:
        return
    cdef long d = chld[ci]
    cdef long long top = maxw[ci]
    if top > w:
        top = w
    cdef long long r, rem, mb
    for r in range(<long long>minw[ci], top + 1):
        rem = w - r
        mb = rem if m > rem else m
        for forest in iter_forests(sp, rem, d, mb):
            yield TreeNode(r, ci, forest)


def iter_free(sp, long long w, root_cis, bi_pairs, tri_cis):
    minw, maxw, mintw, chld = sp
    cdef long long hb = (w + 1) // 2 - 1
    cdef long long top, r, rem, mb, h
    cdef long ci, d, a, b
    for ci in root_cis:
        if w < <long long>mintw[ci]:
            continue
        d = chld[ci]
        top = maxw[ci]
        if top > w:
            top = w
        for r in range(<long long>minw[ci], top + 1):
            rem = w - r
            mb = rem if hb > rem else hb
            for forest in iter_forests(sp, rem, d, mb):
                yield TreeNode(r, ci, forest)
    if w % 2:
        return
    h = w // 2
    for a, b in bi_pairs:
        if a == b:
            pairs = iter_multisets(
                lambda: iter_rooted(sp, h, a, h - 1), 2, None)
            for t2, t1 in pairs:
                yield join(t1, t2)
        else:
            for t1 in iter_rooted(sp, h, a, h - 1):
                for t2 in iter_rooted(sp, h, b, h - 1):
                    yield join(t1, t2)
    for ci in tri_cis:
        pairs = iter_multisets(
            lambda: iter_rooted(sp, h, chld[ci], h), 2, None)
        for t2, t1 in pairs:
            yield TreeNode(0, ci, (t1, t2))
