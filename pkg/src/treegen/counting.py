"""Exact counting tables for colored weighted rooted trees and forests.

Everything is computed with Python's arbitrary-precision integers; there is
no floating point anywhere.  For a scheme and a maximum weight N the table
holds, for every weight w <= N and color c:

* ``rt_le(w, c, m)``   -- rooted trees of weight w colored c whose root
  subtrees weigh at most m (``rt(w, c)`` is the unbounded count),
* ``f_le(w, c, m)``    -- forests of weight w of c-colored trees with tree
  weights at most m,
* ``f_le_mu(w, c, m, mu)`` -- forests as above whose largest tree weighs
  exactly m and occurs at most mu times,

plus the per-weight decomposition of free-tree counts into monocentroidal,
bicentroidal and tricentroidal cases.  Tables are immutable after build and
safe for concurrent readers.
"""
from __future__ import annotations

import io
import os

from .errors import CacheError, TableBoundsError
from .multisets import multiset_count
from .scheme import ColorScheme

CACHE_MAGIC = "treegen-tables"
CACHE_VERSION = "v1"


class FreeParts:
    """Free-tree counts of one weight, split by centroid case.

    ``mono`` is a tuple of (color index, count) per root color in scheme
    order; ``bi`` a tuple of (major ci, minor ci, count) per mutual color
    pair; ``tri`` a tuple of (center ci, count) per zero-capable color.
    """

    __slots__ = ("mono", "bi", "tri", "total")

    def __init__(self, mono, bi, tri):
        self.mono = tuple(mono)
        self.bi = tuple(bi)
        self.tri = tuple(tri)
        self.total = (
            sum(c for _, c in self.mono)
            + sum(c for _, _, c in self.bi)
            + sum(c for _, c in self.tri)
        )

    @property
    def bi_total(self):
        return sum(c for _, _, c in self.bi)

    @property
    def tri_total(self):
        return sum(c for _, c in self.tri)


class CountTable:
    """Memoized counting tables for one scheme up to a maximum weight."""

    def __init__(self, scheme: ColorScheme, max_weight: int):
        if max_weight < 1:
            raise ValueError("max_weight must be at least 1")
        self.scheme = scheme
        self.max_weight = max_weight
        self._params = scheme.params()
        nc = scheme.ncolors
        n = max_weight
        # _rt_le[ci][w][m], _f_le_m[ci][w][m], _f_le_mu[ci][w][m][mu]
        self._rt_le = [[None] * (n + 1) for _ in range(nc)]
        self._f_le_m = [[None] * (n + 1) for _ in range(nc)]
        self._f_le_mu = [[None] * (n + 1) for _ in range(nc)]
        for ci in range(nc):
            self._rt_le[ci][0] = [0]
            self._f_le_m[ci][0] = [1]
            self._f_le_mu[ci][0] = {}
        self._free = [None] * (n + 1)

    # -- construction ----------------------------------------------------

    @classmethod
    def build(cls, scheme: ColorScheme, max_weight: int) -> "CountTable":
        table = cls(scheme, max_weight)
        minw, _, _, _ = table._params
        nc = scheme.ncolors
        # Colors that allow zero weight depend on same-weight values of their
        # child color (which the scheme forces to be zero-free), so build the
        # zero-free colors first within each weight.
        order = [ci for ci in range(nc) if minw[ci] >= 1]
        order += [ci for ci in range(nc) if minw[ci] == 0]
        for w in range(1, max_weight + 1):
            for ci in order:
                table._build_color(w, ci)
        for w in range(1, max_weight + 1):
            table._free[w] = table._free_parts(w)
        return table

    def _build_color(self, w, ci):
        minw, maxw, mintw, chld = self._params
        d = chld[ci]
        fle = self._f_le_m
        # rt_le row from the forest tables of the child color
        row = [0] * (w + 1)
        if w >= mintw[ci]:
            top = min(maxw[ci], w)
            for m in range(w + 1):
                total = 0
                for r in range(minw[ci], top + 1):
                    rem = w - r
                    total += fle[d][rem][m if m < rem else rem]
                row[m] = total
        self._rt_le[ci][w] = row
        # forest rows for this color: largest tree weight m, multiplicity mu
        fmu = {}
        fm = [0] * (w + 1)
        acc = 0
        for m in range(1, w + 1):
            if m < mintw[ci]:
                continue
            rtm = self._rt_le[ci][m][m]
            mus = [0] * (w // m + 1)
            cc = 1
            running = 0
            for mu in range(1, w // m + 1):
                # CC(rt_m, mu) incrementally: one multiply, one divide
                cc = cc * (rtm - 1 + mu) // mu
                rem = w - mu * m
                running += cc * fle[ci][rem][rem if m - 1 > rem else m - 1]
                mus[mu] = running
            fmu[m] = mus
            acc += running
            fm[m] = acc
        self._f_le_m[ci][w] = fm
        self._f_le_mu[ci][w] = fmu

    def _free_parts(self, w):
        minw, maxw, mintw, chld = self._params
        hb = (w + 1) // 2 - 1
        mono = []
        for ci in self.scheme.root_color_indices():
            count = 0
            if w >= mintw[ci]:
                for r in range(minw[ci], min(maxw[ci], w) + 1):
                    rem = w - r
                    count += self._f_le_m[chld[ci]][rem][hb if hb < rem else rem]
            mono.append((ci, count))
        bi = []
        tri = []
        if w % 2 == 0:
            h = w // 2
            for a, b in self.scheme_bi_pairs():
                if a == b:
                    count = multiset_count(self.rt_le(h, a, h - 1), 2)
                else:
                    count = self.rt_le(h, a, h - 1) * self.rt_le(h, b, h - 1)
                bi.append((a, b, count))
            for ci in self.scheme_tri_colors():
                tri.append((ci, multiset_count(self.rt(h, chld[ci]), 2)))
        return FreeParts(mono, bi, tri)

    # -- segment plans (shared with the generators) ------------------------

    def scheme_bi_pairs(self):
        """Mutual color pairs {c, chld(c)} with chld(chld(c)) = c, once each,
        ordered by the first-listed color (the major index)."""
        _, _, _, chld = self._params
        pairs = []
        for ci in range(self.scheme.ncolors):
            d = chld[ci]
            if chld[d] == ci and ci <= d:
                pairs.append((ci, d))
        return tuple(pairs)

    def scheme_tri_colors(self):
        minw, _, _, _ = self._params
        return tuple(ci for ci in range(self.scheme.ncolors) if minw[ci] == 0)

    # -- lookups -----------------------------------------------------------

    @property
    def params(self):
        """Engine parameter tuple (minw, maxw, mintw, chld) of the scheme."""
        return self._params

    def _check(self, w):
        if w > self.max_weight:
            raise TableBoundsError(
                "weight %d exceeds table maximum %d" % (w, self.max_weight)
            )
        if w < 0:
            raise ValueError("weight must be non-negative")

    def rt_le(self, w, ci, m=None) -> int:
        """Rooted trees of weight w, color index ci, root subtrees <= m."""
        self._check(w)
        if m is None or m > w:
            m = w
        if m < 0:
            m = 0
        return self._rt_le[ci][w][m]

    def rt(self, w, ci) -> int:
        return self.rt_le(w, ci, None)

    def f_le(self, w, ci, m=None) -> int:
        """Forests of weight w of ci-colored trees, tree weights <= m."""
        self._check(w)
        if w == 0:
            return 1
        if m is None or m > w:
            m = w
        if m < 0:
            m = 0
        return self._f_le_m[ci][w][m]

    def f(self, w, ci) -> int:
        return self.f_le(w, ci, None)

    def f_le_mu(self, w, ci, m, mu) -> int:
        """Forests of weight w, largest tree weight exactly m, at most mu of
        them."""
        self._check(w)
        row = self._f_le_mu[ci][w].get(m)
        if row is None:
            return 0
        if mu >= len(row):
            mu = len(row) - 1
        if mu < 0:
            mu = 0
        return row[mu]

    def free_parts(self, w) -> FreeParts:
        self._check(w)
        if w < 1:
            raise ValueError("free trees need positive weight")
        return self._free[w]

    # -- cache file --------------------------------------------------------

    def save(self, path: str) -> None:
        """Write the versioned line-oriented cache file."""
        scheme = self.scheme
        buf = io.StringIO()
        buf.write(
            "%s %s %s %d\n"
            % (CACHE_MAGIC, CACHE_VERSION, scheme.content_hash(), self.max_weight)
        )
        for ci in range(scheme.ncolors):
            name = scheme.color_name(ci)
            for w in range(1, self.max_weight + 1):
                for m, value in enumerate(self._rt_le[ci][w]):
                    buf.write("rtle %d %s %d - %d\n" % (w, name, m, value))
                for m, value in enumerate(self._f_le_m[ci][w]):
                    buf.write("flem %d %s %d - %d\n" % (w, name, m, value))
                for m, row in sorted(self._f_le_mu[ci][w].items()):
                    for mu, value in enumerate(row):
                        if mu == 0:
                            continue
                        buf.write("flemu %d %s %d %d %d\n" % (w, name, m, mu, value))
        tmp = path + ".tmp"
        with open(tmp, "w", encoding="ascii") as fh:
            fh.write(buf.getvalue())
        os.replace(tmp, path)

    @classmethod
    def load(cls, path: str, scheme: ColorScheme) -> "CountTable":
        """Load a cache file; raises CacheError on scheme mismatch, missing
        entries or internal inconsistency.  Validation covers truncation and
        cross-row consistency, not every single value: treat cache files as
        trusted artifacts."""
        with open(path, "r", encoding="ascii") as fh:
            header = fh.readline().split()
            if len(header) != 4 or header[0] != CACHE_MAGIC:
                raise CacheError("not a treegen table cache: %s" % path)
            if header[1] != CACHE_VERSION:
                raise CacheError("unsupported cache version %r" % header[1])
            if header[2] != scheme.content_hash():
                raise CacheError("cache scheme hash does not match requested scheme")
            try:
                max_weight = int(header[3])
            except ValueError:
                raise CacheError("bad max weight in cache header") from None
            table = cls(scheme, max_weight)
            try:
                for raw in fh:
                    kind, ws, name, ms, mus, vs = raw.split()
                    w, ci, value = int(ws), scheme.color_index(name), int(vs)
                    if not 1 <= w <= max_weight:
                        raise CacheError("cache entry weight out of range")
                    if kind == "rtle":
                        row = table._rt_le[ci][w]
                        if row is None:
                            row = table._rt_le[ci][w] = [None] * (w + 1)
                        row[int(ms)] = value
                    elif kind == "flem":
                        row = table._f_le_m[ci][w]
                        if row is None:
                            row = table._f_le_m[ci][w] = [None] * (w + 1)
                        row[int(ms)] = value
                    elif kind == "flemu":
                        m = int(ms)
                        if not 1 <= m <= w:
                            raise CacheError("cache entry m out of range")
                        rows = table._f_le_mu[ci][w]
                        if rows is None:
                            rows = table._f_le_mu[ci][w] = {}
                        row = rows.setdefault(m, [0] + [None] * (w // m))
                        row[int(mus)] = value
                    else:
                        raise CacheError("unknown cache entry kind %r" % kind)
            except (ValueError, IndexError, KeyError) as exc:
                raise CacheError("malformed cache line: %s" % exc) from exc
        table._validate_loaded()
        for w in range(1, max_weight + 1):
            table._free[w] = table._free_parts(w)
        return table

    def _validate_loaded(self):
        _, _, mintw, _ = self._params
        for ci in range(self.scheme.ncolors):
            for w in range(1, self.max_weight + 1):
                rt_row = self._rt_le[ci][w]
                fm_row = self._f_le_m[ci][w]
                if rt_row is None or fm_row is None:
                    raise CacheError("cache is missing rows for weight %d" % w)
                if None in rt_row or None in fm_row:
                    raise CacheError("cache is missing entries for weight %d" % w)
                if self._f_le_mu[ci][w] is None:
                    self._f_le_mu[ci][w] = {}
                mus = self._f_le_mu[ci][w]
                if fm_row[0] != 0:
                    raise CacheError("inconsistent cache row at weight %d" % w)
                if any(a > b for a, b in zip(rt_row, rt_row[1:])):
                    raise CacheError("inconsistent cache row at weight %d" % w)
                acc = 0
                for m in range(1, w + 1):
                    if m < mintw[ci]:
                        if fm_row[m] != 0:
                            raise CacheError("inconsistent cache row at weight %d" % w)
                        continue
                    row = mus.get(m)
                    if row is None or None in row:
                        raise CacheError("cache is missing entries for weight %d" % w)
                    if any(a > b for a, b in zip(row, row[1:])):
                        raise CacheError("inconsistent cache row at weight %d" % w)
                    acc += row[-1]
                    if fm_row[m] != acc:
                        raise CacheError("inconsistent cache row at weight %d" % w)


def build_tables(scheme: ColorScheme, max_weight: int) -> CountTable:
    """Build the counting tables for a scheme up to max_weight."""
    return CountTable.build(scheme, max_weight)


def free_count(table: CountTable, w: int):
    """Free-tree counts at weight w: (mono per root color name, bi, tri,
    total)."""
    parts = table.free_parts(w)
    mono = {table.scheme.color_name(ci): c for ci, c in parts.mono}
    return mono, parts.bi_total, parts.tri_total, parts.total
