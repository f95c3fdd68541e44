"""Color schemes: the per-color constraints that define a family of trees.

A scheme assigns every color ``c`` four parameters:

* ``minw(c)``/``maxw(c)``  -- allowed vertex weights for a ``c``-colored vertex
  (``maxw`` may be unbounded),
* ``mintw(c)``             -- minimum total weight of a subtree rooted at a
  ``c``-colored vertex,
* ``chld(c)``              -- the single color every child of a ``c`` vertex
  must have.

Three presets are built in: ``gray`` (unweighted trees), ``pos-weighted``
(positive integer weights), and ``block`` (weighted block trees, whose
centroid-rooted forms are in bijection with connected block graphs).
"""
from __future__ import annotations

import hashlib
from dataclasses import dataclass, field

from .errors import SchemeError

# Stand-in for an unbounded maximum vertex weight; every summation caps the
# root weight at the remaining tree weight anyway.
UNBOUNDED = (1 << 62) - 1


@dataclass(frozen=True)
class ColorRule:
    """Constraints for one color."""

    name: str
    minw: int
    maxw: int | None
    mintw: int
    child: str


@dataclass(frozen=True)
class ColorScheme:
    rules: tuple[ColorRule, ...]
    root_colors: tuple[str, ...] = ()
    name: str = "custom"
    _index: dict = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        if not self.rules:
            raise SchemeError("scheme must declare at least one color")
        names = [r.name for r in self.rules]
        if len(set(names)) != len(names):
            raise SchemeError("duplicate color name in scheme")
        index = {n: i for i, n in enumerate(names)}
        if not self.root_colors:
            object.__setattr__(self, "root_colors", tuple(names))
        for r in self.rules:
            maxw = UNBOUNDED if r.maxw is None else r.maxw
            if r.minw < 0:
                raise SchemeError("minw(%s) must be non-negative" % r.name)
            if maxw < 1:
                raise SchemeError("maxw(%s) must be positive or unbounded" % r.name)
            if r.minw > maxw:
                raise SchemeError("minw(%s) exceeds maxw(%s)" % (r.name, r.name))
            if r.mintw < 1:
                raise SchemeError("mintw(%s) must be at least 1" % r.name)
            if r.mintw < r.minw:
                raise SchemeError("mintw(%s) is below minw(%s)" % (r.name, r.name))
            if r.child not in index:
                raise SchemeError("chld(%s)=%s is not a declared color" % (r.name, r.child))
            if r.minw == 0 and self.rules[index[r.child]].minw < 1:
                raise SchemeError(
                    "minw(%s)=0 requires minw(chld(%s)) >= 1: zero-weight "
                    "vertices must form an independent set" % (r.name, r.name)
                )
        for n in self.root_colors:
            if n not in index:
                raise SchemeError("root color %s is not a declared color" % n)
        object.__setattr__(self, "_index", index)

    # -- lookups ---------------------------------------------------------

    @property
    def colors(self) -> tuple[str, ...]:
        return tuple(r.name for r in self.rules)

    def color_index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise SchemeError("unknown color %r" % name) from None

    def color_name(self, ci: int) -> str:
        return self.rules[ci].name

    @property
    def ncolors(self) -> int:
        return len(self.rules)

    def params(self):
        """Engine parameter tuple: (minw, maxw, mintw, chld) index arrays."""
        minw = tuple(r.minw for r in self.rules)
        maxw = tuple(UNBOUNDED if r.maxw is None else r.maxw for r in self.rules)
        mintw = tuple(r.mintw for r in self.rules)
        chld = tuple(self._index[r.child] for r in self.rules)
        return minw, maxw, mintw, chld

    def root_color_indices(self) -> tuple[int, ...]:
        return tuple(self._index[n] for n in self.root_colors)

    # -- identity --------------------------------------------------------

    def content_hash(self) -> str:
        """Hash of the scheme content; keys table caches so that caches from
        different schemes never collide."""
        parts = []
        for r in self.rules:
            maxw = "inf" if r.maxw is None else str(r.maxw)
            parts.append("%s:%d:%s:%d:%s" % (r.name, r.minw, maxw, r.mintw, r.child))
        parts.append("roots=" + ",".join(self.root_colors))
        digest = hashlib.sha256(";".join(parts).encode("utf-8")).hexdigest()
        return digest[:16]


def make_scheme(rows, root_colors=(), name="custom") -> ColorScheme:
    """Build a scheme from (name, minw, maxw, mintw, child) rows.

    ``maxw`` may be ``None`` for unbounded.
    """
    rules = tuple(ColorRule(*row) for row in rows)
    return ColorScheme(rules, tuple(root_colors), name)


def gray_scheme() -> ColorScheme:
    """Unweighted rooted/free trees: every vertex weight 1."""
    return make_scheme([("Gray", 1, 1, 1, "Gray")], name="gray")


def positive_weighted_scheme() -> ColorScheme:
    """Trees with positive integer vertex weights."""
    return make_scheme([("Green", 1, None, 1, "Green")], name="pos-weighted")


def block_scheme() -> ColorScheme:
    """Weighted block trees: Yellow cut vertices (weight 1, subtree weight at
    least 2) alternating with Red block vertices (weight = non-cut vertices of
    the block, possibly 0)."""
    return make_scheme(
        [("Yellow", 1, 1, 2, "Red"), ("Red", 0, None, 1, "Yellow")],
        name="block",
    )


PRESETS = {
    "gray": gray_scheme,
    "pos-weighted": positive_weighted_scheme,
    "block": block_scheme,
}


def load_scheme(spec: str) -> ColorScheme:
    """Resolve a preset name or a scheme file path."""
    if spec in PRESETS:
        return PRESETS[spec]()
    return load_scheme_file(spec)


def load_scheme_file(path: str) -> ColorScheme:
    """Parse a scheme file: one `name minw maxw mintw chld` row per color
    (maxw accepts `inf`), plus an optional `roots name...` row."""
    rows = []
    roots: tuple[str, ...] = ()
    try:
        with open(path, "r", encoding="utf-8") as fh:
            lines = fh.readlines()
    except OSError as exc:
        raise SchemeError("cannot read scheme file %s: %s" % (path, exc)) from exc
    for lineno, raw in enumerate(lines, 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if tokens[0] == "roots":
            roots = tuple(tokens[1:])
            continue
        if len(tokens) != 5:
            raise SchemeError(
                "%s:%d: expected `name minw maxw mintw chld`" % (path, lineno)
            )
        name, minw, maxw, mintw, child = tokens
        try:
            row = (
                name,
                int(minw),
                None if maxw.lower() in ("inf", "unbounded", "*") else int(maxw),
                int(mintw),
                child,
            )
        except ValueError:
            raise SchemeError("%s:%d: bad integer field" % (path, lineno)) from None
        rows.append(row)
    return make_scheme(rows, roots, name=path)
