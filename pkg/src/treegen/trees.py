"""Tree model: colored weighted rooted trees, forests, centroids,
canonicality and canonical codes.

The node type itself comes from the active enumeration engine; this module
adds the structural operations.  A rooted tree here always stands for the
free tree underneath it -- centroid computations and the leaf rules treat
the root's degree accordingly.
"""
from __future__ import annotations

from dataclasses import dataclass

from ._engine import TreeNode as Tree
from ._engine import join, node
from .errors import ParseError
from .scheme import ColorScheme

__all__ = [
    "Tree", "Forest", "node", "join", "build_tree", "total_weight",
    "centroids", "CentroidReport", "canonicalize_weighted", "canonical_code",
    "is_canonical", "canonical_violation", "tree_to_text", "tree_from_text",
]


def build_tree(scheme: ColorScheme, weight: int, color: str, children=()) -> Tree:
    """Convenience constructor resolving the color by name."""
    return node(weight, scheme.color_index(color), tuple(children))


class Forest:
    """An unordered collection of rooted trees, kept sorted by canonical
    code descending (which is total weight major)."""

    __slots__ = ("trees",)

    def __init__(self, trees=()):
        self.trees = tuple(sorted(trees, key=lambda t: t.code, reverse=True))

    @property
    def weight(self) -> int:
        return sum(t.w for t in self.trees)

    @property
    def max_tree_weight(self) -> int:
        """m(F): the largest tree weight; 0 for the empty forest."""
        return max(t.w for t in self.trees) if self.trees else 0

    @property
    def multiplicity(self) -> int:
        """mu(F): how many trees attain the largest weight."""
        m = self.max_tree_weight
        return sum(1 for t in self.trees if t.w == m)

    def color_set(self) -> frozenset:
        return frozenset(t.ci for t in self.trees)

    def __iter__(self):
        return iter(self.trees)

    def __len__(self):
        return len(self.trees)

    def __eq__(self, other):
        return isinstance(other, Forest) and self.trees == other.trees

    def __hash__(self):
        return hash(self.trees)

    def __repr__(self):
        return "Forest(%d trees, weight %d)" % (len(self.trees), self.weight)


def total_weight(t) -> int:
    """Total vertex weight of a tree or forest."""
    if isinstance(t, Forest):
        return t.weight
    return t.w


def _flatten(t: Tree):
    """Occurrence arrays in preorder: (nodes, parents, children).  Node
    objects are shared between trees, so vertices are addressed by preorder
    position."""
    nodes = []
    parents = []
    stack = [(t, -1)]
    while stack:
        cur, parent = stack.pop()
        idx = len(nodes)
        nodes.append(cur)
        parents.append(parent)
        for kid in reversed(cur.kids):
            stack.append((kid, idx))
    children = [[] for _ in nodes]
    for v in range(1, len(nodes)):
        children[parents[v]].append(v)
    return nodes, parents, children


@dataclass
class CentroidReport:
    """Per-vertex heaviest-subtree weights and the centroid structure.

    Vertices are preorder positions of the rooted input; ``nodes[v]`` maps a
    position back to its node (weight ``nodes[v].rw``, color ``nodes[v].ci``).
    """

    nodes: tuple
    parents: tuple
    hs_values: tuple
    centroid_path: tuple
    central_centroids: tuple
    case: str

    @property
    def centroids(self):
        return self.centroid_path


def centroids(t: Tree, as_free: bool = True) -> CentroidReport:
    """Heaviest-subtree weights and centroids of the tree under ``t``.

    With ``as_free`` (the default) the tree is read as a free tree: the
    component above a vertex counts among its subtrees.  Otherwise only the
    rooted child subtrees count.
    """
    if t.w <= 0:
        raise ValueError("centroids need positive total weight")
    nodes, parents, children = _flatten(t)
    n = len(nodes)
    sub = [v.rw for v in nodes]
    for v in range(n - 1, 0, -1):
        sub[parents[v]] += sub[v]
    total = sub[0]
    hs = [0] * n
    for v in range(n):
        best = total - sub[v] if (as_free and v > 0) else 0
        for c in children[v]:
            if sub[c] > best:
                best = sub[c]
        hs[v] = best
    low = min(hs)
    members = [v for v in range(n) if hs[v] == low]
    path = _order_path(members, parents)
    k = len(path)
    central = (path[(k - 1) // 2],) if k % 2 else (path[k // 2 - 1], path[k // 2])
    case = "mono" if k == 1 else ("bi" if k == 2 else "tri")
    return CentroidReport(
        nodes=tuple(nodes),
        parents=tuple(parents),
        hs_values=tuple(hs),
        centroid_path=tuple(path),
        central_centroids=central,
        case=case,
    )


def _order_path(members, parents):
    """Order the centroid vertices along the path they form."""
    if len(members) == 1:
        return members
    member_set = set(members)
    neighbors = {v: [] for v in members}
    for v in members:
        p = parents[v]
        if p in member_set:
            neighbors[v].append(p)
            neighbors[p].append(v)
    ends = sorted(v for v in members if len(neighbors[v]) <= 1)
    start = ends[0] if ends else members[0]
    path = [start]
    seen = {start}
    while len(path) < len(members):
        nxt = [u for u in neighbors[path[-1]] if u not in seen]
        if not nxt:
            # centroids always form a path; anything else means the input
            # violated the weighted-tree model
            raise ValueError("centroid minimizers do not form a path")
        path.append(nxt[0])
        seen.add(nxt[0])
    return path


def canonicalize_weighted(t: Tree) -> Tree:
    """Contract zero-weight subtrees to single vertices, then drop
    zero-weight leaves; preserves total weight and is idempotent.

    A contracted component keeps the color of its vertex closest to the
    root.  The result stays rooted at the surviving image of the old root.
    """
    if t.w <= 0:
        raise ValueError("canonicalization needs positive total weight")
    nodes, parents, _ = _flatten(t)
    n = len(nodes)
    # merge adjacent zero-weight vertices into their shallowest occurrence
    rep = list(range(n))
    for v in range(1, n):
        p = rep[parents[v]]
        if nodes[v].rw == 0 and nodes[p].rw == 0:
            rep[v] = p
    kids_of = {v: [] for v in range(n) if rep[v] == v}
    parent_rep = {rep[0]: None}
    for v in range(1, n):
        r, pr = rep[v], rep[parents[v]]
        if r != pr:
            kids_of[pr].append(r)
            parent_rep[r] = pr
    # drop zero-weight leaves (free-tree degree 1); pruning cannot cascade
    # because every neighbor of a zero vertex is positive after contraction
    root = rep[0]
    removed = set()
    for v, pr in parent_rep.items():
        degree = len(kids_of[v]) + (0 if pr is None else 1)
        if nodes[v].rw == 0 and degree <= 1:
            removed.add(v)
    if root in removed:
        root = kids_of[root][0]

    def rebuild(v):
        kids = [rebuild(c) for c in kids_of[v] if c not in removed]
        return node(nodes[v].rw, nodes[v].ci, kids)

    return rebuild(root)


def canonical_code(t: Tree) -> bytes:
    """Byte serialization of the structural code; two rooted trees have
    equal codes iff they are isomorphic as rooted colored weighted trees."""
    return repr(t.code).encode("ascii")


def canonical_violation(t: Tree, scheme: ColorScheme | None = None) -> str | None:
    """First violated canonicality or scheme constraint, or None."""
    if t.w <= 0:
        return "total weight is not positive"
    nodes, parents, _ = _flatten(t)
    n = len(nodes)
    for v in range(n):
        cur = nodes[v]
        p = parents[v]
        if cur.rw == 0 and p >= 0 and nodes[p].rw == 0:
            return "zero-weight vertices are adjacent (independent set violated)"
        degree = len(cur.kids) + (1 if p >= 0 else 0)
        if n > 1 and degree <= 1 and cur.rw == 0:
            return "zero-weight leaf"
    if scheme is not None:
        minw, maxw, mintw, chld = scheme.params()
        for v in range(n):
            cur = nodes[v]
            name = scheme.color_name(cur.ci)
            if cur.rw < minw[cur.ci] or cur.rw > maxw[cur.ci]:
                return "vertex weight %d outside [minw, maxw] of color %s" % (
                    cur.rw, name)
            for kid in cur.kids:
                if kid.ci != chld[cur.ci]:
                    return "child color of %s is not chld(%s)" % (name, name)
            if cur.w < mintw[cur.ci]:
                return "subtree weight %d below mintw(%s)" % (cur.w, name)
    return None


def is_canonical(t: Tree, scheme: ColorScheme | None = None) -> bool:
    return canonical_violation(t, scheme) is None


# -- text format -----------------------------------------------------------


def tree_to_text(t: Tree, scheme: ColorScheme) -> str:
    """One-line preorder serialization: `depth:weight:color` tokens, children
    in stored (canonical-descending) order."""
    parts = []
    stack = [(t, 0)]
    while stack:
        cur, depth = stack.pop()
        parts.append("%d:%d:%s" % (depth, cur.rw, scheme.color_name(cur.ci)))
        for kid in reversed(cur.kids):
            stack.append((kid, depth + 1))
    return " ".join(parts)


def tree_from_text(line: str, scheme: ColorScheme) -> Tree:
    """Parse the text format back into a tree (children re-sorted into the
    canonical stored order)."""
    tokens = line.split()
    if not tokens:
        raise ParseError("empty tree line")
    entries = []
    for tok in tokens:
        fields = tok.split(":")
        if len(fields) != 3:
            raise ParseError("bad token %r: expected depth:weight:color" % tok)
        try:
            depth, weight = int(fields[0]), int(fields[1])
        except ValueError:
            raise ParseError("bad token %r: non-integer field" % tok) from None
        if weight < 0:
            raise ParseError("bad token %r: negative weight" % tok)
        try:
            ci = scheme.color_index(fields[2])
        except Exception:
            raise ParseError("unknown color %r" % fields[2]) from None
        entries.append((depth, weight, ci))
    stack = []  # open nodes on the path to the current token: [rw, ci, kids]
    result = None
    for pos, (depth, weight, ci) in enumerate(entries):
        if pos == 0:
            if depth != 0:
                raise ParseError("root token must have depth 0")
        else:
            if depth == 0:
                raise ParseError("more than one root token")
            if depth > len(stack):
                raise ParseError("depth jumps by more than one")
        while len(stack) > depth:
            rw, c, kids = stack.pop()
            stack[-1][2].append(node(rw, c, kids))
        stack.append([weight, ci, []])
    while stack:
        rw, c, kids = stack.pop()
        built = node(rw, c, kids)
        if stack:
            stack[-1][2].append(built)
        else:
            result = built
    return result
