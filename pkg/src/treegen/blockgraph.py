"""Connected block graphs and their bijection with weighted block trees.

A block graph is a connected graph in which every block (maximal biconnected
subgraph) is a clique.  Its weighted block tree carries one vertex per block
(Red, weight = number of non-cut vertices of the block) and one per cut
vertex (Yellow, weight 1); the two directions of the bijection live here,
together with graph6 / edge-list / DOT output.
"""
from __future__ import annotations

from .errors import ParseError
from .scheme import block_scheme
from .trees import Tree, canonical_violation, join, node

_BLOCK_SCHEME = block_scheme()
YELLOW = _BLOCK_SCHEME.color_index("Yellow")
RED = _BLOCK_SCHEME.color_index("Red")


class Graph:
    """Simple undirected graph on vertices [0, n) as adjacency sets."""

    __slots__ = ("n", "adj")

    def __init__(self, n: int, edges=()):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        adj = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError("edge (%d, %d) out of range" % (u, v))
            if u == v:
                raise ValueError("self-loops are not allowed")
            adj[u].add(v)
            adj[v].add(u)
        self.n = n
        self.adj = tuple(frozenset(s) for s in adj)

    def edges(self):
        return [(u, v) for u in range(self.n) for v in sorted(self.adj[u]) if u < v]

    @property
    def edge_count(self) -> int:
        return sum(len(s) for s in self.adj) // 2

    def is_connected(self) -> bool:
        if self.n == 0:
            return False
        seen = {0}
        stack = [0]
        while stack:
            u = stack.pop()
            for v in self.adj[u]:
                if v not in seen:
                    seen.add(v)
                    stack.append(v)
        return len(seen) == self.n

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self):
        return hash((self.n, self.adj))

    def __repr__(self):
        return "Graph(n=%d, m=%d)" % (self.n, self.edge_count)


# -- biconnectivity ----------------------------------------------------------


def biconnected_components(g: Graph):
    """Blocks (as vertex frozensets) and cut vertices, by an iterative
    low-point traversal."""
    n = g.n
    disc = [-1] * n
    low = [0] * n
    cuts = set()
    blocks = []
    timer = 0
    for root in range(n):
        if disc[root] != -1:
            continue
        stack = [(root, -1, iter(g.adj[root]))]
        edge_stack = []
        disc[root] = low[root] = timer
        timer += 1
        root_children = 0
        while stack:
            u, parent, it = stack[-1]
            advanced = False
            for v in it:
                if v == parent:
                    continue
                if disc[v] == -1:
                    if u == root:
                        root_children += 1
                    edge_stack.append((u, v))
                    disc[v] = low[v] = timer
                    timer += 1
                    stack.append((v, u, iter(g.adj[v])))
                    advanced = True
                    break
                if disc[v] < disc[u]:
                    edge_stack.append((u, v))
                    if disc[v] < low[u]:
                        low[u] = disc[v]
            if advanced:
                continue
            stack.pop()
            if stack:
                p = stack[-1][0]
                if low[u] < low[p]:
                    low[p] = low[u]
                if low[u] >= disc[p]:
                    members = set()
                    while edge_stack:
                        a, b = edge_stack.pop()
                        members.add(a)
                        members.add(b)
                        if (a, b) == (p, u):
                            break
                    blocks.append(frozenset(members))
                    if p != root or root_children > 1:
                        cuts.add(p)
        if n == 1:
            blocks.append(frozenset({root}))
    # a lone K1 component inside a larger graph has no edges either
    for v in range(n):
        if not g.adj[v] and n > 1:
            blocks.append(frozenset({v}))
    return blocks, cuts


def is_block_graph(g: Graph) -> bool:
    """True iff g is connected and every block induces a clique."""
    if g.n == 0 or not g.is_connected():
        return False
    blocks, _ = biconnected_components(g)
    for block in blocks:
        members = sorted(block)
        for i, u in enumerate(members):
            for v in members[i + 1:]:
                if v not in g.adj[u]:
                    return False
    return True


# -- bijection ---------------------------------------------------------------


def block_tree_to_graph(t: Tree) -> Graph:
    """Construct the connected block graph of a weighted block tree.

    Every Red vertex B becomes a clique on w(B) + deg(B) vertices; every
    Yellow vertex claims the first unclaimed vertex of each incident clique
    and the claimed vertices are identified (merged into the smallest
    allocated index).  Cliques are allocated in preorder, so the numbering
    is deterministic.
    """
    violation = canonical_violation(t, _BLOCK_SCHEME)
    if violation is not None:
        raise ValueError("not a valid weighted block tree: %s" % violation)
    # preorder occurrences
    occs = []
    stack = [(t, -1)]
    while stack:
        cur, parent = stack.pop()
        idx = len(occs)
        occs.append((cur, parent))
        for kid in reversed(cur.kids):
            stack.append((kid, idx))
    alloc = {}
    next_id = 0
    for idx, (cur, parent) in enumerate(occs):
        if cur.ci == RED:
            degree = len(cur.kids) + (0 if parent == -1 else 1)
            size = cur.rw + degree
            alloc[idx] = list(range(next_id, next_id + size))
            next_id += size
    parent_map = dict()
    for idx, (cur, parent) in enumerate(occs):
        parent_map[idx] = parent
    # union-find over allocated vertices; roots are the smallest indices
    uf = list(range(next_id))

    def find(x):
        while uf[x] != x:
            uf[x] = uf[uf[x]]
            x = uf[x]
        return x

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra == rb:
            return
        if rb < ra:
            ra, rb = rb, ra
        uf[rb] = ra

    claimed = {b: 0 for b in alloc}  # vertices claimed so far, per clique
    kids_idx = {i: [] for i in range(len(occs))}
    for idx in range(1, len(occs)):
        kids_idx[parent_map[idx]].append(idx)
    for idx, (cur, parent) in enumerate(occs):
        if cur.ci != YELLOW:
            continue
        incident = ([] if parent == -1 else [parent]) + kids_idx[idx]
        chosen = []
        for b in incident:
            pos = claimed[b]
            claimed[b] = pos + 1
            chosen.append(alloc[b][pos])
        for other in chosen[1:]:
            union(chosen[0], other)
    reps = sorted({find(x) for x in range(next_id)})
    label = {rep: i for i, rep in enumerate(reps)}
    edges = []
    for b, vertices in alloc.items():
        members = sorted({label[find(x)] for x in vertices})
        for i, u in enumerate(members):
            for v in members[i + 1:]:
                edges.append((u, v))
    g = Graph(len(reps), edges)
    if g.n != t.w:
        raise AssertionError("vertex count %d does not match tree weight %d"
                             % (g.n, t.w))
    return g


def graph_to_block_tree(g: Graph) -> Tree:
    """The weighted block tree of a connected block graph, centroid-rooted.

    Raises ValueError for disconnected input or when a block is not a
    clique.
    """
    if g.n == 0:
        raise ValueError("graph is empty")
    if not g.is_connected():
        raise ValueError("graph is not connected")
    blocks, cuts = biconnected_components(g)
    for block in blocks:
        members = sorted(block)
        for i, u in enumerate(members):
            for v in members[i + 1:]:
                if v not in g.adj[u]:
                    raise ValueError("block %s is not a clique" % members)
    # block-cut tree: one node per block, one per cut vertex
    cut_list = sorted(cuts)
    cut_node = {v: i for i, v in enumerate(cut_list)}
    nodes = []  # (color, weight)
    for v in cut_list:
        nodes.append((YELLOW, 1))
    adjacency = [set() for _ in cut_list]
    for block in blocks:
        b_idx = len(nodes)
        weight = len(block) - sum(1 for v in block if v in cuts)
        nodes.append((RED, weight))
        adjacency.append(set())
        for v in block:
            if v in cuts:
                adjacency[b_idx].add(cut_node[v])
                adjacency[cut_node[v]].add(b_idx)
    return _centroid_rooted(nodes, adjacency)


def _build_rooted(nodes, adjacency, root, banned=None):
    """Rooted tree from an adjacency structure, iteratively (post-order)."""
    order = []
    parent = {root: banned}
    stack = [root]
    while stack:
        u = stack.pop()
        order.append(u)
        for v in adjacency[u]:
            if v != parent[u]:
                parent[v] = u
                stack.append(v)
    built = {}
    for u in reversed(order):
        kids = [built[v] for v in adjacency[u] if v != parent[u]]
        built[u] = node(nodes[u][1], nodes[u][0], kids)
    return built[root]


def _centroid_rooted(nodes, adjacency) -> Tree:
    """Root the block-cut tree at its central centroid; with two central
    centroids the code-wise smaller side provides the root."""
    central = _central_centroids(nodes, adjacency)
    if len(central) == 1:
        return _build_rooted(nodes, adjacency, central[0])
    c1, c2 = central
    t1 = _build_rooted(nodes, adjacency, c1, banned=c2)
    t2 = _build_rooted(nodes, adjacency, c2, banned=c1)
    return join(t1, t2)


def _central_centroids(nodes, adjacency):
    """Central centroid vertex ids (1 or 2) of a weighted tree given by
    adjacency."""
    n = len(nodes)
    parent = {0: None}
    order = [0]
    for u in order:
        for v in adjacency[u]:
            if v != parent[u]:
                parent[v] = u
                order.append(v)
    sub = [nodes[v][1] for v in range(n)]
    for u in reversed(order):
        if parent[u] is not None:
            sub[parent[u]] += sub[u]
    total = sub[0]
    hs = [0] * n
    for u in range(n):
        best = total - sub[u] if parent[u] is not None else 0
        for v in adjacency[u]:
            if v != parent[u] and sub[v] > best:
                best = sub[v]
        hs[u] = best
    low = min(hs)
    members = {u for u in range(n) if hs[u] == low}
    if len(members) == 1:
        return tuple(members)
    ends = sorted(
        u for u in members if sum(1 for v in adjacency[u] if v in members) <= 1
    )
    path = [ends[0]]
    seen = {ends[0]}
    while True:
        nxt = [v for v in adjacency[path[-1]] if v in members and v not in seen]
        if not nxt:
            break
        path.append(nxt[0])
        seen.add(nxt[0])
    k = len(path)
    if k % 2:
        return (path[(k - 1) // 2],)
    return (path[k // 2 - 1], path[k // 2])


# -- graph formats -------------------------------------------------------------


def to_graph6(g: Graph) -> str:
    """Standard graph6 encoding: size header then the upper triangle packed
    column-major, six bits per byte, bytes offset by 63."""
    n = g.n
    if n <= 62:
        header = [n + 63]
    elif n <= 258047:
        header = [126, (n >> 12) + 63, ((n >> 6) & 63) + 63, (n & 63) + 63]
    else:
        raise ValueError("graph too large for this graph6 writer")
    bits = []
    for j in range(1, n):
        for i in range(j):
            bits.append(1 if j in g.adj[i] else 0)
    out = bytearray(header)
    for k in range(0, len(bits), 6):
        group = bits[k:k + 6]
        group += [0] * (6 - len(group))
        value = 0
        for bit in group:
            value = (value << 1) | bit
        out.append(value + 63)
    return out.decode("ascii")


def from_graph6(text: str) -> Graph:
    """Parse a graph6 line back into a Graph."""
    data = [c - 63 for c in text.strip().encode("ascii")]
    if not data:
        raise ParseError("empty graph6 line")
    if any(c < 0 or c > 63 for c in data):
        raise ParseError("graph6 byte out of range")
    if data[0] == 63:  # 126: n >= 63
        if len(data) < 4:
            raise ParseError("truncated graph6 header")
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        body = data[4:]
    else:
        n = data[0]
        body = data[1:]
    need = (n * (n - 1) // 2 + 5) // 6
    if len(body) != need:
        raise ParseError("graph6 body length %d, expected %d" % (len(body), need))
    bits = []
    for value in body:
        for shift in range(5, -1, -1):
            bits.append((value >> shift) & 1)
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return Graph(n, edges)


def to_edge_list(g: Graph) -> str:
    """Zero-based `u v` lines."""
    return "\n".join("%d %d" % e for e in g.edges())


def to_dot(g: Graph) -> str:
    lines = ["graph G {"]
    for v in range(g.n):
        lines.append("  %d;" % v)
    for u, v in g.edges():
        lines.append("  %d -- %d;" % (u, v))
    lines.append("}")
    return "\n".join(lines)
