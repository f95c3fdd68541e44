"""Independent oracles the tests check treegen against.

Everything here deliberately avoids the library's decomposition machinery:
plain recurrences, leaf-growth construction, exhaustive assembly from
integer partitions, Pruefer-sequence decoding with its own canonical form,
and a brute-force rooted-isomorphism check.
"""
from functools import lru_cache
from itertools import combinations_with_replacement, product
from math import comb

from treegen.trees import node


# -- unweighted counting recurrences (independent arithmetic path) ----------


def unweighted_counts(n_max):
    """rt_n and f_le[n][m] for unweighted rooted trees/forests via the plain
    single-color recurrences."""
    rt = [0] * (n_max + 1)
    f_le = [[0] * (n_max + 1) for _ in range(n_max + 1)]  # f_le[n][m]
    f_le[0] = [1] * (n_max + 1)
    rt[1] = 1
    for n in range(1, n_max + 1):
        if n > 1:
            rt[n] = f_le[n - 1][n - 1]
        for m in range(1, n_max + 1):
            total = 0
            for m1 in range(1, min(m, n) + 1):
                for mu in range(1, n // m1 + 1):
                    rest = n - mu * m1
                    cc = comb(rt[m1] - 1 + mu, mu)
                    total += cc * f_le[rest][min(rest, m1 - 1)]
            f_le[n][m] = total
    return rt, f_le


# -- leaf growth: all unweighted rooted trees by adding leaves ----------------


def leaf_growth_rooted(n):
    """Set of rooted-tree codes on n unweighted vertices grown by leaf
    addition (dedup by structural code)."""
    trees = {node(1, 0)}
    for _ in range(n - 1):
        grown = set()
        for t in trees:
            grown.update(_add_leaf_everywhere(t))
        trees = grown
    return {t.code for t in trees}


def _add_leaf_everywhere(t):
    yield node(t.rw, t.ci, t.kids + (node(1, 0),))
    for pos, kid in enumerate(t.kids):
        rest = t.kids[:pos] + t.kids[pos + 1:]
        for new_kid in _add_leaf_everywhere(kid):
            yield node(t.rw, t.ci, rest + (new_kid,))


# -- exhaustive colored construction (independent of the m/mu machinery) ----


def brute_force_rooted(scheme, w, color):
    """All rooted trees of weight w with the given root color, assembled
    from integer partitions of the child forest weight."""
    return _brute(scheme.params(), w, scheme.color_index(color))


@lru_cache(maxsize=None)
def _partitions(total, max_part, min_part):
    if total == 0:
        return ((),)
    out = []
    for part in range(min(max_part, total), min_part - 1, -1):
        for rest in _partitions(total - part, part, min_part):
            out.append((part,) + rest)
    return tuple(out)


def _brute(params, w, ci, _memo={}):
    key = (params, w, ci)
    if key in _memo:
        return _memo[key]
    minw, maxw, mintw, chld = params
    found = set()
    if w >= mintw[ci]:
        d = chld[ci]
        for r in range(minw[ci], min(maxw[ci], w) + 1):
            rem = w - r
            for parts in _partitions(rem, rem, mintw[d]) if rem else ((),):
                groups = {}
                for p in parts:
                    groups[p] = groups.get(p, 0) + 1
                pools = []
                for size, count in groups.items():
                    options = _brute(params, size, d)
                    pools.append(list(combinations_with_replacement(options, count)))
                for chosen in product(*pools):
                    kids = [t for group in chosen for t in group]
                    found.add(node(r, ci, kids))
    _memo[key] = frozenset(found)
    return _memo[key]


def brute_force_free(scheme, w):
    """All free trees of weight w in the scheme's class: brute-force rooted
    trees, filtered by the centroid-case validity rules, dedup by this
    module's own canonical key."""
    params = scheme.params()
    root_cis = set(scheme.root_color_indices())
    out = set()
    for ci in range(scheme.ncolors):
        for t in _brute(params, w, ci):
            flat = tree_occurrence_edges(t)
            if free_tree_in_class(*flat, params, root_cis):
                out.add(free_canonical_key(*flat))
    return out


def free_tree_in_class(edges, weights, colors, params, root_cis):
    """Whether a free tree belongs to the scheme's class, by the centroid
    trichotomy: a monocentroidal tree must be scheme-valid rooted at its
    centroid (with an allowed root color); a bicentroidal tree splits at the
    centroid edge into two standalone-valid halves; a tricentroidal tree is
    scheme-valid rooted at its zero-weight center."""
    minw, maxw, mintw, chld = params
    n = len(weights)
    adj = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    order, parent = _dfs_order(adj, 0)
    sub = list(weights)
    for u in reversed(order[1:]):
        sub[parent[u]] += sub[u]
    total = sub[0]
    hs = []
    for u in range(n):
        best = total - sub[u] if u != 0 else 0
        for v in adj[u]:
            if v != parent[u] and sub[v] > best:
                best = sub[v]
        hs.append(best)
    low = min(hs)
    centros = [u for u in range(n) if hs[u] == low]

    def rooted_valid(root, banned):
        stack = [(root, banned)]
        weight_below = {}
        post = []
        while stack:
            u, ban = stack.pop()
            post.append((u, ban))
            for v in adj[u]:
                if v != ban:
                    stack.append((v, u))
        for u, ban in reversed(post):
            wt = weights[u]
            for v in adj[u]:
                if v != ban:
                    wt += weight_below[v]
                    if colors[v] != chld[colors[u]]:
                        return False
            if not minw[colors[u]] <= weights[u] <= maxw[colors[u]]:
                return False
            if wt < mintw[colors[u]]:
                return False
            weight_below[u] = wt
        return True

    if len(centros) == 1:
        c = centros[0]
        return colors[c] in root_cis and rooted_valid(c, -1)
    if len(centros) == 2:
        c1, c2 = centros
        if chld[colors[c1]] != colors[c2] or chld[colors[c2]] != colors[c1]:
            return False
        return rooted_valid(c1, c2) and rooted_valid(c2, c1)
    if len(centros) == 3:
        members = set(centros)
        center = next(
            u for u in centros
            if sum(1 for v in adj[u] if v in members) == 2
        )
        return weights[center] == 0 and rooted_valid(center, -1)
    return False


# -- adjacency-based canonical form (own centroid + AHU implementation) -----


def tree_occurrence_edges(t):
    """Flatten a TreeNode into (edges, weights, colors) on occurrence ids."""
    edges = []
    weights = []
    colors = []
    stack = [(t, -1)]
    while stack:
        cur, parent = stack.pop()
        idx = len(weights)
        weights.append(cur.rw)
        colors.append(cur.ci)
        if parent >= 0:
            edges.append((parent, idx))
        for kid in reversed(cur.kids):
            stack.append((kid, idx))
    return edges, weights, colors


def free_canonical_key(edges, weights, colors):
    """Canonical key of a free colored weighted tree given by adjacency,
    via this module's own centroid + AHU code."""
    n = len(weights)
    adj = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    order, parent = _dfs_order(adj, 0)
    sub = list(weights)
    for u in reversed(order[1:]):
        sub[parent[u]] += sub[u]
    total = sub[0]
    hs = [0] * n
    for u in range(n):
        best = total - sub[u] if u != 0 else 0
        for v in adj[u]:
            if v != parent[u] and sub[v] > best:
                best = sub[v]
        hs[u] = best
    low = min(hs)
    centros = [u for u in range(n) if hs[u] == low]
    # central centroid(s): centers of the centroid path
    if len(centros) > 1:
        members = set(centros)
        ends = [u for u in centros
                if sum(1 for v in adj[u] if v in members) <= 1]
        path = [min(ends)]
        seen = {path[0]}
        while len(path) < len(centros):
            path.append(next(v for v in adj[path[-1]]
                             if v in members and v not in seen))
            seen.add(path[-1])
        k = len(path)
        central = [path[(k - 1) // 2]] if k % 2 else [path[k // 2 - 1], path[k // 2]]
    else:
        central = centros
    if len(central) == 1:
        return ("mono", _ahu(adj, weights, colors, central[0], -1))
    c1, c2 = central
    a = _ahu(adj, weights, colors, c1, c2)
    b = _ahu(adj, weights, colors, c2, c1)
    return ("bi", min(a, b), max(a, b))


def _dfs_order(adj, root):
    order = [root]
    parent = [-1] * len(adj)
    parent[root] = root
    for u in order:
        for v in adj[u]:
            if parent[v] == -1:
                parent[v] = u
                order.append(v)
    parent[root] = -1
    return order, parent


def _ahu(adj, weights, colors, root, banned):
    kids = sorted(
        _ahu(adj, weights, colors, v, root) for v in adj[root] if v != banned
    )
    return (weights[root], colors[root], tuple(kids))


# -- Pruefer catalogue --------------------------------------------------------


def prufer_free_catalog(n):
    """Canonical keys of all free unweighted trees on n vertices obtained by
    decoding every Pruefer sequence and deduplicating.

    Runs a tight loop with an interning table: the per-tree AHU pass maps
    subtree shapes to small integers, so only novel shapes allocate.
    """
    if n == 1:
        return {("mono", (1, 0, ()))}
    if n == 2:
        return {free_canonical_key([(0, 1)], [1, 1], [0, 0])}
    intern = {}
    structs = []

    def intern_shape(key):
        got = intern.get(key)
        if got is None:
            got = len(structs)
            intern[key] = got
            structs.append(None)
        return got

    leaf_id = intern_shape(())
    structs[leaf_id] = (1, 0, ())
    catalog = {}
    seq_range = range(n)
    for seq in product(seq_range, repeat=n - 2):
        # linear Pruefer decode
        degree = [1] * n
        for x in seq:
            degree[x] += 1
        adj = [[] for _ in range(n)]
        ptr = 0
        while degree[ptr] != 1:
            ptr += 1
        leaf = ptr
        for x in seq:
            adj[leaf].append(x)
            adj[x].append(leaf)
            degree[x] -= 1
            if degree[x] == 1 and x < ptr:
                leaf = x
            else:
                ptr += 1
                while degree[ptr] != 1:
                    ptr += 1
                leaf = ptr
        adj[leaf].append(n - 1)
        adj[n - 1].append(leaf)
        # subtree sizes from root 0, then hs and centroids
        order = [0]
        parent = [-1] * n
        parent[0] = 0
        for u in order:
            for v in adj[u]:
                if parent[v] == -1:
                    parent[v] = u
                    order.append(v)
        parent[0] = -1
        size = [1] * n
        for u in reversed(order[1:]):
            size[parent[u]] += size[u]
        best_hs = n
        centros = []
        for u in range(n):
            hs = n - size[u] if u else 0
            for v in adj[u]:
                if v != parent[u] and size[v] > hs:
                    hs = size[v]
            if hs < best_hs:
                best_hs = hs
                centros = [u]
            elif hs == best_hs:
                centros.append(u)
        # intern-coded AHU from each centroid (at most two, adjacent)
        if len(centros) == 1:
            key = ("mono", _ahu_intern(adj, parent, centros[0], -1,
                                       intern_shape, structs))
        else:
            c1, c2 = centros
            a = _ahu_intern(adj, parent, c1, c2, intern_shape, structs)
            b = _ahu_intern(adj, parent, c2, c1, intern_shape, structs)
            if a > b:
                a, b = b, a
            key = ("bi", a, b)
        catalog[key] = None
    out = set()
    for key in catalog:
        if key[0] == "mono":
            out.add(("mono", structs[key[1]]))
        else:
            sa, sb = sorted((structs[key[1]], structs[key[2]]))
            out.add(("bi", sa, sb))
    return out


def _ahu_intern(adj, parent, root, banned, intern_shape, structs):
    # iterative post-order; children shape ids sorted into the intern key
    ids = {}
    stack = [(root, banned, False)]
    while stack:
        u, ban, expanded = stack.pop()
        if expanded:
            kid_ids = sorted(ids[v] for v in adj[u] if v != ban)
            key = tuple(kid_ids)
            got = intern_shape(key)
            if structs[got] is None:
                structs[got] = (1, 0, tuple(sorted(structs[k] for k in kid_ids)))
            ids[u] = got
        else:
            stack.append((u, ban, True))
            for v in adj[u]:
                if v != ban:
                    stack.append((v, u, False))
    return ids[root]


# -- brute-force rooted isomorphism ------------------------------------------


def rooted_isomorphic(a, b):
    """Exhaustive rooted-isomorphism test (matching children in all orders);
    independent of canonical codes."""
    if a.rw != b.rw or a.ci != b.ci or a.w != b.w or len(a.kids) != len(b.kids):
        return False
    remaining = list(b.kids)
    return _match(a.kids, remaining)


def _match(kids, remaining):
    if not kids:
        return not remaining
    first, rest = kids[0], kids[1:]
    for pos, candidate in enumerate(remaining):
        if rooted_isomorphic(first, candidate):
            if _match(rest, remaining[:pos] + remaining[pos + 1:]):
                return True
    return False
