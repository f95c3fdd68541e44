"""Command-line front end.

Commands: count, enumerate, unrank, rank, sample, tables.  Objects are free
trees of the requested weight; with the block scheme they can be emitted as
connected block graphs (graph6, edge list, DOT).  Diagnostics go to stderr;
exit codes: 2 bad configuration, 3 I/O failure, 4 rank out of range,
5 parse failure.
"""
from __future__ import annotations

import argparse
import os
import sys

from . import blockgraph
from .counting import CountTable, build_tables, free_count
from .errors import CacheError, ParseError, RankError, SchemeError
from .generate import (
    enumerate_free,
    parallel_enumerate,
    rank_free,
    sample_uar,
    unrank_free,
)
from .scheme import PRESETS, load_scheme
from .trees import tree_from_text, tree_to_text

CACHE_ENV = "TREEGEN_CACHE_DIR"
GRAPH_FORMATS = ("graph6", "edges", "dot")


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="treegen",
        description="Count, enumerate, unrank, rank and sample free colored "
        "weighted trees and connected block graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, weight=True):
        p.add_argument(
            "--scheme", "-s", required=True,
            help="preset (%s) or scheme file path" % ", ".join(sorted(PRESETS)))
        if weight:
            p.add_argument("--weight", "-w", type=int, required=True,
                           help="total tree weight / graph order")
        p.add_argument("--cache", help="table cache file to load/store")

    p = sub.add_parser("count", help="print the number of objects")
    common(p)
    p.add_argument("--breakdown", action="store_true",
                   help="also print the mono/bi/tri centroid-case split")

    p = sub.add_parser("enumerate", help="stream all objects")
    common(p)
    p.add_argument("--as", dest="fmt", default="tree",
                   choices=("tree",) + GRAPH_FORMATS, help="output format")
    p.add_argument("--workers", "-P", type=int, default=1,
                   help="split the stream into this many rank chunks")
    p.add_argument("--out", help="chunk file prefix (required when -P > 1)")

    p = sub.add_parser("unrank", help="print the i-th object")
    common(p)
    p.add_argument("--rank", "-i", required=True, help="zero-based rank")
    p.add_argument("--as", dest="fmt", default="tree",
                   choices=("tree",) + GRAPH_FORMATS)

    p = sub.add_parser("rank", help="print the rank of a parsed object")
    common(p)
    p.add_argument("--as", dest="fmt", default="tree",
                   choices=("tree", "graph6"), help="input format")
    p.add_argument("object", nargs="?",
                   help="serialized object (read from stdin when omitted)")

    p = sub.add_parser("sample", help="print one object chosen u.a.r.")
    common(p)
    p.add_argument("--seed", type=int, help="RNG seed (random when omitted)")
    p.add_argument("--as", dest="fmt", default="tree",
                   choices=("tree",) + GRAPH_FORMATS)

    p = sub.add_parser("tables", help="build and store the counting tables")
    common(p)
    return parser


def _fail(code, message):
    print("treegen: %s" % message, file=sys.stderr)
    raise SystemExit(code)


def _resolve_cache_path(args, scheme):
    if args.cache:
        return args.cache
    env_dir = os.environ.get(CACHE_ENV)
    if env_dir:
        return os.path.join(env_dir, "%s.tables" % scheme.content_hash())
    return None


def _load_tables(args, scheme, w):
    """Load tables from cache when possible, else build (and store when a
    cache path is configured)."""
    path = _resolve_cache_path(args, scheme)
    if path and os.path.exists(path):
        try:
            table = CountTable.load(path, scheme)
            if table.max_weight >= w:
                return table
            print("treegen: cache %s only covers weight %d; rebuilding"
                  % (path, table.max_weight), file=sys.stderr)
        except CacheError as exc:
            print("treegen: ignoring cache %s: %s" % (path, exc), file=sys.stderr)
    table = build_tables(scheme, w)
    if path:
        try:
            os.makedirs(os.path.dirname(path) or ".", exist_ok=True)
            table.save(path)
        except OSError as exc:
            _fail(3, "cannot write cache %s: %s" % (path, exc))
    return table


def _check_graph_format(args, scheme):
    if args.fmt in GRAPH_FORMATS and scheme.content_hash() != \
            blockgraph._BLOCK_SCHEME.content_hash():
        _fail(2, "graph output requires the block scheme")


def _emit(tree, fmt, scheme, out):
    if fmt == "tree":
        out.write(tree_to_text(tree, scheme) + "\n")
        return
    g = blockgraph.block_tree_to_graph(tree)
    if fmt == "graph6":
        out.write(blockgraph.to_graph6(g) + "\n")
    elif fmt == "edges":
        out.write(blockgraph.to_edge_list(g) + "\n\n")
    else:
        out.write(blockgraph.to_dot(g) + "\n")


def cmd_count(args, scheme, table):
    mono, bi, tri, total = free_count(table, args.weight)
    if args.breakdown:
        for color, value in mono.items():
            print("mono %s %d" % (color, value))
        print("bi %d" % bi)
        print("tri %d" % tri)
        print("total %d" % total)
    else:
        print(total)
    return 0


def cmd_enumerate(args, scheme, table):
    _check_graph_format(args, scheme)
    if args.workers < 1:
        _fail(2, "worker count must be at least 1")
    if args.workers == 1:
        for tree in enumerate_free(table, args.weight):
            _emit(tree, args.fmt, scheme, sys.stdout)
        return 0
    if not args.out:
        _fail(2, "-P > 1 needs --out <prefix> for the chunk files")
    chunks = parallel_enumerate(table, args.weight, args.workers)
    for chunk in chunks:
        path = "%s.%d" % (args.out, chunk.worker)
        try:
            with open(path, "w", encoding="ascii") as fh:
                for tree in chunk.trees():
                    _emit(tree, args.fmt, scheme, fh)
        except OSError as exc:
            _fail(3, "cannot write chunk %s: %s" % (path, exc))
        print("treegen: wrote ranks [%d, %d) to %s"
              % (chunk.start, chunk.stop, path), file=sys.stderr)
    return 0


def cmd_unrank(args, scheme, table):
    _check_graph_format(args, scheme)
    try:
        i = int(args.rank)
    except ValueError:
        _fail(2, "rank must be a decimal integer")
    try:
        tree = unrank_free(table, args.weight, i)
    except RankError as exc:
        _fail(4, str(exc))
    _emit(tree, args.fmt, scheme, sys.stdout)
    return 0


def cmd_rank(args, scheme, table):
    text = args.object if args.object is not None else sys.stdin.readline()
    text = text.strip()
    if not text:
        _fail(5, "no object to rank")
    try:
        if args.fmt == "graph6":
            tree = blockgraph.graph_to_block_tree(blockgraph.from_graph6(text))
        else:
            tree = tree_from_text(text, scheme)
    except ParseError as exc:
        _fail(5, "cannot parse object: %s" % exc)
    except ValueError as exc:
        _fail(5, "invalid object: %s" % exc)
    if tree.w != args.weight:
        _fail(5, "object weight %d does not match -w %d" % (tree.w, args.weight))
    try:
        print(rank_free(table, tree))
    except (ValueError, RankError) as exc:
        _fail(5, "object is not a canonical emission: %s" % exc)
    return 0


def cmd_sample(args, scheme, table):
    _check_graph_format(args, scheme)
    seed = args.seed
    if seed is None:
        seed = int.from_bytes(os.urandom(8), "big")
    try:
        result = sample_uar(table, args.weight, seed)
    except RankError as exc:
        _fail(4, str(exc))
    _emit(result.tree, args.fmt, scheme, sys.stdout)
    print("# seed=%d rank=%d N=%d" % (result.seed, result.rank, result.size))
    return 0


def cmd_tables(args, scheme, table):
    path = _resolve_cache_path(args, scheme)
    if not path:
        _fail(2, "tables needs --cache or the %s environment variable" % CACHE_ENV)
    try:
        table.save(path)
    except OSError as exc:
        _fail(3, "cannot write cache %s: %s" % (path, exc))
    print("treegen: stored tables for weight <= %d in %s"
          % (table.max_weight, path), file=sys.stderr)
    return 0


COMMANDS = {
    "count": cmd_count,
    "enumerate": cmd_enumerate,
    "unrank": cmd_unrank,
    "rank": cmd_rank,
    "sample": cmd_sample,
    "tables": cmd_tables,
}


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        scheme = load_scheme(args.scheme)
    except SchemeError as exc:
        _fail(2, str(exc))
    if args.weight < 1:
        _fail(2, "weight must be at least 1")
    # deep streams nest one generator per weight unit
    sys.setrecursionlimit(max(sys.getrecursionlimit(), 10000 + 60 * args.weight))
    try:
        table = _load_tables(args, scheme, args.weight)
    except OSError as exc:
        _fail(3, str(exc))
    return COMMANDS[args.command](args, scheme, table) or 0


if __name__ == "__main__":
    sys.exit(main())
