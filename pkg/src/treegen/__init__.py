"""treegen: exact counting, enumeration, unranking and uniform sampling of
colored weighted trees, block trees and connected block graphs."""

from ._engine import ENGINE
from .counting import CountTable, build_tables, free_count
from .generate import (
    Chunk,
    RankedSpace,
    SampleResult,
    enumerate_forests,
    enumerate_free,
    enumerate_rooted,
    parallel_enumerate,
    rank_forest,
    rank_free,
    rank_rooted,
    sample_many,
    sample_uar,
    unrank_forest,
    unrank_free,
    unrank_rooted,
)
from .multisets import (
    enumerate_multisets,
    find_multiset,
    multiset_count,
    rank_multiset,
)
from .scheme import (
    ColorScheme,
    block_scheme,
    gray_scheme,
    load_scheme,
    make_scheme,
    positive_weighted_scheme,
)
from .trees import (
    CentroidReport,
    Forest,
    Tree,
    build_tree,
    canonical_code,
    canonicalize_weighted,
    centroids,
    is_canonical,
    total_weight,
    tree_from_text,
    tree_to_text,
)

__version__ = "0.1.0"

__all__ = [
    "ENGINE", "CountTable", "build_tables", "free_count",
    "Chunk", "RankedSpace", "SampleResult",
    "enumerate_forests", "enumerate_free", "enumerate_rooted",
    "parallel_enumerate", "rank_forest", "rank_free", "rank_rooted",
    "sample_many", "sample_uar", "unrank_forest", "unrank_free",
    "unrank_rooted",
    "enumerate_multisets", "find_multiset", "multiset_count", "rank_multiset",
    "ColorScheme", "block_scheme", "gray_scheme", "load_scheme",
    "make_scheme", "positive_weighted_scheme",
    "CentroidReport", "Forest", "Tree", "build_tree", "canonical_code",
    "canonicalize_weighted", "centroids", "is_canonical", "total_weight",
    "tree_from_text", "tree_to_text",
    "__version__",
]
