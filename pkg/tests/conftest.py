import pytest

from treegen import build_tables
from treegen.scheme import block_scheme, gray_scheme, positive_weighted_scheme

# Number of connected block graphs on n vertices, n = 1..30 (golden values)
TABLE3 = [
    1, 1, 2, 4, 9, 22, 59, 165, 496, 1540,
    4960, 16390, 55408, 190572, 665699, 2354932, 8424025, 30424768,
    110823984, 406734060, 1502876903, 5586976572, 20884546416,
    78460794158, 296124542120, 1122346648913, 4270387848473,
    16306781486064, 62476518448854, 240110929120323,
]

# Unlabeled free trees on n vertices, n = 1..9
FREE_TREE_COUNTS = [1, 1, 1, 2, 3, 6, 11, 23, 47]

# Unlabeled rooted trees on n vertices, n = 1..20
ROOTED_COUNTS = [
    1, 1, 2, 4, 9, 20, 48, 115, 286, 719,
    1842, 4766, 12486, 32973, 87811, 235381, 634847, 1721159,
    4688676, 12826228,
]


@pytest.fixture(scope="session")
def gray_table():
    return build_tables(gray_scheme(), 20)


@pytest.fixture(scope="session")
def block_table():
    return build_tables(block_scheme(), 30)


@pytest.fixture(scope="session")
def posw_table():
    return build_tables(positive_weighted_scheme(), 10)
