import time

import pytest
from conftest import ROOTED_COUNTS, TABLE3

from oracles import brute_force_rooted, leaf_growth_rooted, unweighted_counts
from treegen import build_tables, free_count
from treegen.counting import CountTable
from treegen.errors import CacheError, SchemeError, TableBoundsError
from treegen.scheme import block_scheme, gray_scheme, make_scheme


def test_gray_rooted_counts_match_leaf_growth_oracle(gray_table):
    for n in range(1, 9):
        assert gray_table.rt(n, 0) == len(leaf_growth_rooted(n))
    assert gray_table.rt(3, 0) == 2
    assert gray_table.rt(5, 0) == 9


def test_gray_matches_known_rooted_sequence(gray_table):
    for n, want in enumerate(ROOTED_COUNTS, 1):
        assert gray_table.rt(n, 0) == want
    assert gray_table.rt(20, 0) == 12_826_228


def test_colored_recurrences_specialize_to_unweighted(gray_table):
    rt, f_le = unweighted_counts(20)
    for n in range(1, 21):
        assert gray_table.rt(n, 0) == rt[n]
        for m in range(0, n + 1):
            assert gray_table.f_le(n, 0, m) == f_le[n][m]


def test_forest_example_f_le_4_2(gray_table):
    # forests on 4 vertices with trees of <= 2 vertices: {2,2} {2,1,1} {1,1,1,1}
    assert gray_table.f_le(4, 0, 2) == 3


def test_block_rooted_against_exhaustive_oracle(block_table):
    sch = block_table.scheme
    for w in range(1, 8):
        for color in ("Yellow", "Red"):
            ci = sch.color_index(color)
            assert block_table.rt(w, ci) == len(brute_force_rooted(sch, w, color))
    assert block_table.rt(1, sch.color_index("Red")) == 1
    assert block_table.rt(2, sch.color_index("Yellow")) == 1


def test_block_free_counts_match_table3(block_table):
    for w, want in enumerate(TABLE3, 1):
        assert block_table.free_parts(w).total == want


def test_free_count_breakdowns(block_table, gray_table):
    mono, bi, tri, total = free_count(block_table, 2)
    assert mono == {"Yellow": 0, "Red": 1}
    assert (bi, tri, total) == (0, 0, 1)
    mono, bi, tri, total = free_count(gray_table, 4)
    assert mono == {"Gray": 1}
    assert (bi, tri, total) == (1, 0, 2)
    mono, bi, tri, total = free_count(block_table, 6)
    assert mono == {"Yellow": 6, "Red": 4}
    assert (bi, tri, total) == (6, 6, 22)


def test_positive_weighted_free_counts(posw_table):
    assert posw_table.free_parts(5).total == 14


def test_f_le_properties(block_table):
    for ci in range(2):
        for w in range(1, 15):
            values = [block_table.f_le(w, ci, m) for m in range(w + 1)]
            assert all(a <= b for a, b in zip(values, values[1:]))
            assert block_table.f_le(w, ci, w) == block_table.f(w, ci)
        assert block_table.f_le(0, ci, 5) == 1


def test_bounds_and_validation(block_table):
    with pytest.raises(TableBoundsError):
        block_table.rt(31, 0)
    with pytest.raises(TableBoundsError):
        free_count(block_table, 31)
    with pytest.raises(ValueError):
        build_tables(gray_scheme(), 0)


def test_invalid_schemes_name_the_violation():
    with pytest.raises(SchemeError, match="independent set"):
        make_scheme([("A", 0, 3, 1, "A")])
    with pytest.raises(SchemeError, match="mintw"):
        make_scheme([("A", 2, 3, 1, "A")])
    with pytest.raises(SchemeError, match="minw"):
        make_scheme([("A", 4, 3, 4, "A")])
    with pytest.raises(SchemeError, match="declared color"):
        make_scheme([("A", 1, 3, 1, "B")])
    with pytest.raises(SchemeError, match="root color"):
        make_scheme([("A", 1, 3, 1, "A")], root_colors=("B",))


def test_build_time_modest():
    start = time.perf_counter()
    table = build_tables(block_scheme(), 30)
    for w in range(1, 31):
        table.free_parts(w)
    assert time.perf_counter() - start < 10.0


def test_cache_round_trip(tmp_path, block_table):
    path = str(tmp_path / "block.tables")
    block_table.save(path)
    loaded = CountTable.load(path, block_scheme())
    assert loaded.max_weight == 30
    for w in range(1, 31):
        assert loaded.free_parts(w).total == block_table.free_parts(w).total
        for ci in range(2):
            for m in range(w + 1):
                assert loaded.rt_le(w, ci, m) == block_table.rt_le(w, ci, m)
                assert loaded.f_le(w, ci, m) == block_table.f_le(w, ci, m)


def test_cache_rejects_wrong_scheme(tmp_path, gray_table):
    path = str(tmp_path / "gray.tables")
    gray_table.save(path)
    with pytest.raises(CacheError, match="hash"):
        CountTable.load(path, block_scheme())


def test_cache_rejects_truncation_and_garbage(tmp_path, block_table):
    path = str(tmp_path / "block.tables")
    block_table.save(path)
    with open(path) as fh:
        lines = fh.readlines()
    clipped = str(tmp_path / "clipped.tables")
    with open(clipped, "w") as fh:
        fh.writelines(lines[: len(lines) // 2])
    with pytest.raises(CacheError):
        CountTable.load(clipped, block_scheme())
    mangled = str(tmp_path / "mangled.tables")
    with open(mangled, "w") as fh:
        fh.writelines(lines[:-1] + ["rtle 3 Red x - 7\n"])
    with pytest.raises(CacheError):
        CountTable.load(mangled, block_scheme())
    with open(mangled, "w") as fh:
        fh.write("not a cache\n")
    with pytest.raises(CacheError):
        CountTable.load(mangled, block_scheme())


def test_cache_detects_edited_value(tmp_path, block_table):
    path = str(tmp_path / "block.tables")
    block_table.save(path)
    with open(path) as fh:
        lines = fh.readlines()
    target = next(i for i, l in enumerate(lines) if l.startswith("flem 5"))
    parts = lines[target].split()
    parts[-1] = str(int(parts[-1]) + 1)
    lines[target] = " ".join(parts) + "\n"
    with open(path, "w") as fh:
        fh.writelines(lines)
    with pytest.raises(CacheError):
        CountTable.load(path, block_scheme())


def test_content_hash_separates_schemes():
    a = gray_scheme().content_hash()
    b = block_scheme().content_hash()
    c = make_scheme([("Gray", 1, 1, 1, "Gray")], name="gray2").content_hash()
    assert a != b
    assert a == c  # same content, different label
