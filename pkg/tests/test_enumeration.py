import pytest

from tamari_atlas.enumeration import (count_formula, enum_degree_trees,
                                      enum_dyck, enum_maps_oracle,
                                      enum_new_intervals, gf_table,
                                      gf_table_lines)


def test_enum_new_intervals_size_2():
    assert [str(i) for i in enum_new_intervals(2)] == ["udud;uudd"]


def test_enum_degree_trees_size_2():
    got = {str(dt) for dt in enum_degree_trees(2)}
    assert got == {"(0:(0:()))", "(1:(0:()))", "(0:()0:())"}


def test_enum_maps_small_counts():
    assert len(enum_maps_oracle(0)) == 1
    assert len(enum_maps_oracle(1)) == 1
    assert len(enum_maps_oracle(2)) == 3
    assert len(enum_maps_oracle(3)) == 12


def test_enum_maps_all_valid_and_canonical():
    for n in range(0, 5):
        maps = enum_maps_oracle(n)
        codes = [m.canonical_code() for m in maps]
        assert len(set(codes)) == len(codes)
        for m in maps:
            assert m.is_valid()
            assert str(m.to_hypermap()) == m.canonical_code()


def test_count_formula_values():
    assert [count_formula(n) for n in range(2, 8)] == \
        [1, 3, 12, 56, 288, 1584]
    with pytest.raises(ValueError):
        count_formula(1)


def test_count_formula_large_values_exact():
    # stays exact well past 64-bit territory
    assert count_formula(30) % 1 == 0
    assert count_formula(30) > 2 ** 64


def test_gf_table_interval_degree_1():
    table = gf_table('intervals', 1)
    assert table == {(1, 0, 1, 0, 0): 1}


def test_gf_table_maps_degree_0():
    table = gf_table('maps', 0)
    assert table == {(0, 0, 1, 0, 1): 1}


def test_gf_identity_spot_check_degree_2():
    # t * (maps term at t^1) = w * (intervals term at t^2)
    maps1 = {k: v for k, v in gf_table('maps', 1).items() if k[0] == 1}
    ints2 = {k: v for k, v in gf_table('intervals', 2).items() if k[0] == 2}
    assert maps1 == {(1, 1, 1, 1, 1): 1}
    assert ints2 == {(2, 1, 1, 1, 0): 1}


def test_gf_table_unknown_family():
    with pytest.raises(ValueError):
        gf_table('widgets', 2)


def test_gf_dump_format():
    lines = list(gf_table_lines(gf_table('maps', 1)))
    assert lines == sorted(lines)
    assert all(len(line.split()) == 6 for line in lines)


def test_deterministic_streams():
    for n in range(0, 4):
        assert [str(p) for p in enum_dyck(n)] == \
            [str(p) for p in enum_dyck(n)]
        assert [str(i) for i in enum_new_intervals(n + 1)] == \
            [str(i) for i in enum_new_intervals(n + 1)]
        assert [str(t) for t in enum_degree_trees(n)] == \
            [str(t) for t in enum_degree_trees(n)]
        assert [m.canonical_code() for m in enum_maps_oracle(n)] == \
            [m.canonical_code() for m in enum_maps_oracle(n)]


def test_counting_agreement_small():
    for n in range(1, 5):
        expected = count_formula(n + 1)
        assert len(enum_new_intervals(n + 1)) == expected
        assert len(enum_degree_trees(n)) == expected
        assert len(enum_maps_oracle(n)) == expected
