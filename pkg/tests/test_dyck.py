import pytest

from tamari_atlas.dyck import (DyckPath, NewInterval, bracket_vector,
                               factor_between, interval_stats,
                               is_new_interval, iter_dyck_words, match_index,
                               rising_contacts, tamari_leq, type_word)
from tamari_atlas.enumeration import enum_dyck, enum_new_intervals
from tamari_atlas.trees import dyck_to_plane_tree, plane_tree_to_dyck

CATALAN = [1, 1, 2, 5, 14, 42, 132, 429, 1430]


def test_path_validation():
    DyckPath("")
    DyckPath("uudd")
    with pytest.raises(ValueError):
        DyckPath("du")
    with pytest.raises(ValueError):
        DyckPath("uu")
    with pytest.raises(ValueError):
        DyckPath("ux")


def test_match_index_examples():
    assert match_index(DyckPath("ud"), 1) == 2
    assert match_index(DyckPath("uudd"), 1) == 4
    assert match_index(DyckPath("uuddud"), 2) == 3
    with pytest.raises(IndexError):
        match_index(DyckPath("ud"), 2)


def test_factor_between_examples():
    assert factor_between(DyckPath("uudd"), 1).steps == "ud"
    assert factor_between(DyckPath("ud"), 1).steps == ""
    assert factor_between(DyckPath("uuddud"), 1).steps == "ud"


def test_bracket_vector_examples():
    assert bracket_vector(DyckPath("ud")) == (0,)
    assert bracket_vector(DyckPath("uudd")) == (1, 0)
    assert bracket_vector(DyckPath("uuuddd")) == (2, 1, 0)


def test_tamari_leq_examples():
    p = DyckPath("udud")
    assert tamari_leq(p, p)
    assert tamari_leq(DyckPath("udud"), DyckPath("uudd"))
    assert not tamari_leq(DyckPath("uudd"), DyckPath("udud"))
    with pytest.raises(ValueError):
        tamari_leq(DyckPath("ud"), DyckPath("uudd"))


def test_type_word_examples():
    assert type_word(DyckPath("ud")) == "0"
    assert type_word(DyckPath("uudd")) == "10"
    assert type_word(DyckPath("uuddud")) == "100"
    with pytest.raises(ValueError):
        type_word(DyckPath(""))


def test_type_word_ends_in_zero():
    for n in range(1, 7):
        for p in enum_dyck(n):
            assert type_word(p)[-1] == "0"


def test_rising_contacts_examples():
    assert rising_contacts(DyckPath("ud")) == 1
    assert rising_contacts(DyckPath("udud")) == 2
    assert rising_contacts(DyckPath("uuddud")) == 2
    assert rising_contacts(DyckPath("")) == 0


def test_is_new_interval_examples():
    assert is_new_interval(DyckPath("ud"), DyckPath("ud"))
    assert is_new_interval(DyckPath("udud"), DyckPath("uudd"))
    assert not is_new_interval(DyckPath("uudd"), DyckPath("uudd"))
    with pytest.raises(ValueError):
        is_new_interval(DyckPath(""), DyckPath(""))


def test_interval_stats_examples():
    def stats(text):
        s = interval_stats(NewInterval.parse(text))
        return (s.c00, s.c01, s.c11, s.rcont)

    assert stats("ud;ud") == (1, 0, 0, 1)
    assert stats("udud;uudd") == (1, 1, 0, 2)
    assert stats("uuddud;uuuddd") == (1, 1, 1, 2)


def test_interval_text_form():
    interval = NewInterval.parse("uuddud;uuuddd")
    assert str(interval) == "uuddud;uuuddd"
    with pytest.raises(ValueError):
        NewInterval.parse("udud")
    with pytest.raises(ValueError):
        NewInterval.parse("uudd;uudd")


def test_iter_dyck_words_counts_and_order():
    for n in range(0, 9):
        words = list(iter_dyck_words(n))
        assert len(words) == CATALAN[n]
        assert words == sorted(words)
        assert len(set(words)) == len(words)


def test_enum_dyck_two():
    assert [p.steps for p in enum_dyck(2)] == ["udud", "uudd"]


def test_match_nesting_up_to_size_8():
    # matched up/down pairs never cross
    for n in range(1, 9):
        for p in enum_dyck(n):
            spans = [(p.up_positions()[i - 1], match_index(p, i))
                     for i in range(1, n + 1)]
            for a, b in spans:
                for c, d in spans:
                    if a < c:
                        assert d < b or c > b


def test_tamari_is_partial_order_up_to_size_6():
    for n in range(1, 7):
        paths = enum_dyck(n)
        vecs = [bracket_vector(p) for p in paths]
        below = []
        for v in vecs:
            mask = 0
            for j, w in enumerate(vecs):
                if all(a <= b for a, b in zip(v, w)):
                    mask |= 1 << j
            below.append(mask)
        for i, p in enumerate(paths):
            assert below[i] & (1 << i)  # reflexive
            for j in range(len(paths)):
                if below[i] & (1 << j):
                    # transitive: everything above j is above i
                    assert below[j] & ~below[i] == 0
                    if below[j] & (1 << i):
                        assert i == j  # antisymmetric
        # the relation matches tamari_leq itself on a sample
        assert tamari_leq(paths[0], paths[-1]) == bool(below[0] & (1 << (len(paths) - 1)))


def test_no_10_type_pair_up_to_size_7():
    for n in range(1, 8):
        for interval in enum_new_intervals(n):
            interval_stats(interval)  # raises on a (1, 0) pair


def test_rising_contacts_equal_root_degree():
    for n in range(0, 8):
        for p in enum_dyck(n):
            tree = dyck_to_plane_tree(p)
            assert rising_contacts(p) == len(tree.children[0])


def test_tree_dyck_roundtrip_up_to_size_8():
    for n in range(0, 9):
        for p in enum_dyck(n):
            tree = dyck_to_plane_tree(p)
            assert tree.node_count == p.size + 1
            assert plane_tree_to_dyck(tree) == p
