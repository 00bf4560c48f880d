from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from splab.insertion import (
    LengthError,
    MarkerError,
    enumerate_hook_set,
    in_hook_set,
    is_hook_word,
    longest_hook_subword_brute,
    longest_hook_subword_length,
    mixed_insert_letter,
    mixed_insert_word,
    plactic_equivalent,
    relation_instances,
    relation_neighbors,
)
from splab.shapes import high, low
from splab.tableaux import is_semistandard, parse_tableau, print_tableau

words = st.lists(st.integers(min_value=1, max_value=5), min_size=0, max_size=7).map(tuple)


def test_mixed_insert_letter_example():
    t = parse_tableau("1 2 5\n4 6'")
    assert print_tableau(mixed_insert_letter(t, high(1))) == "1 1 4' 6'\n2 5"


def test_mixed_insert_letter_edges():
    empty = parse_tableau("")
    assert print_tableau(mixed_insert_letter(empty, high(3))) == "3"
    # weakly greatest: appended at the end of row 1, rest unchanged
    t = parse_tableau("1 2 5\n4 6'")
    assert print_tableau(mixed_insert_letter(t, high(7))) == "1 2 5 7\n4 6'"
    with pytest.raises(MarkerError):
        mixed_insert_letter(t, low(3))
    with pytest.raises(ValueError):
        mixed_insert_letter(parse_tableau(". 1"), high(2))


def test_mixed_insert_word_examples():
    assert print_tableau(mixed_insert_word([7, 3, 9, 4])) == "3 4 7'\n9"
    assert print_tableau(mixed_insert_word([2, 1])) == "1 2'"
    assert mixed_insert_word([]).size == 0


@settings(max_examples=200)
@given(words)
def test_insertion_grows_by_one_and_stays_semistandard(word):
    tab = parse_tableau("")
    for k, value in enumerate(word, 1):
        tab = mixed_insert_letter(tab, high(value))
        assert tab.size == k
        assert is_semistandard(tab)
    assert tab == mixed_insert_word(word)


def test_is_hook_word():
    assert is_hook_word((4, 2, 1, 1, 6, 8, 8))
    assert is_hook_word((1, 1, 2, 3))
    assert is_hook_word((5, 3, 1))
    assert is_hook_word(())
    assert not is_hook_word((1, 2, 1))
    assert not is_hook_word((2, 2, 1))


def test_longest_hook_subword_examples():
    assert longest_hook_subword_length((4, 2, 1, 1, 6, 8, 8)) == 7
    assert longest_hook_subword_length((1, 2, 1, 2)) == 3
    assert longest_hook_subword_brute((1, 2, 1, 2)) == 3
    assert longest_hook_subword_length(()) == 0


def test_hook_dp_matches_oracle_small():
    for k in range(0, 8):
        for w in product((1, 2, 3), repeat=k):
            assert longest_hook_subword_length(w) == longest_hook_subword_brute(w)


def test_hook_dp_matches_oracle_length_twelve():
    for w in [
        (3, 1, 4, 1, 5, 9, 2, 6, 5, 3, 5, 8),
        (2, 7, 1, 8, 2, 8, 1, 8, 2, 8, 4, 5),
        (9, 8, 7, 6, 5, 4, 3, 2, 1, 1, 2, 3),
        (1, 2, 3, 4, 5, 6, 1, 2, 3, 4, 5, 6),
    ]:
        assert longest_hook_subword_length(w) == longest_hook_subword_brute(w)


@settings(max_examples=300)
@given(st.lists(st.integers(min_value=1, max_value=9), max_size=9).map(tuple))
def test_hook_dp_matches_oracle_wide_alphabet(word):
    assert longest_hook_subword_length(word) == longest_hook_subword_brute(word)


def test_in_hook_set():
    assert in_hook_set((4, 2, 1, 1, 6, 8, 8), (7,))
    assert not in_hook_set((2, 1, 2), (2, 1))
    assert not in_hook_set((2, 1, 1), (2, 1))
    assert in_hook_set((1, 2, 1), (2, 1))
    with pytest.raises(LengthError):
        in_hook_set((1, 2), (2, 1))


def test_enumerate_hook_set_small():
    assert set(enumerate_hook_set((1,), 2)) == {(1,), (2,)}
    assert set(enumerate_hook_set((2,), 2)) == {(1, 1), (1, 2), (2, 1), (2, 2)}
    assert set(enumerate_hook_set((2, 1), 2)) == {(1, 2, 1), (2, 2, 1)}


def test_hook_set_insertions_hit_each_shape_tableau_once():
    # the hook set of a shape indexes its straight tableaux bijectively
    for lam, n in [((2, 1), 2), ((3, 1), 3), ((3,), 3)]:
        tabs = [mixed_insert_word(w) for w in enumerate_hook_set(lam, n)]
        assert len(set(tabs)) == len(tabs)
        assert all(t.shape.outer == lam for t in tabs)


def test_relation_neighbors_examples():
    assert (1, 3, 1, 2) in relation_neighbors((1, 1, 3, 2))
    assert relation_neighbors((1, 2, 3)) == set()


def test_relation_neighbors_symmetric():
    for w in product((1, 2, 3), repeat=5):
        for v in relation_neighbors(w):
            assert w in relation_neighbors(v)


def test_relations_preserve_insertion():
    for k in (4, 5, 6):
        for w in product((1, 2, 3, 4), repeat=k):
            target = mixed_insert_word(w)
            for v in relation_neighbors(w):
                assert mixed_insert_word(v) == target


def test_relation_instances_bounds():
    instances = list(relation_instances(3))
    assert all(max(u) <= 3 and sorted(u) == sorted(v) for u, v in instances)
    assert ((1, 1, 3, 2), (1, 3, 1, 2)) in instances


def test_plactic_equivalent():
    assert plactic_equivalent((1, 1, 3, 2), (1, 3, 1, 2))
    assert plactic_equivalent((2, 1), (2, 1))
    assert not plactic_equivalent((1, 2), (2, 1))
    assert print_tableau(mixed_insert_word((1, 2))) == "1 2"
    assert print_tableau(mixed_insert_word((2, 1))) == "1 2'"
