from fractions import Fraction

import pytest

from splab.saganworley import (
    NoNeighborError,
    SWState,
    preimage_count,
    rectification_counter,
    skew_plactic_schur_p,
    southwestmost_marker,
    sw_rectify,
    sw_slide,
)
from splab.shapes import high, low, make_skew, strict_partitions, strict_subpartitions
from splab.symfunc import shifted_lr_coeffs
from splab.tableaux import (
    enumerate_tableaux,
    is_semistandard,
    parse_tableau,
    print_tableau,
)

U_TEXT = ". . 1 2' 5' 6 7'\n2' 2 3' 5'\n3 4'"


def small_skew_shapes(max_size, proper=True):
    for total in range(1, max_size + 1):
        for outer in strict_partitions(total):
            for inner in strict_subpartitions(outer):
                if proper and sum(inner) == sum(outer):
                    continue
                yield make_skew(outer, inner)


def test_slide_single_neighbor():
    state = SWState({(1, 3): high(3)}, (1, 2))
    out = sw_slide(state)
    assert out.entries == {(1, 2): high(3)} and out.hole == (1, 3)


def test_slide_equal_lows_stack_in_a_column():
    state = SWState({(1, 3): low(2), (2, 2): low(2)}, (1, 2))
    out = sw_slide(state)
    assert out.entries == {(1, 2): low(2), (2, 2): low(2)} and out.hole == (1, 3)


def test_slide_equal_highs_line_up_in_a_row():
    state = SWState({(1, 3): high(2), (2, 2): high(2)}, (1, 2))
    out = sw_slide(state)
    assert out.entries == {(1, 2): high(2), (1, 3): high(2)} and out.hole == (2, 2)


def test_slide_smaller_neighbor_moves():
    state = SWState({(1, 3): high(1), (2, 2): low(3)}, (1, 2))
    out = sw_slide(state)
    assert out.entries == {(1, 2): high(1), (2, 2): low(3)}


def test_diagonal_hole_classical_slide():
    state = SWState({(1, 2): low(1), (2, 2): low(2)}, (1, 1))
    out = sw_slide(state)
    assert out.entries == {(1, 1): low(1), (2, 2): low(2)} and out.hole == (1, 2)


def test_diagonal_hole_low_low_rewrite():
    state = SWState({(1, 2): low(2), (2, 2): low(2)}, (1, 1))
    out = sw_slide(state)
    assert out.entries == {(1, 1): low(2), (1, 2): high(2)} and out.hole == (2, 2)


def test_diagonal_hole_low_high_rewrite():
    state = SWState({(1, 2): low(2), (2, 2): high(2)}, (1, 1))
    out = sw_slide(state)
    assert out.entries == {(1, 1): high(2), (1, 2): high(2)} and out.hole == (2, 2)


def test_slide_at_outer_corner_raises():
    with pytest.raises(NoNeighborError):
        sw_slide(SWState({}, (1, 1)))


def test_rectify_straight_is_identity():
    tab = parse_tableau("1 2'\n2")
    assert sw_rectify(tab) == tab


def test_rectify_two_cell_cases():
    cases = {
        ". 2'\n2": "2 2",
        ". 2'\n2'": "2' 2",
        ". 1'\n2'": "1' 2'",
        ". 1\n2": "1 2",
    }
    for text, expected in cases.items():
        assert print_tableau(sw_rectify(parse_tableau(text))) == expected


def test_rectify_empty_skew():
    assert sw_rectify(parse_tableau(". .\n.")).size == 0


def test_rectify_rejects_non_q_tableau():
    with pytest.raises(ValueError):
        sw_rectify(parse_tableau("2 1"))


def test_southwestmost_marker():
    u = parse_tableau(U_TEXT)
    assert southwestmost_marker(u, 9) == "absent"
    assert southwestmost_marker(u, 3) == "high"   # the 3 at (3,3)
    assert southwestmost_marker(u, 4) == "low"
    assert southwestmost_marker(u, 5) == "low"    # (2,5) beats (1,5)


def test_marker_conservation_small():
    for shape in small_skew_shapes(5):
        for tab in enumerate_tableaux(shape, 3, "qtableau"):

            def audit(before, after):
                for value in (1, 2, 3):
                    assert southwestmost_marker(
                        before.entries, value
                    ) == southwestmost_marker(after.entries, value)

            sw_rectify(tab, audit=audit)


def test_all_high_southwestmost_forces_semistandard_result():
    # the one-way criterion: every southwestmost letter high guarantees a
    # semistandard rectification (a diagonal low in a straight tableau is
    # always the southwestmost of its value, and markers are conserved)
    for shape in small_skew_shapes(5):
        for tab in enumerate_tableaux(shape, 3, "qtableau"):
            out = sw_rectify(tab)
            diag = out.shape.diagonal_cells()
            assert is_semistandard(out) == all(out[c].high for c in diag)
            if all(
                southwestmost_marker(tab, value) != "low" for value in (1, 2, 3)
            ):
                assert is_semistandard(out)


def test_semistandardness_is_not_preserved_in_either_direction():
    # lows drift across the diagonal boundary in both directions, so the
    # converse of the criterion above genuinely fails
    drops = sw_rectify(parse_tableau(". 1'"))
    assert not is_semistandard(drops) and print_tableau(drops) == "1'"
    climbs = sw_rectify(parse_tableau(". 1\n2'"))
    assert is_semistandard(climbs) and print_tableau(climbs) == "1 2'"


def test_corner_order_does_not_matter_small():
    for shape in small_skew_shapes(5):
        for tab in enumerate_tableaux(shape, 3, "qtableau"):
            assert sw_rectify(tab, "low") == sw_rectify(tab, "high")


def test_rectification_preserves_content():
    shape = make_skew((3, 2), (2,))
    for tab in enumerate_tableaux(shape, 3, "qtableau"):
        assert sorted(l.value for _, l in sw_rectify(tab).cells()) == sorted(
            l.value for _, l in tab.cells()
        )


def test_preimage_count_rejects_skew_targets():
    with pytest.raises(ValueError):
        preimage_count(parse_tableau(". 1"), make_skew((2,), (1,)), 2)


def test_preimage_count_identity_on_straight_shapes():
    shape = make_skew((2, 1))
    for target in enumerate_tableaux(shape, 2, "qtableau"):
        assert preimage_count(target, shape, 2) == 1


def test_preimage_counts_match_lr_oracle_on_running_example():
    shape = make_skew((2, 1), (1,))
    assert shifted_lr_coeffs((2, 1), (1,)) == {(2,): 1}
    counter = rectification_counter(shape, 2)
    targets = list(enumerate_tableaux(make_skew((2,)), 2, "qtableau"))
    assert len(targets) == 8
    assert counter == {t: 1 for t in targets}


def test_preimage_count_constant_across_targets_of_a_shape():
    for shape in small_skew_shapes(5):
        counter = rectification_counter(shape, 3)
        for lam in strict_partitions(shape.size):
            counts = {
                counter.get(t, 0)
                for t in enumerate_tableaux(make_skew(lam), 3, "qtableau")
            }
            assert len(counts) <= 1


def test_skew_plactic_sum_on_straight_shape():
    shape = make_skew((3, 1))
    total = skew_plactic_schur_p(shape, 2)
    expected = {t: Fraction(1) for t in enumerate_tableaux(shape, 2)}
    assert total == expected


def test_skew_plactic_sum_running_example():
    # classes of shape (2) each carry coefficient 1
    total = skew_plactic_schur_p(make_skew((2, 1), (1,)), 2)
    expected = {t: Fraction(1) for t in enumerate_tableaux(make_skew((2,)), 2)}
    assert total == expected


def test_skew_plactic_sum_total_mass():
    for shape in [make_skew((3, 1), (1,)), make_skew((3, 2), (2,)), make_skew((4,), (2,))]:
        total = skew_plactic_schur_p(shape, 3)
        tableau_count = sum(1 for _ in enumerate_tableaux(shape, 3, "qtableau"))
        assert sum(total.values()) == Fraction(tableau_count, 2 ** shape.n_diagonals)
