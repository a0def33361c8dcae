"""Exhaustive generation, streaming counts, and quiddity class tables."""
from __future__ import annotations

import pytest

from quiddity import DomainError, ResourceLimitError, dihedral_orbit, quiddity
from quiddity.enumeration import (
    CellFilter,
    count_dissections,
    count_quiddities,
    enumerate_dissections,
    quiddity_classes,
)
from quiddity import formulas

from oracles import total_dissections

ELL3 = CellFilter.ell_periodic(3)


def test_pentagon_has_eleven_dissections():
    assert sum(1 for _ in enumerate_dissections(5)) == 11
    assert total_dissections(3) == 11


def test_square_two_cell_dissections_are_the_diagonals():
    found = sorted(str(d) for d in enumerate_dissections(4, 2))
    assert found == ["4:0-2", "4:1-3"]


def test_octagon_three_cell_3periodic_count():
    assert count_dissections(8, 3, ELL3) == 36
    assert sum(1 for _ in enumerate_dissections(8, 3, ELL3)) == 36


def test_counts_match_enumeration_lengths():
    for n in range(3, 9):
        for m in range(1, n - 1):
            for filt in (CellFilter.all_cells(), ELL3, CellFilter.size_set({3, 4})):
                assert count_dissections(n, m, filt) == \
                    sum(1 for _ in enumerate_dissections(n, m, filt))


def test_total_counts_match_recurrence_oracle():
    for n in range(3, 11):
        total = sum(count_dissections(n, m) for m in range(1, n - 1))
        assert total == total_dissections(n - 2)


def test_no_duplicates_and_canonical_forms():
    for n in range(3, 9):
        seen = set()
        for d in enumerate_dissections(n):
            assert d not in seen
            seen.add(d)
            assert d.chords == tuple(sorted(d.chords))


def test_filters_restrict_cell_sizes():
    from quiddity import cell_size_profile
    for d in enumerate_dissections(9, None, ELL3):
        assert all(s % 3 == 0 for s in cell_size_profile(d))
    for d in enumerate_dissections(9, None, CellFilter.size_set({3, 4})):
        assert all(s in (3, 4) for s in cell_size_profile(d))


def test_period_one_equals_unrestricted():
    ell1 = CellFilter.ell_periodic(1)
    for n in range(3, 9):
        for m in range(1, n - 1):
            assert count_dissections(n, m, ell1) == count_dissections(n, m)


def test_period_two_means_odd_cells():
    from quiddity import cell_size_profile
    ell2 = CellFilter.ell_periodic(2)
    for n in range(3, 10):
        odd = {d for m in range(1, n - 1) for d in enumerate_dissections(n, m, ell2)}
        by_hand = {
            d for m in range(1, n - 1) for d in enumerate_dissections(n, m)
            if all(s % 2 == 1 for s in cell_size_profile(d))
        }
        assert odd == by_hand


def test_equal_size_matches_single_size_set():
    assert count_dissections(8, 2, CellFilter.equal_size(5)) == \
        count_dissections(8, 2, CellFilter.size_set({5}))


def test_count_agrees_with_closed_forms_small():
    for n_vertices in range(3, 10):
        n = n_vertices - 2
        for m in range(1, n_vertices - 1):
            assert count_dissections(n_vertices, m) == formulas.kirkman_cayley(n, m)
            for ell in (1, 2, 3):
                assert count_dissections(n_vertices, m, CellFilter.ell_periodic(ell)) == \
                    formulas.ell_periodic_count(n, m, ell)
            assert count_dissections(n_vertices, m, CellFilter.size_set({3, 4})) == \
                formulas.tri_quad_count(n, m)


def test_quiddity_count_octagon():
    assert count_quiddities(8, 3, ELL3) == 34
    assert count_quiddities(7, 2, ELL3) == 7
    assert count_quiddities(6, 4) == 14


def test_quiddity_classes_octagon_structure():
    table = quiddity_classes(8, 3, ELL3)
    sizes = sorted(len(ds) for ds in table.classes.values())
    assert sizes == [1] * 32 + [2, 2]
    assert table.total_dissections() == 36
    # the paired classes are rotations of one another
    for q, ds in table.classes.items():
        if len(ds) == 2:
            assert table.dihedral_closed[q]
            assert ds[1] in dihedral_orbit(ds[0])


def test_pentagon_triangulation_classes_are_singletons():
    table = quiddity_classes(5, 3)
    assert len(table.classes) == 5
    assert all(len(ds) == 1 for ds in table.classes.values())


def test_class_table_consistency():
    table = quiddity_classes(8, 3, ELL3)
    for q, ds in table.classes.items():
        for d in ds:
            assert quiddity(d) == q
            assert len(d.chords) == 2  # m - 1 chords


def test_materialization_cap():
    with pytest.raises(ResourceLimitError):
        quiddity_classes(12, 10, max_dissections=10)


def test_out_of_range_arguments():
    with pytest.raises(DomainError):
        count_dissections(2, 1)
    with pytest.raises(DomainError):
        count_dissections(6, 0)
    with pytest.raises(DomainError):
        count_dissections(6, 5)
    with pytest.raises(DomainError):
        list(enumerate_dissections(6, 99))


def test_filter_validation():
    with pytest.raises(DomainError):
        CellFilter.ell_periodic(0)
    with pytest.raises(DomainError):
        CellFilter.size_set(set())
    with pytest.raises(DomainError):
        CellFilter.size_set({2})


def test_enumeration_order_is_deterministic():
    first = [str(d) for d in enumerate_dissections(7)]
    second = [str(d) for d in enumerate_dissections(7)]
    assert first == second


def test_non_dihedral_equal_quiddity_pair_at_nine():
    # smallest equal-quiddity pair not congruent under the dihedral
    # group; the cell-size profiles already differ
    from quiddity import cell_size_profile, parse_dissection

    a = parse_dissection("9:2-8,4-6")
    b = parse_dissection("9:2-4,6-8")
    assert quiddity(a) == quiddity(b)
    assert b not in dihedral_orbit(a)
    assert cell_size_profile(a) != cell_size_profile(b)
    table = quiddity_classes(9, 3)
    assert b in table.classes[quiddity(a)]
    assert not table.dihedral_closed[quiddity(a)]


def test_total_quiddity_counts_match_closed_form_column_sums():
    # distinct quiddities over all cell counts, brute force vs the
    # summed closed form; totals frozen for the two largest polygons
    expected_totals = {12: 27201, 13: 100984}
    for n_vertices in range(3, 14):
        n = n_vertices - 2
        seen = set()
        for m in range(1, n_vertices - 1):
            if (n - m) % 3:
                continue
            for d in enumerate_dissections(n_vertices, m, ELL3):
                seen.add(quiddity(d).entries)
        assert len(seen) == sum(
            formulas.quiddity_count_3periodic(n, m) for m in range(n + 1)
        )
        if n_vertices in expected_totals:
            assert len(seen) == expected_totals[n_vertices]
