"""Dissection representation, cell extraction, quiddities, dihedral action."""
from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from quiddity import (
    DomainError,
    ParseError,
    cell_size_profile,
    cells,
    dihedral_transform,
    format_dissection,
    is_ell_periodic,
    is_size_restricted,
    parse_dissection,
    quiddity,
)
from quiddity.enumeration import enumerate_dissections

from oracles import cells_by_splitting


def test_parse_pentagon():
    d = parse_dissection("5:0-2,0-3")
    assert d.n_vertices == 5
    assert d.chords == ((0, 2), (0, 3))


def test_parse_empty_dissection():
    d = parse_dissection("6:")
    assert d.chords == ()
    assert len(cells(d).cells) == 1


def test_parse_canonicalizes_chord_and_endpoint_order():
    assert parse_dissection("8:5-7,3-1") == parse_dissection("8:1-3,5-7")


def test_format_parse_round_trip():
    for text in ["5:0-2,0-3", "6:", "8:1-3,5-7", "8:1-3,3-5,5-7"]:
        assert format_dissection(parse_dissection(text)) == text


@pytest.mark.parametrize("bad, fragment", [
    ("5", "':'"),
    ("x:", "'x'"),
    ("2:", "3 vertices"),
    ("5:0-9", "out of range"),
    ("5:1-2", "polygon edge"),
    ("8:0-7", "polygon edge"),
    ("5:3-3", "out of range"),
    ("6:0-2,1-3", "cross"),
    ("6:0-2,0-2", "duplicate"),
    ("6:0-2,a-3", "'a-3'"),
    ("6:0", "'0'"),
])
def test_parse_errors_name_the_offender(bad, fragment):
    with pytest.raises(ParseError) as err:
        parse_dissection(bad)
    assert fragment in str(err.value)


def test_cells_pentagon():
    cl = cells(parse_dissection("5:0-2,0-3"))
    assert [c.vertices for c in cl.cells] == [(0, 1, 2), (0, 2, 3), (0, 3, 4)]


def test_cells_octagon_pair_of_ears():
    cl = cells(parse_dissection("8:1-3,5-7"))
    assert [c.vertices for c in cl.cells] == [(0, 1, 3, 4, 5, 7), (1, 2, 3), (5, 6, 7)]
    assert sorted(cl.sizes()) == [3, 3, 6]


def test_cells_octagon_three_chords():
    cl = cells(parse_dissection("8:1-3,3-5,5-7"))
    assert len(cl.cells) == 4
    assert sum(cl.sizes()) == 8 + 2 * 3


def test_dual_tree_shape():
    for text in ["5:0-2,0-3", "8:1-3,5-7", "8:1-3,3-5,5-7", "6:"]:
        d = parse_dissection(text)
        cl = cells(d)
        assert len(cl.cells) == len(d.chords) + 1
        assert len(cl.dual_edges) == len(cl.cells) - 1
        # connectivity: the dual is a tree
        reached = {0}
        frontier = [0]
        adj = cl.neighbors()
        while frontier:
            cur = frontier.pop()
            for nxt, _ in adj[cur]:
                if nxt not in reached:
                    reached.add(nxt)
                    frontier.append(nxt)
        assert reached == set(range(len(cl.cells)))


def test_cells_match_splitting_oracle_exhaustively():
    for n in range(3, 9):
        for d in enumerate_dissections(n):
            assert [c.vertices for c in cells(d).cells] == cells_by_splitting(d)


def test_quiddity_examples():
    assert quiddity(parse_dissection("5:0-2,0-3")).entries == (3, 1, 2, 2, 1)
    assert quiddity(parse_dissection("6:")).entries == (1, 1, 1, 1, 1, 1)
    assert quiddity(parse_dissection("8:1-3,5-7")).entries == (1, 2, 1, 2, 1, 2, 1, 2)


def test_quiddity_string():
    assert str(quiddity(parse_dissection("8:1-3,5-7"))) == "1,2,1,2,1,2,1,2"


def test_cell_size_profile_and_periodicity():
    d = parse_dissection("8:1-3,5-7")
    assert cell_size_profile(d) == (3, 3, 6)
    assert is_ell_periodic(d, 3)
    t = parse_dissection("5:0-2,0-3")
    assert cell_size_profile(t) == (3, 3, 3)
    assert is_ell_periodic(t, 3) and is_ell_periodic(t, 1)
    h = parse_dissection("6:")
    assert cell_size_profile(h) == (6,)
    assert is_ell_periodic(h, 3) and not is_ell_periodic(h, 2)


def test_period_below_one_rejected():
    with pytest.raises(DomainError):
        is_ell_periodic(parse_dissection("6:"), 0)


def test_size_restriction():
    d = parse_dissection("8:1-3,5-7")
    assert is_size_restricted(d, {3, 6})
    assert not is_size_restricted(d, {3, 4})


def test_dihedral_rotation_example():
    d = parse_dissection("8:1-3,5-7")
    assert dihedral_transform(d, 2, False) == parse_dissection("8:1-7,3-5")
    assert dihedral_transform(d, 0, False) == d


def test_dihedral_action_is_a_group_action():
    d = parse_dissection("8:1-3,3-5")
    n = d.n_vertices
    for r in range(n):
        back = dihedral_transform(dihedral_transform(d, r, False), n - r, False)
        assert back == d
        refl = dihedral_transform(dihedral_transform(d, r, True), r, True)
        assert refl == d


def test_quiddity_equivariance_on_all_pentagon_dissections():
    for d in enumerate_dissections(5):
        q = quiddity(d).entries
        for k in range(5):
            rotated = quiddity(dihedral_transform(d, k, False)).entries
            assert rotated == tuple(q[(j - k) % 5] for j in range(5))
        for k in range(5):
            reflected = quiddity(dihedral_transform(d, k, True)).entries
            assert reflected == tuple(q[(k - j) % 5] for j in range(5))


def test_profile_invariant_under_dihedral_action():
    d = parse_dissection("8:1-3,5-7")
    for r in range(8):
        for f in (False, True):
            assert cell_size_profile(dihedral_transform(d, r, f)) == (3, 3, 6)


@given(st.integers(3, 12), st.integers(0, 50), st.booleans())
def test_dihedral_transform_preserves_validity(n, seed, reflected):
    pool = list(enumerate_dissections(n, min(3, n - 2)))
    d = pool[seed % len(pool)]
    out = dihedral_transform(d, seed, reflected)
    assert out.n_vertices == n
    assert len(out.chords) == len(d.chords)


def test_cell_count_and_size_sum_invariants():
    for n in range(3, 9):
        for d in enumerate_dissections(n):
            cl = cells(d)
            assert len(cl.cells) == len(d.chords) + 1
            assert sum(cl.sizes()) == n + 2 * len(d.chords)
            q = quiddity(d)
            assert sum(q.entries) == n + 2 * len(d.chords)
