"""The spec-list builder and the shipped example dessins."""

import pytest

from trigdessins.dessin import (
    BLACK,
    BOLD,
    CROSS,
    DOTTED,
    MONO,
    SOLID,
    WHITE,
)
from trigdessins.fixtures import (
    all_valid_fixtures,
    cubic_block_I,
    cubic_block_II,
    cusp_passage_demo,
    dessin_from_spec,
    hyperbolic_sextic,
    node_on_branch_demo,
    solitary_demo,
)

TRIANGLE = [
    ("B", BLACK), (BOLD, ">"),
    ("W", WHITE), (DOTTED, ">"),
    ("X", CROSS), (SOLID, ">"),
]


def test_builder_allocates_darts_predictably():
    d, names = dessin_from_spec(3, TRIANGLE)
    m = d.map
    assert m.boundary == (0, 2, 4)
    assert m.num_vertices == 3
    assert d.vertex_kind[names["B"]] == BLACK
    assert d.edge_color[0] == BOLD
    assert d.edge_dir[0] == 0  # forward token keeps the lower dart
    rim = [
        ("B", BLACK), (BOLD, "<"),
        ("W", WHITE), (DOTTED, ">"),
        ("X", CROSS), (SOLID, ">"),
    ]
    d2, _ = dessin_from_spec(3, rim)
    assert d2.edge_dir[0] == 1  # backward token picks the twin


def test_builder_rejects_malformed_specs():
    with pytest.raises(ValueError):
        dessin_from_spec(3, TRIANGLE[:-1])  # odd token list
    with pytest.raises(ValueError):
        dessin_from_spec(3, TRIANGLE, inner=[("B", "B", SOLID)])  # loop
    bad_dir = list(TRIANGLE)
    bad_dir[1] = (BOLD, "to")
    with pytest.raises(ValueError):
        dessin_from_spec(3, bad_dir)
    dup = list(TRIANGLE)
    dup[4] = ("B", CROSS)
    with pytest.raises(ValueError):
        dessin_from_spec(3, dup)
    with pytest.raises(ValueError):
        dessin_from_spec(3, TRIANGLE, inner_kinds={"B": WHITE})  # shadows rim name
    with pytest.raises(ValueError):
        dessin_from_spec(3, TRIANGLE, inner_kinds={"Z": WHITE})  # edgeless inner vertex
    with pytest.raises(ValueError):
        dessin_from_spec(3, TRIANGLE, inner=[("B", "Q", SOLID)], inner_kinds={"Q": MONO}, germ_order={"B": [0, 0]})


def test_builder_requires_explicit_germ_order():
    rim = [
        ("B", BLACK), (BOLD, ">"),
        ("W", WHITE), (DOTTED, ">"),
        ("X", CROSS), (SOLID, ">"),
    ]
    inner = [("B", "W2", BOLD), ("W2", "B", DOTTED)]
    with pytest.raises(ValueError):
        dessin_from_spec(3, rim, inner, inner_kinds={"W2": WHITE})


def test_names_cover_all_vertices():
    for named_fixture in (cubic_block_I, cubic_block_II, solitary_demo):
        d, names = named_fixture(named=True)
        assert sorted(names.values()) == list(d.map.vertices())


def test_fixture_inventory():
    fixtures = all_valid_fixtures()
    assert len(fixtures) == 9
    names = [n for n, _d, _s in fixtures]
    assert len(set(names)) == 9
    for _name, d, _strict in fixtures:
        assert d.degree in (3, 6)
        assert d.map.num_vertices - d.map.num_edges + d.map.num_inner_faces == 1


def test_vertex_kind_census():
    def census(d):
        counts = {BLACK: 0, WHITE: 0, CROSS: 0, MONO: 0}
        for v in d.map.vertices():
            counts[d.vertex_kind[v]] += 1
        return counts

    assert census(cubic_block_II()) == {BLACK: 1, WHITE: 3, CROSS: 6, MONO: 3}
    assert census(cubic_block_I()) == {BLACK: 2, WHITE: 3, CROSS: 6, MONO: 3}
    sx = census(hyperbolic_sextic())
    assert sx == {BLACK: 2, WHITE: 6, CROSS: 6, MONO: 6}
    sd = census(solitary_demo())
    assert sd == {BLACK: 3, WHITE: 6, CROSS: 9, MONO: 5}
    nb = census(node_on_branch_demo())
    assert nb == {BLACK: 2, WHITE: 3, CROSS: 5, MONO: 2}
    cp = census(cusp_passage_demo())
    assert cp == {BLACK: 3, WHITE: 5, CROSS: 11, MONO: 7}


def test_fixtures_are_cached():
    assert cubic_block_II() is cubic_block_II()
    d1, n1 = cubic_block_I(named=True)
    d2, n2 = cubic_block_I(named=True)
    assert d1 is d2 and n1 is n2
