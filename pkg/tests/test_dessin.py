"""Decoration axioms, boundary segments, regions, and global predicates."""

import pytest

from trigdessins.dessin import (
    BLACK,
    BOLD,
    CROSS,
    DOTTED,
    GENERIC,
    MONO,
    NODAL_CUSPIDAL,
    SOLID,
    WHITE,
    Dessin,
    check,
    full_valency,
    is_hyperbolic,
    is_unramified,
    isomorphic,
    jump_count,
    mirror_dessin,
    oval_count,
    predicates,
    regions,
    segments,
    singular_vertices,
    solitary_count,
    validate,
    wave_count,
    zigzag_count,
)
from trigdessins.diskmap import build_map
from trigdessins.errors import HyperbolicNoClassification, NotADessin
from trigdessins.fixtures import (
    all_valid_fixtures,
    cubic_block_I,
    cubic_block_II,
    cusp_passage_demo,
    dessin_from_spec,
    hyperbolic_cubic,
    hyperbolic_sextic,
    nodal_cubic,
    node_on_branch_demo,
    solitary_demo,
    wave_cubic,
)


# ---------------------------------------------------------------------------
# validation


@pytest.mark.parametrize("name,d,strictness", all_valid_fixtures())
def test_fixture_passes_validation(name, d, strictness):
    report = validate(d, strictness)
    assert report.passed, f"{name}: {report}"
    check(d, strictness)


def test_nodal_fixtures_fail_generic_menu():
    for d in (nodal_cubic(), solitary_demo(), node_on_branch_demo()):
        report = validate(d, GENERIC)
        assert not report.passed
        assert "valency-menu" in report.axioms()
        with pytest.raises(NotADessin):
            check(d, GENERIC)


def test_validate_rejects_unknown_strictness():
    with pytest.raises(ValueError):
        validate(cubic_block_II(), "lenient")


def test_flipped_direction_is_reported():
    d = cubic_block_II()
    m = d.map
    inner_bold = next(
        e
        for e in m.edges()
        if d.edge_color[e] == BOLD and not m.bflag(e) and not m.bflag(m.twin_of(e))
    )
    ed = dict(d.edge_dir)
    ed[inner_bold] = m.twin_of(ed[inner_bold])
    bad = Dessin(m, d.vertex_kind, d.edge_color, ed, d.degree)
    report = validate(bad)
    assert "direction-rule" in report.axioms()
    # Both endpoints complain: outgoing at the black, incoming at the white.
    hits = [v for v in report.violations if v.axiom == "direction-rule"]
    assert len(hits) == 2


def test_wrong_color_is_reported():
    d = cubic_block_II()
    m = d.map
    rim_solid = next(
        e for e in m.edges() if d.edge_color[e] == SOLID and m.bflag(e)
    )
    ec = dict(d.edge_color)
    ec[rim_solid] = BOLD
    bad = Dessin(m, d.vertex_kind, ec, d.edge_dir, d.degree)
    report = validate(bad)
    assert "color-incidence" in report.axioms()


def test_monochrome_cycle_detected():
    rim = [
        ("W1", WHITE), (DOTTED, ">"),
        ("u1", MONO), (DOTTED, "<"),
        ("u2", MONO), (DOTTED, ">"),
        ("W2", WHITE), (DOTTED, ">"),
    ]
    d, _ = dessin_from_spec(3, rim, inner=[("u1", "u2", DOTTED)])
    report = validate(d)
    assert "no-monochrome-cycles" in report.axioms()


def test_valency_sum_depends_on_degree():
    d = cubic_block_II()
    base = Dessin(d.map, d.vertex_kind, d.edge_color, d.edge_dir, 9)
    report = validate(base)
    assert "valency-sum" in report.axioms()
    sums = [v for v in report.violations if v.axiom == "valency-sum"]
    assert len(sums) == 3  # black, white, and cross bookkeeping all break
    assert report.axioms() == {"valency-sum"}


def test_pinched_boundary_vertex_is_structural_error():
    # Two triangles sharing a vertex: the rim visits the pinch twice.
    twin = {i: i ^ 1 for i in range(12)}
    nxt = {
        0: 5, 5: 6, 6: 11, 11: 0,
        2: 1, 1: 2,
        4: 3, 3: 4,
        8: 7, 7: 8,
        10: 9, 9: 10,
    }
    m = build_map(twin, nxt, (0, 2, 4, 6, 8, 10))
    kinds = {0: WHITE, 1: MONO, 3: MONO, 7: MONO, 9: MONO}
    colors = {e: DOTTED for e in m.edges()}
    dirs = {e: e for e in m.edges()}
    d = Dessin(m, kinds, colors, dirs, 3)
    report = validate(d)
    assert "real-vertex-structure" in report.axioms()


def test_mono_valency_violation():
    rim = [
        ("W1", WHITE), (DOTTED, ">"),
        ("u1", MONO), (DOTTED, "<"),
        ("W2", WHITE), (DOTTED, ">"),
        ("u2", MONO), (DOTTED, "<"),
    ]
    inner = [("u1", "Y", DOTTED), ("Y", "u1", DOTTED)]
    d, _ = dessin_from_spec(
        3, rim, inner, inner_kinds={"Y": CROSS}, germ_order={"u1": [0, 1], "Y": [1, 0]}
    )
    report = validate(d)
    assert "mono-valency" in report.axioms()


def test_dessin_constructor_guards():
    d = cubic_block_II()
    m = d.map
    with pytest.raises(ValueError):
        Dessin(m, d.vertex_kind, d.edge_color, d.edge_dir, 4)
    with pytest.raises(ValueError):
        Dessin(m, {}, d.edge_color, d.edge_dir, 3)
    bad_kind = dict(d.vertex_kind)
    bad_kind[next(iter(bad_kind))] = "grey"
    with pytest.raises(ValueError):
        Dessin(m, bad_kind, d.edge_color, d.edge_dir, 3)
    bad_dir = dict(d.edge_dir)
    e = next(iter(bad_dir))
    bad_dir[e] = 10_000
    with pytest.raises(ValueError):
        Dessin(m, d.vertex_kind, d.edge_color, bad_dir, 3)
    with pytest.raises(AttributeError):
        d.degree = 6


# ---------------------------------------------------------------------------
# structure accessors


def test_valencies_and_reality():
    d, names = cubic_block_II(named=True)
    assert full_valency(d, names["B"]) == 6
    assert full_valency(d, names["W1"]) == 4
    assert full_valency(d, names["M2"]) == 4
    assert full_valency(d, names["X1"]) == 2
    assert not d.is_real(names["B"])
    assert d.is_real(names["W1"])
    assert len(d.real_vertices()) == 12
    assert d.inner_vertices() == [names["B"]]


def test_germ_order_at_boundary_vertex():
    d, names = cubic_block_I(named=True)
    seq = d.germs(names["B+"])
    assert len(seq) == 4
    colors = [d.color_of(g) for g in seq]
    assert colors == [SOLID, BOLD, SOLID, BOLD]
    flows = [d.is_incoming(g) for g in seq]
    assert flows == [True, False, True, False]  # solid in, bold out, alternating


# ---------------------------------------------------------------------------
# segments


def test_segment_census_per_fixture():
    expectations = {
        "cubic-block-I": dict(oval=1, zigzag=2, jump=1, wave=0, solitary=0),
        "cubic-block-II": dict(oval=0, zigzag=3, jump=0, wave=0, solitary=0),
        "wave-cubic": dict(oval=0, zigzag=3, jump=0, wave=1, solitary=0),
        "nodal-cubic": dict(oval=0, zigzag=2, jump=1, wave=0, solitary=1),
        "solitary-demo": dict(oval=2, zigzag=1, jump=1, wave=0, solitary=1),
        "node-on-branch-demo": dict(oval=1, zigzag=2, jump=1, wave=0, solitary=0),
        "cusp-passage-demo": dict(oval=2, zigzag=3, jump=1, wave=0, solitary=1),
    }
    fixtures = {name: d for name, d, _ in all_valid_fixtures()}
    for name, want in expectations.items():
        d = fixtures[name]
        got = {k: 0 for k in ("oval", "zigzag", "jump", "wave", "solitary")}
        for s in segments(d):
            got[s.kind] += 1
        assert got == want, name
    assert oval_count(solitary_demo()) == 2
    assert zigzag_count(wave_cubic()) == 3
    assert jump_count(cubic_block_I()) == 1
    assert wave_count(wave_cubic()) == 1
    assert solitary_count(nodal_cubic()) == 1


def test_hyperbolic_segments_are_one_circle():
    for d, whites in ((hyperbolic_cubic(), 3), (hyperbolic_sextic(), 6)):
        assert is_hyperbolic(d)
        segs = segments(d)
        assert len(segs) == 1
        s = segs[0]
        assert s.circular and s.color == DOTTED and s.white_count == whites
        with pytest.raises(HyperbolicNoClassification):
            oval_count(d)


def test_solitary_segment_content():
    d, names = nodal_cubic(named=True)
    sol = [s for s in segments(d) if s.kind == "solitary"]
    assert len(sol) == 1
    assert sol[0].vertices == (names["Xs"],)
    assert sol[0].white_count == 0


def test_segment_endpoints_are_delimiters():
    d = cubic_block_I()
    for s in segments(d):
        if s.kind == "solitary" or s.circular:
            continue
        first, last = s.vertices[0], s.vertices[-1]
        for v in (first, last):
            assert d.vertex_kind[v] in (BLACK, CROSS)
        for v in s.vertices[1:-1]:
            assert d.vertex_kind[v] in (WHITE, MONO)


# ---------------------------------------------------------------------------
# regions and predicates


def test_block_II_regions_are_triangular():
    d = cubic_block_II()
    regs = regions(d)
    assert len(regs) == 6
    assert all(r.is_triangular for r in regs)


def test_region_count_matches_faces():
    for _name, d, _s in all_valid_fixtures():
        assert len(regions(d)) == d.map.num_inner_faces


def test_predicates_on_singular_and_hyperbolic():
    d, names = nodal_cubic(named=True)
    p = predicates(d)
    assert p["hyperbolic"] is False
    assert p["unramified"] is True
    assert p["singular_vertices"] == [names["Xs"]]
    assert p["curve_type"] == "Unknown"

    h = predicates(hyperbolic_cubic())
    assert h["hyperbolic"] is True
    assert h["unramified"] is False  # the vertical tangencies are inner
    assert h["curve_type"] == "Unknown"

    nb = node_on_branch_demo()
    assert is_unramified(nb) is True
    assert len(singular_vertices(nb)) == 1

    cp = cusp_passage_demo()
    assert is_unramified(cp) is True
    assert len(singular_vertices(cp)) == 1


# ---------------------------------------------------------------------------
# comparison


def test_rotated_rebuild_is_isomorphic():
    d = cubic_block_II()
    rim = []
    for i in (2, 3, 1):
        rim += [
            (f"X{2 * i - 1}", CROSS), (DOTTED, "<"),
            (f"W{i}", WHITE), (DOTTED, ">"),
            (f"X{2 * i}", CROSS), (SOLID, ">"),
            (f"M{i}", MONO), (SOLID, "<"),
        ]
    inner = [
        ("B", "W2", BOLD),
        ("M2", "B", SOLID),
        ("B", "W3", BOLD),
        ("M3", "B", SOLID),
        ("B", "W1", BOLD),
        ("M1", "B", SOLID),
    ]
    rotated, _ = dessin_from_spec(
        3, rim, inner, inner_kinds={"B": BLACK}, germ_order={"B": [0, 1, 2, 3, 4, 5]}
    )
    assert isomorphic(d, rotated)
    assert d == rotated
    assert hash(d) == hash(rotated)


def test_fixture_keys_are_distinct():
    fixtures = [d for _n, d, _s in all_valid_fixtures()]
    keys = {d.canonical_key() for d in fixtures}
    assert len(keys) == len(fixtures)


def test_mirror_dessin_is_mirror_isomorphic():
    for name, d, strictness in all_valid_fixtures():
        md = mirror_dessin(d)
        assert validate(md, strictness).passed, name
        assert isomorphic(d, md, mirror=True), name


def test_kind_color_lookups():
    d, names = wave_cubic(named=True)
    fwd, back = d.rim_darts(names["Mb"])
    assert d.kind_of(fwd) == MONO
    assert d.color_of(fwd) == BOLD
    assert fwd is not None and back is not None
