"""Hand-built example dessins used by the tests, demos, and searches.

Each fixture is constructed through :func:`dessin_from_spec`, a small
builder that lays out the boundary as a list of named vertices and
colored, directed rim edges, then attaches inner edges by name.  The
disk-map constructor re-derives the face structure, so a mistaken
rotation shows up immediately as an Euler or outer-face failure.
"""

from __future__ import annotations

from functools import lru_cache

from .dessin import BLACK, BOLD, CROSS, DOTTED, MONO, SOLID, WHITE, Dessin
from .diskmap import build_map

__all__ = [
    "dessin_from_spec",
    "cubic_block_I",
    "cubic_block_II",
    "wave_cubic",
    "hyperbolic_cubic",
    "hyperbolic_sextic",
    "nodal_cubic",
    "solitary_demo",
    "node_on_branch_demo",
    "cusp_passage_demo",
    "all_valid_fixtures",
]


def dessin_from_spec(degree, rim, inner=(), inner_kinds=None, germ_order=None):
    """Build a dessin from a named boundary walk plus inner edges.

    ``rim`` alternates vertex tokens ``(name, kind)`` and edge tokens
    ``(color, dir)``; the edge after vertex ``i`` joins it to vertex
    ``i+1`` (cyclically), and ``dir`` is ``">"`` when the edge points
    forward along the walk, ``"<"`` otherwise.  ``inner`` lists edges
    ``(source_name, target_name, color)`` directed source-to-target;
    vertices appearing only there need a kind in ``inner_kinds``.
    ``germ_order`` gives, for any vertex with more than one inner germ,
    the counterclockwise order of its inner edges (by index into
    ``inner``) — between the forward and backward rim darts for a
    boundary vertex, as the full rotation for an inner one.

    Returns ``(dessin, names)`` where ``names`` maps each vertex name to
    its representative in the underlying map.
    """
    if len(rim) % 2:
        raise ValueError("rim must alternate vertex and edge tokens")
    go = dict(germ_order or {})
    names: list[str] = []
    kinds: dict[str, str] = {}
    redges: list[tuple[str, str]] = []
    for i in range(0, len(rim), 2):
        name, kind = rim[i]
        if name in kinds:
            raise ValueError(f"duplicate vertex name {name!r}")
        names.append(name)
        kinds[name] = kind
        color, direction = rim[i + 1]
        if direction not in (">", "<"):
            raise ValueError(f"edge direction must be '>' or '<', got {direction!r}")
        redges.append((color, direction))
    for name, kind in dict(inner_kinds or {}).items():
        if name in kinds:
            raise ValueError(f"inner vertex {name!r} shadows a rim vertex")
        kinds[name] = kind

    inner = list(inner)
    n = len(names)
    base = 2 * n
    inc: dict[str, list[int]] = {name: [] for name in kinds}
    for j, (u, v, _color) in enumerate(inner):
        if u == v:
            raise ValueError("loops are not supported by the builder")
        inc[u].append(base + 2 * j)
        inc[v].append(base + 2 * j + 1)

    def germ_dart(name: str, j: int) -> int:
        u, v, _ = inner[j]
        if u == name:
            return base + 2 * j
        if v == name:
            return base + 2 * j + 1
        raise ValueError(f"vertex {name!r} is not on inner edge {j}")

    twin: dict[int, int] = {}
    for d in range(0, base + 2 * len(inner), 2):
        twin[d] = d + 1
        twin[d + 1] = d

    nxt: dict[int, int] = {}

    def set_cycle(cycle: list[int]) -> None:
        for a, b in zip(cycle, cycle[1:] + cycle[:1]):
            nxt[a] = b

    def ordered_germs(name: str) -> list[int]:
        germs = inc[name]
        if name in go:
            order = [germ_dart(name, j) for j in go[name]]
            if sorted(order) != sorted(germs):
                raise ValueError(f"germ_order[{name!r}] does not match its germs")
            return order
        if len(germs) > 2:
            raise ValueError(f"vertex {name!r} needs an explicit germ_order")
        return germs

    for i, name in enumerate(names):
        germs = ordered_germs(name)
        if name not in go and len(germs) > 1:
            raise ValueError(f"boundary vertex {name!r} needs an explicit germ_order")
        back = 2 * ((i - 1) % n) + 1
        set_cycle([2 * i] + germs + [back])
    for name in kinds:
        if name in set(names):
            continue
        germs = ordered_germs(name)
        if not germs:
            raise ValueError(f"inner vertex {name!r} has no edges")
        set_cycle(germs)

    boundary = tuple(2 * i for i in range(n))
    m = build_map(twin, nxt, boundary)

    owner: dict[int, str] = {}
    for i in range(n):
        owner[2 * i] = names[i]
        owner[2 * i + 1] = names[(i + 1) % n]
    for j, (u, v, _color) in enumerate(inner):
        owner[base + 2 * j] = u
        owner[base + 2 * j + 1] = v

    vertex_kind = {rep: kinds[owner[rep]] for rep in m.vertices()}
    edge_color: dict[int, str] = {}
    edge_dir: dict[int, int] = {}
    for i, (color, direction) in enumerate(redges):
        edge_color[2 * i] = color
        edge_dir[2 * i] = 2 * i if direction == ">" else 2 * i + 1
    for j, (_u, _v, color) in enumerate(inner):
        edge_color[base + 2 * j] = color
        edge_dir[base + 2 * j] = base + 2 * j

    dessin = Dessin(m, vertex_kind, edge_color, edge_dir, degree)
    name_of = {name: None for name in kinds}
    for d, name in owner.items():
        if name_of[name] is None:
            name_of[name] = m.vertex_of(d)
    return dessin, name_of


# ---------------------------------------------------------------------------
# degree-3 fixtures


@lru_cache(maxsize=None)
def _cubic_block_I():
    rim = [
        ("B-", BLACK), (BOLD, ">"),
        ("W0", WHITE), (BOLD, "<"),
        ("B+", BLACK), (SOLID, "<"),
        ("Xr1", CROSS), (DOTTED, "<"),
        ("W1", WHITE), (DOTTED, ">"),
        ("Xr2", CROSS), (SOLID, ">"),
        ("m", MONO), (SOLID, "<"),
        ("Xr3", CROSS), (DOTTED, "<"),
        ("Md", MONO), (DOTTED, ">"),
        ("Xs3", CROSS), (SOLID, ">"),
        ("mn", MONO), (SOLID, "<"),
        ("Xs2", CROSS), (DOTTED, "<"),
        ("W2", WHITE), (DOTTED, ">"),
        ("Xs1", CROSS), (SOLID, ">"),
    ]
    inner = [
        ("W0", "Md", DOTTED),
        ("B+", "W1", BOLD),
        ("m", "B+", SOLID),
        ("mn", "B-", SOLID),
        ("B-", "W2", BOLD),
    ]
    return dessin_from_spec(3, rim, inner, germ_order={"B+": [1, 2], "B-": [3, 4]})


def cubic_block_I(named: bool = False):
    """Nonsingular cubic block of type I: one oval, one jump, two zigzags."""
    d, names = _cubic_block_I()
    return (d, names) if named else d


@lru_cache(maxsize=None)
def _cubic_block_II():
    rim = []
    for i in range(1, 4):
        rim += [
            (f"X{2 * i - 1}", CROSS), (DOTTED, "<"),
            (f"W{i}", WHITE), (DOTTED, ">"),
            (f"X{2 * i}", CROSS), (SOLID, ">"),
            (f"M{i}", MONO), (SOLID, "<"),
        ]
    inner = [
        ("B", "W1", BOLD),
        ("M1", "B", SOLID),
        ("B", "W2", BOLD),
        ("M2", "B", SOLID),
        ("B", "W3", BOLD),
        ("M3", "B", SOLID),
    ]
    return dessin_from_spec(
        3,
        rim,
        inner,
        inner_kinds={"B": BLACK},
        germ_order={"B": [0, 1, 2, 3, 4, 5]},
    )


def cubic_block_II(named: bool = False):
    """Nonsingular cubic block of type II: three zigzags, inner black."""
    d, names = _cubic_block_II()
    return (d, names) if named else d


@lru_cache(maxsize=None)
def _wave_cubic():
    rim = [
        ("B1", BLACK), (BOLD, ">"),
        ("Mb", MONO), (BOLD, "<"),
        ("B2", BLACK), (SOLID, "<"),
        ("X1", CROSS), (DOTTED, "<"),
        ("W1", WHITE), (DOTTED, ">"),
        ("X2", CROSS), (SOLID, ">"),
        ("M1", MONO), (SOLID, "<"),
        ("X3", CROSS), (DOTTED, "<"),
        ("W2", WHITE), (DOTTED, ">"),
        ("X4", CROSS), (SOLID, ">"),
        ("M2", MONO), (SOLID, "<"),
        ("X5", CROSS), (DOTTED, "<"),
        ("W3", WHITE), (DOTTED, ">"),
        ("X6", CROSS), (SOLID, ">"),
    ]
    inner = [
        ("B1", "W3", BOLD),
        ("M2", "B1", SOLID),
        ("Mb", "W2", BOLD),
        ("B2", "W1", BOLD),
        ("M1", "B2", SOLID),
    ]
    return dessin_from_spec(3, rim, inner, germ_order={"B1": [1, 0], "B2": [3, 4]})


def wave_cubic(named: bool = False):
    """Nonsingular cubic with a white-free wave and three zigzags."""
    d, names = _wave_cubic()
    return (d, names) if named else d


@lru_cache(maxsize=None)
def _hyperbolic_cubic():
    rim = []
    for i in range(1, 4):
        rim += [
            (f"W{i}", WHITE), (DOTTED, ">"),
            (f"u{i}", MONO), (DOTTED, "<"),
        ]
    inner = []
    for i in range(1, 4):
        inner += [
            (f"u{i}", f"Y{i}", DOTTED),
            (f"Y{i}", "B", SOLID),
            ("B", f"W{i}", BOLD),
        ]
    return dessin_from_spec(
        3,
        rim,
        inner,
        inner_kinds={"Y1": CROSS, "Y2": CROSS, "Y3": CROSS, "B": BLACK},
        germ_order={"B": [2, 1, 5, 4, 8, 7]},
    )


def hyperbolic_cubic(named: bool = False):
    """Hyperbolic cubic: all-dotted boundary, inner crosses and black."""
    d, names = _hyperbolic_cubic()
    return (d, names) if named else d


# ---------------------------------------------------------------------------
# degree-6 fixtures


@lru_cache(maxsize=None)
def _hyperbolic_sextic():
    rim = []
    for i in range(1, 7):
        rim += [
            (f"W{i}", WHITE), (DOTTED, ">"),
            (f"u{i}", MONO), (DOTTED, "<"),
        ]
    inner = []
    for i in range(1, 7):
        b = "B1" if i <= 3 else "B2"
        inner += [
            (f"u{i}", f"Y{i}", DOTTED),
            (f"Y{i}", b, SOLID),
            (b, f"W{i}", BOLD),
        ]
    return dessin_from_spec(
        6,
        rim,
        inner,
        inner_kinds={**{f"Y{i}": CROSS for i in range(1, 7)}, "B1": BLACK, "B2": BLACK},
        germ_order={"B1": [2, 1, 5, 4, 8, 7], "B2": [11, 10, 14, 13, 17, 16]},
    )


def hyperbolic_sextic(named: bool = False):
    """Hyperbolic degree-6 dessin: six whites and maxima on the rim."""
    d, names = _hyperbolic_sextic()
    return (d, names) if named else d


# ---------------------------------------------------------------------------
# singular fixtures


@lru_cache(maxsize=None)
def _nodal_cubic():
    rim = [
        ("B-", BLACK), (BOLD, ">"),
        ("W0", WHITE), (BOLD, "<"),
        ("B+", BLACK), (SOLID, "<"),
        ("Xr1", CROSS), (DOTTED, "<"),
        ("W1", WHITE), (DOTTED, ">"),
        ("Xr2", CROSS), (SOLID, ">"),
        ("m", MONO), (SOLID, "<"),
        ("Xs", CROSS), (SOLID, ">"),
        ("mn", MONO), (SOLID, "<"),
        ("Xs2", CROSS), (DOTTED, "<"),
        ("W2", WHITE), (DOTTED, ">"),
        ("Xs1", CROSS), (SOLID, ">"),
    ]
    inner = [
        ("W0", "Xs", DOTTED),
        ("B+", "W1", BOLD),
        ("m", "B+", SOLID),
        ("mn", "B-", SOLID),
        ("B-", "W2", BOLD),
    ]
    return dessin_from_spec(3, rim, inner, germ_order={"B+": [1, 2], "B-": [3, 4]})


def nodal_cubic(named: bool = False):
    """The type-I cubic with its oval contracted to a solitary node."""
    d, names = _nodal_cubic()
    return (d, names) if named else d


@lru_cache(maxsize=None)
def _solitary_demo():
    rim = [
        ("B1", BLACK), (BOLD, ">"),
        ("W1", WHITE), (BOLD, "<"),
        ("B2", BLACK), (SOLID, "<"),
        ("X1", CROSS), (DOTTED, "<"),
        ("Wz", WHITE), (DOTTED, ">"),
        ("X2", CROSS), (SOLID, ">"),
        ("Ms1", MONO), (SOLID, "<"),
        ("Xs", CROSS), (SOLID, ">"),
        ("Ms2", MONO), (SOLID, "<"),
        ("X3", CROSS), (DOTTED, "<"),
        ("W2", WHITE), (DOTTED, ">"),
        ("u1", MONO), (DOTTED, "<"),
        ("W3", WHITE), (DOTTED, ">"),
        ("X4", CROSS), (SOLID, ">"),
        ("Ms3", MONO), (SOLID, "<"),
        ("X5", CROSS), (DOTTED, "<"),
        ("W4", WHITE), (DOTTED, ">"),
        ("u2", MONO), (DOTTED, "<"),
        ("W5", WHITE), (DOTTED, ">"),
        ("X6", CROSS), (SOLID, ">"),
    ]
    inner = [
        ("W1", "Xs", DOTTED),      # 0
        ("B2", "Wz", BOLD),        # 1
        ("Ms1", "B2", SOLID),      # 2
        ("Ms2", "B1", SOLID),      # 3
        ("B1", "W2", BOLD),        # 4
        ("u1", "Y1", DOTTED),      # 5
        ("Y1", "Bp", SOLID),       # 6
        ("Bp", "W3", BOLD),        # 7
        ("Ms3", "Bp", SOLID),      # 8
        ("Bp", "W4", BOLD),        # 9
        ("u2", "Y2", DOTTED),      # 10
        ("Y2", "Bp", SOLID),       # 11
        ("Bp", "W5", BOLD),        # 12
    ]
    return dessin_from_spec(
        6,
        rim,
        inner,
        inner_kinds={"Bp": BLACK, "Y1": CROSS, "Y2": CROSS},
        germ_order={
            "B1": [3, 4],
            "B2": [1, 2],
            "Bp": [6, 7, 8, 9, 11, 12],
        },
    )


def solitary_demo(named: bool = False):
    """Degree-6 nodal dessin with a solitary vertex and two ovals.

    The rim reads jump, zigzag, solitary, oval, oval; the jump white's
    dotted arm feeds the solitary directly, and each two-white oval
    drains through an inner vertical-tangency cross into the inner
    black.  Exercises the solitary segment classification and the
    oval/solitary swap move.
    """
    d, names = _solitary_demo()
    return (d, names) if named else d


@lru_cache(maxsize=None)
def _node_on_branch_demo():
    rim = [
        ("B-", BLACK), (BOLD, ">"),
        ("W0", WHITE), (BOLD, "<"),
        ("B+", BLACK), (SOLID, "<"),
        ("X1", CROSS), (DOTTED, "<"),
        ("W1", WHITE), (DOTTED, ">"),
        ("Xn", CROSS), (DOTTED, "<"),
        ("u", MONO), (DOTTED, ">"),
        ("X2", CROSS), (SOLID, ">"),
        ("m", MONO), (SOLID, "<"),
        ("X3", CROSS), (DOTTED, "<"),
        ("W2", WHITE), (DOTTED, ">"),
        ("X4", CROSS), (SOLID, ">"),
    ]
    inner = [
        ("B+", "W1", BOLD),        # 0
        ("Xn", "B+", SOLID),       # 1
        ("W0", "u", DOTTED),       # 2
        ("m", "B-", SOLID),        # 3
        ("B-", "W2", BOLD),        # 4
    ]
    return dessin_from_spec(
        3,
        rim,
        inner,
        germ_order={"B+": [0, 1], "B-": [3, 4]},
    )


def node_on_branch_demo(named: bool = False):
    """Degree-3 nodal dessin whose node sits on the dotted part.

    The singular cross has two dotted rim germs and an inner solid one,
    and it is separated from a vertical-tangency cross only by a
    monochrome extremum fed by the jump white.  Demo site for the node
    passage through a vertical-tangency fiber.
    """
    d, names = _node_on_branch_demo()
    return (d, names) if named else d


@lru_cache(maxsize=None)
def _cusp_passage_demo():
    rim = [
        ("B1", BLACK), (BOLD, ">"),
        ("W1", WHITE), (BOLD, "<"),
        ("B2", BLACK), (SOLID, "<"),
        ("X1", CROSS), (DOTTED, "<"),
        ("Wz1", WHITE), (DOTTED, ">"),
        ("X2", CROSS), (SOLID, ">"),
        ("Ms1", MONO), (SOLID, "<"),
        ("Xs", CROSS), (SOLID, ">"),
        ("M8", MONO), (SOLID, "<"),
        ("X3", CROSS), (DOTTED, "<"),
        ("u1", MONO), (DOTTED, ">"),
        ("X4", CROSS), (SOLID, ">"),
        ("Ms2", MONO), (SOLID, "<"),
        ("X5", CROSS), (DOTTED, "<"),
        ("Wz2", WHITE), (DOTTED, ">"),
        ("X6", CROSS), (SOLID, ">"),
        ("Ms3", MONO), (SOLID, "<"),
        ("X7", CROSS), (DOTTED, "<"),
        ("Wz3", WHITE), (DOTTED, ">"),
        ("X8", CROSS), (SOLID, ">"),
        ("Ms4", MONO), (SOLID, "<"),
        ("X9", CROSS), (DOTTED, "<"),
        ("u2", MONO), (DOTTED, ">"),
        ("X10", CROSS), (SOLID, ">"),
    ]
    inner = [
        ("W1", "Xs", DOTTED),      # 0
        ("B2", "Wz1", BOLD),       # 1
        ("Ms1", "B2", SOLID),      # 2
        ("M8", "B1", SOLID),       # 3
        ("B1", "Wp", BOLD),        # 4
        ("Wp", "u1", DOTTED),      # 5
        ("Wp", "u2", DOTTED),      # 6
        ("Ms2", "Bp", SOLID),      # 7
        ("Bp", "Wz2", BOLD),       # 8
        ("Ms3", "Bp", SOLID),      # 9
        ("Bp", "Wz3", BOLD),       # 10
        ("Ms4", "Bp", SOLID),      # 11
        ("Bp", "Wp", BOLD),        # 12
    ]
    return dessin_from_spec(
        6,
        rim,
        inner,
        inner_kinds={"Bp": BLACK, "Wp": WHITE},
        germ_order={
            "B1": [3, 4],
            "B2": [1, 2],
            "Bp": [7, 8, 9, 10, 11, 12],
            "Wp": [4, 5, 12, 6],
        },
    )


def cusp_passage_demo(named: bool = False):
    """Degree-6 nodal dessin with a solitary vertex beside a bare oval.

    The rim reads jump, zigzag, solitary, bare oval, zigzag, zigzag,
    bare oval; the jump white feeds the solitary and an inner white
    feeds both bare ovals, so the maximum separating the solitary from
    its neighbouring oval can drain past them.  Demo site for the
    solitary/oval passage through a cusp fiber.
    """
    d, names = _cusp_passage_demo()
    return (d, names) if named else d


def all_valid_fixtures() -> list[tuple[str, Dessin, str]]:
    """(name, dessin, strictness) for every fixture that must validate."""
    from .dessin import GENERIC, NODAL_CUSPIDAL

    return [
        ("cubic-block-I", cubic_block_I(), GENERIC),
        ("cubic-block-II", cubic_block_II(), GENERIC),
        ("wave-cubic", wave_cubic(), GENERIC),
        ("hyperbolic-cubic", hyperbolic_cubic(), GENERIC),
        ("hyperbolic-sextic", hyperbolic_sextic(), GENERIC),
        ("nodal-cubic", nodal_cubic(), NODAL_CUSPIDAL),
        ("solitary-demo", solitary_demo(), NODAL_CUSPIDAL),
        ("node-on-branch-demo", node_on_branch_demo(), NODAL_CUSPIDAL),
        ("cusp-passage-demo", cusp_passage_demo(), NODAL_CUSPIDAL),
    ]
