"""Decorated disk maps: vertex kinds, edge colors, and orientations.

A dessin is a disk map whose vertices are classified as black, white,
cross, or monochrome, and whose edges carry a color (solid, bold,
dotted) and a direction.  The decoration axioms (incidence, direction,
acyclicity, valency bookkeeping) are checked by :func:`validate`;
boundary structure is summarized by :func:`segments` and
:func:`regions`, and global properties by :func:`predicates`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from .diskmap import DiskMap, canonical_code
from .errors import NotADessin

__all__ = [
    "GENERIC",
    "NODAL_CUSPIDAL",
    "BLACK",
    "WHITE",
    "CROSS",
    "MONO",
    "SOLID",
    "BOLD",
    "DOTTED",
    "Dessin",
    "Violation",
    "ValidationReport",
    "validate",
    "check",
    "Segment",
    "segments",
    "Region",
    "regions",
    "predicates",
    "full_valency",
    "is_hyperbolic",
    "is_unramified",
    "singular_vertices",
    "oval_count",
    "zigzag_count",
    "jump_count",
    "wave_count",
    "solitary_count",
    "mirror_dessin",
    "canonical_key",
    "isomorphic",
]

# Strictness levels for validation.
GENERIC = "generic"
NODAL_CUSPIDAL = "nodal-cuspidal"

# Vertex kinds.
BLACK = "black"
WHITE = "white"
CROSS = "cross"
MONO = "mono"

# Edge colors.
SOLID = "solid"
BOLD = "bold"
DOTTED = "dotted"

_KINDS = (BLACK, WHITE, CROSS, MONO)
_COLORS = (SOLID, BOLD, DOTTED)
_KIND_CODE = {k: i for i, k in enumerate(_KINDS)}
_COLOR_CODE = {c: i for i, c in enumerate(_COLORS)}

# Colors allowed at each essential kind; monochrome vertices instead
# require all incident colors to coincide.
_ALLOWED_COLORS = {
    BLACK: {SOLID, BOLD},
    WHITE: {BOLD, DOTTED},
    CROSS: {DOTTED, SOLID},
}

# Direction rule: for an essential vertex, each incident germ is
# incoming or outgoing depending only on (kind, color).  True means the
# edge points toward the vertex.
_INCOMING = {
    (BLACK, SOLID): True,
    (BLACK, BOLD): False,
    (WHITE, BOLD): True,
    (WHITE, DOTTED): False,
    (CROSS, DOTTED): True,
    (CROSS, SOLID): False,
}

# Full-valency menus per strictness, keyed by kind.  A menu of None
# means any value allowed by the other axioms.
_MENUS = {
    GENERIC: {BLACK: frozenset({6}), WHITE: frozenset({4}), CROSS: frozenset({2})},
    NODAL_CUSPIDAL: {
        BLACK: frozenset({2, 6}),
        WHITE: frozenset({4}),
        CROSS: frozenset({2, 4, 6}),
    },
}


@dataclass(frozen=True)
class Violation:
    """One axiom failure: which rule broke, and where."""

    axiom: str
    location: tuple
    detail: str = ""


@dataclass(frozen=True)
class ValidationReport:
    """Outcome of :func:`validate`: verdict plus every violation found."""

    violations: tuple[Violation, ...]
    strictness: str

    @property
    def passed(self) -> bool:
        return not self.violations

    @property
    def verdict(self) -> str:
        return "pass" if self.passed else "fail"

    def axioms(self) -> set[str]:
        return {v.axiom for v in self.violations}

    def __str__(self) -> str:
        if self.passed:
            return f"pass ({self.strictness})"
        lines = [f"fail ({self.strictness}):"]
        for v in self.violations:
            where = ", ".join(str(x) for x in v.location)
            msg = f" — {v.detail}" if v.detail else ""
            lines.append(f"  {v.axiom} at ({where}){msg}")
        return "\n".join(lines)


class Dessin:
    """A disk map decorated with vertex kinds, edge colors, directions.

    Construction checks only well-formedness (every vertex and edge is
    labelled, labels are legal, the degree is a positive multiple of
    three).  Whether the decoration satisfies the axioms is a separate
    question answered by :func:`validate`.
    """

    __slots__ = ("map", "vertex_kind", "edge_color", "edge_dir", "degree", "_key")

    def __init__(
        self,
        map: DiskMap,
        vertex_kind: Mapping[int, str],
        edge_color: Mapping[int, str],
        edge_dir: Mapping[int, int],
        degree: int,
    ):
        if not isinstance(degree, int) or degree <= 0 or degree % 3:
            raise ValueError(f"degree must be a positive multiple of 3, got {degree!r}")
        if map.isolated:
            raise ValueError("a dessin has no isolated vertices")
        verts = set(map.vertices())
        if set(vertex_kind) != verts:
            odd = set(vertex_kind) ^ verts
            raise ValueError(f"vertex_kind keys do not match vertices: {sorted(odd)}")
        vk = {v: vertex_kind[v] for v in verts}
        for v, k in vk.items():
            if k not in _KINDS:
                raise ValueError(f"unknown vertex kind {k!r} at vertex {v}")
        edges = set(map.edges())
        if set(edge_color) != edges or set(edge_dir) != edges:
            raise ValueError("edge_color/edge_dir keys must be exactly the edge representatives")
        ec = {}
        ed = {}
        for e in edges:
            c = edge_color[e]
            if c not in _COLORS:
                raise ValueError(f"unknown edge color {c!r} on edge {e}")
            s = edge_dir[e]
            if s not in (e, map.twin_of(e)):
                raise ValueError(f"edge_dir[{e}] = {s} is not a dart of that edge")
            ec[e] = c
            ed[e] = s
        object.__setattr__(self, "map", map)
        object.__setattr__(self, "vertex_kind", vk)
        object.__setattr__(self, "edge_color", ec)
        object.__setattr__(self, "edge_dir", ed)
        object.__setattr__(self, "degree", degree)
        object.__setattr__(self, "_key", None)

    def __setattr__(self, name, value):
        raise AttributeError("Dessin is immutable")

    # -- labelled access -------------------------------------------------
    def kind_of(self, dart: int) -> str:
        """Kind of the vertex the dart is based at."""
        return self.vertex_kind[self.map.vertex_of(dart)]

    def color_of(self, dart: int) -> str:
        """Color of the dart's edge."""
        return self.edge_color[self.map.edge_of(dart)]

    def is_source(self, dart: int) -> bool:
        """True when the dart's edge is directed away from its base."""
        return self.edge_dir[self.map.edge_of(dart)] == dart

    def is_incoming(self, dart: int) -> bool:
        """True when the dart's edge is directed toward its base."""
        return not self.is_source(dart)

    def is_real(self, vertex: int) -> bool:
        """True when the vertex touches the boundary."""
        return any(self.map.bflag(d) for d in self.map.vertex_cycle(vertex))

    def real_vertices(self) -> list[int]:
        return [v for v in self.map.vertices() if self.is_real(v)]

    def inner_vertices(self) -> list[int]:
        return [v for v in self.map.vertices() if not self.is_real(v)]

    def rim_darts(self, vertex: int) -> tuple[int | None, int | None]:
        """(forward boundary dart, dart whose twin is a boundary dart)."""
        fwd = back = None
        for d in self.map.vertex_cycle(vertex):
            f = self.map.bflag(d)
            if f & 1:
                fwd = d
            if f & 2:
                back = d
        return fwd, back

    def germs(self, vertex: int) -> list[int]:
        """Incident darts in rotation order; linearized fwd->back if real."""
        fwd, _ = self.rim_darts(vertex)
        if fwd is not None:
            return list(self.map.rotation_from(fwd))
        return list(self.map.vertex_cycle(vertex))

    def dart_label(self, dart: int) -> tuple[int, int, int]:
        """Label used by the canonical code: (kind, color, orientation)."""
        return (
            _KIND_CODE[self.kind_of(dart)],
            _COLOR_CODE[self.color_of(dart)],
            1 if self.is_source(dart) else 0,
        )

    def canonical_key(self, mirror: bool = False):
        if not mirror:
            if self._key is None:
                key = (self.degree, canonical_code(self.map, self.dart_label))
                object.__setattr__(self, "_key", key)
            return self._key
        return (self.degree, canonical_code(self.map, self.dart_label, mirror=True))

    def __eq__(self, other):
        if not isinstance(other, Dessin):
            return NotImplemented
        return self.canonical_key() == other.canonical_key()

    def __hash__(self):
        return hash(self.canonical_key())

    def __repr__(self):
        m = self.map
        return (
            f"<Dessin degree={self.degree} V={m.num_vertices} "
            f"E={m.num_edges} F={m.num_inner_faces}>"
        )


def full_valency(d: Dessin, vertex: int) -> int:
    """Valency in the doubled (reflection-symmetric) picture.

    Inner vertices keep their map valency; a boundary vertex with map
    valency m doubles its inner germs, giving 2m - 2.
    """
    m = d.map.degree(vertex)
    return m if not d.is_real(vertex) else 2 * m - 2


# ---------------------------------------------------------------------------
# validation


def validate(d: Dessin, strictness: str = GENERIC) -> ValidationReport:
    """Check every decoration axiom; return all violations found."""
    if strictness not in _MENUS:
        raise ValueError(f"unknown strictness {strictness!r}")
    out: list[Violation] = []
    m = d.map

    # Boundary vertices must be visited exactly once by the rim: one
    # forward boundary dart, one dart twinned into the boundary.
    bad_structure: set[int] = set()
    for v in m.vertices():
        nf = nb = 0
        fwd = back = None
        for g in m.vertex_cycle(v):
            f = m.bflag(g)
            if f & 1:
                nf += 1
                fwd = g
            if f & 2:
                nb += 1
                back = g
        if nf != nb or nf > 1 or (nf == 1 and fwd == back):
            bad_structure.add(v)
            out.append(
                Violation(
                    "real-vertex-structure",
                    (v,),
                    f"boundary touches vertex with {nf} forward / {nb} backward rim darts",
                )
            )

    # Color incidence and alternation; direction rule.
    for v in m.vertices():
        if v in bad_structure:
            continue
        kind = d.vertex_kind[v]
        seq = d.germs(v)
        colors = [d.color_of(g) for g in seq]
        real = d.is_real(v)
        if kind == MONO:
            if len(set(colors)) > 1:
                out.append(Violation("color-incidence", (v,), "monochrome vertex with mixed colors"))
            flow = [d.is_incoming(g) for g in seq]
            n = len(flow)
            ok = all(flow[i] != flow[(i + 1) % n] for i in range(n - 1)) and (
                real or n < 2 or flow[-1] != flow[0]
            )
            if n >= 2 and not ok:
                out.append(Violation("direction-rule", (v,), "monochrome germs do not alternate in/out"))
        else:
            allowed = _ALLOWED_COLORS[kind]
            if any(c not in allowed for c in colors):
                out.append(
                    Violation(
                        "color-incidence",
                        (v,),
                        f"{kind} vertex incident to {sorted(set(colors) - allowed)}",
                    )
                )
            else:
                n = len(colors)
                ok = all(colors[i] != colors[(i + 1) % n] for i in range(n - 1)) and (
                    real or n < 2 or colors[-1] != colors[0]
                )
                if n >= 2 and not ok:
                    out.append(Violation("color-incidence", (v,), "colors do not alternate"))
                for g, c in zip(seq, colors):
                    want_in = _INCOMING[(kind, c)]
                    if d.is_incoming(g) != want_in:
                        out.append(
                            Violation(
                                "direction-rule",
                                (v, g),
                                f"{c} germ at {kind} vertex must be "
                                f"{'incoming' if want_in else 'outgoing'}",
                            )
                        )

    # No directed cycles through monochrome vertices only.
    adj: dict[int, list[int]] = {}
    for e in m.edges():
        s = d.edge_dir[e]
        t = m.twin_of(s)
        u, w = m.vertex_of(s), m.vertex_of(t)
        if d.vertex_kind[u] == MONO and d.vertex_kind[w] == MONO:
            adj.setdefault(u, []).append(w)
    state: dict[int, int] = {}

    def _cycle_from(start: int) -> bool:
        stack = [(start, iter(adj.get(start, ())))]
        state[start] = 1
        while stack:
            node, it = stack[-1]
            advanced = False
            for nxt in it:
                if state.get(nxt, 0) == 1:
                    return True
                if state.get(nxt, 0) == 0:
                    state[nxt] = 1
                    stack.append((nxt, iter(adj.get(nxt, ()))))
                    advanced = True
                    break
            if not advanced:
                state[node] = 2
                stack.pop()
        return False

    for u in adj:
        if state.get(u, 0) == 0 and _cycle_from(u):
            out.append(Violation("no-monochrome-cycles", (u,), "directed monochrome cycle"))
            break

    # Valency bookkeeping: per essential kind, real full valencies plus
    # twice the inner ones sum to 12k (k = degree / 3); every monochrome
    # vertex has full valency 4; essential vertices obey the menu.
    k = d.degree // 3
    sums = {BLACK: 0, WHITE: 0, CROSS: 0}
    menu = _MENUS[strictness]
    for v in m.vertices():
        kind = d.vertex_kind[v]
        fv = full_valency(d, v)
        if kind == MONO:
            if fv != 4:
                out.append(Violation("mono-valency", (v,), f"full valency {fv} != 4"))
            continue
        sums[kind] += fv if d.is_real(v) else 2 * fv
        if fv not in menu[kind]:
            out.append(
                Violation(
                    "valency-menu",
                    (v,),
                    f"{kind} full valency {fv} not in {sorted(menu[kind])} ({strictness})",
                )
            )
    for kind, total in sums.items():
        if total != 12 * k:
            out.append(
                Violation(
                    "valency-sum",
                    (kind,),
                    f"{kind} full valencies sum to {total} != {12 * k}",
                )
            )

    return ValidationReport(tuple(out), strictness)


def check(d: Dessin, strictness: str = GENERIC) -> None:
    """Raise :class:`NotADessin` unless *d* passes :func:`validate`."""
    report = validate(d, strictness)
    if not report.passed:
        raise NotADessin(report)


# ---------------------------------------------------------------------------
# boundary segments


@dataclass(frozen=True)
class Segment:
    """A maximal single-color stretch of the boundary.

    ``kind`` is one of ``"oval"``, ``"zigzag"``, ``"jump"``, ``"wave"``,
    or ``"solitary"`` (a singular cross alone on the real solid part,
    counted with the dotted segments).  For a hyperbolic dessin the
    whole boundary is one dotted circle reported with kind ``"wave"``
    and its raw white count; the oval/zigzag naming does not apply.
    ``vertices`` lists the boundary vertices in rim order, including the
    delimiting essential endpoints when there are any.
    """

    kind: str
    color: str
    vertices: tuple[int, ...]
    white_count: int
    circular: bool = False


def _dotted_kind(white_count: int) -> str:
    return "oval" if white_count % 2 == 0 else "zigzag"


def _bold_kind(white_count: int) -> str:
    return "jump" if white_count % 2 else "wave"


def segments(d: Dessin) -> list[Segment]:
    """Maximal same-color boundary runs, classified by white parity."""
    m = d.map
    rim = m.boundary
    n = len(rim)
    verts = [m.vertex_of(b) for b in rim]
    kinds = [d.vertex_kind[v] for v in verts]
    colors = [d.color_of(b) for b in rim]

    # Solitary vertices: singular crosses flanked by solid rim edges.
    out: list[Segment] = []
    for i, v in enumerate(verts):
        if (
            kinds[i] == CROSS
            and full_valency(d, v) > 2
            and colors[i] == SOLID
            and colors[i - 1] == SOLID
        ):
            out.append(Segment("solitary", DOTTED, (v,), 0))

    delim = [i for i in range(n) if kinds[i] in (BLACK, CROSS) or colors[i] != colors[i - 1]]
    if not delim:
        # The rim is a single monochromatic circle of whites and monos.
        wc = sum(1 for k in kinds if k == WHITE)
        color = colors[0]
        out.append(Segment("wave", color, tuple(verts), wc, circular=True))
        return out

    delim.sort()
    for a, b in zip(delim, delim[1:] + [delim[0] + n]):
        color = colors[a % n]  # color of the run starting at vertex a
        run = [verts[i % n] for i in range(a, b + 1)]
        wc = sum(1 for i in range(a, b + 1) if kinds[i % n] == WHITE)
        if color == SOLID:
            continue
        kind = _dotted_kind(wc) if color == DOTTED else _bold_kind(wc)
        out.append(Segment(kind, color, tuple(run), wc))
    return out


def is_hyperbolic(d: Dessin) -> bool:
    """True when every boundary edge is dotted."""
    return all(d.color_of(b) == DOTTED for b in d.map.boundary)


def _named_counts(d: Dessin) -> dict[str, int]:
    if is_hyperbolic(d):
        from .errors import HyperbolicNoClassification

        raise HyperbolicNoClassification(
            "oval/zigzag/jump/wave naming does not apply to hyperbolic dessins"
        )
    counts = {"oval": 0, "zigzag": 0, "jump": 0, "wave": 0, "solitary": 0}
    for s in segments(d):
        counts[s.kind] += 1
    return counts


def oval_count(d: Dessin) -> int:
    return _named_counts(d)["oval"]


def zigzag_count(d: Dessin) -> int:
    return _named_counts(d)["zigzag"]


def jump_count(d: Dessin) -> int:
    return _named_counts(d)["jump"]


def wave_count(d: Dessin) -> int:
    return _named_counts(d)["wave"]


def solitary_count(d: Dessin) -> int:
    return sum(1 for s in segments(d) if s.kind == "solitary")


# ---------------------------------------------------------------------------
# regions


@dataclass(frozen=True)
class Region:
    """An inner face with its count of essential boundary vertices."""

    face: tuple[int, ...]
    essential_vertex_count: int

    @property
    def is_triangular(self) -> bool:
        return self.essential_vertex_count == 3


def regions(d: Dessin) -> list[Region]:
    """One region per inner face of the underlying map."""
    out = []
    for cyc in d.map.inner_faces():
        seen = set()
        for dart in cyc:
            v = d.map.vertex_of(dart)
            if d.vertex_kind[v] != MONO:
                seen.add(v)
        out.append(Region(cyc, len(seen)))
    return out


# ---------------------------------------------------------------------------
# global predicates


def is_unramified(d: Dessin) -> bool:
    """True when every cross vertex lies on the boundary."""
    return all(
        d.is_real(v) for v in d.map.vertices() if d.vertex_kind[v] == CROSS
    )


def singular_vertices(d: Dessin) -> list[int]:
    """Cross vertices of full valency above two, sorted."""
    return sorted(
        v
        for v in d.map.vertices()
        if d.vertex_kind[v] == CROSS and full_valency(d, v) > 2
    )


def predicates(d: Dessin) -> dict:
    """Summary flags: hyperbolic, unramified, singular set, curve type."""
    hyp = is_hyperbolic(d)
    unram = is_unramified(d)
    sing = singular_vertices(d)
    curve_type = "Unknown"
    if unram and not sing and not hyp:
        from . import blocks
        from .errors import DessinError

        try:
            pieces, _junctions = blocks.decompose(d)
        except DessinError:
            pieces = None
        if pieces is not None:
            curve_type = (
                "I"
                if all(
                    not any(
                        p.vertex_kind[v] == BLACK and not p.is_real(v)
                        for v in p.map.vertices()
                    )
                    for p in pieces
                )
                else "II"
            )
    return {
        "hyperbolic": hyp,
        "unramified": unram,
        "singular_vertices": sing,
        "curve_type": curve_type,
    }


# ---------------------------------------------------------------------------
# comparison helpers


def mirror_dessin(d: Dessin) -> Dessin:
    """The reflected dessin: identical decorations on the mirrored map."""
    return Dessin(d.map.mirror(), d.vertex_kind, d.edge_color, d.edge_dir, d.degree)


def canonical_key(d: Dessin, mirror: bool = False):
    """Hashable key equal for dessins that differ by a disk symmetry."""
    return d.canonical_key(mirror=mirror)


def isomorphic(a: Dessin, b: Dessin, mirror: bool = False) -> bool:
    """Label- and orientation-preserving equality; mirror allows flips."""
    if mirror:
        return a.canonical_key(mirror=True) == b.canonical_key(mirror=True)
    return a.canonical_key() == b.canonical_key()
