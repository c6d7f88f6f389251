"""Combinatorial maps on the closed disk.

A disk map is a connected graph embedded in the closed disk, encoded by
*darts* (directed edge ends).  Conventions used throughout the package:

- Darts are nonnegative ints.  Every edge carries exactly two darts, swapped
  by the fixed-point-free involution ``twin``.  A dart is based at the vertex
  it points away from.
- ``next`` rotates the darts based at a common vertex counterclockwise.
- Faces are the orbits of ``d -> prev(twin(d))``.  Each orbit walks one face
  head-to-tail with the face on the left, so inner faces read
  counterclockwise.
- ``boundary`` is the counterclockwise cycle of darts along the disk rim
  (interior on the left).  Its reversed twins must form one face orbit: the
  outer face.
- Euler count: ``V - E + F_inner = 1`` over darted vertices.
- Vertices with no darts ("isolated") ride along as annotations
  ``(id, anchor_dart)`` with negative ids; the anchor names any dart of the
  face orbit the vertex floats in.  They do not enter the Euler count.
"""

from __future__ import annotations

from . import _kernel
from .errors import (
    BoundaryNotAFace,
    DisconnectedMap,
    EulerViolation,
    MapError,
    NonInvolutiveTwin,
)


def _orbits(domain, step):
    """Orbits of a permutation, each rotated to start at its least element."""
    seen = set()
    cycles = []
    for start in domain:
        if start in seen:
            continue
        cyc = [start]
        seen.add(start)
        cur = step[start]
        while cur != start:
            cyc.append(cur)
            seen.add(cur)
            cur = step[cur]
        k = cyc.index(min(cyc))
        cycles.append(tuple(cyc[k:] + cyc[:k]))
    return cycles


class DiskMap:
    """Immutable disk map.  Construct via :func:`build_map`."""

    __slots__ = (
        "darts",
        "boundary",
        "isolated",
        "_twin",
        "_next",
        "_prev",
        "_vcycles",
        "_vof",
        "_fcycles",
        "_fof",
        "_outer",
        "_bset",
        "_bpos",
        "_key",
    )

    def __init__(self, twin, nxt, boundary, isolated=()):
        twin = dict(twin)
        nxt = dict(nxt)
        darts = tuple(sorted(twin))
        dset = set(darts)
        if not darts:
            raise MapError("a disk map needs at least one edge")
        for d in darts:
            if not isinstance(d, int) or d < 0:
                raise MapError(f"darts must be nonnegative ints, got {d!r}")
        for d in darts:
            t = twin[d]
            if t not in dset or t == d or twin.get(t) != d:
                raise NonInvolutiveTwin(
                    f"twin must be a fixed-point-free involution (dart {d} -> {t})"
                )
        if set(nxt) != dset or set(nxt.values()) != dset:
            raise MapError("rotation must be a permutation of the darts")

        seen = {darts[0]}
        stack = [darts[0]]
        while stack:
            d = stack.pop()
            for e in (twin[d], nxt[d]):
                if e not in seen:
                    seen.add(e)
                    stack.append(e)
        if len(seen) != len(darts):
            raise DisconnectedMap(
                f"map is disconnected ({len(seen)} of {len(darts)} darts reachable)"
            )

        boundary = tuple(boundary)
        if not boundary:
            raise BoundaryNotAFace("boundary must be a nonempty dart cycle")
        if len(set(boundary)) != len(boundary):
            raise BoundaryNotAFace("boundary darts must be distinct")
        if any(b not in dset for b in boundary):
            raise BoundaryNotAFace("boundary refers to unknown darts")
        prev = {v: k for k, v in nxt.items()}
        expected = [twin[b] for b in reversed(boundary)]
        orbit = [expected[0]]
        cur = prev[twin[expected[0]]]
        while cur != expected[0]:
            orbit.append(cur)
            if len(orbit) > len(darts):
                raise BoundaryNotAFace("face walk from the boundary does not close")
            cur = prev[twin[cur]]
        if orbit != expected:
            raise BoundaryNotAFace(
                "reversed twins of the boundary are not a single face orbit"
            )

        vcycles = _orbits(darts, nxt)
        face_next = {d: prev[twin[d]] for d in darts}
        fcycles = _orbits(darts, face_next)
        n_v = len(vcycles)
        n_e = len(darts) // 2
        n_f_inner = len(fcycles) - 1
        if n_v - n_e + n_f_inner != 1:
            raise EulerViolation(
                f"V - E + F_inner = {n_v} - {n_e} + {n_f_inner} != 1; "
                "the rotation system does not embed in the disk"
            )

        isolated = tuple((int(i), int(a)) for i, a in isolated)
        ids = [i for i, _ in isolated]
        if len(set(ids)) != len(ids):
            raise MapError("isolated vertex ids must be distinct")
        for i, a in isolated:
            if i >= 0:
                raise MapError("isolated vertex ids must be negative ints")
            if a not in dset:
                raise MapError(f"isolated vertex {i} anchored at unknown dart {a}")

        object.__setattr__(self, "darts", darts)
        object.__setattr__(self, "boundary", boundary)
        object.__setattr__(self, "isolated", isolated)
        object.__setattr__(self, "_twin", twin)
        object.__setattr__(self, "_next", nxt)
        object.__setattr__(self, "_prev", prev)
        object.__setattr__(self, "_vcycles", {c[0]: c for c in vcycles})
        object.__setattr__(self, "_vof", {d: c[0] for c in vcycles for d in c})
        object.__setattr__(self, "_fcycles", {c[0]: c for c in fcycles})
        object.__setattr__(self, "_fof", {d: c[0] for c in fcycles for d in c})
        outer = None
        tb = twin[boundary[0]]
        for c in fcycles:
            if tb in c:
                outer = c[0]
        object.__setattr__(self, "_outer", outer)
        object.__setattr__(self, "_bset", frozenset(boundary))
        object.__setattr__(self, "_bpos", {b: i for i, b in enumerate(boundary)})
        key = (
            darts,
            tuple(sorted(twin.items())),
            tuple(sorted(nxt.items())),
            boundary,
            isolated,
        )
        object.__setattr__(self, "_key", key)

    # -- immutability ------------------------------------------------------

    def __setattr__(self, name, value):
        raise AttributeError("DiskMap is immutable")

    def __eq__(self, other):
        return isinstance(other, DiskMap) and self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        return (
            f"DiskMap(V={self.num_vertices}, E={self.num_edges},"
            f" inner_faces={self.num_inner_faces}, boundary={len(self.boundary)},"
            f" isolated={len(self.isolated)})"
        )

    # -- basic structure ---------------------------------------------------

    def twin_of(self, d):
        return self._twin[d]

    def next_of(self, d):
        return self._next[d]

    def prev_of(self, d):
        return self._prev[d]

    def vertex_of(self, d):
        """Representative (least dart) of the vertex the dart is based at."""
        return self._vof[d]

    def vertex_cycle(self, d):
        """Counterclockwise rotation at the vertex of ``d``, from its rep."""
        return self._vcycles[self._vof[d]]

    def rotation_from(self, d):
        """Counterclockwise rotation at the vertex of ``d``, starting at ``d``."""
        cyc = self.vertex_cycle(d)
        k = cyc.index(d)
        return cyc[k:] + cyc[:k]

    def degree(self, d):
        """Number of darts based at the vertex of ``d``."""
        return len(self.vertex_cycle(d))

    def vertices(self):
        """Sorted representatives of the darted vertices."""
        return tuple(sorted(self._vcycles))

    def edge_of(self, d):
        return min(d, self._twin[d])

    def edges(self):
        return tuple(sorted(d for d in self.darts if d < self._twin[d]))

    def face_of(self, d):
        """Representative (least dart) of the face orbit containing ``d``."""
        return self._fof[d]

    def face_cycle(self, d):
        """Face orbit containing ``d``, head-to-tail, starting at its rep."""
        return self._fcycles[self._fof[d]]

    def face_from(self, d):
        """Face orbit containing ``d``, head-to-tail, starting at ``d``."""
        cyc = self.face_cycle(d)
        k = cyc.index(d)
        return cyc[k:] + cyc[:k]

    def faces(self):
        """All face orbits (outer included), sorted by representative."""
        return tuple(self._fcycles[r] for r in sorted(self._fcycles))

    @property
    def outer_rep(self):
        return self._outer

    def inner_faces(self):
        return tuple(
            self._fcycles[r] for r in sorted(self._fcycles) if r != self._outer
        )

    @property
    def num_vertices(self):
        return len(self._vcycles)

    @property
    def num_edges(self):
        return len(self.darts) // 2

    @property
    def num_inner_faces(self):
        return len(self._fcycles) - 1

    # -- boundary ----------------------------------------------------------

    def is_boundary(self, d):
        return d in self._bset

    def boundary_pos(self, d):
        """Index of ``d`` in the boundary cycle, or None."""
        return self._bpos.get(d)

    def bflag(self, d):
        """1 if ``d`` is a boundary dart, 2 if its twin is, 3 both, 0 neither."""
        return (1 if d in self._bset else 0) | (2 if self._twin[d] in self._bset else 0)

    # -- derived maps ------------------------------------------------------

    def mirror(self):
        """The reflected disk map: rotations invert, boundary reverses."""
        nxt = {d: self._prev[d] for d in self.darts}
        boundary = tuple(self._twin[b] for b in reversed(self.boundary))
        isolated = tuple((i, self._twin[a]) for i, a in self.isolated)
        return DiskMap(self._twin, nxt, boundary, isolated)

    def relabel(self, mapping):
        """Rename darts by a bijection ``old -> new``; isolated ids persist."""
        mapping = dict(mapping)
        if set(mapping) != set(self.darts):
            raise MapError("relabeling must cover exactly the darts")
        newd = list(mapping.values())
        if len(set(newd)) != len(newd):
            raise MapError("relabeling must be injective")
        twin = {mapping[d]: mapping[t] for d, t in self._twin.items()}
        nxt = {mapping[d]: mapping[t] for d, t in self._next.items()}
        boundary = tuple(mapping[b] for b in self.boundary)
        isolated = tuple((i, mapping[a]) for i, a in self.isolated)
        return DiskMap(twin, nxt, boundary, isolated)

    def as_dict(self):
        """Primitive representation (JSON-friendly after key stringification)."""
        return {
            "twin": [[d, self._twin[d]] for d in self.darts],
            "next": [[d, self._next[d]] for d in self.darts],
            "boundary": list(self.boundary),
            "isolated": [[i, a] for i, a in self.isolated],
        }

    def canonical_code(self, dart_label=None, isolated_label=None, mirror=False):
        return canonical_code(
            self, dart_label=dart_label, isolated_label=isolated_label, mirror=mirror
        )


def build_map(twin, nxt, boundary, isolated=()):
    """Validate and build a :class:`DiskMap`.

    Checks, in order: twin is a fixed-point-free involution; the rotation is
    a permutation of the darts; the map is connected; the reversed twins of
    the boundary cycle form one face orbit (the outer face); the Euler count
    ``V - E + F_inner = 1`` holds; isolated-vertex annotations are coherent.
    """
    return DiskMap(twin, nxt, boundary, isolated)


# ---------------------------------------------------------------------------
# Canonical codes
# ---------------------------------------------------------------------------


def _one_orientation_code(m, dart_label, isolated_label):
    darts = m.darts
    dense = {d: i for i, d in enumerate(darts)}
    n = len(darts)
    twin = [dense[m.twin_of(d)] for d in darts]
    nxt = [dense[m.next_of(d)] for d in darts]

    vtx = [0] * n
    vreps = m.vertices()
    deg = [0] * len(vreps)
    for vi, rep in enumerate(vreps):
        cyc = m.vertex_cycle(rep)
        deg[vi] = len(cyc)
        for d in cyc:
            vtx[dense[d]] = vi

    labels_flat = []
    arity = None
    for d in darts:
        lab = () if dart_label is None else tuple(dart_label(d))
        if arity is None:
            arity = len(lab)
        elif len(lab) != arity:
            raise MapError("dart labels must all have the same arity")
        labels_flat.extend(int(x) for x in lab)
    if arity is None:
        arity = 0

    bflag = [m.bflag(d) for d in darts]
    roots = [dense[b] for b in m.boundary]

    iso_groups = []
    if m.isolated:
        groups = {}
        for vid, anchor in m.isolated:
            lab = () if isolated_label is None else tuple(int(x) for x in isolated_label(vid))
            groups.setdefault(m.face_of(anchor), []).append(lab)
        for rep in sorted(groups):
            face_darts = tuple(dense[d] for d in m.face_cycle(rep))
            iso_groups.append((face_darts, tuple(sorted(groups[rep]))))

    return _kernel.best_boundary_code(
        n, twin, nxt, vtx, len(vreps), deg, labels_flat, arity, bflag, roots, iso_groups
    )


def canonical_code(m, dart_label=None, isolated_label=None, mirror=False):
    """Canonical form of a disk map, optionally up to reflection.

    Two maps get equal codes exactly when some boundary-order-preserving
    isomorphism (dart bijection commuting with twin and rotation, matching
    all labels) carries one to the other; with ``mirror=True`` reflections
    are allowed as well.  ``dart_label`` may attach an int tuple to every
    dart (fixed arity); ``isolated_label`` likewise for isolated vertex ids.
    """
    code = _one_orientation_code(m, dart_label, isolated_label)
    if mirror:
        alt = _one_orientation_code(m.mirror(), dart_label, isolated_label)
        if alt < code:
            code = alt
    return code
