"""Combinatorial model of a triangulated marked surface without punctures.

A triangulation is stored as a list of oriented triangles glued along arcs.
Each triangle lists its three sides in clockwise order; a side is an arc
together with a traversal flag.  Everything else (marked points, boundary
cycles, genus, vertex fans) is derived from the gluing.

Conventions, fixed once and used by every other module:

* An arc has two formal ends ``(arc_id, 0)`` and ``(arc_id, 1)``.  A side
  ``(arc, reversed=False)`` traverses end 0 -> end 1, ``reversed=True`` the
  other way.
* Corner ``k`` of a triangle sits between side ``k-1`` (incoming, its head at
  the corner) and side ``k`` (outgoing, its tail at the corner).
* An internal arc occupies exactly two sides, with opposite traversal flags;
  a boundary arc exactly one.
* The boundary orientation is the one in which the unique triangle traverses
  each boundary arc; ``cw_next`` follows it.  For a polygon whose vertices
  are labelled 0..c-1 clockwise this gives ``cw_next(0) = 1``.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable

from .errors import (
    BoundaryArcFlip,
    NoMarkedPointOnBoundary,
    NonManifoldGluing,
    SelfFoldedTriangle,
    TooSmallSurface,
    UnknownArc,
)

End = tuple[int, int]    # (arc id, end index 0|1)
Slot = tuple[int, int]   # (triangle index, position 0..2)


@dataclass(frozen=True)
class Arc:
    id: int
    is_boundary: bool


@dataclass(frozen=True)
class Side:
    arc: int
    reversed: bool

    @property
    def tail(self) -> End:
        return (self.arc, 1 if self.reversed else 0)

    @property
    def head(self) -> End:
        return (self.arc, 0 if self.reversed else 1)

    def opposite(self) -> "Side":
        return Side(self.arc, not self.reversed)


@dataclass(frozen=True)
class Triangle:
    sides: tuple[Side, Side, Side]


@dataclass(frozen=True)
class SurfaceInvariants:
    genus: int
    boundary_components: int
    marked_counts: tuple[int, ...]   # per boundary cycle, in cycle order

    @property
    def total_marked(self) -> int:
        return sum(self.marked_counts)


@dataclass(frozen=True)
class Fan:
    """Sectors around one marked point, clockwise from the outgoing boundary arc.

    ``ends[0]`` is the boundary arc leaving the point, ``ends[-1]`` the one
    arriving; ``ends[1:-1]`` are the internal arc ends between them, and
    ``sectors[i]`` is the triangle corner between ``ends[i]`` and ``ends[i+1]``.
    """
    sectors: tuple[Slot, ...]
    ends: tuple[End, ...]


class Triangulation:
    """Validated, immutable glued-triangle complex."""

    def __init__(self, arcs: Iterable[Arc], triangles: Iterable[Triangle]):
        self.arcs: dict[int, Arc] = {}
        for a in arcs:
            if a.id in self.arcs:
                raise NonManifoldGluing(f"duplicate arc id {a.id}")
            self.arcs[a.id] = a
        self.triangles: tuple[Triangle, ...] = tuple(triangles)
        self._validate_slots()
        self._build_classes()
        self._build_fans()
        self._build_boundary_cycles()
        self._check_counts()

    # -- construction checks -------------------------------------------------

    def _validate_slots(self) -> None:
        self.slots_of_arc: dict[int, list[Slot]] = {a: [] for a in self.arcs}
        for t, tri in enumerate(self.triangles):
            seen = set()
            for k, s in enumerate(tri.sides):
                if s.arc not in self.arcs:
                    raise UnknownArc(f"triangle {t} references undeclared arc {s.arc}")
                if s.arc in seen:
                    raise SelfFoldedTriangle(f"arc {s.arc} used twice in triangle {t}")
                seen.add(s.arc)
                self.slots_of_arc[s.arc].append((t, k))
        for a, arc in self.arcs.items():
            slots = self.slots_of_arc[a]
            want = 1 if arc.is_boundary else 2
            if len(slots) != want:
                raise NonManifoldGluing(
                    f"arc {a} occupies {len(slots)} side slots, expected {want}")
            if not arc.is_boundary:
                s0 = self._side_at(slots[0])
                s1 = self._side_at(slots[1])
                if s0.reversed == s1.reversed:
                    raise NonManifoldGluing(
                        f"arc {a} glued with inconsistent orientation")
        if not self.triangles:
            raise TooSmallSurface("no triangles")
        # connectivity via shared arcs
        adj: dict[int, set[int]] = {t: set() for t in range(len(self.triangles))}
        for a, slots in self.slots_of_arc.items():
            if len(slots) == 2:
                adj[slots[0][0]].add(slots[1][0])
                adj[slots[1][0]].add(slots[0][0])
        seen_t = {0}
        stack = [0]
        while stack:
            t = stack.pop()
            for u in adj[t]:
                if u not in seen_t:
                    seen_t.add(u)
                    stack.append(u)
        if len(seen_t) != len(self.triangles):
            raise NonManifoldGluing("triangulation is not connected")

    def _side_at(self, slot: Slot) -> Side:
        return self.triangles[slot[0]].sides[slot[1]]

    def incoming_side(self, t: int, k: int) -> Side:
        return self.triangles[t].sides[(k - 1) % 3]

    def outgoing_side(self, t: int, k: int) -> Side:
        return self.triangles[t].sides[k]

    def _build_classes(self) -> None:
        parent: dict[End, End] = {}
        for a, arc in self.arcs.items():
            parent[(a, 0)] = (a, 0)
            parent[(a, 1)] = (a, 1)

        def find(x: End) -> End:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        def union(x: End, y: End) -> None:
            rx, ry = find(x), find(y)
            if rx != ry:
                parent[rx] = ry

        for t, tri in enumerate(self.triangles):
            for k in range(3):
                union(self.incoming_side(t, k).head, self.outgoing_side(t, k).tail)

        groups: dict[End, list[End]] = {}
        for e in parent:
            groups.setdefault(find(e), []).append(e)
        # canonical order: by the smallest boundary-arc end in each class
        keyed = []
        for members in groups.values():
            bd = sorted(e for e in members if self.arcs[e[0]].is_boundary)
            if not bd:
                raise NoMarkedPointOnBoundary(
                    "a vertex of the gluing does not touch the boundary")
            keyed.append((bd[0], sorted(members)))
        keyed.sort()
        self.marked_classes: tuple[tuple[End, ...], ...] = tuple(
            tuple(m) for _, m in keyed)
        self.end_class: dict[End, int] = {}
        for i, members in enumerate(self.marked_classes):
            for e in members:
                self.end_class[e] = i

    def corner_class(self, t: int, k: int) -> int:
        return self.end_class[self.outgoing_side(t, k).tail]

    def _partner_slot(self, slot: Slot) -> Slot | None:
        side = self._side_at(slot)
        slots = self.slots_of_arc[side.arc]
        if len(slots) == 1:
            return None
        return slots[1] if slots[0] == slot else slots[0]

    def _build_fans(self) -> None:
        # corner -> next corner clockwise around the shared marked point
        corners_by_class: dict[int, list[Slot]] = {}
        for t in range(len(self.triangles)):
            for k in range(3):
                corners_by_class.setdefault(self.corner_class(t, k), []).append((t, k))

        fans: list[Fan] = []
        for m in range(len(self.marked_classes)):
            corners = corners_by_class.get(m, [])
            if not corners:
                raise NoMarkedPointOnBoundary(f"marked point m{m} has no corner")
            starts = [c for c in corners
                      if self.arcs[self.outgoing_side(*c).arc].is_boundary]
            if len(starts) != 1:
                raise NonManifoldGluing(
                    f"marked point m{m} has {len(starts)} boundary fans")
            chain = [starts[0]]
            ends = [self.outgoing_side(*starts[0]).tail]
            while True:
                t, k = chain[-1]
                inc = self.incoming_side(t, k)
                ends.append(inc.head)
                if self.arcs[inc.arc].is_boundary:
                    break
                nxt = self._partner_slot((t, (k - 1) % 3))
                assert nxt is not None
                t2, k2 = nxt
                chain.append((t2, k2))
                if len(chain) > len(corners):
                    raise NonManifoldGluing(f"fan at m{m} does not close")
            if len(chain) != len(corners):
                raise NonManifoldGluing(f"marked point m{m} has a split fan")
            fans.append(Fan(tuple(chain), tuple(ends)))
        self.fans: tuple[Fan, ...] = tuple(fans)

    def _build_boundary_cycles(self) -> None:
        out_at: dict[int, int] = {}   # class -> boundary arc leaving it
        head_of: dict[int, int] = {}  # boundary arc -> class of its head
        for m, fan in enumerate(self.fans):
            out_at[m] = fan.ends[0][0]
            head_of[fan.ends[0][0]] = self.end_class[
                self._side_at(self.slots_of_arc[fan.ends[0][0]][0]).head]
        # recompute head via the actual side orientation
        for a, arc in self.arcs.items():
            if arc.is_boundary:
                side = self._side_at(self.slots_of_arc[a][0])
                head_of[a] = self.end_class[side.head]
        cycles: list[tuple[int, ...]] = []
        cycle_of_class: dict[int, int] = {}
        seen: set[int] = set()
        for m in range(len(self.marked_classes)):
            if m in seen:
                continue
            cyc_points = []
            cur = m
            while cur not in seen:
                seen.add(cur)
                cyc_points.append(cur)
                cur = head_of[out_at[cur]]
            cycles.append(tuple(cyc_points))
            for p in cyc_points:
                cycle_of_class[p] = len(cycles) - 1
        # deterministic order: by smallest class index in the cycle
        order = sorted(range(len(cycles)), key=lambda i: min(cycles[i]))
        self.boundary_cycles: tuple[tuple[int, ...], ...] = tuple(
            cycles[i] for i in order)
        self.cycle_of_class = {
            p: j for j, cyc in enumerate(self.boundary_cycles) for p in cyc}

    def _check_counts(self) -> None:
        self.internal_arcs: tuple[int, ...] = tuple(
            sorted(a for a, arc in self.arcs.items() if not arc.is_boundary))
        self.boundary_arcs: tuple[int, ...] = tuple(
            sorted(a for a, arc in self.arcs.items() if arc.is_boundary))
        if len(self.internal_arcs) < 1:
            raise TooSmallSurface("surface admits no internal arc")
        assert 3 * len(self.triangles) == 2 * len(self.internal_arcs) + len(self.boundary_arcs)
        v = len(self.marked_classes)
        e = len(self.arcs)
        f = len(self.triangles)
        b = len(self.boundary_cycles)
        chi = v - e + f
        if (2 - b - chi) % 2 != 0 or (2 - b - chi) < 0:
            raise NonManifoldGluing("gluing has no consistent genus")
        self._genus = (2 - b - chi) // 2

    # -- queries ---------------------------------------------------------------

    def invariants(self) -> SurfaceInvariants:
        return SurfaceInvariants(
            genus=self._genus,
            boundary_components=len(self.boundary_cycles),
            marked_counts=tuple(len(c) for c in self.boundary_cycles),
        )

    @property
    def n_internal(self) -> int:
        return len(self.internal_arcs)

    def marked_name(self, m: int) -> str:
        return f"m{m}"

    def marked_index(self, name: str) -> int:
        if not name.startswith("m"):
            raise UnknownArc(f"bad marked point name {name!r}")
        i = int(name[1:])
        if not 0 <= i < len(self.marked_classes):
            raise UnknownArc(f"no marked point {name}")
        return i

    def cw_next(self, m: int) -> int:
        """Next marked point moving along the induced boundary orientation."""
        b_out = self.fans[m].ends[0][0]
        side = self._side_at(self.slots_of_arc[b_out][0])
        return self.end_class[side.head]

    def ccw_next(self, m: int) -> int:
        b_in = self.fans[m].ends[-1][0]
        side = self._side_at(self.slots_of_arc[b_in][0])
        return self.end_class[side.tail]

    def fan_position(self, m: int, end: End) -> int:
        """Index of an arc end in the fan at marked point ``m``."""
        fan = self.fans[m]
        for i, e in enumerate(fan.ends):
            if e == end:
                return i
        raise UnknownArc(f"arc end {end} not incident to m{m}")

    def arc_ends(self, a: int) -> tuple[End, End]:
        return ((a, 0), (a, 1))

    def opposite_corner_slot(self, t: int, side_pos: int) -> Slot:
        """Corner of triangle ``t`` not lying on side ``side_pos``."""
        return (t, (side_pos + 2) % 3)

    def side_opposite_corner(self, t: int, corner: int) -> int:
        return (corner + 1) % 3

    # -- flip --------------------------------------------------------------------

    def flip(self, a: int) -> tuple["Triangulation", "FlipRecord"]:
        if a not in self.arcs:
            raise UnknownArc(f"no arc {a}")
        if self.arcs[a].is_boundary:
            raise BoundaryArcFlip(f"arc {a} is a boundary arc")
        slots = self.slots_of_arc[a]
        # t1 carries the forward traversal of a
        if self._side_at(slots[0]).reversed:
            slot2, slot1 = slots
        else:
            slot1, slot2 = slots
        t1, p1 = slot1
        t2, p2 = slot2
        tri1 = self.triangles[t1]
        tri2 = self.triangles[t2]
        # rotate so the flipped arc comes first: T1 = [d, e1, e2], T2 = [d', e3, e4]
        e1 = tri1.sides[(p1 + 1) % 3]
        e2 = tri1.sides[(p1 + 2) % 3]
        e3 = tri2.sides[(p2 + 1) % 3]
        e4 = tri2.sides[(p2 + 2) % 3]
        m = max(self.arcs) + 1
        new_t1 = Triangle((e2, e3, Side(m, False)))
        new_t2 = Triangle((e4, e1, Side(m, True)))
        new_arcs = [arc for arc in self.arcs.values() if arc.id != a]
        new_arcs.append(Arc(m, False))
        new_triangles = list(self.triangles)
        new_triangles[t1] = new_t1
        new_triangles[t2] = new_t2
        flipped = Triangulation(new_arcs, new_triangles)
        rec = FlipRecord(
            old_arc=a, new_arc=m, t1=t1, t2=t2, rot1=p1, rot2=p2,
            e1=e1, e2=e2, e3=e3, e4=e4,
        )
        return flipped, rec


@dataclass(frozen=True)
class FlipRecord:
    """Everything needed to rewrite curves across one flip.

    Quadrilateral corners are named A, B, C, D clockwise with the old arc as
    the diagonal A-C (traversed C->A in triangle ``t1``) and the new arc as
    B-D.  ``e1..e4`` are the quadrilateral sides AB, BC, CD, DA.
    """
    old_arc: int
    new_arc: int
    t1: int
    t2: int
    rot1: int
    rot2: int
    e1: Side
    e2: Side
    e3: Side
    e4: Side

    # positional side names: 'a', 'e1'..'e4'
    def old_corner_name(self, t: int, k: int) -> str:
        """Quad corner (A/B/C/D) at a stored corner of the two old triangles."""
        if t == self.t1:
            r = (k - self.rot1) % 3
            return {0: "C", 1: "A", 2: "B"}[r]
        if t == self.t2:
            r = (k - self.rot2) % 3
            return {0: "A", 1: "C", 2: "D"}[r]
        raise ValueError("corner not in the flip quadrilateral")

    def old_letter_sides(self, t: int, k: int) -> tuple[str, str]:
        """Positional sides (incoming, outgoing) of an old quad corner."""
        if t == self.t1:
            r = (k - self.rot1) % 3
            return {0: ("e2", "a"), 1: ("a", "e1"), 2: ("e1", "e2")}[r]
        if t == self.t2:
            r = (k - self.rot2) % 3
            return {0: ("e4", "a"), 1: ("a", "e3"), 2: ("e3", "e4")}[r]
        raise ValueError("letter not in the flip quadrilateral")

    def in_quad_triangle(self, t: int) -> bool:
        return t in (self.t1, self.t2)


REGION = {"A": 0, "e1": 0, "e4": 0, "C": 1, "e2": 1, "e3": 1, "B": None, "D": None}

# connections inside the two new triangles:
# T1' = [e2, e3, m]  corners: 0 (m->e2, at B), 1 (e2->e3, at C), 2 (e3->m, at D)
# T2' = [e4, e1, m]  corners: 0 (m->e4, at D), 1 (e4->e1, at A), 2 (e1->m, at B)
NEW_CORNER = {
    ("m", "e2"): ("t1", 0, +1), ("e2", "m"): ("t1", 0, -1),
    ("e2", "e3"): ("t1", 1, +1), ("e3", "e2"): ("t1", 1, -1),
    ("e3", "m"): ("t1", 2, +1), ("m", "e3"): ("t1", 2, -1),
    ("m", "e4"): ("t2", 0, +1), ("e4", "m"): ("t2", 0, -1),
    ("e4", "e1"): ("t2", 1, +1), ("e1", "e4"): ("t2", 1, -1),
    ("e1", "m"): ("t2", 2, +1), ("m", "e1"): ("t2", 2, -1),
}


def polygon(c: int) -> Triangulation:
    """Disc with ``c`` marked points labelled clockwise, fan-triangulated from
    vertex 0.  Internal arcs get ids 1..c-3 (diagonal (0, j) has id j-1),
    boundary arcs c-2..2c-3 (arc i joins vertices i and i+1 mod c)."""
    if c < 4:
        raise TooSmallSurface("polygon needs at least 4 marked points")
    n = c - 3
    diag = {j: j - 1 for j in range(2, c - 1)}            # vertex j -> arc id
    bdry = {i: c - 2 + i for i in range(c)}               # edge (i, i+1) -> id
    arcs = [Arc(diag[j], False) for j in range(2, c - 1)]
    arcs += [Arc(bdry[i], True) for i in range(c)]

    def diag_side(j: int, forward: bool) -> Side:
        # end 0 at vertex 0, end 1 at vertex j; forward = 0 -> j
        return Side(diag[j], not forward)

    triangles = []
    for k in range(1, c - 1):
        s0 = Side(bdry[0], False) if k == 1 else diag_side(k, True)
        s1 = Side(bdry[k], False)
        s2 = Side(bdry[c - 1], False) if k + 1 == c - 1 else diag_side(k + 1, False)
        triangles.append(Triangle((s0, s1, s2)))
    return Triangulation(arcs, triangles)


def annulus(t1: int, t2: int) -> Triangulation:
    """Annulus with ``t1`` marked points on one boundary and ``t2`` on the
    other, triangulated by cutting along an arc between the two boundaries and
    snake-triangulating the resulting polygon.  Internal arcs get ids
    1..t1+t2, boundary arcs follow."""
    if t1 < 1 or t2 < 1:
        raise TooSmallSurface("annulus needs a marked point on each boundary")
    m = t1 + t2 + 2
    # polygon positions: o_0 .. o_{t1-1}, o_0*, i_0*, i_{t2-1} .. i_1, i_0
    cut = 1
    next_internal = 2
    next_boundary = t1 + t2 + 1
    edge_side: dict[tuple[int, int], Side] = {}

    def seed_edge(p: int, q: int, side: Side) -> None:
        edge_side[(p, q)] = side

    arcs = [Arc(cut, False)]
    # outer boundary edges (positions 0..t1-1 -> successor)
    for k in range(t1):
        aid = next_boundary
        next_boundary += 1
        arcs.append(Arc(aid, True))
        seed_edge(k, k + 1, Side(aid, False))
    # cut edge copies
    seed_edge(t1, t1 + 1, Side(cut, False))      # o_0* -> i_0*
    seed_edge(m - 1, 0, Side(cut, True))         # i_0  -> o_0
    # inner boundary edges (positions t1+1 .. m-2 -> successor)
    for k in range(t1 + 1, m - 1):
        aid = next_boundary
        next_boundary += 1
        arcs.append(Arc(aid, True))
        seed_edge(k, k + 1, Side(aid, False))

    diag_dir: dict[tuple[int, int], Side] = {}

    def side_between(p: int, q: int) -> Side:
        nonlocal next_internal
        if (p, q) in edge_side:
            return edge_side[(p, q)]
        key = (min(p, q), max(p, q))
        if key not in diag_dir:
            aid = next_internal
            next_internal += 1
            arcs.append(Arc(aid, False))
            diag_dir[key] = Side(aid, False) if (p, q) == key else Side(aid, True)
            return diag_dir[key]
        first = diag_dir[key]
        return first.opposite()

    triangles = []
    lo, hi = 0, m - 1
    turn = 0
    while hi - lo >= 2:
        if turn % 2 == 0:
            p, q, r = lo, lo + 1, hi
            lo += 1
        else:
            p, q, r = lo, hi - 1, hi
            hi -= 1
        turn += 1
        triangles.append(Triangle((
            side_between(p, q), side_between(q, r),
            side_between(r, p) if (r, p) == (m - 1, 0) else side_between(r, p),
        )))
    return Triangulation(arcs, triangles)


def canonical_triangulation(shape: str, *params: int) -> Triangulation:
    """Deterministic generators: ``polygon(c)`` or ``annulus(t1, t2)``."""
    if shape == "polygon":
        (c,) = params
        return polygon(c)
    if shape == "annulus":
        p, q = params
        return annulus(p, q)
    raise TooSmallSurface(f"unknown shape {shape!r}")


def build_triangulation(arcs: Iterable[Arc], triangles: Iterable[Triangle]) -> Triangulation:
    return Triangulation(arcs, triangles)


# -- JSON file format ---------------------------------------------------------

def to_json_dict(T: Triangulation) -> dict:
    return {
        "arcs": [{"id": a.id, "boundary": a.is_boundary}
                 for a in sorted(T.arcs.values(), key=lambda a: a.id)],
        "triangles": [
            {"sides": [{"arc": s.arc, "reversed": s.reversed} for s in tri.sides]}
            for tri in T.triangles
        ],
    }


def from_json_dict(d: dict) -> Triangulation:
    arcs = [Arc(int(a["id"]), bool(a["boundary"])) for a in d["arcs"]]
    triangles = [
        Triangle(tuple(Side(int(s["arc"]), bool(s["reversed"]))
                       for s in tri["sides"]))
        for tri in d["triangles"]
    ]
    return Triangulation(arcs, triangles)


def dumps(T: Triangulation) -> str:
    return json.dumps(to_json_dict(T), separators=(",", ":"))


def loads(text: str) -> Triangulation:
    return from_json_dict(json.loads(text))
