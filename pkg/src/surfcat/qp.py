"""Quiver with potential of a triangulation, gentle-algebra checks, and plain
quiver mutation used as an independent cross-check against flips.

Arrow ids are stable across flips: the arrow sitting at corner ``k`` of
triangle ``t`` has id ``3*t + k + 1``, so arrows of untouched triangles keep
their ids when a flip replaces the two adjacent triangles.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .errors import UnknownArrow
from .surface import Triangulation


@dataclass(frozen=True)
class Arrow:
    id: int
    source: int
    target: int
    triangle: int
    corner: int


@dataclass(frozen=True)
class Quiver:
    vertices: tuple[int, ...]
    arrows: tuple[Arrow, ...]

    def arrow(self, aid: int) -> Arrow:
        a = self._by_id.get(aid)
        if a is None:
            raise UnknownArrow(f"no arrow {aid}")
        return a

    @property
    def _by_id(self) -> dict[int, Arrow]:
        d = object.__getattribute__(self, "__dict__")
        if "_by_id_cache" not in d:
            d["_by_id_cache"] = {a.id: a for a in self.arrows}
        return d["_by_id_cache"]

    def arrows_out(self, v: int) -> list[Arrow]:
        return [a for a in self.arrows if a.source == v]

    def arrows_in(self, v: int) -> list[Arrow]:
        return [a for a in self.arrows if a.target == v]


@dataclass(frozen=True)
class Potential:
    cycles: tuple[tuple[int, int, int], ...]   # arrow-id triples, one per internal triangle


@dataclass(frozen=True)
class GentleRelations:
    forbidden: frozenset[tuple[int, int]]      # (first arrow, then arrow): composite is zero


@dataclass(frozen=True)
class JacobianAlgebra:
    """Quiver, potential and relation set, optionally bundled with the
    triangulation they came from."""
    surface: Triangulation | None
    quiver: Quiver
    potential: Potential
    relations: GentleRelations

    out_by_vertex: dict[int, tuple[Arrow, ...]] = field(default_factory=dict)
    in_by_vertex: dict[int, tuple[Arrow, ...]] = field(default_factory=dict)

    def __post_init__(self):
        out: dict[int, list[Arrow]] = {v: [] for v in self.quiver.vertices}
        inn: dict[int, list[Arrow]] = {v: [] for v in self.quiver.vertices}
        for a in self.quiver.arrows:
            out[a.source].append(a)
            inn[a.target].append(a)
        for v in self.quiver.vertices:
            self.out_by_vertex[v] = tuple(sorted(out[v], key=lambda a: a.id))
            self.in_by_vertex[v] = tuple(sorted(inn[v], key=lambda a: a.id))

    def composable(self, first: int, then: int) -> bool:
        """May the path ``first`` then ``then`` be nonzero in the algebra?"""
        a, b = self.quiver.arrow(first), self.quiver.arrow(then)
        return a.target == b.source and (first, then) not in self.relations.forbidden


def qp_from_triangulation(T: Triangulation) -> tuple[Quiver, Potential, GentleRelations]:
    vertices = T.internal_arcs
    arrows: list[Arrow] = []
    arrow_at: dict[tuple[int, int], int] = {}
    for t, tri in enumerate(T.triangles):
        for k in range(3):
            inc = T.incoming_side(t, k)
            out = T.outgoing_side(t, k)
            if T.arcs[inc.arc].is_boundary or T.arcs[out.arc].is_boundary:
                continue
            aid = 3 * t + k + 1
            arrows.append(Arrow(aid, inc.arc, out.arc, t, k))
            arrow_at[(t, k)] = aid
    cycles: list[tuple[int, int, int]] = []
    for t, tri in enumerate(T.triangles):
        if all(not T.arcs[s.arc].is_boundary for s in tri.sides):
            a0, a1, a2 = (arrow_at[(t, k)] for k in range(3))
            cycles.append((a0, a1, a2))
    forbidden: set[tuple[int, int]] = set()
    for cyc in cycles:
        for i in range(3):
            forbidden.add((cyc[i], cyc[(i + 1) % 3]))
    return (
        Quiver(tuple(vertices), tuple(arrows)),
        Potential(tuple(cycles)),
        GentleRelations(frozenset(forbidden)),
    )


def algebra_of(T: Triangulation) -> JacobianAlgebra:
    q, w, rel = qp_from_triangulation(T)
    return JacobianAlgebra(T, q, w, rel)


def check_gentle(quiver: Quiver, relations: GentleRelations) -> list[str]:
    """Verify the string-algebra axioms; returns a list of violations."""
    violations: list[str] = []
    out: dict[int, list[Arrow]] = {}
    inn: dict[int, list[Arrow]] = {}
    for a in quiver.arrows:
        out.setdefault(a.source, []).append(a)
        inn.setdefault(a.target, []).append(a)
    for v in quiver.vertices:
        if len(out.get(v, [])) > 2:
            violations.append(f"S1: more than two arrows start at {v}")
        if len(inn.get(v, [])) > 2:
            violations.append(f"S1: more than two arrows stop at {v}")
    by_id = {a.id: a for a in quiver.arrows}
    for first, then in relations.forbidden:
        if first not in by_id or then not in by_id:
            violations.append(f"relation ({first},{then}) references unknown arrow")
            continue
        if by_id[first].target != by_id[then].source:
            violations.append(f"relation ({first},{then}) is not a 2-path")
    for a in quiver.arrows:
        succ = [b for b in out.get(a.target, [])
                if (a.id, b.id) not in relations.forbidden]
        if len(succ) > 1:
            violations.append(f"S2: arrow {a.id} has several allowed successors")
        pred = [b for b in inn.get(a.source, [])
                if (b.id, a.id) not in relations.forbidden]
        if len(pred) > 1:
            violations.append(f"S2: arrow {a.id} has several allowed predecessors")
    # finite-dimensionality: no relation-free directed cycle in the path graph
    edges: dict[int, list[int]] = {a.id: [] for a in quiver.arrows}
    for a in quiver.arrows:
        for b in out.get(a.target, []):
            if (a.id, b.id) not in relations.forbidden:
                edges[a.id].append(b.id)
    state: dict[int, int] = {}

    def has_cycle(x: int) -> bool:
        state[x] = 1
        for y in edges[x]:
            if state.get(y, 0) == 1:
                return True
            if state.get(y, 0) == 0 and has_cycle(y):
                return True
        state[x] = 2
        return False

    for a in quiver.arrows:
        if state.get(a.id, 0) == 0 and has_cycle(a.id):
            violations.append("algebra is infinite-dimensional: relation-free cycle")
            break
    return violations


# -- skew matrix view and standard seed mutation --------------------------------

def b_matrix(quiver: Quiver) -> dict[tuple[int, int], int]:
    """Skew-symmetric exchange matrix b[i, j] = #(i->j) - #(j->i)."""
    b: dict[tuple[int, int], int] = {}
    for a in quiver.arrows:
        b[(a.source, a.target)] = b.get((a.source, a.target), 0) + 1
        b[(a.target, a.source)] = b.get((a.target, a.source), 0) - 1
    return {k: v for k, v in b.items() if v != 0}


def mutate_b_matrix(vertices: tuple[int, ...], b: dict[tuple[int, int], int],
                    k: int) -> dict[tuple[int, int], int]:
    def get(i, j):
        return b.get((i, j), 0)

    nb: dict[tuple[int, int], int] = {}
    for i in vertices:
        for j in vertices:
            if i == j:
                continue
            if i == k or j == k:
                val = -get(i, j)
            else:
                val = get(i, j) + (abs(get(i, k)) * get(k, j)
                                   + get(i, k) * abs(get(k, j))) // 2
            if val:
                nb[(i, j)] = val
    return nb


def quiver_mutate_fz(quiver: Quiver, v: int) -> Quiver:
    """Standard quiver mutation at ``v`` with 2-cycle cancellation.

    Returns an abstract mutated quiver; arrow ids are freshly numbered and
    carry no triangle provenance."""
    if v not in quiver.vertices:
        raise UnknownArrow(f"no vertex {v}")
    b = mutate_b_matrix(quiver.vertices, b_matrix(quiver), v)
    arrows = []
    nid = 1
    for (i, j), val in sorted(b.items()):
        for _ in range(max(val, 0)):
            arrows.append(Arrow(nid, i, j, -1, -1))
            nid += 1
    return Quiver(quiver.vertices, tuple(arrows))


def quivers_isomorphic(q1: Quiver, q2: Quiver) -> bool:
    """Exact digraph-multigraph isomorphism by backtracking (small quivers)."""
    v1, v2 = list(q1.vertices), list(q2.vertices)
    if len(v1) != len(v2) or len(q1.arrows) != len(q2.arrows):
        return False
    m1, m2 = b_matrix(q1), b_matrix(q2)
    c1 = {v: sum(1 for a in q1.arrows if a.source == v) * 16
          + sum(1 for a in q1.arrows if a.target == v) for v in v1}
    c2 = {v: sum(1 for a in q2.arrows if a.source == v) * 16
          + sum(1 for a in q2.arrows if a.target == v) for v in v2}
    if sorted(c1.values()) != sorted(c2.values()):
        return False

    assignment: dict[int, int] = {}
    used: set[int] = set()

    def ok(x: int, y: int) -> bool:
        if c1[x] != c2[y]:
            return False
        for u, w in assignment.items():
            if m1.get((x, u), 0) != m2.get((y, w), 0):
                return False
            if m1.get((u, x), 0) != m2.get((w, y), 0):
                return False
        return True

    def rec(i: int) -> bool:
        if i == len(v1):
            return True
        x = v1[i]
        for y in v2:
            if y not in used and ok(x, y):
                assignment[x] = y
                used.add(y)
                if rec(i + 1):
                    return True
                del assignment[x]
                used.remove(y)
        return False

    return rec(0)


def to_dot(quiver: Quiver, potential: Potential) -> str:
    lines = []
    cyc = ";".join("(%d,%d,%d)" % c for c in potential.cycles)
    lines.append(f"// potential: {cyc}")
    lines.append("digraph quiver {")
    for v in quiver.vertices:
        lines.append(f'  v{v} [label="{v}"];')
    for a in quiver.arrows:
        lines.append(f'  v{a.source} -> v{a.target} [label="{a.id}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
