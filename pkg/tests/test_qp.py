from __future__ import annotations

import random

from surfcat import qp
from surfcat.surface import annulus, polygon


def test_hexagon_fan_quiver_is_linear(hexagon):
    q, w, rel = qp.qp_from_triangulation(hexagon)
    assert len(q.vertices) == 3
    assert len(q.arrows) == 2
    assert w.cycles == ()
    assert rel.forbidden == frozenset()
    srcs = {a.source for a in q.arrows}
    tgts = {a.target for a in q.arrows}
    # a linear orientation: one vertex is neither a source nor a sink
    assert len(srcs & tgts) == 1


def test_annulus_fixture_quiver(annulus_fixture):
    q, w, rel = qp.qp_from_triangulation(annulus_fixture)
    assert set(q.vertices) == {1, 2, 3, 4, 5}
    assert {(a.source, a.target) for a in q.arrows} == {
        (3, 4), (2, 4), (1, 2), (1, 3), (4, 5), (5, 2)}
    assert len(w.cycles) == 1
    assert len(rel.forbidden) == 3


def test_potential_counts_match_internal_triangles():
    for T in (polygon(6), annulus(2, 3)):
        q, w, rel = qp.qp_from_triangulation(T)
        internal_tris = sum(
            1 for tri in T.triangles
            if all(not T.arcs[s.arc].is_boundary for s in tri.sides))
        assert len(w.cycles) == internal_tris
        assert len(rel.forbidden) == 3 * internal_tris


def test_check_gentle_on_derived_algebras(annulus_fixture):
    for T in (polygon(7), annulus(2, 3), annulus_fixture):
        q, w, rel = qp.qp_from_triangulation(T)
        assert qp.check_gentle(q, rel) == []


def test_check_gentle_s1_violation():
    arrows = tuple(qp.Arrow(i, 1, i + 1, -1, -1) for i in (1, 2, 3))
    q = qp.Quiver((1, 2, 3, 4), arrows)
    out = qp.check_gentle(q, qp.GentleRelations(frozenset()))
    assert any("S1" in v for v in out)


def test_check_gentle_infinite_dimensional():
    arrows = (qp.Arrow(1, 1, 2, -1, -1), qp.Arrow(2, 2, 3, -1, -1),
              qp.Arrow(3, 3, 1, -1, -1))
    q = qp.Quiver((1, 2, 3), arrows)
    out = qp.check_gentle(q, qp.GentleRelations(frozenset()))
    assert any("infinite" in v for v in out)


def test_mutation_involution():
    arrows = (qp.Arrow(1, 1, 2, -1, -1),)
    q = qp.Quiver((1, 2), arrows)
    q2 = qp.quiver_mutate_fz(q, 2)
    assert [(a.source, a.target) for a in q2.arrows] == [(2, 1)]
    q3 = qp.quiver_mutate_fz(q2, 2)
    assert qp.b_matrix(q3) == qp.b_matrix(q)


def test_flip_matches_matrix_mutation_random_walk(annulus_fixture):
    rng = random.Random(11)
    T = annulus_fixture
    for _ in range(50):
        a = rng.choice(T.internal_arcs)
        q1, _, _ = qp.qp_from_triangulation(T)
        mutated = qp.mutate_b_matrix(q1.vertices, qp.b_matrix(q1), a)
        T2, rec = T.flip(a)
        q2, _, _ = qp.qp_from_triangulation(T2)
        relabel = {v: (rec.new_arc if v == a else v) for v in q1.vertices}
        assert {(relabel[i], relabel[j]): v for (i, j), v in mutated.items()} \
            == qp.b_matrix(q2)
        T = T2


def test_example_quiver_mutation_at_five(annulus_fixture):
    q, w, rel = qp.qp_from_triangulation(annulus_fixture)
    q2 = qp.quiver_mutate_fz(q, 5)
    b = qp.b_matrix(q2)
    # acyclic shape with no 3-cycle: five arrows on five vertices
    assert sum(v for v in b.values() if v > 0) == 5
    T2, _ = annulus_fixture.flip(5)
    q3, w3, _ = qp.qp_from_triangulation(T2)
    assert w3.cycles == ()
    assert qp.quivers_isomorphic(q2, q3)


def test_quiver_isomorphism_detects_difference():
    a2 = qp.Quiver((1, 2), (qp.Arrow(1, 1, 2, -1, -1),))
    kron = qp.Quiver((1, 2), (qp.Arrow(1, 1, 2, -1, -1),
                              qp.Arrow(2, 1, 2, -1, -1)))
    assert not qp.quivers_isomorphic(a2, kron)
    assert qp.quivers_isomorphic(kron, kron)


def test_kronecker_from_annulus_1_1():
    q, w, rel = qp.qp_from_triangulation(annulus(1, 1))
    assert len(q.vertices) == 2 and len(q.arrows) == 2
    assert len({(a.source, a.target) for a in q.arrows}) == 1


def test_dot_export(annulus_fixture):
    q, w, rel = qp.qp_from_triangulation(annulus_fixture)
    text = qp.to_dot(q, w)
    assert text.startswith("// potential: (")
    assert "digraph quiver" in text
    assert text.count("->") == len(q.arrows)


def test_check_gentle_s2_violation():
    arrows = (qp.Arrow(1, 1, 2, -1, -1), qp.Arrow(2, 2, 3, -1, -1),
              qp.Arrow(3, 2, 4, -1, -1))
    q = qp.Quiver((1, 2, 3, 4), arrows)
    out = qp.check_gentle(q, qp.GentleRelations(frozenset()))
    assert any("S2" in v for v in out)
