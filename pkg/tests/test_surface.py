from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as hs

from surfcat import surface as sf
from surfcat.errors import (
    BoundaryArcFlip,
    NonManifoldGluing,
    SelfFoldedTriangle,
    TooSmallSurface,
)
from surfcat.fixtures import genus_one_torus


@pytest.mark.parametrize("c", range(4, 9))
def test_polygon_arc_count(c):
    T = sf.polygon(c)
    inv = T.invariants()
    assert T.n_internal == 6 * inv.genus + 3 * inv.boundary_components + c - 6
    assert inv.genus == 0 and inv.boundary_components == 1
    assert inv.marked_counts == (c,)


@pytest.mark.parametrize("t1,t2", [(1, 1), (1, 2), (2, 2), (2, 3), (1, 4), (3, 3)])
def test_annulus_arc_count(t1, t2):
    T = sf.annulus(t1, t2)
    inv = T.invariants()
    c = t1 + t2
    assert T.n_internal == 3 * 2 + c - 6
    assert inv.genus == 0 and inv.boundary_components == 2
    assert sorted(inv.marked_counts) == sorted([t1, t2])


def test_genus_one_euler_count(torus_fixture):
    T = torus_fixture
    inv = T.invariants()
    assert (inv.genus, inv.boundary_components, inv.total_marked) == (1, 1, 1)
    assert T.n_internal == 6 * 1 + 3 * 1 + 1 - 6
    v = len(T.marked_classes)
    e = len(T.arcs)
    f = len(T.triangles)
    assert inv.genus == (2 - inv.boundary_components - (v - e + f)) // 2


def test_edge_face_count_identity():
    for T in (sf.polygon(5), sf.annulus(2, 3), genus_one_torus()):
        assert 3 * len(T.triangles) == 2 * T.n_internal + len(T.boundary_arcs)


def test_every_marked_point_on_boundary():
    for T in (sf.polygon(6), sf.annulus(2, 3), genus_one_torus()):
        for members in T.marked_classes:
            assert any(T.arcs[a].is_boundary for a, _ in members)


def test_cw_next_polygon_convention():
    T = sf.polygon(4)
    assert [T.cw_next(m) for m in range(4)] == [1, 2, 3, 0]
    assert [T.ccw_next(m) for m in range(4)] == [3, 0, 1, 2]


def test_cw_next_cyclicity():
    T = sf.annulus(2, 3)
    for cyc in T.boundary_cycles:
        m = cyc[0]
        cur = m
        for _ in range(len(cyc)):
            cur = T.cw_next(cur)
        assert cur == m


def test_single_marked_point_boundary_self_next():
    T = sf.annulus(1, 2)
    inv = T.invariants()
    lone = [cyc for cyc in T.boundary_cycles if len(cyc) == 1]
    assert lone and inv.marked_counts.count(1) == 1
    m = lone[0][0]
    assert T.cw_next(m) == m


def test_nonmanifold_rejected():
    arcs = [sf.Arc(1, False), sf.Arc(2, True), sf.Arc(3, True), sf.Arc(4, True)]
    tris = [
        sf.Triangle((sf.Side(1, False), sf.Side(2, False), sf.Side(3, False))),
        sf.Triangle((sf.Side(1, False), sf.Side(4, False), sf.Side(3, False))),
    ]
    with pytest.raises((NonManifoldGluing, SelfFoldedTriangle)):
        sf.Triangulation(arcs, tris)


def test_self_folded_rejected():
    arcs = [sf.Arc(1, False), sf.Arc(2, True)]
    tris = [sf.Triangle((sf.Side(1, False), sf.Side(1, True), sf.Side(2, False)))]
    with pytest.raises(SelfFoldedTriangle):
        sf.Triangulation(arcs, tris)


def test_too_small_rejected():
    with pytest.raises(TooSmallSurface):
        sf.polygon(3)
    with pytest.raises(TooSmallSurface):
        sf.annulus(0, 1)


def test_flip_square_involution():
    from surfcat.mutation import triangulations_equal
    T = sf.polygon(4)
    T2, rec = T.flip(1)
    assert T2.invariants() == T.invariants()
    T3, _ = T2.flip(rec.new_arc)
    assert triangulations_equal(T, T3)


def test_flip_boundary_rejected():
    T = sf.polygon(4)
    with pytest.raises(BoundaryArcFlip):
        T.flip(T.boundary_arcs[0])


def test_flip_allocates_fresh_ids():
    T = sf.polygon(6)
    T2, rec = T.flip(1)
    assert rec.new_arc == max(T.arcs) + 1
    assert rec.new_arc in T2.arcs and 1 not in T2.arcs


@settings(max_examples=20, deadline=None)
@given(hs.lists(hs.integers(0, 10 ** 6), min_size=1, max_size=12))
def test_flip_walks_preserve_invariants(seeds):
    T = sf.annulus(2, 3)
    inv = T.invariants()
    for s in seeds:
        arcs = T.internal_arcs
        T, _ = T.flip(arcs[s % len(arcs)])
        assert T.invariants() == inv
        assert 3 * len(T.triangles) == 2 * T.n_internal + len(T.boundary_arcs)


def test_json_round_trip():
    import json
    for T in (sf.polygon(5), sf.annulus(2, 3), genus_one_torus()):
        text = sf.dumps(T)
        T2 = sf.loads(text)
        assert sf.dumps(T2) == text
        doc = json.loads(text)
        assert list(doc) == ["arcs", "triangles"]
        assert list(doc["arcs"][0]) == ["id", "boundary"]
        assert list(doc["triangles"][0]["sides"][0]) == ["arc", "reversed"]
