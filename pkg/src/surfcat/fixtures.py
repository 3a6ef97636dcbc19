"""Bundled example surfaces and designated curves used across the test suite,
the CLI demos and the acceptance checks.
"""
from __future__ import annotations

from .errors import InvalidString
from .qp import JacobianAlgebra, algebra_of
from .strings import Band, StringWord, validate_string, word
from .surface import Arc, Side, Triangle, Triangulation, annulus, polygon


def _rename_arcs(T: Triangulation, mapping: dict[int, int]) -> Triangulation:
    arcs = [Arc(mapping[a.id], a.is_boundary) for a in T.arcs.values()]
    triangles = [
        Triangle(tuple(Side(mapping[s.arc], s.reversed) for s in tri.sides))
        for tri in T.triangles
    ]
    return Triangulation(arcs, triangles)


def example_annulus() -> Triangulation:
    """Annulus with 2+3 marked points whose algebra has five vertices, six
    arrows and a single 3-cycle 2 -> 4 -> 5 -> 2.

    Built from the canonical snake triangulation by two flips; internal arcs
    are renamed 1..5 so that the quiver carries the arrows
    3->4, 2->4, 1->2, 1->3, 4->5, 5->2.
    """
    T = annulus(2, 3)
    T, _ = T.flip(2)
    T, _ = T.flip(1)
    mapping = {4: 1, 5: 2, 3: 3, 11: 4, 12: 5}
    nxt = 6
    for a in sorted(T.arcs):
        if a not in mapping:
            mapping[a] = nxt
            nxt += 1
    return _rename_arcs(T, mapping)


def genus_one_torus() -> Triangulation:
    """Genus-1 surface with one boundary component and one marked point,
    glued from three triangles (a square torus relator with a cut corner)."""
    A, B, D1, D2, BD = 1, 2, 3, 4, 5
    arcs = [Arc(A, False), Arc(B, False), Arc(D1, False), Arc(D2, False),
            Arc(BD, True)]
    triangles = [
        Triangle((Side(A, False), Side(B, False), Side(D1, True))),
        Triangle((Side(D1, False), Side(A, True), Side(D2, True))),
        Triangle((Side(D2, False), Side(B, True), Side(BD, False))),
    ]
    return Triangulation(arcs, triangles)


def _arrow_by_pair(alg: JacobianAlgebra, source: int, target: int) -> int:
    hits = [a.id for a in alg.quiver.arrows
            if a.source == source and a.target == target]
    if len(hits) != 1:
        raise InvalidString(f"expected one arrow {source}->{target}, got {hits}")
    return hits[0]


def example_curve_main(alg: JacobianAlgebra) -> StringWord:
    """The six-crossing curve of the example annulus, visiting arcs
    3, 4, 2, 1, 3, 4."""
    a = _arrow_by_pair(alg, 3, 4)
    b = _arrow_by_pair(alg, 2, 4)
    c = _arrow_by_pair(alg, 1, 2)
    d = _arrow_by_pair(alg, 1, 3)
    w = word((a, -b, -c, d, a))
    assert validate_string(alg, w)
    return w


def example_curve_delta(alg: JacobianAlgebra) -> StringWord:
    """Curve visiting arcs 2, 1, 3, 4, 5 once each (the 'full line')."""
    a = _arrow_by_pair(alg, 3, 4)
    c = _arrow_by_pair(alg, 1, 2)
    d = _arrow_by_pair(alg, 1, 3)
    e = _arrow_by_pair(alg, 4, 5)
    w = word((-c, d, a, e))
    assert validate_string(alg, w)
    return w


def example_curve_gamma_prime(alg: JacobianAlgebra) -> StringWord:
    """Curve visiting arcs 5, 2, 1, 3, 4 once each (the 'dotted line')."""
    a = _arrow_by_pair(alg, 3, 4)
    c = _arrow_by_pair(alg, 1, 2)
    d = _arrow_by_pair(alg, 1, 3)
    q = _arrow_by_pair(alg, 5, 2)
    w = word((q, -c, d, a))
    assert validate_string(alg, w)
    return w


def example_core_band(alg: JacobianAlgebra) -> Band:
    """The primitive cyclic word around the annulus core: arcs 1, 2, 4, 3."""
    a = _arrow_by_pair(alg, 3, 4)
    b = _arrow_by_pair(alg, 2, 4)
    c = _arrow_by_pair(alg, 1, 2)
    d = _arrow_by_pair(alg, 1, 3)
    return Band((c, b, -a, -d))


def example_algebra() -> JacobianAlgebra:
    return algebra_of(example_annulus())


def hexagon() -> Triangulation:
    return polygon(6)
