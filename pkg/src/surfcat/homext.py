"""Hom and Ext dimensions for string objects, and constructive witnesses for
non-rigidity by smoothing crossings.

Hom spaces between string modules are counted through the factor/substring
basis; morphisms in the ambient category add the dual contribution of the
translates.  Extension witnesses are built by splicing words at a shared
overlap, possibly after changing the presentation by a bounded number of
flips, and every candidate is certified by the exact-arithmetic oracle before
it is reported.
"""
from __future__ import annotations

from dataclasses import dataclass

from . import mutation as mu
from . import objects as ob
from . import strings as st
from .errors import (
    BandArgument,
    NoCrossingPatternFound,
    NoSelfCrossingPatternFound,
    ZeroObject,
)
from .modules import string_module, verify_exact_nonsplit
from .objects import ObjectC
from .qp import JacobianAlgebra, algebra_of
from .strings import StringWord
from .surface import Triangulation


# -- graph maps between string modules ------------------------------------------

def _letters(w: StringWord) -> tuple[int, ...]:
    return w.letters if w.kind == "word" else ()


def factor_intervals(alg: JacobianAlgebra, w: StringWord) -> list[tuple[int, int]]:
    """Position intervals supporting quotients: boundary letters point out."""
    ls = _letters(w)
    n = len(ls)
    out = []
    for i in range(n + 1):
        if i > 0 and ls[i - 1] > 0:
            continue
        for j in range(i, n + 1):
            if j < n and ls[j] < 0:
                continue
            out.append((i, j))
    return out


def sub_intervals(alg: JacobianAlgebra, w: StringWord) -> list[tuple[int, int]]:
    """Position intervals supporting submodules: boundary letters point in."""
    ls = _letters(w)
    n = len(ls)
    out = []
    for i in range(n + 1):
        if i > 0 and ls[i - 1] < 0:
            continue
        for j in range(i, n + 1):
            if j < n and ls[j] > 0:
                continue
            out.append((i, j))
    return out


def interval_word(alg: JacobianAlgebra, w: StringWord, i: int, j: int) -> StringWord:
    ls = _letters(w)
    if i == j:
        return st.trivial(st.vertices(alg, w)[i])
    return st.word(ls[i:j])


@dataclass(frozen=True)
class GraphMapBasis:
    pairs: tuple[tuple[tuple[int, int], tuple[int, int], bool], ...]
    # (factor interval of the source, sub interval of the target, inverted?)


def hom_j_dim(alg: JacobianAlgebra, w: StringWord,
              v: StringWord) -> tuple[int, GraphMapBasis]:
    """Hom dimension between string modules via admissible interval pairs."""
    if w.is_zero or v.is_zero:
        return 0, GraphMapBasis(())
    pairs = []
    subs = [(iv, st.encode(interval_word(alg, v, *iv)))
            for iv in sub_intervals(alg, v)]
    for fi in factor_intervals(alg, w):
        fw = interval_word(alg, w, *fi)
        enc = st.encode(fw)
        enc_inv = st.encode(st.invert(fw))
        for iv, senc in subs:
            if senc == enc:
                pairs.append((fi, iv, False))
            elif senc == enc_inv:
                pairs.append((fi, iv, True))
    return len(pairs), GraphMapBasis(tuple(pairs))


def _tau_word_or_zero(alg: JacobianAlgebra, w: StringWord,
                      direction: int) -> StringWord:
    if direction == -1:
        if st.is_injective_string(alg, w):
            return st.ZERO
        return st.tau_minus(alg, w)
    if st.is_projective_string(alg, w):
        return st.ZERO
    return st.tau_plus(alg, w)


# -- Hom and Ext in the ambient category -----------------------------------------

def _word_of(x: ObjectC) -> StringWord:
    return x.word if x.kind == "string" else st.ZERO


def hom_c_dim(T: Triangulation, alg: JacobianAlgebra,
              x: ObjectC, y: ObjectC) -> int:
    if x.kind == "band" or y.kind == "band":
        raise BandArgument("band objects are out of scope for hom spaces")
    if x.is_zero or y.is_zero:
        return 0
    if x.kind == "arc":
        y1 = ob.shift(T, alg, y, -1)
        m = ob.object_module(alg, y1)
        return m.dims[x.arc]
    if y.kind == "arc":
        x1 = ob.shift(T, alg, x, +1)
        m = ob.object_module(alg, x1)
        return m.dims[y.arc]
    wx, wy = x.word, y.word
    first, _ = hom_j_dim(alg, wx, wy)
    ty = _tau_word_or_zero(alg, wy, -1)
    tx = _tau_word_or_zero(alg, wx, +1)
    second, _ = hom_j_dim(alg, ty, tx)
    return first + second


def ext1_c_dim(T: Triangulation, alg: JacobianAlgebra,
               x: ObjectC, y: ObjectC) -> int:
    if x.kind == "band" or y.kind == "band":
        raise BandArgument("band objects are out of scope for ext spaces")
    if x.is_zero or y.is_zero:
        return 0
    return hom_c_dim(T, alg, x, ob.shift(T, alg, y, +1))


def is_rigid(T: Triangulation, alg: JacobianAlgebra, x: ObjectC) -> bool:
    if x.kind == "band":
        raise BandArgument("rigidity predicate applies to string objects")
    if x.is_zero:
        return True
    return ext1_c_dim(T, alg, x, x) == 0


# -- presentations reached by flips ----------------------------------------------

@dataclass
class Presentation:
    T: Triangulation
    alg: JacobianAlgebra
    flips: list[int]
    objs: list[ObjectC]


def _presentations(T: Triangulation, alg: JacobianAlgebra,
                   objs: list[ObjectC], max_flips: int,
                   max_nodes: int = 400):
    """Breadth-first stream of presentations of the given objects, changing
    the triangulation by at most ``max_flips`` flips.  Nodes are identified
    by the complex together with the transported words, so presentations
    that differ by a twist are both visited; ``max_nodes`` bounds the stream
    so exhausting a fruitless search stays cheap."""
    def node_key(S: Triangulation, moved: list[ObjectC]):
        return (mu.canonical_key(S), tuple(ob.object_key(o) for o in moved))

    start = Presentation(T, alg, [], list(objs))
    yield start
    seen = {node_key(T, start.objs)}
    frontier = [start]
    produced = 1
    for _ in range(max_flips):
        nxt = []
        for p in frontier:
            for a in p.T.internal_arcs:
                step = mu.flip_with_transport(p.T, a)
                moved = [mu.transport_object(step, o) for o in p.objs]
                key = node_key(step.after, moved)
                if key in seen:
                    continue
                seen.add(key)
                q = Presentation(step.after, algebra_of(step.after),
                                 p.flips + [a], moved)
                yield q
                produced += 1
                if produced >= max_nodes:
                    return
                nxt.append(q)
        frontier = nxt


@dataclass(frozen=True)
class ExtWitness:
    middle: tuple[ObjectC, ...]
    flips_used: tuple[int, ...]
    presentation: Triangulation
    certified: bool

    def to_json(self) -> dict:
        return {
            "middle": [ob.format_object(self.presentation, m) for m in self.middle],
            "certified": self.certified,
            "flips_used": list(self.flips_used),
        }


def _certify(alg: JacobianAlgebra, left: StringWord, mids: list[StringWord],
             right: StringWord) -> bool:
    try:
        rep = verify_exact_nonsplit(
            string_module(alg, left),
            [string_module(alg, m) for m in mids],
            string_module(alg, right))
        return rep.ok
    except Exception:
        return False


def smooth_crossing(T: Triangulation, alg: JacobianAlgebra,
                    x: ObjectC, y: ObjectC) -> ExtWitness:
    """Certified non-split sequence with the modules of two curves at the
    ends, found by exchanging tails at a shared overlap of their words in
    some presentation reached by at most n flips."""
    if x.kind == "band" or y.kind == "band":
        raise BandArgument("smoothing applies to string objects")
    if x.is_zero or y.is_zero or ob.object_equal(x, y):
        raise NoCrossingPatternFound("need two distinct nonzero string objects")
    budget = T.n_internal
    for p in _presentations(T, alg, [x, y], budget):
        xo, yo = p.objs
        for first, second in ((xo, yo), (yo, xo)):
            wa, wb = _word_of(first), _word_of(second)
            if wa.is_zero or wb.is_zero:
                w = _elementary_exchange_witness(p, first, second)
                if w is not None:
                    return w
                continue
            for wb_o, F, S, g1, g2 in _splice_list(p.alg, wa, wb):
                if g1 is None or g2 is None:
                    continue
                if _certify(p.alg, wa, [g1, g2], wb_o):
                    mids = tuple(ob.string_obj(p.T, p.alg, g)
                                 for g in (g1, g2))
                    return ExtWitness(middle=mids, flips_used=tuple(p.flips),
                                      presentation=p.T, certified=True)
    raise NoCrossingPatternFound("no certified overlap pattern within the flip budget")


def _elementary_exchange_witness(p: Presentation, first: ObjectC,
                                 second: ObjectC) -> ExtWitness | None:
    """Crossing of an arc with the opposite diagonal of its quadrilateral:
    the smoothing pieces are the quadrilateral sides, certified through the
    projected exchange sequences."""
    if first.kind != "arc":
        return None
    if second.kind != "string" or second.word.kind != "trivial":
        return None
    if second.word.vertex != first.arc:
        return None
    data = mu.exchange_triangles(p.T, first.arc, certify=True)
    if not data.certified:
        return None
    return ExtWitness(middle=data.left_middle, flips_used=tuple(p.flips),
                      presentation=p.T, certified=True)


def _splice_list(alg: JacobianAlgebra, wa: StringWord, wb: StringWord):
    """Word pairs built by exchanging tails at a shared overlap: a factor
    interval of ``wa`` matching a sub interval of ``wb`` (either orientation)."""
    la = _letters(wa)
    verts_a = st.vertices(alg, wa)
    out = []
    for wb_o in (wb, st.invert(wb)):
        lb = _letters(wb_o)
        subs = [(iv, st.encode(interval_word(alg, wb_o, *iv)))
                for iv in sub_intervals(alg, wb_o)]
        for (p, q) in factor_intervals(alg, wa):
            enc = st.encode(interval_word(alg, wa, p, q))
            for (r, t), senc in subs:
                if senc != enc:
                    continue
                l1 = lb[:r] + la[p:]
                l2 = la[:q] + lb[t:]
                g1 = _mk_at(alg, l1, verts_a[p])
                g2 = _mk_at(alg, l2, verts_a[0])
                out.append((wb_o, (p, q), (r, t), g1, g2))
    return out


def _mk_at(alg: JacobianAlgebra, letters: tuple[int, ...],
           start_vertex: int) -> StringWord | None:
    if letters:
        w = st.word(letters)
        return w if st.validate_string(alg, w) else None
    return st.trivial(start_vertex)


def _self_candidates(alg: JacobianAlgebra, w: StringWord):
    """Middle-term constructions for a self-overlapping word: a doubled word
    when the whole walk closes up, a loop inserted/removed at a revisited
    vertex, and the two reflections at a there-and-back pattern."""
    for wo in (w, st.invert(w)):
        ls = _letters(wo)
        n = len(ls)
        if n == 0:
            continue
        verts = st.vertices(alg, wo)
        # the walk closes into a band through one seam letter: double it
        for a in alg.quiver.arrows:
            for s in (a.id, -a.id):
                if st.letter_src(alg, s) != verts[-1]:
                    continue
                if st.letter_dst(alg, s) != verts[0]:
                    continue
                if not st.pair_valid(alg, ls[-1], s):
                    continue
                if not st.pair_valid(alg, s, ls[0]):
                    continue
                g = st.word(ls + (s,) + ls)
                if st.validate_string(alg, g):
                    yield [g], wo
        # repeated vertex: insert or remove one loop circuit
        for i in range(n + 1):
            for j in range(i + 1, n + 1):
                if verts[i] != verts[j] or (i == 0 and j == n):
                    continue
                l1 = ls[:j] + ls[i:]
                l2 = ls[:i] + ls[j:]
                g1 = _mk_at(alg, l1, verts[0])
                g2 = _mk_at(alg, l2, verts[0])
                if g1 is None or g2 is None:
                    continue
                if st.validate_string(alg, g1) and st.validate_string(alg, g2):
                    yield [g1, g2], wo
        # there-and-back pattern: reflect the two tails
        for a_pos in range(1, n + 1):
            for b_pos in range(a_pos, n):
                if verts[a_pos] != verts[b_pos]:
                    continue
                if ls[a_pos - 1] >= 0 or ls[b_pos] >= 0:
                    continue
                flip_head = tuple(-z for z in reversed(ls[:a_pos - 1]))
                l1 = ls[:b_pos] + (-ls[a_pos - 1],) + flip_head
                flip_tail = tuple(-z for z in reversed(ls[b_pos + 1:]))
                l2 = (flip_tail + (-ls[b_pos],) + ls[a_pos:b_pos]
                      + (ls[b_pos],) + ls[b_pos + 1:])
                g1 = _mk_at(alg, l1, verts[0])
                g2 = _mk_at(alg, l2, verts[n] if flip_tail else verts[b_pos + 1])
                if g1 is None or g2 is None:
                    continue
                yield [g1, g2], wo


def resolve_self_crossing(T: Triangulation, alg: JacobianAlgebra,
                          x: ObjectC) -> ExtWitness:
    """Certified non-split self-extension of a string object, built from a
    self-overlap of its word in some presentation reached by at most n flips."""
    if x.kind == "band":
        raise BandArgument("use the band parameter family instead")
    if x.is_zero:
        raise ZeroObject("the zero object has no self-extensions")
    budget = T.n_internal
    for p in _presentations(T, alg, [x], budget):
        (xo,) = p.objs
        w = _word_of(xo)
        if w.is_zero or w.kind == "trivial":
            continue
        for mids, wo in _self_candidates(p.alg, w):
            if _certify(p.alg, wo, mids, wo):
                mids_o = tuple(ob.string_obj(p.T, p.alg, g) for g in mids)
                return ExtWitness(middle=mids_o, flips_used=tuple(p.flips),
                                  presentation=p.T, certified=True)
    raise NoSelfCrossingPatternFound(
        "no certified self-overlap within the flip budget")


# -- Ext over the algebra itself (used for cross-checks) ---------------------------

def ext1_j_dim(alg: JacobianAlgebra, w: StringWord, v: StringWord) -> int:
    from .modules import ext1_dim
    return ext1_dim(string_module(alg, w), string_module(alg, v))
