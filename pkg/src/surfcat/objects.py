"""Objects of the cluster category over a reference triangulation: curves as
crossing words with endpoint data, arcs of the triangulation, and band
objects; endpoint pivots, the shift, almost-split triangles and component
classification.

Endpoint bookkeeping: a curve end is pinned to a triangle corner (the corner
of the first triangle it leaves, opposite the first crossed arc).  Pivots
dispatch on that corner, so curves whose words alone are ambiguous (trivial
words, loops at one marked point) still move correctly.  Internally a pivot
may pass through a boundary segment; only the public objects collapse those
to the zero object.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import strings as st
from .errors import (
    InvalidLiteral,
    MixedTriangulations,
    UnknownArc,
    ZeroObject,
    ZeroParameter,
)
from .modules import Module, band_module, string_module, zero_module
from .qp import JacobianAlgebra
from .strings import Band, StringWord
from .surface import End, Slot, Triangulation

# ---------------------------------------------------------------------------


def surface_key(T: Triangulation) -> str:
    from .surface import dumps
    return dumps(T)


@dataclass(frozen=True)
class ObjectC:
    kind: str                      # 'zero' | 'arc' | 'string' | 'band'
    tkey: str = ""
    arc: int | None = None
    arc_ends: tuple[End, End] | None = None
    word: StringWord | None = None
    slots: tuple[Slot, Slot] | None = None
    band: Band | None = None
    n: int = 0
    lam: Fraction | None = None

    @property
    def is_zero(self) -> bool:
        return self.kind == "zero"


def zero_obj(T: Triangulation) -> ObjectC:
    return ObjectC("zero", tkey=surface_key(T))


def arc_obj(T: Triangulation, a: int, start_end: int = 0) -> ObjectC:
    if a not in T.arcs or T.arcs[a].is_boundary:
        raise UnknownArc(f"no internal arc {a}")
    ends = ((a, start_end), (a, 1 - start_end))
    return ObjectC("arc", tkey=surface_key(T), arc=a, arc_ends=ends)


def band_obj(T: Triangulation, alg: JacobianAlgebra, b: Band, n: int,
             lam: Fraction) -> ObjectC:
    if not st.validate_band(alg, b):
        raise InvalidLiteral("not a primitive cyclic string")
    if lam == 0:
        raise ZeroParameter("band parameter must be nonzero")
    if n < 1:
        raise ZeroParameter("band multiplicity must be at least 1")
    return ObjectC("band", tkey=surface_key(T), band=st.canonical_band(b),
                   n=n, lam=Fraction(lam))


def _derived_start_slot(T: Triangulation, alg: JacobianAlgebra,
                        w: StringWord) -> Slot:
    """Corner of the triangle the curve starts in, for a word of length >= 1."""
    x1 = st.start_vertex(alg, w)
    first_tri = alg.quiver.arrow(abs(w.letters[0])).triangle
    slots = T.slots_of_arc[x1]
    others = [s for s in slots if s[0] != first_tri]
    assert len(others) == 1
    t, pos = others[0]
    return (t, (pos + 2) % 3)


def _derived_slots(T: Triangulation, alg: JacobianAlgebra,
                   w: StringWord) -> tuple[Slot, Slot]:
    start = _derived_start_slot(T, alg, w)
    end_ = _derived_start_slot(T, alg, st.invert(w))
    return (start, end_)


def _default_trivial_slots(T: Triangulation, v: int) -> tuple[Slot, Slot]:
    s0, s1 = sorted(T.slots_of_arc[v])
    return ((s0[0], (s0[1] + 2) % 3), (s1[0], (s1[1] + 2) % 3))


def string_obj(T: Triangulation, alg: JacobianAlgebra, w: StringWord,
               slots: tuple[Slot, Slot] | None = None) -> ObjectC:
    if w.is_zero:
        raise ZeroObject("use zero_obj for the zero object")
    if not st.validate_string(alg, w):
        raise InvalidLiteral("letters do not form a string")
    if w.kind == "trivial":
        if slots is None:
            slots = _default_trivial_slots(T, w.vertex)
    else:
        slots = _derived_slots(T, alg, w)
    return ObjectC("string", tkey=surface_key(T), word=w, slots=slots)


def endpoint_classes(T: Triangulation, x: ObjectC) -> tuple[int, int]:
    if x.kind == "string":
        return (T.corner_class(*x.slots[0]), T.corner_class(*x.slots[1]))
    if x.kind == "arc":
        return (T.end_class[x.arc_ends[0]], T.end_class[x.arc_ends[1]])
    raise ZeroObject("object has no endpoints")


# -- pivot state machine -------------------------------------------------------

@dataclass(frozen=True)
class _PState:
    """A curve between marked points: a crossing word, or a single arc of the
    triangulation (internal or boundary), or contractible."""
    kind: str                            # 'nothing' | 'word' | 'side'
    word: StringWord | None = None
    slots: tuple[Slot, Slot] | None = None
    side_arc: int | None = None
    side_ends: tuple[End, End] | None = None


def _state_of(T: Triangulation, x: ObjectC) -> _PState:
    if x.kind == "arc":
        return _PState("side", side_arc=x.arc, side_ends=x.arc_ends)
    if x.kind == "string":
        return _PState("word", word=x.word, slots=x.slots)
    raise ZeroObject("no pivot state for this object")


def _collapse(T: Triangulation, s: _PState) -> ObjectC:
    if s.kind == "nothing":
        return zero_obj(T)
    if s.kind == "word":
        return ObjectC("string", tkey=surface_key(T), word=s.word, slots=s.slots)
    if T.arcs[s.side_arc].is_boundary:
        return zero_obj(T)
    return ObjectC("arc", tkey=surface_key(T), arc=s.side_arc,
                   arc_ends=s.side_ends)


def _invert_state(s: _PState) -> _PState:
    if s.kind == "word":
        return _PState("word", word=st.invert(s.word),
                       slots=(s.slots[1], s.slots[0]))
    if s.kind == "side":
        return _PState("side", side_arc=s.side_arc,
                       side_ends=(s.side_ends[1], s.side_ends[0]))
    return s


def _fan_word_state(T: Triangulation, alg: JacobianAlgebra, m: int,
                    lo: int, hi: int, ascending: bool) -> _PState:
    """Curve crossing the fan arcs at marked point ``m`` between fan positions
    ``lo..hi`` inclusive; ascending means first crossing at position ``lo``."""
    fan = T.fans[m]
    idxs = list(range(lo, hi + 1))
    if not ascending:
        idxs.reverse()
    letters: list[int] = []
    for i, j in zip(idxs, idxs[1:]):
        k = min(i, j)
        t, c = fan.sectors[k]
        aid = 3 * t + c + 1
        letters.append(-aid if ascending else aid)
    verts = [fan.ends[i][0] for i in idxs]
    w = st.make_word(tuple(letters), verts[0])
    # start slot: the triangle on the far side of the first crossed arc
    if ascending:
        t0, c0 = fan.sectors[lo - 1]
        start = (t0, (c0 + 1) % 3)     # corner opposite the incoming side
        t1, c1 = fan.sectors[hi]
        end_ = (t1, (c1 + 2) % 3)      # corner opposite the outgoing side
    else:
        t0, c0 = fan.sectors[hi]
        start = (t0, (c0 + 2) % 3)
        t1, c1 = fan.sectors[lo - 1]
        end_ = (t1, (c1 + 1) % 3)
    return _PState("word", word=w, slots=(start, end_))


def _resolved_side_state(T: Triangulation, t: int, pos: int,
                         start_at_tail: bool) -> _PState:
    side = T.triangles[t].sides[pos]
    ends = (side.tail, side.head) if start_at_tail else (side.head, side.tail)
    return _PState("side", side_arc=side.arc, side_ends=ends)


def _side_pivot_start_cw(T: Triangulation, alg: JacobianAlgebra,
                         s: _PState) -> _PState:
    a_end = s.side_ends[0]
    m = T.end_class[a_end]
    fan = T.fans[m]
    j = T.fan_position(m, a_end)
    if j == 0:
        return _PState("nothing")           # sliding along the boundary segment
    if j == 1:
        t, c = fan.sectors[0]
        return _resolved_side_state(T, t, (c + 1) % 3, start_at_tail=True)
    return _fan_word_state(T, alg, m, 1, j - 1, ascending=True)


def _side_pivot_start_ccw(T: Triangulation, alg: JacobianAlgebra,
                          s: _PState) -> _PState:
    a_end = s.side_ends[0]
    m = T.end_class[a_end]
    fan = T.fans[m]
    j = T.fan_position(m, a_end)
    L = len(fan.sectors)
    if j == L:
        return _PState("nothing")
    if j == L - 1:
        t, c = fan.sectors[L - 1]
        return _resolved_side_state(T, t, (c + 1) % 3, start_at_tail=False)
    return _fan_word_state(T, alg, m, j + 1, L - 1, ascending=False)


def _shrunk_state(T: Triangulation, alg: JacobianAlgebra, neww: StringWord,
                  end_slot: Slot) -> _PState:
    """Repackage a word that lost its start prefix, keeping the far end."""
    if neww.kind == "word":
        return _PState("word", word=neww,
                       slots=(_derived_start_slot(T, alg, neww), end_slot))
    v = neww.vertex
    others = [sl for sl in T.slots_of_arc[v] if sl[0] != end_slot[0]]
    assert len(others) == 1
    t, pos = others[0]
    return _PState("word", word=neww, slots=((t, (pos + 2) % 3), end_slot))


def _word_pivot_start_cw(T: Triangulation, alg: JacobianAlgebra,
                         s: _PState) -> _PState:
    t0, c0 = s.slots[0]
    out_side = T.outgoing_side(t0, c0)
    if not T.arcs[out_side.arc].is_boundary:
        alpha = 3 * t0 + ((c0 + 1) % 3) + 1
        neww = st.add_hook(alg, s.word, "start", forced=alpha)
        return _PState("word", word=neww,
                       slots=(_derived_start_slot(T, alg, neww), s.slots[1]))
    # the swept corner only touches the boundary: crossings are lost instead
    neww = st.ZERO if s.word.kind == "trivial" \
        else st.delete_cohook(alg, s.word, "start")
    if not neww.is_zero:
        return _shrunk_state(T, alg, neww, s.slots[1])
    te, ce = s.slots[1]
    return _resolved_side_state(T, te, (ce + 2) % 3, start_at_tail=True)


def _word_pivot_start_ccw(T: Triangulation, alg: JacobianAlgebra,
                          s: _PState) -> _PState:
    t0, c0 = s.slots[0]
    in_side = T.incoming_side(t0, c0)
    if not T.arcs[in_side.arc].is_boundary:
        beta = 3 * t0 + ((c0 + 2) % 3) + 1
        neww = st.add_cohook(alg, s.word, "start", forced=beta)
        return _PState("word", word=neww,
                       slots=(_derived_start_slot(T, alg, neww), s.slots[1]))
    neww = st.ZERO if s.word.kind == "trivial" \
        else st.delete_hook(alg, s.word, "start")
    if not neww.is_zero:
        return _shrunk_state(T, alg, neww, s.slots[1])
    te, ce = s.slots[1]
    return _resolved_side_state(T, te, ce, start_at_tail=False)


def _state_pivot(T: Triangulation, alg: JacobianAlgebra, s: _PState,
                 side: str, direction: int) -> _PState:
    if s.kind == "nothing":
        return s
    if side == "end":
        return _invert_state(
            _state_pivot(T, alg, _invert_state(s), "start", direction))
    if s.kind == "side":
        fn = _side_pivot_start_cw if direction < 0 else _side_pivot_start_ccw
        return fn(T, alg, s)
    fn = _word_pivot_start_cw if direction < 0 else _word_pivot_start_ccw
    return fn(T, alg, s)


# -- public pivots --------------------------------------------------------------

def pivot_start(T: Triangulation, alg: JacobianAlgebra, x: ObjectC) -> ObjectC:
    """Move the start point one marked point clockwise."""
    if x.kind in ("zero", "band"):
        return x
    return _collapse(T, _state_pivot(T, alg, _state_of(T, x), "start", -1))


def pivot_end(T: Triangulation, alg: JacobianAlgebra, x: ObjectC) -> ObjectC:
    if x.kind in ("zero", "band"):
        return x
    return _collapse(T, _state_pivot(T, alg, _state_of(T, x), "end", -1))


def shift(T: Triangulation, alg: JacobianAlgebra, x: ObjectC, k: int) -> ObjectC:
    """Suspension power: k = -1 moves both endpoints clockwise, +1 back."""
    if x.kind in ("zero", "band") or k == 0:
        return x
    s = _state_of(T, x)
    direction = -1 if k < 0 else +1
    for _ in range(abs(k)):
        s = _state_pivot(T, alg, s, "start", direction)
        s = _state_pivot(T, alg, s, "end", direction)
    return _collapse(T, s)


@dataclass(frozen=True)
class ARTriangle:
    source: ObjectC
    middle: tuple[ObjectC, ...]
    target: ObjectC


def ar_triangle(T: Triangulation, alg: JacobianAlgebra, x: ObjectC) -> ARTriangle:
    if x.is_zero:
        raise ZeroObject("the zero object has no almost-split triangle")
    if x.kind == "band":
        mids = [ObjectC("band", tkey=x.tkey, band=x.band, n=x.n + 1, lam=x.lam)]
        if x.n > 1:
            mids.append(ObjectC("band", tkey=x.tkey, band=x.band, n=x.n - 1,
                                lam=x.lam))
        return ARTriangle(source=x, middle=tuple(mids), target=x)
    m1 = pivot_start(T, alg, x)
    m2 = pivot_end(T, alg, x)
    tgt = shift(T, alg, x, -1)
    middle = tuple(m for m in (m1, m2) if not m.is_zero)
    return ARTriangle(source=x, middle=middle, target=tgt)


# -- equality and canonical encodings -------------------------------------------

def object_key(x: ObjectC) -> tuple:
    if x.kind == "zero":
        return ("zero",)
    if x.kind == "arc":
        return ("arc", x.arc)
    if x.kind == "string":
        return ("string", st.encode(st.canonical_form(x.word)))
    return ("band", x.band.letters, x.n, str(x.lam))


def object_equal(x: ObjectC, y: ObjectC) -> bool:
    if x.tkey and y.tkey and x.tkey != y.tkey:
        raise MixedTriangulations("objects live over different triangulations")
    return object_key(x) == object_key(y)


def object_module(alg: JacobianAlgebra, x: ObjectC) -> Module:
    if x.kind == "string":
        return string_module(alg, x.word)
    if x.kind == "band":
        return band_module(alg, x.band, x.n, x.lam)
    return zero_module(alg)


# -- component classification ----------------------------------------------------

@dataclass(frozen=True)
class Classification:
    component: str                     # 'BoundaryTube' | 'HomogeneousTube' | 'TwoMiddleTermComponent'
    boundary: int | None = None
    rank: int | None = None
    position: tuple[int, int] | None = None    # (boundary arc id, pivot count)


def boundary_segment_state(T: Triangulation, arc: int) -> _PState:
    side = T._side_at(T.slots_of_arc[arc][0])
    return _PState("side", side_arc=arc, side_ends=(side.tail, side.head))


def boundary_orbit(T: Triangulation, alg: JacobianAlgebra, arc: int, count: int):
    """Objects obtained from a boundary segment by iterated end pivots."""
    s = boundary_segment_state(T, arc)
    out = []
    for _ in range(count):
        s = _state_pivot(T, alg, s, "end", -1)
        if s.kind == "nothing":
            break
        out.append(_collapse(T, s))
    return out


def component_classify(T: Triangulation, alg: JacobianAlgebra,
                       x: ObjectC) -> Classification:
    if x.is_zero:
        raise ZeroObject("zero object has no component")
    if x.kind == "band":
        return Classification("HomogeneousTube")
    bound = (len(x.word.letters) + 1 if x.kind == "string" else 1)
    bound = (bound + 1) * (T.n_internal + 1)
    for arc in T.boundary_arcs:
        for j, y in enumerate(boundary_orbit(T, alg, arc, bound), start=1):
            if not y.is_zero and object_equal(x, y):
                side = T._side_at(T.slots_of_arc[arc][0])
                cyc = T.cycle_of_class[T.end_class[side.tail]]
                return Classification(
                    "BoundaryTube", boundary=cyc,
                    rank=len(T.boundary_cycles[cyc]), position=(arc, j))
    return Classification("TwoMiddleTermComponent")


# -- literals ---------------------------------------------------------------------

def format_object(T: Triangulation, x: ObjectC) -> str:
    if x.kind == "zero":
        return "zero"
    if x.kind == "arc":
        return f"arc:{x.arc}"
    if x.kind == "band":
        body = ",".join(str(l) for l in x.band.letters)
        return f"band:{body};n={x.n};l={x.lam}"
    ms = endpoint_classes(T, x)
    suffix = f"@(m{ms[0]},m{ms[1]})"
    if x.word.kind == "trivial":
        return f"triv:{x.word.vertex}{suffix}"
    return "w:" + ",".join(str(l) for l in x.word.letters) + suffix


def parse_object(T: Triangulation, alg: JacobianAlgebra, text: str) -> ObjectC:
    text = text.strip()
    if text == "zero":
        return zero_obj(T)
    if ":" not in text:
        raise InvalidLiteral(f"bad object literal {text!r}")
    head, body = text.split(":", 1)
    if head == "arc":
        return arc_obj(T, int(body))
    if head == "band":
        parts = body.split(";")
        letters = tuple(int(x) for x in parts[0].split(","))
        n = 1
        lam = Fraction(1)
        for p in parts[1:]:
            k, _, v = p.partition("=")
            if k == "n":
                n = int(v)
            elif k == "l":
                lam = Fraction(v)
            else:
                raise InvalidLiteral(f"unknown band attribute {k!r}")
        return band_obj(T, alg, Band(letters), n, lam)
    if head in ("w", "triv"):
        marks = None
        if "@" in body:
            body, _, mk = body.partition("@")
            mk = mk.strip()
            if not (mk.startswith("(") and mk.endswith(")")):
                raise InvalidLiteral("endpoint annotation must look like @(m0,m1)")
            names = [s.strip() for s in mk[1:-1].split(",")]
            marks = tuple(T.marked_index(nm) for nm in names)
        if head == "triv":
            w = st.trivial(int(body))
        else:
            try:
                w = st.word(tuple(int(x) for x in body.split(",")))
            except ValueError as exc:
                raise InvalidLiteral(f"bad letters in {text!r}") from exc
        obj = string_obj(T, alg, w)
        if marks is not None and w.kind == "trivial":
            for cand in (obj,
                         string_obj(T, alg, w, slots=(obj.slots[1], obj.slots[0]))):
                if endpoint_classes(T, cand) == marks:
                    return cand
            raise InvalidLiteral("endpoints do not match this word")
        if marks is not None and endpoint_classes(T, obj) != marks:
            if endpoint_classes(T, obj) == (marks[1], marks[0]):
                inv = st.invert(w)
                return string_obj(T, alg, inv)
            raise InvalidLiteral("endpoints do not match this word")
        return obj
    raise InvalidLiteral(f"unknown object kind {head!r}")


# -- enumeration -------------------------------------------------------------------

def enumerate_objects(T: Triangulation, alg: JacobianAlgebra,
                      max_len: int) -> dict:
    """All nonzero string objects with words of length <= max_len, the arcs of
    the triangulation, and the primitive cyclic words of length <= max_len."""
    strs = [string_obj(T, alg, w) for w in st.enumerate_strings(alg, max_len)]
    arcs = [arc_obj(T, a) for a in T.internal_arcs]
    bands = st.enumerate_bands(alg, max_len)
    return {"arcs": arcs, "strings": strs, "bands": bands}


def ar_fragment_dot(T: Triangulation, alg: JacobianAlgebra, x: ObjectC,
                    radius: int = 2) -> str:
    """DOT text of the mesh fragment around an object: nodes are objects,
    edges the irreducible maps read off the almost-split triangles."""
    seen: dict[tuple, ObjectC] = {}
    edges: set[tuple[str, str]] = set()
    frontier = [x]
    seen[object_key(x)] = x
    for _ in range(radius):
        nxt = []
        for y in frontier:
            if y.is_zero:
                continue
            tri = ar_triangle(T, alg, y)
            for mdl in tri.middle:
                edges.add((format_object(T, y), format_object(T, mdl)))
                edges.add((format_object(T, mdl), format_object(T, tri.target)))
                for z in (mdl, tri.target):
                    k = object_key(z)
                    if k not in seen:
                        seen[k] = z
                        nxt.append(z)
        frontier = nxt
    lines = ["digraph ar_fragment {"]
    for k, obj in sorted(seen.items()):
        lines.append(f'  "{format_object(T, obj)}";')
    for a, b in sorted(edges):
        lines.append(f'  "{a}" -> "{b}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
