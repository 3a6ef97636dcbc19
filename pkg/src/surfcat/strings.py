"""Walk combinatorics over a gentle algebra: strings, bands, hooks, cohooks
and module-level almost-split sequences.

A letter is a signed arrow id: ``+a`` traverses the arrow forwards, ``-a``
backwards.  A word stores its letters in walk order, first step first; the
word composes right-to-left, so "appending at the start" of the composition
means prepending a letter to the walk.

Trivial words carry no extra decoration.  Where a vertex has two incoming
(or outgoing) arrows the choice of hook arrow at each end is fixed by arrow
id order; geometric callers override it explicitly via ``forced``.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    InjectiveModule,
    InvalidString,
    NotOnPeak,
    OnPeak,
    ProjectiveModule,
    ZeroStringStatus,
)
from .qp import JacobianAlgebra


@dataclass(frozen=True)
class StringWord:
    kind: str                      # 'zero' | 'trivial' | 'word'
    vertex: int | None = None      # trivial only
    letters: tuple[int, ...] = ()

    @property
    def is_zero(self) -> bool:
        return self.kind == "zero"

    def __len__(self) -> int:
        return len(self.letters)


ZERO = StringWord("zero")


def trivial(v: int) -> StringWord:
    return StringWord("trivial", vertex=v)


def word(letters) -> StringWord:
    letters = tuple(letters)
    if not letters:
        raise InvalidString("empty letter list; use trivial(v) or ZERO")
    return StringWord("word", letters=letters)


def make_word(letters, start_vertex: int | None = None) -> StringWord:
    if len(tuple(letters)) == 0:
        return trivial(start_vertex) if start_vertex is not None else ZERO
    return word(letters)


def letter_src(alg: JacobianAlgebra, x: int) -> int:
    a = alg.quiver.arrow(abs(x))
    return a.source if x > 0 else a.target


def letter_dst(alg: JacobianAlgebra, x: int) -> int:
    a = alg.quiver.arrow(abs(x))
    return a.target if x > 0 else a.source


def pair_valid(alg: JacobianAlgebra, x: int, y: int) -> bool:
    """May letter ``y`` follow letter ``x`` on a walk?"""
    if letter_dst(alg, x) != letter_src(alg, y):
        return False
    if y == -x:
        return False
    if x > 0 and y > 0:
        return (x, y) not in alg.relations.forbidden
    if x < 0 and y < 0:
        return (-y, -x) not in alg.relations.forbidden
    return True


def vertices(alg: JacobianAlgebra, w: StringWord) -> tuple[int, ...]:
    if w.is_zero:
        return ()
    if w.kind == "trivial":
        return (w.vertex,)
    vs = [letter_src(alg, w.letters[0])]
    for x in w.letters:
        vs.append(letter_dst(alg, x))
    return tuple(vs)


def start_vertex(alg: JacobianAlgebra, w: StringWord) -> int:
    return vertices(alg, w)[0]


def end_vertex(alg: JacobianAlgebra, w: StringWord) -> int:
    return vertices(alg, w)[-1]


def validate_string(alg: JacobianAlgebra, w: StringWord) -> bool:
    if w.is_zero:
        return True
    if w.kind == "trivial":
        return w.vertex in alg.quiver.vertices
    for x in w.letters:
        alg.quiver.arrow(abs(x))   # raises UnknownArrow
    for x, y in zip(w.letters, w.letters[1:]):
        if not pair_valid(alg, x, y):
            return False
    return True


def invert(w: StringWord) -> StringWord:
    if w.kind != "word":
        return w
    return word(tuple(-x for x in reversed(w.letters)))


def encode(w: StringWord) -> tuple:
    if w.is_zero:
        return ("z",)
    if w.kind == "trivial":
        return ("t", w.vertex)
    return ("w", w.letters)


def canonical_form(w: StringWord) -> StringWord:
    """Smallest representative of {w, w^-1}; idempotent."""
    if w.kind != "word":
        return w
    inv = invert(w)
    return w if encode(w) <= encode(inv) else inv


# -- extension moves ----------------------------------------------------------

def _forward_prepends(alg: JacobianAlgebra, w: StringWord) -> list[int]:
    """Arrows a with walk [+a] ++ w valid (extension into the start)."""
    v = start_vertex(alg, w)
    cands = []
    for a in alg.in_by_vertex[v]:
        if w.kind == "trivial" or pair_valid(alg, a.id, w.letters[0]):
            cands.append(a.id)
    return cands


def _inverse_prepends(alg: JacobianAlgebra, w: StringWord) -> list[int]:
    """Arrows b with walk [-b] ++ w valid."""
    v = start_vertex(alg, w)
    cands = []
    for b in alg.out_by_vertex[v]:
        if w.kind == "trivial" or pair_valid(alg, -b.id, w.letters[0]):
            cands.append(b.id)
    return cands


@dataclass(frozen=True)
class PeakDeepStatus:
    starts_on_peak: bool
    ends_on_peak: bool
    starts_in_deep: bool
    ends_in_deep: bool


def peak_deep_status(alg: JacobianAlgebra, w: StringWord) -> PeakDeepStatus:
    if w.is_zero:
        raise ZeroStringStatus("zero string has no peak/deep status")
    if w.kind == "trivial":
        n_in = len(alg.in_by_vertex[w.vertex])
        n_out = len(alg.out_by_vertex[w.vertex])
        return PeakDeepStatus(
            starts_on_peak=n_in == 0,
            ends_on_peak=n_in <= 1,
            starts_in_deep=n_out == 0,
            ends_in_deep=n_out <= 1,
        )
    inv = invert(w)
    return PeakDeepStatus(
        starts_on_peak=not _forward_prepends(alg, w),
        ends_on_peak=not _forward_prepends(alg, inv),
        starts_in_deep=not _inverse_prepends(alg, w),
        ends_in_deep=not _inverse_prepends(alg, inv),
    )


def _prepend(alg: JacobianAlgebra, w: StringWord, letter: int) -> StringWord:
    if w.kind == "trivial":
        return word((letter,))
    return word((letter,) + w.letters)


def _grow_inverse_prefix(alg: JacobianAlgebra, w: StringWord) -> StringWord:
    """Prepend inverse letters while possible (each step is unique)."""
    while True:
        cands = _inverse_prepends(alg, w)
        if not cands:
            return w
        if len(cands) > 1:
            raise InvalidString("ambiguous inverse extension; algebra not gentle")
        w = _prepend(alg, w, -cands[0])


def _grow_forward_prefix(alg: JacobianAlgebra, w: StringWord) -> StringWord:
    while True:
        cands = _forward_prepends(alg, w)
        if not cands:
            return w
        if len(cands) > 1:
            raise InvalidString("ambiguous forward extension; algebra not gentle")
        w = _prepend(alg, w, cands[0])


def add_hook(alg: JacobianAlgebra, w: StringWord, side: str,
             forced: int | None = None) -> StringWord:
    """Hook at the given end: one arrow into the walk plus the maximal inverse
    run before it."""
    if side == "end":
        return invert(add_hook(alg, invert(w), "start", forced))
    if w.is_zero:
        raise ZeroStringStatus("cannot hook the zero string")
    cands = _forward_prepends(alg, w)
    if forced is not None:
        if forced not in cands:
            raise OnPeak(f"arrow {forced} cannot hook this end")
        alpha = forced
    else:
        if not cands:
            raise OnPeak("string starts on a peak; no hook")
        alpha = cands[0]
    return _grow_inverse_prefix(alg, _prepend(alg, w, alpha))


def _drop_start_run(alg: JacobianAlgebra, w: StringWord, run_sign: int) -> StringWord:
    """Drop the maximal initial run of letters with the given sign plus the
    one letter after it; zero when the whole walk has that sign."""
    if w.kind == "trivial":
        return ZERO
    for i, x in enumerate(w.letters):
        if (x > 0) != (run_sign > 0):
            rest = w.letters[i + 1:]
            if rest:
                return word(rest)
            return trivial(letter_dst(alg, x))
    return ZERO


def delete_cohook(alg: JacobianAlgebra, w: StringWord, side: str) -> StringWord:
    """Remove the maximal direct run and the following inverse letter at the
    given end; the zero string results from a direct (resp. inverse) string."""
    if w.is_zero:
        raise ZeroStringStatus("cannot cohook the zero string")
    st = peak_deep_status(alg, w)
    on_peak = st.starts_on_peak if side == "start" else st.ends_on_peak
    if not on_peak:
        raise NotOnPeak(f"string is not on a peak at the {side}")
    if side == "end":
        return invert(_drop_start_run(alg, invert(w), +1))
    return _drop_start_run(alg, w, +1)


def delete_hook(alg: JacobianAlgebra, w: StringWord, side: str) -> StringWord:
    """Inverse of add_hook: remove the maximal inverse run and the following
    forward letter; zero results from an inverse string."""
    if w.is_zero:
        raise ZeroStringStatus("cannot unhook the zero string")
    st = peak_deep_status(alg, w)
    in_deep = st.starts_in_deep if side == "start" else st.ends_in_deep
    if not in_deep:
        raise OnPeak(f"string is not in a deep at the {side}")
    if side == "end":
        return invert(_drop_start_run(alg, invert(w), -1))
    return _drop_start_run(alg, w, -1)


def add_cohook(alg: JacobianAlgebra, w: StringWord, side: str,
               forced: int | None = None) -> StringWord:
    """Inverse of delete_cohook: one inverse letter plus the maximal direct
    run before it."""
    if side == "end":
        return invert(add_cohook(alg, invert(w), "start", forced))
    if w.is_zero:
        raise ZeroStringStatus("cannot cohook the zero string")
    cands = _inverse_prepends(alg, w)
    if forced is not None:
        if forced not in cands:
            raise NotOnPeak(f"arrow {forced} cannot extend this end")
        beta = forced
    else:
        if not cands:
            raise NotOnPeak("string starts in a deep; no cohook to add")
        beta = cands[0]
    return _grow_forward_prefix(alg, _prepend(alg, w, -beta))


def _trivial_hook_arrow(alg: JacobianAlgebra, w: StringWord, side: str) -> int | None:
    """Arrow-id convention for hooking a trivial word: the start takes the
    first incoming arrow, the end the last."""
    if w.kind != "trivial":
        return None
    arrows = alg.in_by_vertex[w.vertex]
    return arrows[0].id if side == "start" else arrows[-1].id


def _trivial_cohook_arrow(alg: JacobianAlgebra, w: StringWord, side: str) -> int | None:
    if w.kind != "trivial":
        return None
    arrows = alg.out_by_vertex[w.vertex]
    return arrows[0].id if side == "start" else arrows[-1].id


# -- projectives, injectives, AR-sequences -------------------------------------

def _no_valley(w: StringWord) -> bool:
    """True when no inverse letter is followed by a forward letter."""
    return all(not (x < 0 and y > 0) for x, y in zip(w.letters, w.letters[1:]))


def _no_summit(w: StringWord) -> bool:
    return all(not (x > 0 and y < 0) for x, y in zip(w.letters, w.letters[1:]))


def is_injective_string(alg: JacobianAlgebra, w: StringWord) -> bool:
    if w.is_zero:
        return False
    st = peak_deep_status(alg, w)
    return st.starts_on_peak and st.ends_on_peak and _no_valley(w)


def is_projective_string(alg: JacobianAlgebra, w: StringWord) -> bool:
    if w.is_zero:
        return False
    st = peak_deep_status(alg, w)
    return st.starts_in_deep and st.ends_in_deep and _no_summit(w)


def _max_forward_path(alg: JacobianAlgebra, first: int) -> list[int]:
    path = [first]
    while True:
        nxt = [b.id for b in alg.out_by_vertex[letter_dst(alg, path[-1])]
               if pair_valid(alg, path[-1], b.id)]
        if not nxt:
            return path
        assert len(nxt) == 1
        path.append(nxt[0])


def projective_string(alg: JacobianAlgebra, v: int) -> StringWord:
    """The string whose module is the indecomposable projective at ``v``."""
    outs = alg.out_by_vertex[v]
    paths = [_max_forward_path(alg, a.id) for a in outs]
    if not paths:
        return trivial(v)
    if len(paths) == 1:
        return word(tuple(-x for x in reversed(paths[0])))
    return word(tuple(-x for x in reversed(paths[0])) + tuple(paths[1]))


def _max_backward_path(alg: JacobianAlgebra, last: int) -> list[int]:
    path = [last]
    while True:
        prev = [b.id for b in alg.in_by_vertex[letter_src(alg, path[0])]
                if pair_valid(alg, b.id, path[0])]
        if not prev:
            return path
        assert len(prev) == 1
        path.insert(0, prev[0])


def injective_string(alg: JacobianAlgebra, v: int) -> StringWord:
    """The string whose module is the indecomposable injective at ``v``."""
    ins = alg.in_by_vertex[v]
    paths = [_max_backward_path(alg, a.id) for a in ins]
    if not paths:
        return trivial(v)
    if len(paths) == 1:
        return word(tuple(paths[0]))
    return word(tuple(paths[0]) + tuple(-x for x in reversed(paths[1])))


@dataclass(frozen=True)
class HookTriple:
    u: StringWord
    v: StringWord
    n: StringWord


def hook_triple(alg: JacobianAlgebra, arrow_id: int) -> HookTriple:
    """The canonical string through one arrow, starting in a deep and ending
    on a peak, split as inverse run / arrow / inverse run."""
    alg.quiver.arrow(arrow_id)
    core = word((arrow_id,))
    with_v = _grow_inverse_prefix(alg, core)
    v_len = len(with_v) - 1
    full = invert(_grow_forward_prefix(alg, invert(with_v)))
    u_len = len(full) - v_len - 1
    u = make_word(full.letters[v_len + 1:],
                  letter_dst(alg, arrow_id))
    v = make_word(full.letters[:v_len],
                  letter_src(alg, arrow_id))
    return HookTriple(u=u, v=v, n=full)


@dataclass(frozen=True)
class ARSequence:
    left: StringWord
    middle: tuple[StringWord, StringWord]
    right: StringWord

    @property
    def middle_nonzero(self) -> tuple[StringWord, ...]:
        return tuple(m for m in self.middle if not m.is_zero)


def _cw_action(alg: JacobianAlgebra, w: StringWord, side: str):
    """The clockwise move at this end: op kind plus hook arrow."""
    st_ = peak_deep_status(alg, w)
    on_peak = st_.starts_on_peak if side == "start" else st_.ends_on_peak
    if on_peak:
        return ("cohook", None)
    forced = _trivial_hook_arrow(alg, w, side)
    if forced is None:
        cands = _forward_prepends(alg, w if side == "start" else invert(w))
        forced = cands[0]
    return ("hook", forced)


def _apply_cw(alg: JacobianAlgebra, w: StringWord, side: str, action) -> StringWord:
    """Replay a recorded move on a (possibly shortened) word: the hook keeps
    its arrow, so composites stay unambiguous on trivial intermediates."""
    kind, arrow = action
    if w.is_zero:
        return ZERO
    if kind == "hook":
        return add_hook(alg, w, side, forced=arrow)
    if w.kind == "trivial":
        return ZERO
    return delete_cohook(alg, w, side)


def _ccw_action(alg: JacobianAlgebra, w: StringWord, side: str):
    st_ = peak_deep_status(alg, w)
    in_deep = st_.starts_in_deep if side == "start" else st_.ends_in_deep
    if in_deep:
        return ("unhook", None)
    forced = _trivial_cohook_arrow(alg, w, side)
    if forced is None:
        cands = _inverse_prepends(alg, w if side == "start" else invert(w))
        forced = cands[0]
    return ("cohook", forced)


def _apply_ccw(alg: JacobianAlgebra, w: StringWord, side: str, action) -> StringWord:
    kind, arrow = action
    if w.is_zero:
        return ZERO
    if kind == "cohook":
        return add_cohook(alg, w, side, forced=arrow)
    if w.kind == "trivial":
        return ZERO
    return delete_hook(alg, w, side)


def ar_sequence(alg: JacobianAlgebra, w: StringWord) -> ARSequence:
    """Almost-split sequence starting at the module of ``w``."""
    if w.is_zero:
        raise ZeroStringStatus("no almost-split sequence at the zero module")
    if is_injective_string(alg, w):
        raise InjectiveModule("module is injective; no sequence starts here")
    a1 = _cw_action(alg, w, "start")
    a2 = _cw_action(alg, w, "end")
    m1 = _apply_cw(alg, w, "start", a1)
    m2 = _apply_cw(alg, w, "end", a2)
    if not m1.is_zero:
        right = _apply_cw(alg, m1, "end", a2)
    else:
        right = _apply_cw(alg, m2, "start", a1)
    return ARSequence(left=w, middle=(m1, m2), right=right)


def tau_minus(alg: JacobianAlgebra, w: StringWord) -> StringWord:
    """Word of the inverse translate: both ends moved clockwise."""
    if is_injective_string(alg, w):
        raise InjectiveModule("inverse translate undefined on injectives")
    return ar_sequence(alg, w).right


def tau_plus(alg: JacobianAlgebra, w: StringWord) -> StringWord:
    """Word of the translate: both ends moved counterclockwise."""
    if w.is_zero:
        raise ZeroStringStatus("no translate of the zero string")
    if is_projective_string(alg, w):
        raise ProjectiveModule("translate undefined on projectives")
    a1 = _ccw_action(alg, w, "start")
    a2 = _ccw_action(alg, w, "end")
    m1 = _apply_ccw(alg, w, "start", a1)
    if not m1.is_zero:
        return _apply_ccw(alg, m1, "end", a2)
    m2 = _apply_ccw(alg, w, "end", a2)
    return _apply_ccw(alg, m2, "start", a1)


def tau_j(alg: JacobianAlgebra, w: StringWord, direction: int) -> StringWord:
    if direction == -1:
        return tau_minus(alg, w)
    if direction == +1:
        return tau_plus(alg, w)
    raise ValueError("direction must be +1 or -1")


# -- bands ---------------------------------------------------------------------

@dataclass(frozen=True)
class Band:
    letters: tuple[int, ...]


def validate_band(alg: JacobianAlgebra, b: Band) -> bool:
    ls = b.letters
    if len(ls) < 2:
        return False
    for x in ls:
        alg.quiver.arrow(abs(x))
    for i in range(len(ls)):
        if not pair_valid(alg, ls[i], ls[(i + 1) % len(ls)]):
            return False
    if all(x > 0 for x in ls) or all(x < 0 for x in ls):
        return False     # a relation-free cycle would not define a module
    for d in range(1, len(ls)):
        if len(ls) % d == 0 and ls == ls[d:] + ls[:d]:
            return False   # proper power of a shorter cyclic word
    return True


def band_rotations(b: Band):
    ls = b.letters
    for i in range(len(ls)):
        yield Band(ls[i:] + ls[:i])


def invert_band(b: Band) -> Band:
    return Band(tuple(-x for x in reversed(b.letters)))


def canonical_band(b: Band) -> Band:
    reps = [r.letters for r in band_rotations(b)]
    reps += [r.letters for r in band_rotations(invert_band(b))]
    return Band(min(reps))


def band_vertices(alg: JacobianAlgebra, b: Band) -> tuple[int, ...]:
    return tuple(letter_src(alg, x) for x in b.letters)


# -- enumeration ---------------------------------------------------------------

def enumerate_strings(alg: JacobianAlgebra, max_len: int) -> list[StringWord]:
    """All canonical strings of length at most ``max_len``, trivials included."""
    seen: dict[tuple, StringWord] = {}
    for v in alg.quiver.vertices:
        t = trivial(v)
        seen[encode(t)] = t
    frontier: list[tuple[int, ...]] = []
    for a in alg.quiver.arrows:
        for x in (a.id, -a.id):
            frontier.append((x,))
    while frontier:
        nxt = []
        for ls in frontier:
            w = word(ls)
            c = canonical_form(w)
            if encode(c) not in seen:
                seen[encode(c)] = c
            if len(ls) < max_len:
                v = letter_dst(alg, ls[-1])
                for a in alg.quiver.arrows:
                    for y in (a.id, -a.id):
                        if pair_valid(alg, ls[-1], y):
                            nxt.append(ls + (y,))
        frontier = nxt
    return sorted(seen.values(), key=encode)


def enumerate_bands(alg: JacobianAlgebra, max_len: int) -> list[Band]:
    """All canonical primitive cyclic strings of length at most ``max_len``."""
    found: dict[tuple, Band] = {}
    verts = {v: i for i, v in enumerate(alg.quiver.vertices)}

    def grow(ls: tuple[int, ...]) -> None:
        if len(ls) >= 2 and letter_dst(alg, ls[-1]) == letter_src(alg, ls[0]):
            b = Band(ls)
            if validate_band(alg, b):
                c = canonical_band(b)
                found.setdefault(c.letters, c)
        if len(ls) >= max_len:
            return
        for a in alg.quiver.arrows:
            for y in (a.id, -a.id):
                if pair_valid(alg, ls[-1], y):
                    grow(ls + (y,))

    for a in alg.quiver.arrows:
        for x in (a.id, -a.id):
            grow((x,))
    return sorted(found.values(), key=lambda b: b.letters)
