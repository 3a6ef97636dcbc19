from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as hs

from surfcat import fixtures as fx
from surfcat import modules as mo
from surfcat import strings as st
from surfcat.errors import InjectiveModule, OnPeak
from surfcat.qp import algebra_of


def dims(alg, w):
    return mo.string_module(alg, w).dim_vector()


def test_designated_curve_is_valid(annulus_alg):
    w = fx.example_curve_main(annulus_alg)
    assert st.validate_string(annulus_alg, w)
    assert st.vertices(annulus_alg, w) == (3, 4, 2, 1, 3, 4)
    assert dims(annulus_alg, w) == (1, 1, 2, 2, 0)


def test_backtrack_invalid(annulus_alg):
    a = annulus_alg.quiver.arrows[0].id
    assert not st.validate_string(annulus_alg, st.word((a, -a)))


def test_forbidden_pair_invalid(annulus_alg):
    first, then = sorted(annulus_alg.relations.forbidden)[0]
    w = st.word((first, then))
    assert not st.validate_string(annulus_alg, w)


def test_validate_symmetric_under_inverse(annulus_alg):
    for w in st.enumerate_strings(annulus_alg, 6):
        assert st.validate_string(annulus_alg, st.invert(w))


def test_canonical_form_idempotent_and_class_constant(annulus_alg):
    for w in st.enumerate_strings(annulus_alg, 6):
        c = st.canonical_form(w)
        assert st.canonical_form(c) == c
        assert st.canonical_form(st.invert(w)) == c


@settings(max_examples=60, deadline=None)
@given(hs.data())
def test_canonical_form_property(annulus_alg, data):
    words = [w for w in st.enumerate_strings(annulus_alg, 7)
             if w.kind == "word"]
    w = data.draw(hs.sampled_from(words))
    assert st.canonical_form(w) in (w, st.invert(w))


def _status_bruteforce(alg, w):
    """Peak/deep flags by trying every arrow at each end (enumeration oracle)."""
    inv = st.invert(w)

    def can_extend(u, letter_sign):
        out = []
        for a in alg.quiver.arrows:
            cand = a.id * letter_sign
            if st.letter_dst(alg, cand) != st.start_vertex(alg, u):
                continue
            if u.kind == "trivial" or st.pair_valid(alg, cand, u.letters[0]):
                out.append(cand)
        return out

    return st.PeakDeepStatus(
        starts_on_peak=not can_extend(w, +1),
        ends_on_peak=not can_extend(inv, +1),
        starts_in_deep=not can_extend(w, -1),
        ends_in_deep=not can_extend(inv, -1),
    )


def test_peak_deep_matches_bruteforce_on_words(annulus_alg):
    for w in st.enumerate_strings(annulus_alg, 6):
        if w.kind != "word":
            continue
        assert st.peak_deep_status(annulus_alg, w) == \
            _status_bruteforce(annulus_alg, w)


def test_hook_triple_defining_flags(annulus_alg):
    for a in annulus_alg.quiver.arrows:
        triple = st.hook_triple(annulus_alg, a.id)
        status = st.peak_deep_status(annulus_alg, triple.n)
        assert status.starts_in_deep and status.ends_on_peak
        assert len(triple.n) == len(triple.u) + len(triple.v) + 1


def test_hook_triple_unique_by_enumeration(annulus_alg):
    """Exactly one string per arrow splits as inverse-run / arrow /
    inverse-run while starting in a deep and ending on a peak (search over
    all strings of length <= 10)."""
    alg = annulus_alg
    words = st.enumerate_strings(alg, 10)
    for a in alg.quiver.arrows:
        triple = st.hook_triple(alg, a.id)
        hits = []
        for w in words:
            if w.kind != "word":
                continue
            for orient in (w, st.invert(w)):
                positives = [x for x in orient.letters if x > 0]
                if positives != [a.id]:
                    continue
                status = st.peak_deep_status(alg, orient)
                if status.starts_in_deep and status.ends_on_peak:
                    hits.append(orient)
        assert len(hits) == 1
        assert st.encode(hits[0]) == st.encode(triple.n)


def test_hook_addition_and_deletion_invert(annulus_alg):
    """add_hook and delete_hook are mutually inverse at each end, as are the
    two cohook moves (the patterns they add and remove coincide)."""
    alg = annulus_alg
    count = 0
    for w in st.enumerate_strings(alg, 6):
        for side in ("start", "end"):
            try:
                h = st.add_hook(alg, w, side)
            except OnPeak:
                continue
            back = st.delete_hook(alg, h, side)
            assert st.encode(back) == st.encode(w), (st.encode(w), side)
            count += 1
    assert count > 20
    for w in st.enumerate_strings(alg, 6):
        if w.kind != "word":
            continue
        for side in ("start", "end"):
            st_ = st.peak_deep_status(alg, w)
            on_peak = st_.starts_on_peak if side == "start" else st_.ends_on_peak
            if not on_peak:
                continue
            c = st.delete_cohook(alg, w, side)
            if c.is_zero:
                continue
            if side == "start":
                beta = abs(next(x for x in w.letters if x < 0))
            else:
                beta = abs(next(x for x in reversed(w.letters) if x > 0))
            restored = st.add_cohook(alg, c, side, forced=beta)
            assert st.encode(restored) == st.encode(w), (st.encode(w), side)


def test_cohook_of_direct_string_is_zero(annulus_alg):
    alg = annulus_alg
    direct = []
    for c in st.enumerate_strings(alg, 6):
        for w in (c, st.invert(c)):
            if w.kind == "word" and all(x > 0 for x in w.letters) \
                    and st.peak_deep_status(alg, w).starts_on_peak:
                direct.append(w)
    assert direct
    for w in direct:
        assert st.delete_cohook(alg, w, "start").is_zero


def test_hook_dimension_increment(annulus_alg):
    alg = annulus_alg
    for w in st.enumerate_strings(alg, 6):
        try:
            h = st.add_hook(alg, w, "start")
        except OnPeak:
            continue
        alpha = h.letters[-len(w.letters) - 1] if w.kind == "word" else h.letters[-1]
        triple = st.hook_triple(alg, abs(alpha))
        assert sum(mo.string_module(alg, h).dim_vector()) \
            - sum(mo.string_module(alg, w).dim_vector()) == len(triple.v) + 1


def test_example_ar_sequence_dims(annulus_alg):
    alg = annulus_alg
    w = fx.example_curve_main(alg)
    ar = st.ar_sequence(alg, w)
    got = sorted(dims(alg, m) for m in ar.middle_nonzero)
    assert got == sorted([(2, 2, 2, 3, 0), (1, 2, 2, 2, 0)])
    assert dims(alg, ar.right) == (2, 3, 2, 3, 0)
    total_mid = sum(sum(d) for d in got)
    assert total_mid == sum(dims(alg, w)) + sum(dims(alg, ar.right))


def test_single_middle_sequences_hit_hook_strings(annulus_alg):
    """Sequences with one middle summand have the canonical arrow string as
    that summand."""
    alg = annulus_alg
    n_words = {st.encode(st.canonical_form(st.hook_triple(alg, a.id).n))
               for a in alg.quiver.arrows}
    singles = {}
    for w in st.enumerate_strings(alg, 8):
        if st.is_injective_string(alg, w):
            continue
        ar = st.ar_sequence(alg, w)
        mids = ar.middle_nonzero
        if len(mids) == 1:
            singles[st.encode(st.canonical_form(w))] = \
                st.encode(st.canonical_form(mids[0]))
    assert singles
    assert set(singles.values()) <= n_words


def test_ar_rejects_injective(annulus_alg):
    alg = annulus_alg
    inj = [w for w in st.enumerate_strings(alg, 8)
           if st.is_injective_string(alg, w)]
    assert inj
    for w in inj:
        with pytest.raises(InjectiveModule):
            st.ar_sequence(alg, w)


def test_projective_strings(annulus_alg):
    alg = annulus_alg
    for v in alg.quiver.vertices:
        p = st.projective_string(alg, v)
        assert st.is_projective_string(alg, p)
        m = mo.string_module(alg, p)
        assert m.dims[v] >= 1
        tops = {u: m.dims[u] - r for u, r in mo._radical_dims(m).items()}
        assert tops == {u: (1 if u == v else 0) for u in alg.quiver.vertices}


def test_injective_strings(annulus_alg):
    alg = annulus_alg
    for v in alg.quiver.vertices:
        i = st.injective_string(alg, v)
        assert st.is_injective_string(alg, i)
        assert mo.string_module(alg, i).dims[v] >= 1


def test_sink_simple_projective():
    alg = algebra_of(fx.hexagon())
    sinks = [v for v in alg.quiver.vertices if not alg.out_by_vertex[v]]
    assert sinks
    for v in sinks:
        assert st.projective_string(alg, v) == st.trivial(v)


def test_band_validation(annulus_alg):
    alg = annulus_alg
    b = fx.example_core_band(alg)
    assert st.validate_band(alg, b)
    doubled = st.Band(b.letters + b.letters)
    assert not st.validate_band(alg, doubled)
    assert st.canonical_band(st.Band(b.letters[2:] + b.letters[:2])) == \
        st.canonical_band(b)
    assert st.canonical_band(st.invert_band(b)) == st.canonical_band(b)


def test_band_enumeration_minimal_class(annulus_alg):
    bands = st.enumerate_bands(annulus_alg, 8)
    shortest = min(len(b.letters) for b in bands)
    assert sum(1 for b in bands if len(b.letters) == shortest) == 1


def test_tau_round_trip(annulus_alg):
    alg = annulus_alg
    for w in st.enumerate_strings(alg, 8):
        if st.is_injective_string(alg, w):
            continue
        t = st.tau_minus(alg, w)
        if t.is_zero or st.is_projective_string(alg, t):
            continue
        back = st.tau_plus(alg, t)
        assert st.encode(st.canonical_form(back)) == \
            st.encode(st.canonical_form(w))


def test_status_rejects_zero(annulus_alg):
    from surfcat.errors import ZeroStringStatus
    with pytest.raises(ZeroStringStatus):
        st.peak_deep_status(annulus_alg, st.ZERO)


def test_cohook_requires_peak(annulus_alg):
    from surfcat.errors import NotOnPeak
    alg = annulus_alg
    off_peak = [w for w in st.enumerate_strings(alg, 4)
                if w.kind == "word"
                and not st.peak_deep_status(alg, w).starts_on_peak]
    assert off_peak
    with pytest.raises(NotOnPeak):
        st.delete_cohook(alg, off_peak[0], "start")
