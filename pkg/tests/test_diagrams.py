import random

import pytest

from skeinlab import diagrams as D
from skeinlab import textio as T
from skeinlab.diagrams import (ANNULUS, BLACKBOARD, CAP, CUP, Event, GREEN,
                               RADIAL, RED, Word, XING)

from conftest import random_word


def ccw_unknot():
    return Word(events=(Event(CUP, 1, ">"), Event(CAP, 1, "<")))


def test_validate_examples():
    D.validate(ccw_unknot())
    assert "nonempty final profile" in D.diagnose(Word(events=(Event(CUP, 1, ">"),)))
    bad = Word(events=(Event(CUP, 1, ">"), Event(CAP, 1, ">")))
    assert "cap orientation mismatch" in D.diagnose(bad)


def test_validate_reports_event_index():
    bad = Word(events=(Event(CUP, 1, ">"), Event(CAP, 1, ">")))
    with pytest.raises(D.DiagramError) as err:
        D.validate(bad)
    assert err.value.index == 1


def test_rotation_of_circles():
    assert D.trace_components(ccw_unknot())[0].rotation == 1
    cw = Word(events=(Event(CUP, 1, "<"), Event(CAP, 1, ">")))
    assert D.trace_components(cw)[0].rotation == -1


def test_annulus_core_bookkeeping():
    core = Word(ANNULUS, RADIAL, ((D.UP, GREEN),), ())
    comp = D.trace_components(core)[0]
    assert comp.winding == 1
    assert D.rotation_number(comp, RADIAL) == 0
    assert D.rotation_number(comp, BLACKBOARD) == 1
    plane_comp = D.trace_components(ccw_unknot())[0]
    with pytest.raises(D.DiagramError):
        D.rotation_number(plane_comp, RADIAL)


def test_writhe_examples():
    s1 = T.desugar_braid(2, [1], True)
    assert D.writhe(s1) == 1
    assert len(D.trace_components(s1)) == 1
    assert D.writhe(D.mirror(s1)) == -1
    s13 = T.desugar_braid(2, [1, 1, 1], True)
    # independent count through the sign rule, crossing by crossing
    ana = D.analyze(s13)
    per_crossing = [D.oriented_sign(c.orients[0], c.orients[1], c.tag)
                    for c in ana.crossings]
    assert sum(per_crossing) == 3
    assert D.writhe(s13) == 3


def test_mirror_and_reverse_symmetries():
    rng = random.Random(21)
    for _ in range(25):
        w = random_word(rng)
        comps = D.trace_components(w)
        m = D.mirror(w)
        assert D.writhe(m) == -D.writhe(w)
        assert sorted(c.rotation for c in D.trace_components(m)) == \
            sorted(c.rotation for c in comps)
        r = D.reverse(w)
        assert D.writhe(r) == D.writhe(w)
        assert sorted(c.rotation for c in D.trace_components(r)) == \
            sorted(-c.rotation for c in comps)


def test_subdiagram_examples():
    w = ccw_unknot()
    assert D.subdiagram(w, {GREEN}) == w
    assert D.subdiagram(w, {RED}).events == ()
    nested = Word(events=(Event(CUP, 1, ">", RED), Event(CUP, 2, ">", GREEN),
                          Event(CAP, 2, "<"), Event(CAP, 1, "<")))
    green = D.subdiagram(nested, {GREEN})
    red = D.subdiagram(nested, {RED})
    assert len(D.trace_components(green)) == 1
    assert len(D.trace_components(red)) == 1
    assert D.trace_components(green)[0].rotation == 1


def test_subdiagram_keeps_unmixed_crossings():
    rng = random.Random(22)
    for _ in range(20):
        w = random_word(rng, max_events=12, max_crossings=5)
        # colour components alternately
        ana = D.analyze(w)
        comp_colour = {c.index: GREEN if c.index % 2 == 0 else RED
                       for c in ana.components}
        events = []
        k = 0
        for idx, e in enumerate(w.events):
            if e.kind == CUP:
                slot = len(ana.bottom) + 2 * sum(
                    1 for f in w.events[:idx] if f.kind in (CUP, XING))
                comp = ana.component_of_slot(slot).index
                events.append(Event(CUP, e.pos, e.tag, comp_colour[comp]))
            else:
                events.append(e)
        cw = Word(events=tuple(events))
        ana2 = D.analyze(cw)
        unmixed = sum(1 for c in ana2.crossings if c.colours[0] == c.colours[1])
        g = D.subdiagram(cw, {GREEN})
        r = D.subdiagram(cw, {RED})
        total = len(D.analyze(g).crossings) + len(D.analyze(r).crossings)
        assert total == unmixed


def test_combine_and_power():
    u = ccw_unknot()
    both = D.combine(u, u)
    assert len(D.trace_components(both)) == 2
    core = Word(ANNULUS, BLACKBOARD, ((D.UP, GREEN),), ())
    sq = D.power(core, 2)
    assert sq.profile == ((D.UP, GREEN), (D.UP, GREEN))
    comps = D.trace_components(sq)
    assert [c.winding for c in comps] == [1, 1]


def test_planar_closure_of_core_is_ccw_circle():
    core = Word(ANNULUS, BLACKBOARD, ((D.UP, GREEN),), ())
    closed = D.planar_closure(core)
    assert closed.surface == D.PLANE
    comps = D.trace_components(closed)
    assert len(comps) == 1 and comps[0].rotation == 1


def test_planar_closure_matches_blackboard_rotation():
    rng = random.Random(23)
    for _ in range(15):
        n = rng.randint(2, 4)
        gens = [rng.choice([g for g in range(-(n - 1), n) if g])
                for _ in range(rng.randint(0, 5))]
        open_w = T.desugar_braid(n, gens, False)
        closed = D.planar_closure(open_w)
        lhs = sorted(D.rotation_number(c, BLACKBOARD)
                     for c in D.trace_components(open_w))
        rhs = sorted(c.rotation for c in D.trace_components(closed))
        assert lhs == rhs
        assert D.writhe(closed) == D.writhe(open_w)


def test_normalize_crossings_preserves_invariants():
    rng = random.Random(24)
    for _ in range(25):
        w = random_word(rng)
        nw = D.normalize_crossings(w)
        assert all(c.orients == (D.UP, D.UP) for c in D.analyze(nw).crossings)
        assert D.writhe(nw) == D.writhe(w)
        assert len(D.trace_components(nw)) == len(D.trace_components(w))
        assert sorted(c.rotation for c in D.trace_components(nw)) == \
            sorted(c.rotation for c in D.trace_components(w))
        assert sorted(c.self_writhe for c in D.trace_components(nw)) == \
            sorted(c.self_writhe for c in D.trace_components(w))


def test_thread_meridian_links_once():
    core = Word(ANNULUS, BLACKBOARD, ((D.UP, GREEN),), ())
    threaded = D.thread_meridian(core)
    closed = D.planar_closure(threaded)
    ana = D.analyze(closed)
    assert len(ana.components) == 2
    inter = [c.sign for c in ana.crossings
             if ana.component_of_slot(c.slots[0]) != ana.component_of_slot(c.slots[1])]
    assert abs(sum(inter)) == 2  # linking number one


def test_word_key_separates_words():
    rng = random.Random(25)
    by_key = {}
    for _ in range(30):
        w = random_word(rng)
        if D.word_key(w) in by_key:
            assert by_key[D.word_key(w)] == w
        by_key[D.word_key(w)] = w
    u = ccw_unknot()
    assert D.word_key(u) != D.word_key(D.mirror(T.desugar_braid(2, [1], True)))
    assert D.word_key(u) == D.word_key(Word(events=u.events))
