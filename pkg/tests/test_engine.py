import random
import threading

import pytest

from skeinlab import diagrams as D
from skeinlab import engine as E
from skeinlab import scalars as S
from skeinlab import textio as T
from skeinlab.diagrams import Event, Word, CUP, CAP, GREEN, ORANGE, RED, XING

from conftest import random_braid_closure, random_word


def d():
    return S.delta(1, 1)


def a(e=1):
    return S.a_power(1, e, 1)


def s():
    return S.q_minus_qinv(1)


def test_defining_relations():
    assert E.eval_one_colour(T.parse_morse("cup 1 >\ncap 1 <")) == d()
    kink = T.desugar_braid(2, [1], True)
    assert E.eval_one_colour(kink) == a() * d()
    unlink = T.parse_morse("cup 1 >\ncap 1 <\ncup 1 >\ncap 1 <")
    assert E.eval_one_colour(unlink) == d() * d()


def test_hopf_and_trefoil_values():
    # by hand: closure of x^2 = (q - q^-1) * closure(x) + closure(1)
    hopf = T.desugar_braid(2, [1, 1], True)
    assert E.eval_one_colour(hopf) == d() * d() + s() * a() * d()
    # closure of x^3 = (q - q^-1) closure(x^2) + closure(x), reduced once more
    tre = T.desugar_braid(2, [1, 1, 1], True)
    want = d() * (a() * S.q_power(2, 1) + a() * S.q_power(-2, 1) - a(-1))
    assert E.eval_one_colour(tre) == want
    assert S.specialize(E.eval_one_colour(tre), [1]) == S.q_power(3, 0)


def test_collapse_at_t_equals_one():
    rng = random.Random(41)
    for _ in range(40):
        w = random_braid_closure(rng)
        v = E.eval_one_colour(w)
        assert S.specialize(v, [1]) == S.q_power(D.writhe(w), 0)


def test_mirror_and_reversal_laws():
    rng = random.Random(42)
    for _ in range(20):
        w = random_word(rng)
        v = E.eval_one_colour(w)
        assert E.eval_one_colour(D.mirror(w)) == S.bar(v)
        assert E.eval_one_colour(D.reverse(w)) == v


def test_disjoint_union_multiplies():
    rng = random.Random(43)
    for _ in range(12):
        w1 = random_word(rng, max_events=10, max_crossings=4)
        w2 = random_word(rng, max_events=10, max_crossings=4)
        assert E.eval_one_colour(D.combine(w1, w2)) == \
            E.eval_one_colour(w1) * E.eval_one_colour(w2)


def test_isotopy_moves_leave_value_unchanged():
    rng = random.Random(44)
    checked = 0
    while checked < 30:
        w = random_word(rng, max_events=12, max_crossings=5)
        v = E.eval_one_colour(w)
        at = rng.randint(0, len(w.events))
        prof = D.profiles(w)[at]
        if not prof:
            continue
        pos = rng.randint(1, len(prof))
        z = D.insert_zigzag(w, at, pos, rng.choice(("left", "right")))
        if z is not None:
            assert E.eval_one_colour(z) == v
        if len(prof) >= 2:
            r2 = D.insert_r2(w, at, rng.randint(1, len(prof) - 1),
                             rng.choice("ou"))
            if r2 is not None:
                assert E.eval_one_colour(r2) == v
        if len(prof) >= 3:
            pair = D.insert_r3_pair(w, at, rng.randint(1, len(prof) - 2),
                                    rng.choice("ou"))
            if pair is not None:
                wa, wb = pair
                assert E.eval_one_colour(wa) == E.eval_one_colour(wb)
        i = rng.randint(0, len(w.events) - 2)
        c = D.commute_events(w, i)
        if c is not None:
            assert E.eval_one_colour(c) == v
        checked += 1


def test_twist_flip_both_curls_equal():
    rng = random.Random(45)
    for _ in range(15):
        w = random_word(rng, max_events=10, max_crossings=4)
        v = E.eval_one_colour(w)
        at = rng.randint(0, len(w.events))
        prof = D.profiles(w)[at]
        if not prof:
            continue
        pos = rng.randint(1, len(prof))
        sign = rng.choice((1, -1))
        left = D.add_kink(w, at, pos, rot=1, sign=sign)
        right = D.add_kink(w, at, pos, rot=-1, sign=sign)
        if left is None or right is None:
            continue
        want = S.monomial(1, 1, a=[sign]) * v
        assert E.eval_one_colour(left) == want
        assert E.eval_one_colour(right) == want


def test_normalization_is_an_isotopy_for_eval():
    rng = random.Random(46)
    for _ in range(20):
        w = random_word(rng)
        assert E.eval_one_colour(D.normalize_crossings(w)) == E.eval_one_colour(w)


def test_naive_oracle_agrees():
    rng = random.Random(47)
    for _ in range(25):
        w = random_braid_closure(rng, max_crossings=6) if rng.random() < 0.5 \
            else random_word(rng, max_events=12, max_crossings=5)
        assert E.naive_eval(w, rng) == E.eval_one_colour(w)


def test_budget_error():
    tre = T.desugar_braid(2, [1, 1, 1], True)
    with pytest.raises(E.BudgetError) as err:
        E.eval_one_colour(tre, budget=2)
    assert err.value.word is not None


def test_rejects_annulus_words():
    core = Word(D.ANNULUS, D.RADIAL, ((D.UP, GREEN),), ())
    with pytest.raises(E.EvalError):
        E.eval_one_colour(core)


def test_memo_is_thread_tolerant():
    rng = random.Random(48)
    words = [random_braid_closure(rng, max_crossings=7) for _ in range(8)]
    single = [E.eval_one_colour(w, {}) for w in words]
    memo = {}
    results = [None] * len(words)

    def run(i):
        results[i] = E.eval_one_colour(words[i], memo)

    threads = [threading.Thread(target=run, args=(i,)) for i in range(len(words))]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert results == single


def test_multi_colour_separation():
    green = Word(events=(Event(CUP, 1, ">", GREEN), Event(CAP, 1, "<")))
    red = Word(events=(Event(CUP, 1, ">", RED), Event(CAP, 1, "<")))
    both = D.combine(green, red)
    assert E.eval_multi_colour(both, 2) == S.delta(1, 2) * S.delta(2, 2)
    two_green = D.combine(green, green)
    assert E.eval_multi_colour(two_green, 2) == S.delta(1, 2) ** 2


def test_mixed_crossings_are_transparent():
    # green and red circles crossing each other twice, in a Hopf pattern
    w = Word(events=(
        Event(CUP, 1, ">", GREEN), Event(CUP, 3, ">", RED),
        Event(XING, 2, "o"), Event(XING, 2, "u"),
        Event(CAP, 3, "<"), Event(CAP, 1, "<")))
    ana = D.analyze(w)
    assert {c.colour for c in ana.components} == {GREEN, RED}
    assert E.eval_multi_colour(w, 2) == S.delta(1, 2) * S.delta(2, 2)


def test_orange_resolution():
    circle = Word(events=(Event(CUP, 1, ">", ORANGE), Event(CAP, 1, "<")))
    parts = E.orange_resolutions(circle)
    assert len(parts) == 2
    assert E.eval_orange(circle) == S.delta(1, 2) + S.delta(2, 2)
    kinked = Word(events=(
        Event(CUP, 1, ">", ORANGE), Event(CUP, 2, ">", ORANGE),
        Event(XING, 3, "o"), Event(CAP, 2, "<"), Event(CAP, 1, "<")))
    want = (S.a_power(1, 1, 2) * S.delta(1, 2)
            + S.a_power(2, 1, 2) * S.delta(2, 2))
    assert E.eval_orange(kinked) == want
    two = D.combine(circle, circle)
    assert len(E.orange_resolutions(two)) == 4
    with pytest.raises(E.EvalError):
        E.eval_multi_colour(circle, 2)
