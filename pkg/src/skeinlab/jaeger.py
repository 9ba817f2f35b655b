"""Composition state sum over admissible edge labellings.

Edges are the maximal strand arcs between crossings. A labelling with
values in 1..n is admissible when every crossing either preserves labels
along both strands or is a cutting vertex: the 0-smoothing joins the
over-in edge to the under-out edge and the under-in edge to the over-out
edge, and at a cutting vertex the under-in/over-out pair carries the
strictly larger label. A cutting vertex contributes sgn(v)(q - q^-1) to
the interaction and is replaced by the smoothing before the subdiagrams
are extracted.

The rotation correction multiplies, for each label c with subdiagram
rotation r_c, the monomial made of a_j^{+r_c} for j > c and a_j^{-r_c}
for j < c; for two labels this is a_2^{r_1} a_1^{-r_2}. Which smoothing
strand carries the larger label and how the exponents pair are two faces
of one relabelling symmetry: flipping both reproduces the same sum, and
diagrams whose crossings all point upward cannot see the difference at
all. The one-crossing curls with a sideways crossing do separate the
choices, and they pin exactly this combination; see the calibration
notes in the coproduct module.
"""

from __future__ import annotations

from typing import Callable, Iterator, Optional

from . import diagrams, engine, scalars
from .diagrams import (CUP, DOWN, Event, PLANE, UP, Word, XING, analyze,
                       rotation_number, subdiagram)
from .scalars import Scalar


class StateSumError(ValueError):
    pass


def edge_list(ana) -> list:
    return sorted({ana.edge(s) for s in range(ana.n_slots)})


def _pattern_possible(vals, n: int, cut_side: str = "under_in") -> bool:
    """Can the partial assignment (over-in, under-in, over-out, under-out)
    still become admissible?"""
    va, vb, vc, vd = vals

    def agree(x, y):
        return x is None or y is None or x == y

    if agree(va, vc) and agree(vb, vd):
        return True
    if agree(va, vd) and agree(vb, vc):
        hi = vb if vb is not None else vc
        lo = va if va is not None else vd
        if cut_side == "over_in":
            hi, lo = lo, hi
        if hi is None:
            return lo is None or lo < n
        if lo is None:
            return hi > 1
        return hi > lo
    return False


def enumerate_admissible(word: Word, n: int, ana=None,
                         edge_order: Optional[list] = None,
                         cut_side: str = "under_in") -> Iterator[dict]:
    """Depth-first enumeration with per-crossing pruning.

    Yields maps from edge root to label. Deterministic in sorted edge
    order unless an explicit order is supplied; the result set does not
    depend on the order.
    """
    ana = ana or analyze(word)
    edges = edge_order if edge_order is not None else edge_list(ana)
    incident: dict = {e: [] for e in edges}
    for x in ana.crossings:
        for e in set(x.edges):
            incident[e].append(x)
    assignment: dict = {}

    def ok_around(edge) -> bool:
        for x in incident[edge]:
            vals = tuple(assignment.get(e) for e in x.edges)
            if not _pattern_possible(vals, n, cut_side):
                return False
        return True

    def dfs(k: int):
        if k == len(edges):
            yield dict(assignment)
            return
        e = edges[k]
        for lab in range(1, n + 1):
            assignment[e] = lab
            if ok_around(e):
                yield from dfs(k + 1)
            del assignment[e]

    yield from dfs(0)


def is_admissible(ana, labelling: dict, cut_side: str = "under_in") -> bool:
    for x in ana.crossings:
        va, vb, vc, vd = (labelling[e] for e in x.edges)
        if va == vc and vb == vd:
            continue
        cut_ok = (vb > va) if cut_side == "under_in" else (va > vb)
        if va == vd and vb == vc and cut_ok:
            continue
        return False
    return True


def cutting_vertices(ana, labelling: dict, cut_side: str = "under_in") -> list:
    out = []
    for i, x in enumerate(ana.crossings):
        va, vb, vc, vd = (labelling[e] for e in x.edges)
        cut_ok = (vb > va) if cut_side == "under_in" else (va > vb)
        if va == vd and vb == vc and cut_ok:
            out.append(i)
    return out


def interaction(word: Word, labelling: dict, n: int = 2, ana=None,
                cut_side: str = "under_in") -> Scalar:
    """Product of sgn(v)(q - q^-1) over the cutting vertices."""
    ana = ana or analyze(word)
    cuts = cutting_vertices(ana, labelling, cut_side)
    sign = 1
    for i in cuts:
        sign *= ana.crossings[i].sign
    s = scalars.q_minus_qinv(n)
    return scalars.integer(sign, n) * s ** len(cuts)


def smoothed_coloured(word: Word, labelling: dict, ana=None,
                      cut_side: str = "under_in") -> Word:
    """Smooth every cutting vertex and colour each arc by its label."""
    ana = ana or analyze(word)
    cut_events = {}
    for i in cutting_vertices(ana, labelling, cut_side):
        x = ana.crossings[i]
        cut_events[x.event_index] = x
    slot_iter = len(ana.bottom)
    events = []
    for idx, e in enumerate(word.events):
        if e.kind == CUP:
            lab = labelling[ana.edge(slot_iter)]
            slot_iter += 2
            events.append(Event(CUP, e.pos, e.tag, lab))
        elif e.kind == XING:
            above_left = slot_iter
            slot_iter += 2
            x = cut_events.get(idx)
            if x is None:
                events.append(e)
            else:
                o_l, o_r = x.orients
                if o_l == o_r:
                    pass
                else:
                    tag = diagrams.RIGHTMOVING if (o_l, o_r) == (UP, DOWN) else diagrams.LEFTMOVING
                    cup_lab = labelling[ana.edge(above_left)]
                    events.append(Event(diagrams.CAP, e.pos, tag))
                    events.append(Event(CUP, e.pos, tag, cup_lab))
        else:
            events.append(e)
    profile = tuple((o, labelling[ana.edge(s)])
                    for (o, _), s in zip(word.profile, ana.bottom))
    out = Word(word.surface, word.framing, profile, tuple(events))
    diagrams.validate(out)
    return out


def _rotation_correction(rots: list, n: int, variant: str) -> Scalar:
    exps = [0] * n
    if variant == "calibrated" or variant == "calibrated_inv":
        for j in range(1, n + 1):
            exps[j - 1] = (sum(rots[c - 1] for c in range(1, j))
                           - sum(rots[c - 1] for c in range(j + 1, n + 1)))
        if variant == "calibrated_inv":
            exps = [-e for e in exps]
    elif variant in ("printed", "printed_inv"):
        if n != 2:
            raise StateSumError("the printed pairing is a two-label coefficient")
        exps = [-rots[0], rots[1]]
        if variant == "printed_inv":
            exps = [rots[0], -rots[1]]
    else:
        raise StateSumError(f"unknown rotation-correction variant {variant!r}")
    return scalars.monomial(n, 1, a=exps)


def state_sum(word: Word, n: int = 2, memo: Optional[dict] = None,
              trace: Optional[Callable[[str], None]] = None,
              variant: str = "calibrated", cut_side: str = "under_in") -> Scalar:
    """The n-label composition sum of a closed one-colour plane diagram.

    Each admissible labelling contributes its interaction, the rotation
    correction of the smoothed subdiagrams, and the product of their
    one-colour invariants, one tensor slot per label.
    """
    if word.surface != PLANE:
        raise StateSumError("the scalar state sum needs a closed plane diagram")
    ana = analyze(word)
    if len({c.colour for c in ana.components}) > 1:
        raise StateSumError("state sum input must be single-coloured")
    if memo is None:
        memo = {}
    total = Scalar.zero(n)
    for f in enumerate_admissible(word, n, ana, cut_side=cut_side):
        smoothed = smoothed_coloured(word, f, ana, cut_side)
        coeff = interaction(word, f, n, ana, cut_side)
        rots = []
        parts = []
        for c in range(1, n + 1):
            part = subdiagram(smoothed, {c})
            parts.append(part)
            rots.append(sum(rotation_number(comp, word.framing)
                            for comp in diagrams.trace_components(part)))
        coeff = coeff * _rotation_correction(rots, n, variant)
        value = coeff
        for c, part in enumerate(parts, start=1):
            h = engine.eval_one_colour(diagrams.recolour(part, 1), memo)
            value = value * scalars.tensor_embed(h, c, n)
        if trace is not None:
            cuts = cutting_vertices(ana, f, cut_side)
            labels = [f[e] for e in edge_list(ana)]
            trace(f"labels={labels} cuts={cuts} coeff={scalars.pretty(coeff)}")
        total = total + value
    return total


def state_sum_3(word: Word, memo: Optional[dict] = None,
                trace: Optional[Callable[[str], None]] = None,
                cut_side: str = "under_in") -> Scalar:
    return state_sum(word, 3, memo, trace, cut_side=cut_side)
