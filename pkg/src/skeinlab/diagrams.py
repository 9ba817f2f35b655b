"""Oriented framed link diagrams as Morse words on the plane or annulus.

A word is read bottom to top. Each event acts on the current strand
profile at a 1-based position:

  cup  pos >|<   inserts two strands; ">" creates (Down, Up), "<" (Up, Down)
  cap  pos >|<   removes two strands; ">" consumes (Up, Down), "<" (Down, Up)
  x    pos o|u   crossing; "o" means the strand entering at the lower left
                 passes over, "u" the one entering at the lower right

Annulus words carry a gluing profile: the bottom and top boundaries are
identified strand by strand. The framing tag selects how rotation numbers
are read off (radial: turning number of the cut-open word; blackboard:
turning number plus winding).

Turning contributions per extremum, in half units: cup> +1, cup< -1,
cap< +1, cap> -1. A counterclockwise circle (cup> then cap<) has rotation
number +1.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Iterable, Optional

PLANE = "plane"
ANNULUS = "annulus"
BLACKBOARD = "blackboard"
RADIAL = "radial"

UP = "^"
DOWN = "v"
CUP = "cup"
CAP = "cap"
XING = "x"
RIGHTMOVING = ">"
LEFTMOVING = "<"
OVER_LEFT = "o"
OVER_RIGHT = "u"

ORANGE = 0
GREEN = 1
RED = 2
VIOLET = 3

_TURN = {(CUP, RIGHTMOVING): 1, (CUP, LEFTMOVING): -1,
         (CAP, LEFTMOVING): 1, (CAP, RIGHTMOVING): -1}

_CUP_PAIR = {RIGHTMOVING: (DOWN, UP), LEFTMOVING: (UP, DOWN)}
_CAP_PAIR = {RIGHTMOVING: (UP, DOWN), LEFTMOVING: (DOWN, UP)}


class DiagramError(ValueError):
    def __init__(self, message: str, index: Optional[int] = None):
        self.message = message
        self.index = index
        where = "" if index is None else f" at event {index}"
        super().__init__(message + where)


@dataclass(frozen=True)
class Event:
    kind: str
    pos: int
    tag: str
    colour: int = GREEN  # meaningful on cups only

    def __str__(self):
        if self.kind == CUP:
            return f"cup {self.pos} {self.tag} c{self.colour}"
        return f"{self.kind} {self.pos} {self.tag}"


@dataclass(frozen=True)
class Word:
    surface: str = PLANE
    framing: str = BLACKBOARD
    profile: tuple = ()  # ((orientation, colour), ...) for annulus words
    events: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "events", tuple(self.events))
        object.__setattr__(self, "profile", tuple(tuple(p) for p in self.profile))


def word_key(word: Word) -> bytes:
    """Exact serialized bytes of a word, used as memo key."""
    bits = [word.surface, word.framing,
            ",".join(f"{o}{c}" for o, c in word.profile)]
    bits += [f"{e.kind}.{e.pos}.{e.tag}.{e.colour}" for e in word.events]
    return "|".join(bits).encode()


def oriented_sign(o_left: str, o_right: str, tag: str) -> int:
    """Crossing sign by the right-hand rule.

    The strand occupying lower-left/upper-right runs along (1,1) when
    oriented up and (-1,-1) when oriented down; the other strand along
    (-1,1) or (1,-1). Positive means the z-component of over x under is
    positive, which makes the braid generator (both strands up, "o") +1.
    """
    d_slash = (1, 1) if o_left == UP else (-1, -1)
    d_back = (-1, 1) if o_right == UP else (1, -1)
    over, under = (d_slash, d_back) if tag == OVER_LEFT else (d_back, d_slash)
    z = over[0] * under[1] - over[1] * under[0]
    return 1 if z > 0 else -1


@dataclass(frozen=True)
class Component:
    index: int
    colour: int
    turn_half: int      # sum of extremum turns, in half units
    self_writhe: int
    winding: int
    surface: str
    basepoint: int

    @property
    def rotation(self) -> int:
        if self.turn_half % 2:
            raise DiagramError("open component has no integer rotation number")
        return self.turn_half // 2


def rotation_number(comp: Component, framing: str) -> int:
    if framing == RADIAL:
        if comp.surface != ANNULUS:
            raise DiagramError("radial framing is only defined on the annulus")
        return comp.rotation
    if framing == BLACKBOARD:
        return comp.rotation + comp.winding
    raise DiagramError(f"unknown framing {framing!r}")


class _UF:
    def __init__(self):
        self.parent = {}

    def find(self, x):
        p = self.parent
        while p.setdefault(x, x) != x:
            p[x] = p[p[x]]
            x = p[x]
        return x

    def union(self, x, y):
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            if ry < rx:
                rx, ry = ry, rx
            self.parent[ry] = rx


@dataclass
class Crossing:
    """One crossing of the analyzed word, with edge ids per Jaeger role."""
    event_index: int
    tag: str
    sign: int
    slots: tuple       # (below_left, below_right, above_left, above_right)
    orients: tuple     # (o_left, o_right) below the crossing
    colours: tuple     # (c_left, c_right) below the crossing
    edges: tuple = ()  # (a, b, c, d): over-in, under-in, over-out, under-out


@dataclass
class Analysis:
    """Full combinatorial scan of a valid word."""
    word: Word
    n_slots: int
    slot_orient: list
    slot_colour: list
    crossings: list
    extrema: list          # (event_index, kind, tag, slot_left, slot_right)
    bottom: list
    top: list
    nxt: dict              # slot -> (next slot, passage or None)
    edge_uf: _UF = field(default_factory=_UF)
    comp_uf: _UF = field(default_factory=_UF)
    components: list = field(default_factory=list)
    slot_component: dict = field(default_factory=dict)

    def edge(self, slot: int) -> int:
        return self.edge_uf.find(slot)

    def component_of_slot(self, slot: int) -> Component:
        return self.components[self.slot_component[self.comp_uf.find(slot)]]


def analyze(word: Word) -> Analysis:
    """Validate a word and extract slots, edges, components and crossings.

    Raises DiagramError with the offending event index on invalid input.
    """
    if word.surface not in (PLANE, ANNULUS):
        raise DiagramError(f"unknown surface {word.surface!r}")
    if word.framing not in (BLACKBOARD, RADIAL):
        raise DiagramError(f"unknown framing {word.framing!r}")
    if word.framing == RADIAL and word.surface != ANNULUS:
        raise DiagramError("radial framing is only legal on the annulus")
    if word.surface == PLANE and word.profile:
        raise DiagramError("plane words must have an empty boundary profile")

    ana = Analysis(word=word, n_slots=0, slot_orient=[], slot_colour=[],
                   crossings=[], extrema=[], bottom=[], top=[], nxt={})

    def new_slot(orient, colour):
        i = ana.n_slots
        ana.n_slots += 1
        ana.slot_orient.append(orient)
        ana.slot_colour.append(colour)
        return i

    strands = []
    for orient, colour in word.profile:
        if orient not in (UP, DOWN):
            raise DiagramError(f"bad profile orientation {orient!r}")
        s = new_slot(orient, colour)
        strands.append(s)
        ana.bottom.append(s)

    for idx, ev in enumerate(word.events):
        width = len(strands)
        if ev.kind == CUP:
            if not 1 <= ev.pos <= width + 1:
                raise DiagramError(f"cup position {ev.pos} outside 1..{width + 1}", idx)
            if ev.tag not in _CUP_PAIR:
                raise DiagramError(f"bad cup tag {ev.tag!r}", idx)
            o_l, o_r = _CUP_PAIR[ev.tag]
            l = new_slot(o_l, ev.colour)
            r = new_slot(o_r, ev.colour)
            strands[ev.pos - 1:ev.pos - 1] = [l, r]
            ana.extrema.append((idx, CUP, ev.tag, l, r))
            ana.edge_uf.union(l, r)
            ana.comp_uf.union(l, r)
            if ev.tag == RIGHTMOVING:
                ana.nxt[l] = (r, None)
            else:
                ana.nxt[r] = (l, None)
        elif ev.kind == CAP:
            if width < 2:
                raise DiagramError(f"cap on a profile of {width} strands", idx)
            if not 1 <= ev.pos <= width - 1:
                raise DiagramError(f"cap position {ev.pos} outside 1..{width - 1}", idx)
            if ev.tag not in _CAP_PAIR:
                raise DiagramError(f"bad cap tag {ev.tag!r}", idx)
            l, r = strands[ev.pos - 1], strands[ev.pos]
            want = _CAP_PAIR[ev.tag]
            got = (ana.slot_orient[l], ana.slot_orient[r])
            if got != want:
                raise DiagramError(
                    f"cap orientation mismatch: expected {want}, found {got}", idx)
            if ana.slot_colour[l] != ana.slot_colour[r]:
                raise DiagramError(
                    f"cap colour mismatch: {ana.slot_colour[l]} vs {ana.slot_colour[r]}", idx)
            del strands[ev.pos - 1:ev.pos + 1]
            ana.extrema.append((idx, CAP, ev.tag, l, r))
            ana.edge_uf.union(l, r)
            ana.comp_uf.union(l, r)
            if ev.tag == RIGHTMOVING:
                ana.nxt[l] = (r, None)
            else:
                ana.nxt[r] = (l, None)
        elif ev.kind == XING:
            if width < 2:
                raise DiagramError(f"crossing on a profile of {width} strands", idx)
            if not 1 <= ev.pos <= width - 1:
                raise DiagramError(f"crossing position {ev.pos} outside 1..{width - 1}", idx)
            if ev.tag not in (OVER_LEFT, OVER_RIGHT):
                raise DiagramError(f"bad crossing tag {ev.tag!r}", idx)
            x, y = strands[ev.pos - 1], strands[ev.pos]
            o_l, o_r = ana.slot_orient[x], ana.slot_orient[y]
            c_l, c_r = ana.slot_colour[x], ana.slot_colour[y]
            u = new_slot(o_r, c_r)   # above left continues the right strand
            v = new_slot(o_l, c_l)   # above right continues the left strand
            strands[ev.pos - 1], strands[ev.pos] = u, v
            ci = len(ana.crossings)
            sign = oriented_sign(o_l, o_r, ev.tag)
            ana.crossings.append(Crossing(idx, ev.tag, sign, (x, y, u, v),
                                          (o_l, o_r), (c_l, c_r)))
            ana.comp_uf.union(x, v)
            ana.comp_uf.union(y, u)
            if o_l == UP:
                ana.nxt[x] = (v, (ci, 0))
            else:
                ana.nxt[v] = (x, (ci, 0))
            if o_r == UP:
                ana.nxt[y] = (u, (ci, 1))
            else:
                ana.nxt[u] = (y, (ci, 1))
        else:
            raise DiagramError(f"unknown event kind {ev.kind!r}", idx)

    ana.top = list(strands)
    if word.surface == PLANE:
        if strands:
            raise DiagramError(
                f"nonempty final profile ({len(strands)} strands) on a closed plane word")
    else:
        got = tuple((ana.slot_orient[s], ana.slot_colour[s]) for s in strands)
        if got != word.profile:
            raise DiagramError(
                f"final profile {got} does not match the gluing profile {word.profile}")
        for b, t in zip(ana.bottom, ana.top):
            ana.edge_uf.union(b, t)
            ana.comp_uf.union(b, t)
            if ana.slot_orient[b] == UP:
                ana.nxt[t] = (b, None)
            else:
                ana.nxt[b] = (t, None)

    # Jaeger edge roles at each crossing: a/c over in/out, b/d under in/out.
    for c in ana.crossings:
        x, y, u, v = c.slots
        o_l, o_r = c.orients
        slash_in, slash_out = (x, v) if o_l == UP else (v, x)
        back_in, back_out = (y, u) if o_r == UP else (u, y)
        if c.tag == OVER_LEFT:
            a, cc, b, d = slash_in, slash_out, back_in, back_out
        else:
            a, cc, b, d = back_in, back_out, slash_in, slash_out
        c.edges = tuple(ana.edge_uf.find(s) for s in (a, b, cc, d))

    # Components with rotation, writhe and winding bookkeeping.
    turn: dict = {}
    for idx, kind, tag, l, r in ana.extrema:
        root = ana.comp_uf.find(l)
        turn[root] = turn.get(root, 0) + _TURN[(kind, tag)]
    selfw: dict = {}
    for c in ana.crossings:
        x, y, u, v = c.slots
        if ana.comp_uf.find(x) == ana.comp_uf.find(y):
            root = ana.comp_uf.find(x)
            selfw[root] = selfw.get(root, 0) + c.sign
    wind: dict = {}
    for b in ana.bottom:
        root = ana.comp_uf.find(b)
        wind[root] = wind.get(root, 0) + (1 if ana.slot_orient[b] == UP else -1)

    roots = sorted({ana.comp_uf.find(s) for s in range(ana.n_slots)})
    for i, root in enumerate(roots):
        ana.slot_component[root] = i
        ana.components.append(Component(
            index=i, colour=ana.slot_colour[root],
            turn_half=turn.get(root, 0), self_writhe=selfw.get(root, 0),
            winding=wind.get(root, 0), surface=word.surface, basepoint=root))
    return ana


def validate(word: Word) -> None:
    analyze(word)


def diagnose(word: Word) -> Optional[str]:
    """Validation as a question: returns the first problem, or None."""
    try:
        analyze(word)
    except DiagramError as err:
        return str(err)
    return None


def trace_components(word: Word) -> tuple:
    return tuple(analyze(word).components)


def writhe(word: Word) -> int:
    return sum(c.sign for c in analyze(word).crossings)


def total_rotation(word: Word, framing: Optional[str] = None) -> int:
    ana = analyze(word)
    f = framing or word.framing
    return sum(rotation_number(c, f) for c in ana.components)


def passage_sequence(ana: Analysis, order: Optional[list] = None,
                     basepoints: Optional[dict] = None) -> list:
    """Flatten crossing passages by walking each component from its basepoint.

    Returns a list of (crossing index, strand id) in traversal order.
    Components default to basepoint order; both the component order and the
    per-component starting slot can be overridden (the naive resolver feeds
    randomized choices here).
    """
    comps = list(ana.components) if order is None else [ana.components[i] for i in order]
    out = []
    for comp in comps:
        start = comp.basepoint if basepoints is None else basepoints[comp.index]
        slot = start
        while True:
            nxt, passage = ana.nxt[slot]
            if passage is not None:
                out.append(passage)
            slot = nxt
            if slot == start:
                break
    return out


# -- word surgery ---------------------------------------------------------


def mirror(word: Word) -> Word:
    flip = {OVER_LEFT: OVER_RIGHT, OVER_RIGHT: OVER_LEFT}
    events = tuple(replace(e, tag=flip[e.tag]) if e.kind == XING else e
                   for e in word.events)
    return replace(word, events=events)


def reverse(word: Word) -> Word:
    """Reverse every strand orientation."""
    swap = {RIGHTMOVING: LEFTMOVING, LEFTMOVING: RIGHTMOVING}
    events = tuple(replace(e, tag=swap[e.tag]) if e.kind in (CUP, CAP) else e
                   for e in word.events)
    profile = tuple((UP if o == DOWN else DOWN, c) for o, c in word.profile)
    return replace(word, events=events, profile=profile)


def recolour(word: Word, colour: int) -> Word:
    events = tuple(replace(e, colour=colour) if e.kind == CUP else e
                   for e in word.events)
    profile = tuple((o, colour) for o, _ in word.profile)
    return replace(word, events=events, profile=profile)


def flip_crossing(word: Word, event_index: int) -> Word:
    e = word.events[event_index]
    if e.kind != XING:
        raise DiagramError("not a crossing", event_index)
    flip = {OVER_LEFT: OVER_RIGHT, OVER_RIGHT: OVER_LEFT}
    events = list(word.events)
    events[event_index] = replace(e, tag=flip[e.tag])
    return replace(word, events=tuple(events))


def smooth_crossing(word: Word, event_index: int, ana: Optional[Analysis] = None) -> Word:
    """Replace a crossing by its oriented 0-smoothing.

    Equal orientations: the crossing event is simply dropped. Opposite
    orientations: the smoothing is a turnback, a cap followed by a cup.
    """
    ana = ana or analyze(word)
    cross = next(c for c in ana.crossings if c.event_index == event_index)
    o_l, o_r = cross.orients
    events = list(word.events)
    p = word.events[event_index].pos
    if o_l == o_r:
        patch = []
    elif (o_l, o_r) == (UP, DOWN):
        colour = cross.colours[0]
        patch = [Event(CAP, p, RIGHTMOVING), Event(CUP, p, RIGHTMOVING, colour)]
    else:
        colour = cross.colours[0]
        patch = [Event(CAP, p, LEFTMOVING), Event(CUP, p, LEFTMOVING, colour)]
    events[event_index:event_index + 1] = patch
    return replace(word, events=tuple(events))


def _normalize_one(events: list, k: int, orients: tuple) -> list:
    """Rewrite the crossing at index k into cup/cap conjugates of an
    up-up crossing; returns the replacement event list."""
    e = events[k]
    p = e.pos
    flip = {OVER_LEFT: OVER_RIGHT, OVER_RIGHT: OVER_LEFT}
    if orients == (UP, UP):
        return [e]
    if orients == (UP, DOWN):
        return [Event(CUP, p, RIGHTMOVING, e.colour),
                Event(XING, p + 1, flip[e.tag]),
                Event(CAP, p + 2, RIGHTMOVING)]
    if orients == (DOWN, UP):
        return [Event(CUP, p + 2, LEFTMOVING, e.colour),
                Event(XING, p + 1, flip[e.tag]),
                Event(CAP, p, LEFTMOVING)]
    return [Event(CUP, p + 2, LEFTMOVING, e.colour),
            Event(CUP, p + 3, LEFTMOVING, e.colour),
            Event(XING, p + 2, e.tag),
            Event(CAP, p + 1, LEFTMOVING),
            Event(CAP, p, LEFTMOVING)]


def normalize_crossings(word: Word) -> Word:
    """Isotope the word so that every crossing has both strands upward."""
    ana = analyze(word)
    by_index = {c.event_index: c for c in ana.crossings}
    events = []
    for idx, e in enumerate(word.events):
        if e.kind == XING and by_index[idx].orients != (UP, UP):
            events.extend(_normalize_one(list(word.events), idx, by_index[idx].orients))
        else:
            events.append(e)
    out = replace(word, events=tuple(events))
    analyze(out)
    return out


def subdiagram(word: Word, colours: Iterable) -> Word:
    """Delete every strand whose colour is not in the given set."""
    keep = set(colours)
    ana = analyze(word)
    strands = []
    new_profile = []
    for s in ana.bottom:
        strands.append(s)
        if ana.slot_colour[s] in keep:
            new_profile.append((ana.slot_orient[s], ana.slot_colour[s]))
    events = []
    slot_iter = len(ana.bottom)

    def kept_index(pos):
        return sum(1 for s in strands[:pos - 1] if ana.slot_colour[s] in keep) + 1

    for idx, e in enumerate(word.events):
        if e.kind == CUP:
            l, r = slot_iter, slot_iter + 1
            slot_iter += 2
            if ana.slot_colour[l] in keep:
                events.append(Event(CUP, kept_index(e.pos), e.tag, e.colour))
            strands[e.pos - 1:e.pos - 1] = [l, r]
        elif e.kind == CAP:
            l = strands[e.pos - 1]
            if ana.slot_colour[l] in keep:
                events.append(Event(CAP, kept_index(e.pos), e.tag))
            del strands[e.pos - 1:e.pos + 1]
        else:
            x, y = strands[e.pos - 1], strands[e.pos]
            cx, cy = ana.slot_colour[x], ana.slot_colour[y]
            if cx in keep and cy in keep:
                events.append(Event(XING, kept_index(e.pos), e.tag))
            u, v = slot_iter, slot_iter + 1
            slot_iter += 2
            strands[e.pos - 1], strands[e.pos] = u, v
    out = replace(word, profile=tuple(new_profile), events=tuple(events))
    analyze(out)
    return out


def combine(w1: Word, w2: Word) -> Word:
    """Disjoint union on the plane, stacking product on the annulus."""
    if w1.surface != w2.surface:
        raise DiagramError("cannot combine words on different surfaces")
    if w1.surface == PLANE:
        return replace(w1, events=w1.events + w2.events)
    if w1.framing != w2.framing:
        raise DiagramError("cannot stack annulus words with different framings")
    off = len(w1.profile)
    shifted = tuple(replace(e, pos=e.pos + off) for e in w2.events)
    return replace(w1, profile=w1.profile + w2.profile,
                   events=w1.events + shifted)


def power(word: Word, k: int) -> Word:
    result = Word(surface=word.surface, framing=word.framing)
    for _ in range(k):
        result = combine(result, word)
    return result


def planar_closure(word: Word) -> Word:
    """Embed an annulus word in the plane, closing the gluing profile by
    nested arcs around the left side. An upward winding strand picks up
    one counterclockwise turn, matching the blackboard rotation number."""
    if word.surface != ANNULUS:
        raise DiagramError("planar closure applies to annulus words")
    p = len(word.profile)
    pre = []
    for k in range(p, 0, -1):
        orient, colour = word.profile[k - 1]
        tag = RIGHTMOVING if orient == UP else LEFTMOVING
        pre.append(Event(CUP, p - k + 1, tag, colour))
    body = [replace(e, pos=e.pos + p) for e in word.events]
    post = []
    for k in range(1, p + 1):
        orient, _ = word.profile[k - 1]
        tag = LEFTMOVING if orient == UP else RIGHTMOVING
        post.append(Event(CAP, p - k + 1, tag))
    out = Word(surface=PLANE, framing=BLACKBOARD, profile=(),
               events=tuple(pre + body + post))
    analyze(out)
    return out


def thread_meridian(word: Word, colour: int = GREEN) -> Word:
    """Add one test circle through the annulus hole, linking the gluing
    bundle once: cup on the outside, one pass under, one pass over."""
    if word.surface != ANNULUS:
        raise DiagramError("meridian threading applies to annulus words")
    p = len(word.profile)
    block = [Event(CUP, p + 1, RIGHTMOVING, colour)]
    for k in range(p, 0, -1):
        block.append(Event(XING, k, OVER_LEFT))
    for k in range(p + 1, 1, -1):
        block.append(Event(XING, k, OVER_RIGHT))
    block.append(Event(CAP, 1, LEFTMOVING))
    out = replace(word, events=tuple(block) + word.events)
    analyze(out)
    return out


# -- small isotopy moves, used by the invariance suites --------------------


def profiles(word: Word) -> list:
    """Profiles before each event and after the last one."""
    ana = analyze(word)
    out = [tuple((ana.slot_orient[s], ana.slot_colour[s]) for s in ana.bottom)]
    strands = list(ana.bottom)
    slot_iter = len(ana.bottom)
    for e in word.events:
        if e.kind == CUP:
            strands[e.pos - 1:e.pos - 1] = [slot_iter, slot_iter + 1]
            slot_iter += 2
        elif e.kind == CAP:
            del strands[e.pos - 1:e.pos + 1]
        else:
            strands[e.pos - 1], strands[e.pos] = slot_iter, slot_iter + 1
            slot_iter += 2
        out.append(tuple((ana.slot_orient[s], ana.slot_colour[s]) for s in strands))
    return out


def _shift(e: Event) -> int:
    return 2 if e.kind == CUP else -2 if e.kind == CAP else 0


def commute_events(word: Word, i: int) -> Optional[Word]:
    """Swap events i and i+1 when they act on disjoint strand ranges."""
    if i + 1 >= len(word.events):
        return None
    e, f = word.events[i], word.events[i + 1]
    events = list(word.events)
    if f.pos + 1 < e.pos:
        events[i] = f
        events[i + 1] = replace(e, pos=e.pos + _shift(f))
    else:
        f_before = f.pos - _shift(e)
        if f_before <= e.pos + 1 or f_before < 1:
            return None
        events[i] = replace(f, pos=f_before)
        events[i + 1] = e
    out = replace(word, events=tuple(events))
    try:
        analyze(out)
    except DiagramError:
        return None
    return out


def insert_zigzag(word: Word, at: int, pos: int, side: str = "right") -> Optional[Word]:
    prof = profiles(word)[at]
    if not 1 <= pos <= len(prof):
        return None
    orient, colour = prof[pos - 1]
    if orient == UP:
        patch = ([Event(CUP, pos + 1, RIGHTMOVING, colour), Event(CAP, pos, RIGHTMOVING)]
                 if side == "right" else
                 [Event(CUP, pos, LEFTMOVING, colour), Event(CAP, pos + 1, LEFTMOVING)])
    else:
        patch = ([Event(CUP, pos + 1, LEFTMOVING, colour), Event(CAP, pos, LEFTMOVING)]
                 if side == "right" else
                 [Event(CUP, pos, RIGHTMOVING, colour), Event(CAP, pos + 1, RIGHTMOVING)])
    events = list(word.events)
    events[at:at] = patch
    out = replace(word, events=tuple(events))
    try:
        analyze(out)
    except DiagramError:
        return None
    return out


def insert_r2(word: Word, at: int, pos: int, tag: str = OVER_LEFT) -> Optional[Word]:
    prof = profiles(word)[at]
    if not 1 <= pos <= len(prof) - 1:
        return None
    other = OVER_RIGHT if tag == OVER_LEFT else OVER_LEFT
    events = list(word.events)
    events[at:at] = [Event(XING, pos, tag), Event(XING, pos, other)]
    return replace(word, events=tuple(events))


def insert_r3_pair(word: Word, at: int, pos: int, tag: str = OVER_LEFT):
    """The two sides of a Reidemeister III insertion, as a pair of words.

    The triple permutes the three strands, so the insertion is only legal
    where the outer strands agree in orientation and colour with what the
    rest of the word expects; otherwise None.
    """
    prof = profiles(word)[at]
    if not 1 <= pos <= len(prof) - 2:
        return None
    left = [Event(XING, pos, tag), Event(XING, pos + 1, tag), Event(XING, pos, tag)]
    right = [Event(XING, pos + 1, tag), Event(XING, pos, tag), Event(XING, pos + 1, tag)]
    events = list(word.events)
    wa = replace(word, events=tuple(events[:at] + left + events[at:]))
    wb = replace(word, events=tuple(events[:at] + right + events[at:]))
    try:
        analyze(wa)
        analyze(wb)
    except DiagramError:
        return None
    return wa, wb


def add_kink(word: Word, at: int, pos: int, rot: int, sign: int) -> Optional[Word]:
    """Insert a curl of the given rotation (+-1) and crossing sign (+-1)."""
    prof = profiles(word)[at]
    if not 1 <= pos <= len(prof):
        return None
    orient, colour = prof[pos - 1]
    if orient == UP:
        if rot == 1:
            mid = (UP, DOWN)
            patch = [Event(CUP, pos + 1, RIGHTMOVING, colour),
                     Event(XING, pos, None), Event(CAP, pos, LEFTMOVING)]
        else:
            mid = (DOWN, UP)
            patch = [Event(CUP, pos, LEFTMOVING, colour),
                     Event(XING, pos + 1, None), Event(CAP, pos + 1, RIGHTMOVING)]
    else:
        if rot == 1:
            mid = (UP, DOWN)
            patch = [Event(CUP, pos, RIGHTMOVING, colour),
                     Event(XING, pos + 1, None), Event(CAP, pos + 1, LEFTMOVING)]
        else:
            mid = (DOWN, UP)
            patch = [Event(CUP, pos + 1, LEFTMOVING, colour),
                     Event(XING, pos, None), Event(CAP, pos, RIGHTMOVING)]
    tag = OVER_LEFT if oriented_sign(mid[0], mid[1], OVER_LEFT) == sign else OVER_RIGHT
    patch[1] = replace(patch[1], tag=tag)
    events = list(word.events)
    events[at:at] = patch
    out = replace(word, events=tuple(events))
    try:
        analyze(out)
    except DiagramError:
        return None
    return out
