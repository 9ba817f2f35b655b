"""Built-in diagram corpus used by the verification commands and tests."""

from __future__ import annotations

import os

from . import textio
from .diagrams import Word

BUILTIN_SOURCES = {
    "unknot-ccw": "surface plane\ncup 1 >\ncap 1 <\n",
    "unknot-cw": "surface plane\ncup 1 <\ncap 1 >\n",
    "kink-positive": "surface plane\nbraid 2: 1 ; close\n",
    "kink-negative": "surface plane\nbraid 2: -1 ; close\n",
    "hopf": "surface plane\nbraid 2: 1 1 ; close\n",
    "trefoil-right": "surface plane\nbraid 2: 1 1 1 ; close\n",
    "trefoil-left": "surface plane\nbraid 2: -1 -1 -1 ; close\n",
    "figure-eight": "surface plane\nbraid 3: 1 -2 1 -2 ; close\n",
    "unlink-2": "surface plane\ncup 1 >\ncap 1 <\ncup 1 >\ncap 1 <\n",
    "annulus-core-radial": "surface annulus\nframing radial\nprofile ^g\n",
    "annulus-core-blackboard": "surface annulus\nframing blackboard\nprofile ^g\n",
    "annulus-core-sq-radial": "surface annulus\nframing radial\nprofile ^g ^g\n",
    "annulus-core-sq-blackboard": "surface annulus\nframing blackboard\nprofile ^g ^g\n",
}


def load_builtin() -> list:
    return [(name, textio.parse_morse(src)) for name, src in BUILTIN_SOURCES.items()]


def load_path(path: str) -> list:
    """A corpus from a single .mw file or a directory of them."""
    entries = []
    if os.path.isdir(path):
        for fn in sorted(os.listdir(path)):
            if fn.endswith(".mw"):
                with open(os.path.join(path, fn), encoding="utf-8") as fh:
                    entries.append((fn[:-3], textio.parse_morse(fh.read())))
    else:
        with open(path, encoding="utf-8") as fh:
            name = os.path.splitext(os.path.basename(path))[0]
            entries.append((name, textio.parse_morse(fh.read())))
    return entries


def builtin_word(name: str) -> Word:
    return textio.parse_morse(BUILTIN_SOURCES[name])
