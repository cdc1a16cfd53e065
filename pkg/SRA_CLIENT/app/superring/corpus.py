"""
Reference rings with sampled rational points.

Each entry is given in the session syntax so it can be rebuilt in a
session file as well as from Python.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache

from algebra.fields import Field
from frontend.expr_parser import parse_expr
from superring.regularity import MaximalIdealPoint
from superring.ring import RingPresentation, make_ring


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    evens: tuple[str, ...]
    odds: tuple[str, ...]
    defining: tuple[str, ...] = ()
    points: tuple[tuple[int, ...], ...] = ()

    def declaration(self) -> str:
        """The `ring` command that defines this entry."""
        variables = ", ".join(self.evens)
        if self.odds:
            variables += " | " + ", ".join(self.odds)
        text = f"ring {self.name} = Q[{variables}]"
        if self.defining:
            text += " / (" + ", ".join(self.defining) + ")"
        return text


ENTRIES = (
    CorpusEntry("line", ("x",), (), (), ((0,), (1,), (-2,))),
    CorpusEntry("free1", ("x",), ("t",), (), ((0,), (1,), (3,))),
    CorpusEntry("free2", ("x",), ("t1", "t2"), (), ((0,), (-1,), (2,))),
    CorpusEntry("free3", ("x",), ("t1", "t2", "t3"), (), ((0,), (1,), (5,))),
    CorpusEntry("counter", ("X",), ("t1", "t2"), ("X*t1*t2",), ((0,), (1,), (-1,))),
    CorpusEntry("cusp", ("x", "y"), (), ("y^2 - x^3",), ((0, 0), (1, 1), (4, 8))),
    CorpusEntry("plane", ("x", "y"), ("t",), (), ((0, 0), (1, 2), (-1, 3))),
    CorpusEntry("section", ("x", "y"), ("t",), ("y",), ((0, 0), (2, 0), (-3, 0))),
    CorpusEntry("tilted", ("x",), ("t1", "t2"), ("t2 - x*t1",), ((0,), (1,), (2,))),
    CorpusEntry("cross", ("x", "y"), (), ("x*y",), ((0, 1), (1, 0), (0, 0))),
)


@cache
def corpus_ring(name: str) -> RingPresentation:
    entry = entry_named(name)
    defining = [lambda ambient, text=text: parse_expr(text, ambient) for text in entry.defining]
    return make_ring(Field(0), entry.evens, entry.odds, defining, name=entry.name)


def entry_named(name: str) -> CorpusEntry:
    for entry in ENTRIES:
        if entry.name == name:
            return entry
    raise KeyError(name)


def corpus_points(name: str) -> list[MaximalIdealPoint]:
    R = corpus_ring(name)
    return [MaximalIdealPoint.from_coordinates(R, p) for p in entry_named(name).points]
