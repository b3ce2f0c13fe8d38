"""Virtual and welded link diagrams as Morse slice-words.

Core objects: :class:`~vlink.core.Diagram` (a validated slice-word with
component orientations), elementary moves with replayable certificates,
compound moves (pokes, finger moves, detours), sublink realization, and
2-cyclic covering diagrams.
"""

from .core import (Diagram, DiagramError, ParseError, Slice, SliceKind,
                   ValidationError, cap, cup, diagram, parse, serialize, vx,
                   xm, xp)

__all__ = [
    "Diagram", "DiagramError", "ParseError", "Slice", "SliceKind",
    "ValidationError", "cap", "cup", "diagram", "parse", "serialize",
    "vx", "xm", "xp",
]
