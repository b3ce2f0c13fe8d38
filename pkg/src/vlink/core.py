"""Leveled (Morse) words for virtual and welded link diagrams.

A diagram is presented as a bottom-to-top sequence of elementary slices:
cups (local minima), caps (local maxima), classical crossings of either
chirality, and virtual crossings.  Reading the word upward sweeps the
plane; the slice order doubles as the height order of the events, so all
crossings automatically sit at distinct heights.

Positions are 1-based strand indices at the level just below the slice.
A closed diagram starts and ends at width zero.

Strand segments live in the gaps between slices; segment ``(g, p)`` is the
p-th strand (left to right) in gap ``g`` (gap 0 is below the first slice).
Components are the closed loops obtained by strand-following, numbered by
the first gap/position where they appear.  Each component carries an
orientation flag: ``+1`` means its base segment (the leftmost, lowest one)
travels upward.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum


class SliceKind(str, Enum):
    CUP = "cup"
    CAP = "cap"
    XP = "x+"   # classical crossing, NE strand ("/") passes over
    XM = "x-"   # classical crossing, NW strand ("\") passes over
    V = "v"     # virtual crossing


CROSSINGS = (SliceKind.XP, SliceKind.XM, SliceKind.V)
CLASSICAL = (SliceKind.XP, SliceKind.XM)

_TOKEN_TO_KIND = {k.value: k for k in SliceKind}


class DiagramError(ValueError):
    """Base class for diagram-level errors."""


class ParseError(DiagramError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class ValidationError(DiagramError):
    def __init__(self, message: str, slice_index: int):
        super().__init__(f"slice {slice_index}: {message}")
        self.slice_index = slice_index


@dataclass(frozen=True)
class Slice:
    kind: SliceKind
    pos: int

    def is_crossing(self) -> bool:
        return self.kind in CROSSINGS

    def is_classical(self) -> bool:
        return self.kind in CLASSICAL

    def __str__(self) -> str:
        return f"{self.kind.value} {self.pos}"


Segment = tuple[int, int]   # (gap, position)


def cup(pos: int) -> Slice:
    return Slice(SliceKind.CUP, pos)


def cap(pos: int) -> Slice:
    return Slice(SliceKind.CAP, pos)


def xp(pos: int) -> Slice:
    return Slice(SliceKind.XP, pos)


def xm(pos: int) -> Slice:
    return Slice(SliceKind.XM, pos)


def vx(pos: int) -> Slice:
    return Slice(SliceKind.V, pos)


def out_width(kind: SliceKind, w: int) -> int:
    if kind is SliceKind.CUP:
        return w + 2
    if kind is SliceKind.CAP:
        return w - 2
    return w


def check_slice(sl: Slice, w: int, index: int) -> None:
    """Validate one slice against the incoming width ``w``."""
    if sl.kind is SliceKind.CUP:
        if not 1 <= sl.pos <= w + 1:
            raise ValidationError(
                f"cup position {sl.pos} out of range 1..{w + 1} at width {w}", index)
    elif sl.kind is SliceKind.CAP:
        if not 1 <= sl.pos <= w - 1:
            raise ValidationError(
                f"cap position {sl.pos} out of range 1..{max(w - 1, 0)} at width {w}", index)
    else:
        if not 1 <= sl.pos <= w - 1:
            raise ValidationError(
                f"crossing position {sl.pos} out of range 1..{max(w - 1, 0)} at width {w}",
                index)


def width_profile(slices: tuple[Slice, ...]) -> tuple[int, ...]:
    """Widths of all gaps, validating every slice position on the way.

    Returns a tuple of length ``len(slices) + 1`` starting and ending at 0.
    """
    widths = [0]
    w = 0
    for i, sl in enumerate(slices):
        check_slice(sl, w, i)
        w = out_width(sl.kind, w)
        widths.append(w)
    if w != 0:
        raise ValidationError(f"final width is {w}, not 0 (diagram not closed)",
                              len(slices) - 1 if slices else 0)
    return tuple(widths)


def slice_maps(sl: Slice, w: int):
    """Strand continuation data for one slice at incoming width ``w``.

    Returns ``(passes, flip, born, dead)`` where ``passes`` maps incoming
    position -> outgoing position for strands that continue straight,
    ``flip`` is the pair of swapped positions for a crossing (or None),
    ``born`` is the pair of new positions created by a cup (or None), and
    ``dead`` is the pair of incoming positions removed by a cap (or None).
    """
    i = sl.pos
    if sl.kind is SliceKind.CUP:
        passes = {p: (p if p < i else p + 2) for p in range(1, w + 1)}
        return passes, None, (i, i + 1), None
    if sl.kind is SliceKind.CAP:
        passes = {p: (p if p < i else p - 2) for p in range(1, w + 1) if p not in (i, i + 1)}
        return passes, None, None, (i, i + 1)
    passes = {p: p for p in range(1, w + 1) if p not in (i, i + 1)}
    return passes, (i, i + 1), None, None


class StrandData:
    """Strand-following results: components and travel directions.

    ``comp_of`` labels every segment with its component id (0-based, in
    order of first appearance); ``direction`` is +1 when the segment is
    traversed upward under the diagram's orientation choice.
    """

    __slots__ = ("widths", "ncomponents", "comp_of", "direction", "base")

    def __init__(self, slices: tuple[Slice, ...], widths: tuple[int, ...],
                 orientations: tuple[int, ...] | None):
        self.widths = widths
        adj: dict[Segment, list[tuple[Segment, int]]] = {}

        def add_edge(a: Segment, b: Segment, parity: int) -> None:
            adj.setdefault(a, []).append((b, parity))
            adj.setdefault(b, []).append((a, parity))

        for g in range(len(widths)):
            for p in range(1, widths[g] + 1):
                adj.setdefault((g, p), [])
        for k, sl in enumerate(slices):
            passes, flip, born, dead = slice_maps(sl, widths[k])
            for p, q in passes.items():
                add_edge((k, p), (k + 1, q), 0)
            if flip:
                i, j = flip
                add_edge((k, i), (k + 1, j), 0)
                add_edge((k, j), (k + 1, i), 0)
            if born:
                i, j = born
                add_edge((k + 1, i), (k + 1, j), 1)
            if dead:
                i, j = dead
                add_edge((k, i), (k, j), 1)

        comp_of: dict[Segment, int] = {}
        direction: dict[Segment, int] = {}
        base: list[Segment] = []
        for seg in sorted(adj):
            if seg in comp_of:
                continue
            cid = len(base)
            base.append(seg)
            orient = 1 if orientations is None else orientations[cid] if cid < len(orientations) else 1
            comp_of[seg] = cid
            direction[seg] = orient
            stack = [seg]
            while stack:
                cur = stack.pop()
                for nxt, parity in adj[cur]:
                    d = direction[cur] * (-1 if parity else 1)
                    if nxt in comp_of:
                        if direction[nxt] != d:
                            raise ValidationError(
                                "inconsistent strand orientation", 0)
                        continue
                    comp_of[nxt] = cid
                    direction[nxt] = d
                    stack.append(nxt)
        self.ncomponents = len(base)
        self.comp_of = comp_of
        self.direction = direction
        self.base = base


@dataclass(frozen=True)
class Diagram:
    """A validated closed diagram word plus per-component orientations."""

    slices: tuple[Slice, ...]
    orientations: tuple[int, ...] = field(default=())

    def __post_init__(self):
        widths = width_profile(self.slices)
        object.__setattr__(self, "_widths", widths)
        strands = StrandData(self.slices, widths,
                             self.orientations if self.orientations else None)
        if not self.orientations:
            object.__setattr__(self, "orientations", (1,) * strands.ncomponents)
        elif len(self.orientations) != strands.ncomponents:
            raise ValidationError(
                f"{len(self.orientations)} orientations for "
                f"{strands.ncomponents} components", 0)
        elif any(o not in (1, -1) for o in self.orientations):
            raise ValidationError("orientations must be +1 or -1", 0)
        object.__setattr__(self, "_strands", strands)
        object.__setattr__(self, "_memo", {})

    # -- basic accessors ---------------------------------------------------

    @property
    def widths(self) -> tuple[int, ...]:
        return self._widths  # type: ignore[attr-defined]

    @property
    def strands(self) -> StrandData:
        return self._strands  # type: ignore[attr-defined]

    @property
    def ncomponents(self) -> int:
        return self.strands.ncomponents

    def memo(self) -> dict:
        return self._memo  # type: ignore[attr-defined]

    def __len__(self) -> int:
        return len(self.slices)

    def component_of(self, seg: Segment) -> int:
        return self.strands.comp_of[seg]

    def direction_of(self, seg: Segment) -> int:
        """+1 if the strand travels upward on this segment."""
        return self.strands.direction[seg]

    def crossing_indices(self) -> tuple[int, ...]:
        return tuple(i for i, sl in enumerate(self.slices) if sl.is_crossing())

    def with_orientations(self, orientations: tuple[int, ...]) -> "Diagram":
        return Diagram(self.slices, orientations)

    def __str__(self) -> str:
        return serialize(self)


def diagram(slices, orientations=None) -> Diagram:
    """Build a Diagram from any iterable of slices."""
    return Diagram(tuple(slices), tuple(orientations) if orientations else ())


EMPTY = Diagram((), ())


# -- parsing and serialization ----------------------------------------------

def parse(text: str) -> Diagram:
    """Parse the ``.mw`` diagram format.

    One slice token per ``;``-separated field or per line: ``cup N``,
    ``cap N``, ``x+ N``, ``x- N``, ``v N``.  A trailing section of
    ``orient K +|-`` lines (K is a 1-based component index) fixes
    orientations.  ``#`` starts a comment.
    """
    slices: list[Slice] = []
    orients: dict[int, int] = {}
    seen_orient = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        for chunk_start, chunk in _chunks(line):
            words = chunk.split()
            if not words:
                continue
            col = chunk_start + 1
            head = words[0]
            if head == "orient":
                if len(words) != 3 or words[2] not in ("+", "-"):
                    raise ParseError("expected 'orient <component> <+|->'",
                                     lineno, col)
                try:
                    comp = int(words[1])
                except ValueError:
                    raise ParseError(f"bad component index {words[1]!r}",
                                     lineno, col) from None
                if comp < 1:
                    raise ParseError("component index must be >= 1", lineno, col)
                if comp in orients:
                    raise ParseError(f"duplicate orient for component {comp}",
                                     lineno, col)
                orients[comp] = 1 if words[2] == "+" else -1
                seen_orient = True
                continue
            if seen_orient:
                raise ParseError("slice token after orient section", lineno, col)
            if head not in _TOKEN_TO_KIND:
                raise ParseError(f"unknown token {head!r}", lineno, col)
            if len(words) != 2:
                raise ParseError(f"expected '{head} <position>'", lineno, col)
            try:
                pos = int(words[1])
            except ValueError:
                raise ParseError(f"bad position {words[1]!r}", lineno, col) from None
            slices.append(Slice(_TOKEN_TO_KIND[head], pos))
    word = tuple(slices)
    widths = width_profile(word)
    strands = StrandData(word, widths, None)
    n = strands.ncomponents
    for comp in orients:
        if comp > n:
            raise ParseError(f"orient refers to component {comp}, "
                             f"but diagram has {n}", 1, 1)
    orientations = tuple(orients.get(c + 1, 1) for c in range(n))
    return Diagram(word, orientations)


def _chunks(line: str):
    """Yield (start_offset, text) for each ';'-separated field."""
    start = 0
    for part in line.split(";"):
        yield start, part
        start += len(part) + 1


def serialize(d: Diagram) -> str:
    """Normalized text form: one slice per line, then explicit orients."""
    lines = [str(sl) for sl in d.slices]
    lines.extend(f"orient {c + 1} {'+' if o > 0 else '-'}"
                 for c, o in enumerate(d.orientations))
    return "\n".join(lines) + "\n"
