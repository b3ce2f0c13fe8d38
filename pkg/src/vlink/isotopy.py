"""Word-level planar isotopy steps.

Four families of rewrites change the slice word without changing the
plane arrangement:

* ``distantCommutation`` swaps two adjacent slices acting on disjoint
  strand positions (with the forced re-indexing);
* ``zigzagCancel`` / ``zigzagCreate`` remove / insert a cup-cap wiggle on
  a single strand (Morse birth-death cancellation);
* ``slidePastCupCap`` slides a crossing around an adjacent turning point
  whose arc it involves; the crossing hops to the other side of the turn
  and its chirality token flips.

Every step is validated against the slice word; soundness against
:func:`vlink.planemap.to_plane_map` is enforced by the test suite rather
than assumed.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .core import Diagram, DiagramError, Slice, SliceKind


class IsoKind(str, Enum):
    COMMUTE = "distantCommutation"
    ZZ_CANCEL = "zigzagCancel"
    ZZ_CREATE = "zigzagCreate"
    SLIDE = "slidePastCupCap"


@dataclass(frozen=True)
class IsotopyStep:
    kind: IsoKind
    index: int          # slice index (lower slice of the pair / insertion slot)
    pos: int = 0        # zigzagCreate: strand position
    variant: str = ""   # zigzag form 'L'/'R'; slide variant

    def __str__(self) -> str:
        if self.kind is IsoKind.ZZ_CREATE:
            return f"iso {self.kind.value} @ {self.index} {self.pos} {self.variant}"
        if self.kind is IsoKind.ZZ_CANCEL:
            return f"iso {self.kind.value} @ {self.index}"
        if self.kind is IsoKind.COMMUTE:
            tail = f" {self.variant}" if self.variant else ""
            return f"iso {self.kind.value} @ {self.index}{tail}"
        return f"iso {self.kind.value} @ {self.index} {self.variant}"


class IsotopyError(DiagramError):
    """The step's pattern does not match the word at its site."""


def flip_crossing(sl: Slice, pos: int) -> Slice:
    kind = {SliceKind.XP: SliceKind.XM, SliceKind.XM: SliceKind.XP,
            SliceKind.V: SliceKind.V}[sl.kind]
    return Slice(kind, pos)


# -- generic width-neutral splice ---------------------------------------------

def splice(d: Diagram, lo: int, hi: int, replacement: tuple[Slice, ...],
           inside_map: tuple[tuple[tuple[int, int], tuple[int, int]], ...] = (),
           ) -> Diagram:
    """Replace slices ``lo:hi`` by ``replacement`` and carry orientations over.

    The replacement must be width-neutral at the window boundary.  Each
    component of ``d`` is re-identified through a segment outside the
    window (or through ``inside_map`` for components confined to it).
    """
    new_slices = d.slices[:lo] + replacement + d.slices[hi:]
    base = Diagram(new_slices, ())
    delta = len(replacement) - (hi - lo)
    if len(base.widths) != len(d.widths) + delta:
        raise IsotopyError("splice changed the word length inconsistently")

    anchors: dict[int, tuple[tuple[int, int], tuple[int, int]]] = {}
    for (g, p), (g2, p2) in inside_map:
        anchors[d.component_of((g, p))] = ((g, p), (g2, p2))
    for c in range(d.ncomponents):
        if c in anchors:
            continue
        seg = _outside_segment(d, c, lo, hi)
        if seg is None:
            raise IsotopyError(
                f"component {c} lives entirely inside the spliced window")
        g, p = seg
        anchors[c] = ((g, p), (g if g <= lo else g + delta, p))

    orient = [0] * base.ncomponents
    comp_map: dict[int, int] = {}
    for c, (old_seg, new_seg) in anchors.items():
        nc = base.component_of(new_seg)
        comp_map[c] = nc
        want = d.direction_of(old_seg)
        o = 1 if base.direction_of(new_seg) == want else -1
        if orient[nc] and orient[nc] != o:
            raise IsotopyError("inconsistent component match in splice")
        orient[nc] = o
    if any(o == 0 for o in orient):
        raise IsotopyError("unmatched component after splice")
    out = Diagram(new_slices, tuple(orient))
    out.memo()["comp_map"] = comp_map
    return out


def _outside_segment(d: Diagram, c: int, lo: int, hi: int):
    """Smallest segment of component ``c`` at a gap <= lo or >= hi."""
    best = None
    for (g, p), cc in d.strands.comp_of.items():
        if cc == c and (g <= lo or g >= hi):
            if best is None or (g, p) < best:
                best = (g, p)
    return best


# -- commutation ---------------------------------------------------------------

def commute_pair(lower: Slice, upper: Slice, variant: str = ""):
    """Swap two adjacent slices acting on disjoint positions.

    Returns the re-indexed pair ``(upper', lower')`` or None if the slices
    interact (shared strands, or a birth inside a crossing wake).  One
    configuration is ambiguous: a cup directly above a cap at the same
    position may descend on either side of the capped pair; ``variant``
    ``"L"``/``"R"`` selects the side.
    """
    a, b = lower.pos, upper.pos
    lk, uk = lower.kind, upper.kind
    C = SliceKind.CUP
    P = SliceKind.CAP

    if lk not in (C, P):                      # lower is a crossing
        if uk not in (C, P):
            if {a, a + 1} & {b, b + 1}:
                return None
            return upper, lower
        if uk is C:
            if b == a + 1:
                return None
            if b <= a:
                return upper, Slice(lk, a + 2)
            return upper, lower
        # upper cap
        if b + 1 < a:
            return upper, Slice(lk, a - 2)
        if b > a + 1:
            return upper, lower
        return None
    if lk is C:                                # lower is a cup
        if uk not in (C, P):
            if b + 1 < a:
                return upper, lower
            if b > a + 1:
                return Slice(uk, b - 2), lower
            return None
        if uk is C:
            if b <= a:
                return upper, Slice(C, a + 2)
            if b >= a + 2:
                return Slice(C, b - 2), lower
            return None
        # upper cap over lower cup
        if b + 1 < a:
            return upper, Slice(C, a - 2)
        if b > a + 1:
            return Slice(P, b - 2), lower
        return None
    # lower is a cap
    if uk not in (C, P):
        if b + 1 < a:
            return upper, lower
        if b >= a:
            return Slice(uk, b + 2), lower
        return None
    if uk is C:
        if b <= a - 1:
            return upper, Slice(P, a + 2)
        if b >= a + 1:
            return Slice(C, b + 2), lower
        # b == a: the cup may pass on either side of the capped pair
        if variant == "L":
            return Slice(C, a), Slice(P, a + 2)
        if variant == "R":
            return Slice(C, a + 2), lower
        return None
    # both caps
    if b + 1 < a:
        return upper, Slice(P, a - 2)
    if b >= a:
        return Slice(P, b + 2), lower
    return None


# -- application ----------------------------------------------------------------

_ZZ_FORMS = {"L": lambda p: (Slice(SliceKind.CUP, p), Slice(SliceKind.CAP, p + 1)),
             "R": lambda p: (Slice(SliceKind.CUP, p + 1), Slice(SliceKind.CAP, p))}


def zigzag_form(lower: Slice, upper: Slice):
    """Recognize a cancellable wiggle; return (form, strand_pos) or None."""
    if lower.kind is SliceKind.CUP and upper.kind is SliceKind.CAP:
        if upper.pos == lower.pos + 1:
            return "L", lower.pos
        if upper.pos == lower.pos - 1:
            return "R", lower.pos - 1
    return None


def _slide_patterns(lower: Slice, upper: Slice, variant: str):
    """Result pair for a slidePastCupCap variant, or None if no match."""
    j = None
    if variant == "cap+":
        if lower.is_crossing() and upper.kind is SliceKind.CAP \
                and upper.pos == lower.pos + 1:
            j = lower.pos
            return (flip_crossing(lower, j + 1), Slice(SliceKind.CAP, j))
    elif variant == "cap-":
        if lower.is_crossing() and upper.kind is SliceKind.CAP \
                and upper.pos == lower.pos - 1:
            j = upper.pos
            return (flip_crossing(lower, j), Slice(SliceKind.CAP, j + 1))
    elif variant == "cup+":
        if lower.kind is SliceKind.CUP and upper.is_crossing() \
                and upper.pos == lower.pos + 1:
            j = lower.pos
            return (Slice(SliceKind.CUP, j + 1), flip_crossing(upper, j))
    elif variant == "cup-":
        if lower.kind is SliceKind.CUP and upper.is_crossing() \
                and upper.pos == lower.pos - 1:
            j = upper.pos
            return (Slice(SliceKind.CUP, j), flip_crossing(upper, j + 1))
    return None


SLIDE_VARIANTS = ("cap+", "cap-", "cup+", "cup-")


def apply_isotopy(d: Diagram, step: IsotopyStep) -> Diagram:
    """Apply one isotopy step; raises :class:`IsotopyError` on mismatch."""
    i = step.index
    n = len(d.slices)
    if step.kind is IsoKind.ZZ_CREATE:
        if not 0 <= i <= n:
            raise IsotopyError(f"insertion slot {i} out of range")
        if step.variant not in _ZZ_FORMS:
            raise IsotopyError(f"unknown zigzag form {step.variant!r}")
        if not 1 <= step.pos <= d.widths[i]:
            raise IsotopyError(f"no strand at position {step.pos} in gap {i}")
        return splice(d, i, i, _ZZ_FORMS[step.variant](step.pos))
    if not (0 <= i and i + 1 < n):
        raise IsotopyError(f"slice pair ({i}, {i + 1}) out of range")
    lower, upper = d.slices[i], d.slices[i + 1]
    if step.kind is IsoKind.COMMUTE:
        swapped = commute_pair(lower, upper, step.variant)
        if swapped is None:
            raise IsotopyError(
                f"slices {i} ({lower}) and {i + 1} ({upper}) interact")
        return splice(d, i, i + 2, swapped)
    if step.kind is IsoKind.ZZ_CANCEL:
        form = zigzag_form(lower, upper)
        if form is None:
            raise IsotopyError(f"no zigzag at slices ({i}, {i + 1})")
        return splice(d, i, i + 2, ())
    if step.kind is IsoKind.SLIDE:
        out = _slide_patterns(lower, upper, step.variant)
        if out is None:
            raise IsotopyError(
                f"slide {step.variant!r} does not match slices ({i}, {i + 1})")
        return splice(d, i, i + 2, out)
    raise IsotopyError(f"unknown isotopy kind {step.kind}")


def invert_isotopy(d_before: Diagram, step: IsotopyStep) -> IsotopyStep:
    """The step undoing ``step`` on ``apply_isotopy(d_before, step)``."""
    if step.kind is IsoKind.COMMUTE:
        lower, upper = d_before.slices[step.index], d_before.slices[step.index + 1]
        if lower.kind is SliceKind.CUP and upper.kind is SliceKind.CAP \
                and abs(lower.pos - upper.pos) == 2:
            # lands in the ambiguous cap/cup stack; remember the side
            side = "R" if lower.pos > upper.pos else "L"
            return IsotopyStep(IsoKind.COMMUTE, step.index, 0, side)
        return IsotopyStep(IsoKind.COMMUTE, step.index)
    if step.kind is IsoKind.ZZ_CREATE:
        return IsotopyStep(IsoKind.ZZ_CANCEL, step.index)
    if step.kind is IsoKind.ZZ_CANCEL:
        lower, upper = d_before.slices[step.index], d_before.slices[step.index + 1]
        form = zigzag_form(lower, upper)
        if form is None:
            raise IsotopyError("not a zigzag site")
        return IsotopyStep(IsoKind.ZZ_CREATE, step.index, form[1], form[0])
    inv = {"cap+": "cap-", "cap-": "cap+", "cup+": "cup-", "cup-": "cup+"}
    return IsotopyStep(IsoKind.SLIDE, step.index, 0, inv[step.variant])


def isotopy_sites(d: Diagram) -> list[IsotopyStep]:
    """All directly applicable non-inflationary isotopy steps."""
    out = []
    for i in range(len(d.slices) - 1):
        lower, upper = d.slices[i], d.slices[i + 1]
        if commute_pair(lower, upper) is not None:
            out.append(IsotopyStep(IsoKind.COMMUTE, i))
        elif lower.kind is SliceKind.CAP and upper.kind is SliceKind.CUP \
                and lower.pos == upper.pos:
            out.append(IsotopyStep(IsoKind.COMMUTE, i, 0, "L"))
            out.append(IsotopyStep(IsoKind.COMMUTE, i, 0, "R"))
        if zigzag_form(lower, upper) is not None:
            out.append(IsotopyStep(IsoKind.ZZ_CANCEL, i))
        for v in SLIDE_VARIANTS:
            if _slide_patterns(lower, upper, v) is not None:
                out.append(IsotopyStep(IsoKind.SLIDE, i, 0, v))
    return out
