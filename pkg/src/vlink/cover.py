"""2-cyclic covering diagrams.

``double_diagram`` places a verbatim copy of the diagram to the right of
the original, interleaving the two words slice by slice so all events stay
at distinct heights.  ``cover`` then replaces each virtual crossing pair
(original plus copy) with an all-virtual tangle that routes both strands
of each copy into the other copy, realizing the two-sheet monodromy: a
strand switches sheets exactly when it passes through a virtual crossing.
Classical crossings are simply duplicated, so the cover has exactly twice
as many classical crossings.

``LiftMap`` records, per original component, its cover components (two
when the component switches sheets an even number of times, one doubled
component when odd) and the sheet-switch count.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import Diagram, DiagramError, Slice, SliceKind
from .invariants import Partition, crossing_strands


@dataclass(frozen=True)
class LiftMap:
    """Correspondence between components downstairs and in the cover."""

    lifts: tuple[tuple[int, ...], ...]
    sheet_switches: tuple[int, ...]

    def total_cover_components(self) -> int:
        return len({c for ls in self.lifts for c in ls})


def double_diagram(d: Diagram) -> Diagram:
    """The diagram next to its translated copy, with no interaction."""
    slices: list[Slice] = []
    for k, sl in enumerate(d.slices):
        slices.append(sl)
        slices.append(Slice(sl.kind, sl.pos + d.widths[k + 1]))
    return _with_lifted_orientations(d, tuple(slices), _double_slice_index)[0]


def _double_slice_index(k: int) -> int:
    return 2 * k


def cover(d: Diagram) -> tuple[Diagram, LiftMap]:
    """The 2-cyclic covering diagram and its component lift map."""
    slices: list[Slice] = []
    left_index: dict[int, int] = {}
    for k, sl in enumerate(d.slices):
        left_index[k] = len(slices)
        n = d.widths[k + 1]
        if sl.kind is SliceKind.V:
            n = d.widths[k]
            slices.extend(_switch_tangle(n, sl.pos))
        else:
            slices.append(sl)
            slices.append(Slice(sl.kind, sl.pos + n))
    word = tuple(slices)
    out, lifts = _with_lifted_orientations(d, word, lambda k: left_index[k])
    switches = _sheet_switch_counts(d)
    for c in range(d.ncomponents):
        expect = 2 if switches[c] % 2 == 0 else 1
        if len(lifts[c]) != expect:
            raise DiagramError(
                f"lift parity mismatch for component {c}: "
                f"{switches[c]} switches but {len(lifts[c])} lifts")
    return out, LiftMap(tuple(lifts), tuple(switches))


def _switch_tangle(n: int, p: int) -> list[Slice]:
    """Adjacent virtual transpositions routing the crossing pair's strands.

    At total width ``2n`` the strands entering at ``p``, ``p+1``, ``n+p``,
    ``n+p+1`` leave at ``n+p+1``, ``n+p``, ``p+1``, ``p``: both strands of
    each copy's crossing pass into the other copy, so every passage
    through a virtual crossing switches sheets.  (Routing only one strand
    across would flip a component's sheet parity under a virtual kink,
    breaking invariance of the cover under VR1.)  A deterministic bubble
    routing emits the permutation as virtual swaps, left strand first.
    """
    dest = list(range(2 * n + 1))   # dest[j] = exit position of strand at j
    dest[p], dest[p + 1] = n + p + 1, n + p
    dest[n + p], dest[n + p + 1] = p + 1, p
    out: list[Slice] = []
    changed = True
    while changed:
        changed = False
        for j in range(1, 2 * n):
            if dest[j] > dest[j + 1]:
                out.append(Slice(SliceKind.V, j))
                dest[j], dest[j + 1] = dest[j + 1], dest[j]
                changed = True
    return out


def _sheet_switch_counts(d: Diagram) -> list[int]:
    """Sheet-switching passages per component: one per strand through a
    virtual crossing, so a virtual self-crossing contributes two."""
    counts = [0] * d.ncomponents
    for k, sl in enumerate(d.slices):
        if sl.kind is SliceKind.V:
            ne_in, nw_in = crossing_strands(d, k)
            counts[d.component_of(ne_in)] += 1
            counts[d.component_of(nw_in)] += 1
    return counts


def _with_lifted_orientations(d: Diagram, word: tuple[Slice, ...], left_index):
    """Orient the doubled/cover word to match both sheets of the source.

    Returns the oriented diagram and, per source component, the sorted
    tuple of its cover component ids.
    """
    base = Diagram(word, ())
    orient = [0] * base.ncomponents
    lifts: list[tuple[int, ...]] = []
    for c in range(d.ncomponents):
        g, p = d.strands.base[c]
        cup_slice = g - 1
        if cup_slice < 0 or d.slices[cup_slice].kind is not SliceKind.CUP:
            raise DiagramError(f"component {c} has no anchoring cup")
        li = left_index(cup_slice)
        want = d.direction_of((g, p))
        found = set()
        for seg in _lift_base_segments(d, cup_slice, li, word):
            nc = base.component_of(seg)
            found.add(nc)
            o = 1 if base.direction_of(seg) == want else -1
            if orient[nc] and orient[nc] != o:
                raise DiagramError("sheets disagree on lift orientation")
            orient[nc] = o
        lifts.append(tuple(sorted(found)))
    if any(o == 0 for o in orient):
        raise DiagramError("cover component not reached by any lift anchor")
    return Diagram(word, tuple(orient)), lifts


def _lift_base_segments(d: Diagram, cup_slice: int, left_idx: int,
                        word: tuple[Slice, ...]):
    """Left- and right-sheet copies of a component's base segment."""
    left_cup = word[left_idx]
    right_cup = word[left_idx + 1]
    if left_cup.kind is not SliceKind.CUP or right_cup.kind is not SliceKind.CUP:
        raise DiagramError("lift anchor is not a cup pair")
    yield (left_idx + 1, left_cup.pos)
    yield (left_idx + 2, right_cup.pos)


def lift_partition(p: Partition, lm: LiftMap) -> Partition:
    """Cover components inherit the block of their source component."""
    total = lm.total_cover_components()
    block_of = [0] * total
    seen = [False] * total
    for c, ls in enumerate(lm.lifts):
        if c >= len(p.block_of):
            raise DiagramError(f"component {c} not covered by the partition")
        for nc in ls:
            block_of[nc] = p.block_of[c]
            seen[nc] = True
    if not all(seen):
        raise DiagramError("lift map does not cover all cover components")
    return Partition(tuple(block_of), p.nblocks)
