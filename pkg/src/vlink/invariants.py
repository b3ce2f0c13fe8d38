"""Counting invariants: crossings, writhe, linking numbers, restrictions.

The linking number of two components is half the signed sum of the
classical crossings between them, kept as an exact :class:`Fraction`.
The sign convention lives in :func:`crossing_sign` and nowhere else:
a classical crossing is positive when the determinant of (over direction,
under direction) is positive, which makes the standard right-handed
crossing (both strands upward, "/" over) positive.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .core import Diagram, DiagramError, Slice, SliceKind


def crossing_strands(d: Diagram, k: int):
    """Segments entering crossing slice ``k``: (ne_in, nw_in).

    ``ne_in`` is the lower end of the "/" strand (travelling SW to NE),
    ``nw_in`` the lower end of the "\\" strand.
    """
    sl = d.slices[k]
    if not sl.is_crossing():
        raise DiagramError(f"slice {k} is not a crossing")
    return (k, sl.pos), (k, sl.pos + 1)


def crossing_sign(d: Diagram, k: int) -> int:
    """Sign of the classical crossing at slice ``k`` (+1 or -1)."""
    sl = d.slices[k]
    if not sl.is_classical():
        raise DiagramError(f"slice {k} is not a classical crossing")
    ne_in, nw_in = crossing_strands(d, k)
    ne_up = d.direction_of(ne_in) > 0
    nw_up = d.direction_of(nw_in) > 0
    ne_vec = (1, 1) if ne_up else (-1, -1)
    nw_vec = (-1, 1) if nw_up else (1, -1)
    over, under = (ne_vec, nw_vec) if sl.kind is SliceKind.XP else (nw_vec, ne_vec)
    det = over[0] * under[1] - over[1] * under[0]
    return 1 if det > 0 else -1


def crossing_components(d: Diagram, k: int) -> tuple[int, int]:
    """Component ids of the two strands through crossing slice ``k``."""
    ne_in, nw_in = crossing_strands(d, k)
    return d.component_of(ne_in), d.component_of(nw_in)


@dataclass(frozen=True)
class InvariantCounts:
    components: int
    classical_crossings: int
    virtual_crossings: int
    writhe_per_component: tuple[int, ...]


def invariant_counts(d: Diagram) -> InvariantCounts:
    classical = 0
    virtual = 0
    writhe = [0] * d.ncomponents
    for k, sl in enumerate(d.slices):
        if sl.kind is SliceKind.V:
            virtual += 1
        elif sl.is_classical():
            classical += 1
            a, b = crossing_components(d, k)
            if a == b:
                writhe[a] += crossing_sign(d, k)
    return InvariantCounts(d.ncomponents, classical, virtual, tuple(writhe))


def linking_number(d: Diagram, a: int, b: int) -> Fraction:
    """Half the signed count of classical crossings between components."""
    n = d.ncomponents
    if not (0 <= a < n and 0 <= b < n):
        raise DiagramError(f"unknown component id in ({a}, {b}); diagram has {n}")
    if a == b:
        raise DiagramError("linking number needs two distinct components")
    total = 0
    for k, sl in enumerate(d.slices):
        if sl.is_classical():
            ca, cb = crossing_components(d, k)
            if {ca, cb} == {a, b}:
                total += crossing_sign(d, k)
    return Fraction(total, 2)


def linking_matrix(d: Diagram) -> tuple[tuple[Fraction, ...], ...]:
    n = d.ncomponents
    m = [[Fraction(0)] * n for _ in range(n)]
    for k, sl in enumerate(d.slices):
        if sl.is_classical():
            a, b = crossing_components(d, k)
            if a != b:
                s = crossing_sign(d, k)
                m[a][b] += Fraction(s, 2)
                m[b][a] += Fraction(s, 2)
    return tuple(tuple(row) for row in m)


# -- partitions and restriction ----------------------------------------------

@dataclass(frozen=True)
class Partition:
    """Assignment of components to sublink blocks (both 0-based)."""

    block_of: tuple[int, ...]
    nblocks: int

    def __post_init__(self):
        if self.nblocks < 0:
            raise DiagramError("negative block count")
        used = set()
        for c, b in enumerate(self.block_of):
            if not 0 <= b < self.nblocks:
                raise DiagramError(f"component {c} assigned to block {b}, "
                                   f"outside 0..{self.nblocks - 1}")
            used.add(b)
        if used != set(range(self.nblocks)):
            empty = sorted(set(range(self.nblocks)) - used)
            raise DiagramError(f"empty blocks: {empty}")

    def block(self, b: int) -> frozenset[int]:
        return frozenset(c for c, bb in enumerate(self.block_of) if bb == b)

    def complement(self, b: int) -> frozenset[int]:
        return frozenset(c for c, bb in enumerate(self.block_of) if bb != b)


def single_block(d: Diagram) -> Partition:
    return Partition((0,) * d.ncomponents, 1 if d.ncomponents else 0)


def two_blocks(d: Diagram, first: frozenset[int] | set[int]) -> Partition:
    """Partition into ``first`` and the rest."""
    block_of = tuple(0 if c in first else 1 for c in range(d.ncomponents))
    return Partition(block_of, 2)


@dataclass(frozen=True)
class Restriction:
    """A restricted diagram plus the bookkeeping to relate it to the source.

    ``comp_map`` sends kept source components to components of ``diagram``;
    ``slice_map`` sends kept source slice indices to restricted indices.
    """

    diagram: Diagram
    kept: frozenset[int]
    comp_map: dict[int, int]
    slice_map: dict[int, int]
    gap_map: tuple[int, ...]


def restrict_to(d: Diagram, keep: frozenset[int] | set[int]) -> Restriction:
    """Delete all components outside ``keep``.

    Crossings between a kept and a removed strand are smoothed away (the
    removed strand simply vanishes); positions are re-indexed.
    """
    keep = frozenset(keep)
    new_slices = []
    slice_map: dict[int, int] = {}
    gap_map = [0] * (len(d.slices) + 1)
    kept_pos: list[int] = []   # sorted kept positions at current source gap

    def rank(p: int) -> int:
        lo, hi = 0, len(kept_pos)
        while lo < hi:
            mid = (lo + hi) // 2
            if kept_pos[mid] < p:
                lo = mid + 1
            else:
                hi = mid
        return lo

    for k, sl in enumerate(d.slices):
        gap_map[k] = len(new_slices)
        i = sl.pos
        if sl.kind is SliceKind.CUP:
            c = d.component_of((k + 1, i))
            if c in keep:
                slice_map[k] = len(new_slices)
                new_slices.append(Slice(sl.kind, rank(i) + 1))
                kept_pos = ([p for p in kept_pos if p < i]
                            + [i, i + 1] + [p + 2 for p in kept_pos if p >= i])
            else:
                kept_pos = [p if p < i else p + 2 for p in kept_pos]
        elif sl.kind is SliceKind.CAP:
            c = d.component_of((k, i))
            if c in keep:
                slice_map[k] = len(new_slices)
                new_slices.append(Slice(sl.kind, rank(i) + 1))
            kept_pos = [p if p < i else p - 2 for p in kept_pos
                        if p not in (i, i + 1)]
        else:
            c1 = d.component_of((k, i))
            c2 = d.component_of((k, i + 1))
            if c1 in keep and c2 in keep:
                slice_map[k] = len(new_slices)
                new_slices.append(Slice(sl.kind, rank(i) + 1))
            # positions unchanged by a crossing
    gap_map[len(d.slices)] = len(new_slices)

    base = Diagram(tuple(new_slices), ())
    # carry orientations over: match each kept component through a segment
    comp_map: dict[int, int] = {}
    orient = [1] * base.ncomponents
    for c in sorted(keep):
        seg = _some_segment(d, c)
        nseg = _map_segment(d, keep, gap_map, seg)
        nc = base.component_of(nseg)
        comp_map[c] = nc
        want = d.direction_of(seg)
        if base.direction_of(nseg) != want:
            orient[nc] = -1
    out = Diagram(base.slices, tuple(orient))
    return Restriction(out, keep, comp_map, slice_map, tuple(gap_map))


def _some_segment(d: Diagram, c: int):
    return d.strands.base[c]


def _map_segment(d: Diagram, keep: frozenset[int], gap_map, seg):
    g, p = seg
    r = sum(1 for q in range(1, p)
            if d.component_of((g, q)) in keep)
    return (gap_map[g], r + 1)


def restrict(d: Diagram, p: Partition, block: int) -> Diagram:
    """The sub-diagram of the components in ``block`` of partition ``p``."""
    if not 0 <= block < max(p.nblocks, 1):
        raise DiagramError(f"block {block} out of range 0..{p.nblocks - 1}")
    return restrict_to(d, p.block(block)).diagram

