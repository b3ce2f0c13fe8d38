from __future__ import annotations

from collections import Counter

import pytest

from vlink import parse
from vlink.core import DiagramError
from vlink.cover import cover, double_diagram, lift_partition
from vlink.invariants import (invariant_counts, linking_matrix, single_block,
                              two_blocks)
from vlink.moves import MoveKind, apply_move, enumerate_sites
from vlink.planemap import plane_isotopic

from conftest import sample_diagrams


def lk_multiset(d):
    m = linking_matrix(d)
    return Counter(m[a][b] for a in range(d.ncomponents)
                   for b in range(a + 1, d.ncomponents))


def test_double_unknot_two_loops(unknot):
    dd = double_diagram(unknot)
    assert dd.ncomponents == 2
    assert plane_isotopic(dd, parse("cup 1; cup 3; cap 1; cap 1"))


def test_double_hopf_disjoint_copies(hopf):
    dd = double_diagram(hopf)
    c = invariant_counts(dd)
    assert c.components == 4
    assert c.classical_crossings == 4
    m = linking_matrix(dd)
    nonzero = [(a, b) for a in range(4) for b in range(4) if a < b and m[a][b]]
    assert len(nonzero) == 2                      # two disjoint linked pairs
    assert not ({a for ab in nonzero for a in ab} - {0, 1, 2, 3})


def test_double_counts_exactly_doubled():
    for d in sample_diagrams(25, seed=50):
        c, cd = invariant_counts(d), invariant_counts(double_diagram(d))
        assert cd.components == 2 * c.components
        assert cd.classical_crossings == 2 * c.classical_crossings
        assert cd.virtual_crossings == 2 * c.virtual_crossings


def test_cover_of_virtual_free_is_double():
    for d in sample_diagrams(20, seed=51):
        if invariant_counts(d).virtual_crossings:
            continue
        c, lm = cover(d)
        assert c == double_diagram(d)
        assert all(len(ls) == 2 for ls in lm.lifts)


def test_cover_classical_count_doubles_exactly():
    for d in sample_diagrams(30, seed=52):
        c, _ = cover(d)
        assert invariant_counts(c).classical_crossings == \
            2 * invariant_counts(d).classical_crossings


def test_lift_parity():
    for d in sample_diagrams(40, seed=53):
        _, lm = cover(d)
        for c_id in range(d.ncomponents):
            expect = 2 if lm.sheet_switches[c_id] % 2 == 0 else 1
            assert len(lm.lifts[c_id]) == expect


def test_vhopf_cover(vhopf):
    # each component passes the single virtual crossing once: odd parity,
    # so each lifts to one doubled component
    c, lm = cover(vhopf)
    ic = invariant_counts(c)
    assert ic.classical_crossings == 2
    assert c.ncomponents == 2
    assert sorted(len(ls) for ls in lm.lifts) == [1, 1]


def test_lift_partition_single_block(vhopf):
    c, lm = cover(vhopf)
    lp = lift_partition(single_block(vhopf), lm)
    assert lp.nblocks == 1
    assert len(lp.block_of) == c.ncomponents


def test_lift_partition_two_blocks(vhopf):
    _, lm = cover(vhopf)
    p = two_blocks(vhopf, {0})
    lp = lift_partition(p, lm)
    for c_id in range(2):
        for nc in lm.lifts[c_id]:
            assert lp.block_of[nc] == p.block_of[c_id]


def test_crossingless_component_lifts_without_classical_crossings():
    # a crossingless loop beside a virtual-knotted loop: its lifts carry
    # no classical crossings at all
    d = parse("cup 1; cup 1; x+ 1; v 1; cap 1; cap 1")
    assert d.ncomponents == 2
    c, lm = cover(d)
    free = [i for i in range(2)
            if not any(True for k, sl in enumerate(d.slices)
                       if sl.is_crossing()
                       and d.component_of((k, sl.pos)) == i
                       or (sl.is_crossing()
                           and d.component_of((k, sl.pos + 1)) == i))]
    m = linking_matrix(c)
    for i in free:
        for nc in lm.lifts[i]:
            assert all(m[nc][other] == 0 for other in range(c.ncomponents)
                       if other != nc)


def test_cover_invariance_under_moves():
    checked = 0
    for d in sample_diagrams(25, seed=54, max_crossings=5):
        c1, _ = cover(d)
        fp1 = (c1.ncomponents, lk_multiset(c1))
        for kind in MoveKind:
            if kind is MoveKind.WR:
                continue
            for ltr in (True, False):
                for m in enumerate_sites(d, kind, ltr)[:4]:
                    c2, _ = cover(apply_move(d, m))
                    assert (c2.ncomponents, lk_multiset(c2)) == fp1, (str(d), m)
                    checked += 1
    assert checked > 150
