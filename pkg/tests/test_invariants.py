from __future__ import annotations

from fractions import Fraction

import pytest

from vlink import DiagramError, parse
from vlink.invariants import (Partition, invariant_counts, linking_matrix,
                              linking_number, restrict, restrict_to,
                              single_block, two_blocks)

from conftest import sample_diagrams


def test_unknot_counts(unknot):
    c = invariant_counts(unknot)
    assert (c.components, c.classical_crossings, c.virtual_crossings) == (1, 0, 0)
    assert c.writhe_per_component == (0,)


def test_hopf_counts(hopf):
    c = invariant_counts(hopf)
    assert (c.components, c.classical_crossings, c.virtual_crossings) == (2, 2, 0)
    assert c.writhe_per_component == (0, 0)


def test_vhopf_counts(vhopf):
    c = invariant_counts(vhopf)
    assert (c.components, c.classical_crossings, c.virtual_crossings) == (2, 1, 1)


def test_hopf_linking_with_upward_orientations(hopf_up):
    assert linking_number(hopf_up, 0, 1) == 1
    assert linking_matrix(hopf_up) == ((0, 1), (1, 0))


def test_disjoint_loops_link_zero():
    d = parse("cup 1; cup 3; cap 1; cap 1")
    assert linking_number(d, 0, 1) == 0


def test_vhopf_half_integer(vhopf):
    assert abs(linking_number(vhopf, 0, 1)) == Fraction(1, 2)


def test_linking_errors(hopf):
    with pytest.raises(DiagramError):
        linking_number(hopf, 0, 0)
    with pytest.raises(DiagramError):
        linking_number(hopf, 0, 5)


def test_linking_matrix_symmetric_zero_diagonal():
    for d in sample_diagrams(30, seed=9):
        m = linking_matrix(d)
        n = d.ncomponents
        for a in range(n):
            assert m[a][a] == 0
            for b in range(n):
                assert m[a][b] == m[b][a]


def test_partition_validation(hopf):
    with pytest.raises(DiagramError):
        Partition((0, 0), 2)          # empty block
    with pytest.raises(DiagramError):
        Partition((0, 2), 2)          # out of range
    p = two_blocks(hopf, {0})
    assert p.block(0) == frozenset({0})
    assert p.complement(0) == frozenset({1})


def test_restrict_hopf_block_is_unknot(hopf, unknot):
    p = two_blocks(hopf, {0})
    r = restrict(hopf, p, 0)
    assert r.ncomponents == 1
    assert invariant_counts(r).classical_crossings == 0
    assert len(r.slices) == 2


def test_restrict_identity(hopf):
    assert restrict(hopf, single_block(hopf), 0) == hopf


def test_restrict_vhopf_crossingless(vhopf):
    p = two_blocks(vhopf, {0})
    r = restrict(vhopf, p, 0)
    assert invariant_counts(r).classical_crossings == 0
    assert invariant_counts(r).virtual_crossings == 0


def test_restrict_idempotent():
    for d in sample_diagrams(20, seed=10, max_components=3):
        if d.ncomponents < 2:
            continue
        p = two_blocks(d, {0})
        r = restrict(d, p, 0)
        assert restrict(r, single_block(r), 0) == r


def test_restriction_keeps_exactly_block():
    for d in sample_diagrams(25, seed=11):
        if d.ncomponents < 3:
            continue
        p = two_blocks(d, {0, d.ncomponents - 1})
        res = restrict_to(d, p.block(0))
        assert res.diagram.ncomponents == len(p.block(0))
        assert set(res.comp_map) == set(p.block(0))


def test_restriction_preserves_kept_linking():
    for d in sample_diagrams(30, seed=12):
        if d.ncomponents < 3:
            continue
        keep = frozenset({0, 1})
        res = restrict_to(d, keep)
        m_old = linking_matrix(d)
        m_new = linking_matrix(res.diagram)
        a, b = res.comp_map[0], res.comp_map[1]
        assert m_new[a][b] == m_old[0][1]
