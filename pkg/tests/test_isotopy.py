from __future__ import annotations

import pytest

from vlink import parse
from vlink.isotopy import (IsoKind, IsotopyError, IsotopyStep, apply_isotopy,
                           invert_isotopy, isotopy_sites)
from vlink.planemap import plane_key

from conftest import sample_diagrams


def test_every_site_preserves_plane_map():
    checked = 0
    for d in sample_diagrams(60, seed=30):
        k = plane_key(d)
        for step in isotopy_sites(d):
            d2 = apply_isotopy(d, step)
            assert plane_key(d2) == k, (str(d), step)
            checked += 1
    assert checked > 300


def test_zigzag_create_everywhere_preserves_map():
    for d in sample_diagrams(15, seed=31, max_crossings=5):
        k = plane_key(d)
        for i in range(len(d.slices) + 1):
            for p in range(1, d.widths[i] + 1):
                for v in "LR":
                    st = IsotopyStep(IsoKind.ZZ_CREATE, i, p, v)
                    assert plane_key(apply_isotopy(d, st)) == k


def test_inverses_restore_word():
    for d in sample_diagrams(40, seed=32):
        for step in isotopy_sites(d):
            d2 = apply_isotopy(d, step)
            back = apply_isotopy(d2, invert_isotopy(d, step))
            assert back == d


def test_distant_commutation_example():
    d = parse("cup 1; cup 3; x+ 1; v 3; cap 1; cap 1")
    d2 = apply_isotopy(d, IsotopyStep(IsoKind.COMMUTE, 2))
    assert d2.slices[2].kind.value == "v"
    assert plane_key(d2) == plane_key(d)


def test_zigzag_cancel_example():
    d = parse("cup 1; cup 2; cap 1; cap 1")
    sites = [s for s in isotopy_sites(d) if s.kind is IsoKind.ZZ_CANCEL]
    assert sites
    d2 = apply_isotopy(d, sites[0])
    assert len(d2.slices) == 2


def test_slide_past_cap_example():
    d = parse("cup 1; cup 1; x+ 2; cap 3; cap 1")
    slides = [s for s in isotopy_sites(d) if s.kind is IsoKind.SLIDE]
    assert slides
    for s in slides:
        d2 = apply_isotopy(d, s)
        assert plane_key(d2) == plane_key(d)
        assert len(d2.slices) == len(d.slices)


def test_interacting_slices_rejected():
    d = parse("cup 1; x+ 1; cap 1")
    with pytest.raises(IsotopyError):
        apply_isotopy(d, IsotopyStep(IsoKind.COMMUTE, 0))


def test_ambiguous_cap_cup_commute_variants():
    d = parse("cup 1; cup 3; cap 1; cup 1; cap 1; cap 1")
    # find a cap directly below a cup at the same position
    found = False
    for i in range(len(d.slices) - 1):
        lo, hi = d.slices[i], d.slices[i + 1]
        if lo.kind.value == "cap" and hi.kind.value == "cup" and lo.pos == hi.pos:
            left = apply_isotopy(d, IsotopyStep(IsoKind.COMMUTE, i, 0, "L"))
            right = apply_isotopy(d, IsotopyStep(IsoKind.COMMUTE, i, 0, "R"))
            assert plane_key(left) == plane_key(d) == plane_key(right)
            found = True
    assert found
