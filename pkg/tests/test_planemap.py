from __future__ import annotations

from vlink import parse
from vlink.planemap import plane_isotopic, plane_key, to_plane_map

from conftest import HOPF, NESTED_LOOPS, TWO_LOOPS, sample_diagrams


def test_unknot_map(unknot):
    pm = to_plane_map(unknot)
    assert len(pm.vertices) == 0
    assert pm.nfaces == 2
    assert len(pm.circles) == 1


def test_hopf_map(hopf):
    pm = to_plane_map(hopf)
    assert len(pm.vertices) == 2
    assert pm.nfaces == 4
    assert pm.euler_checks() == [(2, 4, 4)]


def test_euler_formula_random():
    for d in sample_diagrams(40, seed=20):
        for v, e, f in to_plane_map(d).euler_checks():
            assert v - e + f == 2


def test_nesting_distinguishes():
    assert not plane_isotopic(parse(TWO_LOOPS), parse(NESTED_LOOPS))


def test_reflexive_and_stable(hopf):
    assert plane_isotopic(hopf, parse(HOPF))


def test_mirror_hopf_differs(hopf):
    mirror = parse(HOPF.replace("x+", "x-"))
    assert not plane_isotopic(hopf, mirror)


def test_circle_orientation_matters(unknot):
    cw = parse("cup 1; cap 1; orient 1 -")
    assert not plane_isotopic(unknot, cw)


def test_circle_nesting_with_orientations():
    a = parse("cup 1; cup 2; cap 2; cap 1; orient 1 +; orient 2 -")
    b = parse("cup 1; cup 2; cap 2; cap 1; orient 1 -; orient 2 +")
    assert not plane_isotopic(a, b)
    assert plane_isotopic(a, parse("cup 1; cup 2; cap 2; cap 1; orient 1 +; orient 2 -"))


def test_commuted_word_same_key():
    a = parse("cup 1; cup 3; x+ 1; v 3; cap 1; cap 1")
    b = parse("cup 1; cup 3; v 3; x+ 1; cap 1; cap 1")
    assert plane_isotopic(a, b)


def test_translation_invariance():
    # the same tangle drawn around a spectator loop on either side
    a = parse("cup 1; x+ 1; cap 1; cup 1; cap 1")
    b = parse("cup 1; cap 1; cup 1; x+ 1; cap 1")
    assert plane_isotopic(a, b)


def test_kink_chirality_distinguished():
    assert not plane_isotopic(parse("cup 1; x+ 1; cap 1"),
                              parse("cup 1; x- 1; cap 1"))


def test_serialization_stability():
    for d in sample_diagrams(25, seed=21):
        assert plane_key(parse(str(d))) == plane_key(d)
