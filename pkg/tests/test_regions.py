"""Octant region formulas and their facet systems."""

import pytest
from gmpy2 import mpq

from crosspack.certifier import subcell_union_check
from crosspack.geometry import dd_convert
from crosspack.regions import (
    SIGNS,
    eval_points,
    flip,
    region_hrep,
    region_vertices,
    subcell_vertices,
)


def test_signs_enumeration():
    assert len(SIGNS) == 8
    assert len(set(SIGNS)) == 8


def test_flip():
    assert flip((1, 1, 1), 0) == (-1, 1, 1)
    assert flip((-1, 1, -1), 2) == (-1, 1, 1)


def test_region_vertices_at_two_thirds():
    pts = set(eval_points(region_vertices((1, 1, 1)), mpq(2, 3)))
    assert pts == {(mpq(1, 3),) * 3}


def test_region_vertices_at_half():
    pts = set(eval_points(region_vertices((1, 1, 1)), mpq(1, 2)))
    h = mpq(1, 2)
    assert pts == {
        (mpq(0),) * 3,
        (h, h, mpq(0)),
        (h, mpq(0), h),
        (mpq(0), h, h),
    }


def test_region_sign_symmetry():
    r = mpq(11, 20)
    pos = eval_points(region_vertices((1, 1, 1)), r)
    neg = eval_points(region_vertices((-1, 1, 1)), r)
    assert {(-p[0], p[1], p[2]) for p in pos} == set(neg)


def test_dd_equivalence_all_signs_and_radii():
    for r in (mpq(6, 11), mpq(4, 7), mpq(3, 5), mpq(13, 22), mpq(2, 3)):
        for sign in SIGNS:
            v = dd_convert(region_hrep(sign, r))
            assert v.vertex_set() == frozenset(
                eval_points(region_vertices(sign), r)
            ), (sign, r)


def test_region_hrep_range():
    with pytest.raises(ValueError):
        region_hrep((1, 1, 1), mpq(1, 3))
    region_hrep((1, 1, 1), mpq(3, 4))  # empty but well-formed


def test_subcell_vertex_counts():
    for i in (1, 2, 3):
        assert len(subcell_vertices((1, 1, 1), i)) == 5
    with pytest.raises(ValueError):
        subcell_vertices((1, 1, 1), 4)


def test_subcell_shares_region_vertices():
    r = mpq(3, 5)
    region = set(eval_points(region_vertices((1, 1, 1)), r))
    for i in (1, 2, 3):
        cell = set(eval_points(subcell_vertices((1, 1, 1), i), r))
        assert (mpq(1, 3),) * 3 in cell  # the centroid appears in every subcell
        assert len(cell & region) == 2


def test_subcell_union_covers_region():
    ok, witness = subcell_union_check(mpq(4, 7), samples_per_region=200, seed=1)
    assert ok, witness
