import random
from fractions import Fraction

import pytest

from helly import (
    ArcInterior,
    Corner,
    Disk,
    PairKind,
    closest_pair,
    disk,
    intersect_region,
    pair_relation,
    qpoint,
    quadval,
    same_point,
    separating_line,
    triple_meet,
)
from helly.disks import RegionKind
from helly.radicals import QuadPoint, qcmp, sign_nested, vec_from
from helpers import random_family


def _symmetric_lens(a, r):
    return intersect_region([disk(0, -a, r), disk(0, a, r)])


def test_full_disk_collinear_golden():
    g = intersect_region([disk(0, 0, 1)])
    res = closest_pair(disk(4, 0, 1), g)
    assert res.feature == ArcInterior(0)
    assert same_point(res.on_g, qpoint(1, 0))
    assert same_point(res.on_t_exact, qpoint(3, 0))
    assert res.gap_sq_exact.rational() == 4
    lo, hi = res.squared_distance(30)
    assert lo == hi == 4


def test_corner_closest_golden():
    g = _symmetric_lens(1, Fraction(3, 2))
    t = disk(4, 0, 1)
    res = closest_pair(t, g)
    assert isinstance(res.feature, Corner)
    expected = QuadPoint(quadval(0, Fraction(1, 2), 5), quadval(0))
    assert same_point(res.on_g, expected)
    # squared pair distance encloses (4 - sqrt(5)/2 - 1)^2
    lo, hi = res.squared_distance(40)
    approx = (4 - 5 ** 0.5 / 2 - 1) ** 2
    assert float(lo) <= approx <= float(hi)
    assert hi - lo <= Fraction(1, 2**40)
    sep = separating_line(t, g)
    assert sep.carriers == (0, 1)
    assert sep.separated == (0, 1)
    for i in sep.separated:
        assert pair_relation(t, g.family[i]).kind is PairKind.DISJOINT


def test_arc_interior_golden_above():
    g = _symmetric_lens(1, Fraction(3, 2))
    t = disk(0, 4, 1)
    res = closest_pair(t, g)
    assert isinstance(res.feature, ArcInterior)
    # the minimizing arc is carried by the lower-centered disk
    assert g.arcs[res.feature.arc].disk == 0
    assert same_point(res.on_g, qpoint(0, Fraction(1, 2)))
    assert res.gap_sq_exact.rational() == Fraction(25, 4)
    sep = separating_line(t, g)
    assert sep.carriers == (0,)
    assert sep.separated == (0,)


def test_single_point_region():
    g = intersect_region([disk(0, 0, 1), disk(2, 0, 1)])
    assert g.kind is RegionKind.POINT
    t = disk(5, 0, 1)
    res = closest_pair(t, g)
    assert res.feature == Corner(0)
    assert same_point(res.on_g, qpoint(1, 0))
    assert res.gap_sq_exact is not None  # rational corner, exact output
    sep = separating_line(t, g)
    assert set(sep.carriers) == {0, 1}
    assert sep.separated == (0, 1)


def test_meeting_query_rejected():
    g = intersect_region([disk(0, 0, 1)])
    with pytest.raises(ValueError):
        closest_pair(disk(1, 0, 1), g)  # overlaps
    with pytest.raises(ValueError):
        closest_pair(disk(2, 0, 1), g)  # osculates: closed disks meet
    with pytest.raises(ValueError):
        closest_pair(disk(0, 0, Fraction(1, 4)), g)  # contained


def test_empty_region_rejected():
    g = intersect_region([disk(0, 0, 1), disk(5, 0, 1)])
    with pytest.raises(ValueError):
        closest_pair(disk(10, 0, 1), g)


def test_corner_query_touching_region_rejected():
    wide = [disk(0, Fraction(-3, 2), Fraction(5, 2)), disk(0, Fraction(3, 2), Fraction(5, 2))]
    g = intersect_region(wide)
    # osculates the region exactly at the rational corner (2, 0)
    with pytest.raises(ValueError):
        closest_pair(disk(3, 0, 1), g)


def test_wide_corner_carriers_can_meet_query_but_triple_is_empty():
    # corner angle wider than a right angle with huge carrier disks: the
    # carriers wrap around the separating line and reach the query disk,
    # yet the query disk and the two carriers still have no joint point
    di = disk(Fraction(-14, 5), Fraction(48, 5), 10)
    dj = disk(Fraction(-14, 5), Fraction(-48, 5), 10)
    t = disk(1, 0, Fraction(1, 2))
    g = intersect_region([di, dj])
    res = closest_pair(t, g)
    assert isinstance(res.feature, Corner)
    assert same_point(res.on_g, qpoint(0, 0))
    sep = separating_line(t, g)
    assert sep.carriers == (0, 1)
    assert sep.separated == ()  # both carriers meet t individually
    assert pair_relation(t, di).kind is PairKind.PROPER_LENS
    assert pair_relation(t, dj).kind is PairKind.PROPER_LENS
    assert not triple_meet(t, di, dj)


def _assert_line_guarantees(t, g, sep):
    from helly.radicals import beyond_foot_sign, vec_in_ccw_span

    nn = sep.normal[0] * sep.normal[0] + sep.normal[1] * sep.normal[1]
    # every corner of g on the closed region side: with u, v the vectors
    # from t's center to the corner and to the line point, the side test
    # (corner - point) . normal <= 0 reads (u - v) . v >= 0
    v = vec_from(sep.point, t.x, t.y)
    for c in g.corners():
        u = vec_from(c, t.x, t.y)
        assert beyond_foot_sign(u, v) >= 0
    # every arc stays on the region side: its extreme point along the
    # normal is either an endpoint (a corner, already checked) or the
    # normal-direction foot, checked via one nested-radical sign
    if g.kind is RegionKind.REGION:
        for arc in g.arcs:
            carrier = g.family[arc.disk]
            a = vec_from(arc.start, carrier.x, carrier.y)
            b = vec_from(arc.end, carrier.x, carrier.y)
            if vec_in_ccw_span(sep.normal, a, b):
                base = (quadval(carrier.x) - sep.point.x) * sep.normal[0] + (
                    quadval(carrier.y) - sep.point.y
                ) * sep.normal[1]
                assert sign_nested(base, carrier.r, nn) <= 0
    # the query disk strictly on the other side reduces to the exact
    # disjointness margin: |center gap|^2 > r_t^2
    assert qcmp(sep.closest.center_gap_sq, quadval(t.r * t.r)) > 0


def test_separation_guarantees_on_random_disjoint_instances():
    rng = random.Random(60601)
    built = 0
    while built < 60:
        fam = random_family(rng, n=rng.randint(1, 4), span=6, rhi=6)
        g = intersect_region(fam)
        if g.is_empty:
            continue
        t = Disk(
            Fraction(rng.randint(8, 30)), Fraction(rng.randint(-20, 20)), Fraction(rng.randint(1, 4))
        )
        try:
            sep = separating_line(t, g)
        except ValueError:
            continue
        built += 1
        _assert_line_guarantees(t, g, sep)
        for i in sep.separated:
            assert pair_relation(t, g.family[i]).kind is PairKind.DISJOINT
        if isinstance(sep.feature, Corner) and len(sep.carriers) == 2:
            assert not triple_meet(t, g.family[sep.carriers[0]], g.family[sep.carriers[1]])


def test_closest_pair_minimum_beats_all_corners():
    rng = random.Random(424242)
    built = 0
    while built < 40:
        fam = random_family(rng, n=rng.randint(2, 4), span=5, rhi=6)
        g = intersect_region(fam)
        if g.kind is not RegionKind.REGION:
            continue
        t = Disk(Fraction(rng.randint(10, 25)), Fraction(rng.randint(-12, 12)), Fraction(1))
        try:
            res = closest_pair(t, g)
        except ValueError:
            continue
        built += 1
        for c in g.corners():
            ux, uy = vec_from(c, t.x, t.y)
            assert qcmp(res.center_gap_sq, ux * ux + uy * uy) <= 0


def test_on_t_enclosure_tightens():
    g = _symmetric_lens(1, Fraction(3, 2))
    res = closest_pair(disk(4, 0, 1), g)
    (xlo, xhi), (ylo, yhi) = res.on_t(60)
    assert xhi - xlo <= Fraction(1, 2**60)
    assert yhi - ylo <= Fraction(1, 2**60)
    # geometric expectation: on_t = (4,0) - unit_x = (3, 0)
    assert abs(float(xlo) - 3.0) < 1e-9
    assert abs(float(ylo) - 0.0) < 1e-9
