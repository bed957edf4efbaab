"""Closest point-pair between a disk and an arc region, and the
perpendicular separating line at the region-side closest point.

The closest region point to a disjoint disk T is the closest point to T's
center, and over each boundary arc the center-distance is unimodal with
its minimum at the "foot" (the carrier-circle point in the direction of
T's center). So the exact minimizer is found by comparing finitely many
candidates: every region corner, plus the foot of every arc whose angular
span contains the foot direction. All comparisons are exact sign tests;
coordinates that need nested radicals (the matching point on T, the pair
distance for a corner minimizer) are reported as certified dyadic
enclosures of configurable width instead.

The line through the region-side closest point, perpendicular to the
connecting segment, always has the whole region on its closed far side
and the whole query disk strictly on the near side (projection onto a
convex set). The carrier disks of the closest feature are natural
candidates for disks that miss T entirely; each is verified by the exact
pair predicate before being reported, because a wide corner angle with a
large carrier disk can wrap around the line and still reach T. For a
corner feature the joint intersection of T with both carriers is empty
even then: each carrier lies inside its tangent half-plane at the corner,
so their lens stays inside the corner's tangent wedge, which the line
separates from T.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .disks import Arc, ArcRegion, Disk, PairKind, RegionKind, disk_side, in_disk, pair_relation
from .radicals import (
    QuadPoint,
    QuadVal,
    Vec,
    qcmp,
    qpoint,
    quad_bounds,
    quadval,
    same_direction,
    sqrt_bounds,
    vec_from,
    vec_in_ccw_span,
)

Interval = tuple[Fraction, Fraction]


@dataclass(frozen=True)
class ArcInterior:
    arc: int


@dataclass(frozen=True)
class Corner:
    corner: int


GFeature = Union[ArcInterior, Corner]


@dataclass(frozen=True)
class ClosestPairResult:
    """Closest pair between a query disk and a disjoint region.

    ``on_g`` and ``center_gap_sq`` (the squared distance from the region
    point to the query disk's center) are exact. The matching point on
    the query disk boundary and the squared pair distance involve one
    more square root; they are exact when that root collapses to a
    rational and certified enclosures otherwise.
    """

    query: Disk
    on_g: QuadPoint
    feature: GFeature
    center_gap_sq: QuadVal
    on_t_exact: QuadPoint | None
    gap_sq_exact: QuadVal | None

    def squared_distance(self, bits: int = 53) -> Interval:
        """Certified enclosure of the squared pair distance, width <= 2**-bits."""
        if self.gap_sq_exact is not None:
            return quad_bounds(self.gap_sq_exact, bits)
        work = bits + 8
        while True:
            s_lo, s_hi = quad_bounds(self.center_gap_sq, work)
            r_lo, _ = sqrt_bounds(max(s_lo, Fraction(0)), work)
            _, r_hi = sqrt_bounds(s_hi, work)
            rt = self.query.r
            lo = s_lo + rt * rt - 2 * rt * r_hi
            hi = s_hi + rt * rt - 2 * rt * r_lo
            if hi - lo <= Fraction(1, 2**bits):
                return lo, hi
            work *= 2

    def on_t(self, bits: int = 53) -> tuple[Interval, Interval]:
        """Certified enclosure of the closest point on the query boundary."""
        if self.on_t_exact is not None:
            return quad_bounds(self.on_t_exact.x, bits), quad_bounds(self.on_t_exact.y, bits)
        t = self.query
        work = bits + 8
        while True:
            s_lo, s_hi = quad_bounds(self.center_gap_sq, work)
            den_lo, _ = sqrt_bounds(max(s_lo, Fraction(0)), work)
            _, den_hi = sqrt_bounds(s_hi, work)
            if den_lo <= 0:
                work *= 2
                continue
            out = []
            for coord, c in ((self.on_g.x, t.x), (self.on_g.y, t.y)):
                u_lo, u_hi = quad_bounds(coord - c, work)
                quots = [u_lo / den_lo, u_lo / den_hi, u_hi / den_lo, u_hi / den_hi]
                out.append((c + t.r * min(quots), c + t.r * max(quots)))
            if all(hi - lo <= Fraction(1, 2**bits) for lo, hi in out):
                return out[0], out[1]
            work *= 2


def _corner_list(g: ArcRegion) -> list[QuadPoint]:
    return [arc.start for arc in g.arcs]


def _foot_candidate(t: Disk, carrier: Disk, arc: Arc | None):
    """Center gap squared for the carrier-circle point facing t's center,
    or None when that direction misses the arc's span."""
    wx, wy = t.x - carrier.x, t.y - carrier.y
    if wx == 0 and wy == 0:
        return None
    w: Vec = (quadval(wx), quadval(wy))
    if arc is not None:
        a = vec_from(arc.start, carrier.x, carrier.y)
        b = vec_from(arc.end, carrier.x, carrier.y)
        if same_direction(w, a) or same_direction(w, b):
            return None
        if not vec_in_ccw_span(w, a, b):
            return None
    d2 = wx * wx + wy * wy
    # |sqrt(d2) - r|^2, exact in the extension by sqrt(d2)
    gap_sq = quadval(d2 + carrier.r * carrier.r, -2 * carrier.r, d2)
    return gap_sq, w, d2


def _foot_result(t: Disk, carrier: Disk, arc_index: int, w: Vec, d2: Fraction) -> dict:
    wx, wy = w[0].rational(), w[1].rational()
    r = carrier.r
    on_g = QuadPoint(
        quadval(carrier.x, r * wx / d2, d2), quadval(carrier.y, r * wy / d2, d2)
    )
    # t's center outside the carrier circle: its nearest boundary point is
    # back toward the carrier; inside: away from it.
    sign = -1 if d2 > r * r else 1
    on_t = QuadPoint(
        quadval(t.x, sign * t.r * wx / d2, d2), quadval(t.y, sign * t.r * wy / d2, d2)
    )
    dist = quadval(-r, 1, d2) if d2 > r * r else quadval(r, -1, d2)
    gap = dist - t.r
    return {
        "on_g": on_g,
        "feature": ArcInterior(arc_index),
        "on_t_exact": on_t,
        "gap_sq_exact": gap * gap,
    }


def _corner_result(t: Disk, corner: QuadPoint, corner_index: int, gap_sq: QuadVal) -> dict:
    gap_exact = None
    if gap_sq.is_rational:
        s = gap_sq.rational()
        gap_exact = quadval(s + t.r * t.r, -2 * t.r, s)
    return {
        "on_g": corner,
        "feature": Corner(corner_index),
        "on_t_exact": None,
        "gap_sq_exact": gap_exact,
    }


def _corner_gap_sq(t: Disk, corner: QuadPoint) -> QuadVal:
    ux, uy = vec_from(corner, t.x, t.y)
    return ux * ux + uy * uy


def closest_pair(t: Disk, g: ArcRegion) -> ClosestPairResult:
    """Closest pair between the disk t and the region g; they must be
    disjoint (checked exactly, a meeting pair raises ValueError)."""
    if g.kind is RegionKind.EMPTY:
        raise ValueError("region is empty; no closest pair exists")

    if g.kind is RegionKind.POINT:
        if in_disk(g.point, t):
            raise ValueError("query disk meets the region")
        gap_sq = _corner_gap_sq(t, g.point)
        data = _corner_result(t, g.point, 0, gap_sq)
        return ClosestPairResult(query=t, center_gap_sq=gap_sq, **data)

    if g.kind is RegionKind.FULL:
        carrier = g.family[g.full_index]
        if pair_relation(t, carrier).kind is not PairKind.DISJOINT:
            raise ValueError("query disk meets the region")
        cand = _foot_candidate(t, carrier, None)
        gap_sq, w, d2 = cand
        data = _foot_result(t, carrier, 0, w, d2)
        return ClosestPairResult(query=t, center_gap_sq=gap_sq, **data)

    center_inside = all(in_disk(qpoint(t.x, t.y), d) for d in g.family)
    if center_inside:
        raise ValueError("query disk meets the region")

    best = None  # (gap_sq, builder)
    for ci, corner in enumerate(_corner_list(g)):
        gap_sq = _corner_gap_sq(t, corner)
        if best is None or qcmp(gap_sq, best[0]) < 0:
            best = (gap_sq, lambda gs=gap_sq, c=corner, i=ci: _corner_result(t, c, i, gs))
    for ai, arc in enumerate(g.arcs):
        carrier = g.family[arc.disk]
        cand = _foot_candidate(t, carrier, arc)
        if cand is None:
            continue
        gap_sq, w, d2 = cand
        if qcmp(gap_sq, best[0]) < 0:
            best = (gap_sq, lambda c=carrier, i=ai, ww=w, dd=d2: _foot_result(t, c, i, ww, dd))

    min_gap_sq = best[0]
    if qcmp(min_gap_sq, quadval(t.r * t.r)) <= 0:
        raise ValueError("query disk meets the region")
    return ClosestPairResult(query=t, center_gap_sq=min_gap_sq, **best[1]())


@dataclass(frozen=True)
class SeparatingLine:
    """Line through the region-side closest point, normal to the segment.

    ``normal`` points from the region toward the query disk; the region is
    in the closed half-plane ``normal . (p - point) <= 0`` and the query
    disk strictly in the other one. ``carriers`` are the disks whose
    circles carry the closest feature; ``separated`` is the subset of them
    verified disjoint from the query disk by the exact pair predicate.
    For a corner feature the query disk and the two carriers never have a
    joint common point, even when a carrier alone still reaches the disk.
    """

    point: QuadPoint
    normal: Vec
    feature: GFeature
    carriers: tuple[int, ...]
    separated: tuple[int, ...]
    closest: ClosestPairResult


def separating_line(t: Disk, g: ArcRegion) -> SeparatingLine:
    res = closest_pair(t, g)
    normal: Vec = (quadval(t.x) - res.on_g.x, quadval(t.y) - res.on_g.y)

    if g.kind is RegionKind.POINT:
        carriers = tuple(i for i, d in enumerate(g.family) if disk_side(g.point, d) == 0)
    elif g.kind is RegionKind.FULL:
        carriers = (g.full_index,)
    elif isinstance(res.feature, ArcInterior):
        carriers = (g.arcs[res.feature.arc].disk,)
    else:
        k = res.feature.corner
        carriers = tuple(sorted({g.arcs[k - 1].disk, g.arcs[k].disk}))

    separated = tuple(
        i for i in carriers if pair_relation(t, g.family[i]).kind is PairKind.DISJOINT
    )
    return SeparatingLine(
        point=res.on_g,
        normal=normal,
        feature=res.feature,
        carriers=carriers,
        separated=separated,
        closest=res,
    )
