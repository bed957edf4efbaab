"""Exact planar disk geometry: pair relations, intersection regions, and
the three-disk criterion for a family-wide common point.

Disks are closed: "meet" means the closed intersection is nonempty, so a
single shared boundary point counts. Every decision below is made by
exact rational comparison of squared quantities or by exact sign tests on
circle-intersection coordinates; tangency is never detected by tolerance.

The structural guarantee exercised here: for at least three disks, if
every three of them meet then they all meet. ``minimalist_helly_check``
computes the actual intersection and, when it is empty, hunts down a
three-disk witness of the failure; if none existed the guarantee itself
would be false, and the search aborts loudly.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from itertools import combinations
from typing import Sequence, Union

from .errors import InvariantViolation
from .exactq import Rat
from .radicals import (
    QuadPoint,
    ccw_in_span,
    midpoint_dot_coeffs,
    point_lex_cmp,
    qpoint,
    quadval,
    same_point,
    sign_quartic,
    vec_from,
)


@dataclass(frozen=True)
class Disk:
    """Closed disk with exact rational center and positive radius."""

    x: Rat
    y: Rat
    r: Rat

    def __post_init__(self) -> None:
        if self.r <= 0:
            raise ValueError("radius must be strictly positive")

    @property
    def center(self) -> tuple[Rat, Rat]:
        return (self.x, self.y)


def disk(x, y, r) -> Disk:
    return Disk(Fraction(x), Fraction(y), Fraction(r))


class PairKind(Enum):
    DISJOINT = "disjoint"
    EXTERNAL_OSCULATION = "external-osculation"
    PROPER_LENS = "proper-lens"
    INTERNAL_TANGENCY = "internal-tangency"
    PROPER_CONTAINMENT = "proper-containment"
    EQUAL = "equal"


@dataclass(frozen=True)
class PairRelation:
    kind: PairKind
    point: tuple[Rat, Rat] | None = None  # single shared point, when there is one
    inner: int | None = None  # 0/1: which argument is the enclosed disk


def pair_relation(a: Disk, b: Disk) -> PairRelation:
    """Classify two disks by comparing d^2 against (r1+r2)^2 and (r1-r2)^2.

    The shared point of a tangency is always rational: when d^2 equals a
    squared rational the distance itself is rational.
    """
    dx, dy = b.x - a.x, b.y - a.y
    d2 = dx * dx + dy * dy
    rsum = a.r + b.r
    if d2 > rsum * rsum:
        return PairRelation(PairKind.DISJOINT)
    if d2 == rsum * rsum:
        t = a.r / rsum
        return PairRelation(PairKind.EXTERNAL_OSCULATION, point=(a.x + t * dx, a.y + t * dy))
    rdiff = a.r - b.r
    if d2 > rdiff * rdiff:
        return PairRelation(PairKind.PROPER_LENS)
    if d2 == rdiff * rdiff:
        if d2 == 0:
            return PairRelation(PairKind.EQUAL)
        inner = 0 if a.r < b.r else 1
        if a.r > b.r:
            t = a.r / (a.r - b.r)
            pt = (a.x + t * dx, a.y + t * dy)
        else:
            t = b.r / (b.r - a.r)
            pt = (b.x - t * dx, b.y - t * dy)
        return PairRelation(PairKind.INTERNAL_TANGENCY, point=pt, inner=inner)
    return PairRelation(PairKind.PROPER_CONTAINMENT, inner=0 if a.r < b.r else 1)


def disk_side(p: QuadPoint, d: Disk) -> int:
    """-1 strictly inside, 0 on the boundary circle, +1 strictly outside."""
    ux = p.x - d.x
    uy = p.y - d.y
    return (ux * ux + uy * uy - d.r * d.r).sign()


def in_disk(p: QuadPoint, d: Disk) -> bool:
    return disk_side(p, d) <= 0


def midpoint_side(p: QuadPoint, q: QuadPoint, d: Disk) -> int:
    """Side of the midpoint of p and q, even when their radicands differ."""
    u = vec_from(p, d.x, d.y)
    v = vec_from(q, d.x, d.y)
    e0, e1, e2, e3, d1, d2 = midpoint_dot_coeffs(u, v)
    return sign_quartic(e0 - d.r * d.r, e1, e2, e3, d1, d2)


def _lens_corners(a: Disk, b: Disk) -> tuple[QuadPoint, QuadPoint]:
    """The two boundary-circle intersection points of a properly-met pair.

    Returned as (low, high) where the portion of a's circle inside b runs
    counterclockwise from low to high.
    """
    dx, dy = b.x - a.x, b.y - a.y
    d2 = dx * dx + dy * dy
    t = (d2 + a.r * a.r - b.r * b.r) / (2 * d2)
    mx, my = a.x + t * dx, a.y + t * dy
    s2 = (a.r * a.r - t * t * d2) / d2  # squared ratio half-chord / center gap
    low = QuadPoint(quadval(mx, dy, s2), quadval(my, -dx, s2))
    high = QuadPoint(quadval(mx, -dy, s2), quadval(my, dx, s2))
    return low, high


class RegionKind(Enum):
    EMPTY = "empty"
    POINT = "point"
    FULL = "full-disk"
    REGION = "region"


@dataclass(frozen=True)
class Arc:
    """CCW arc of the boundary circle of ``family[disk]`` from start to end."""

    disk: int
    start: QuadPoint
    end: QuadPoint


@dataclass(frozen=True)
class ArcRegion:
    """Intersection of a disk family: empty, one point, a full disk, or a
    convex region bounded by cyclically contiguous CCW arcs."""

    family: tuple[Disk, ...]
    kind: RegionKind
    point: QuadPoint | None = None
    full_index: int | None = None
    arcs: tuple[Arc, ...] = ()

    @staticmethod
    def empty(family: Sequence[Disk]) -> "ArcRegion":
        return ArcRegion(tuple(family), RegionKind.EMPTY)

    @staticmethod
    def single_point(p: QuadPoint, family: Sequence[Disk]) -> "ArcRegion":
        return ArcRegion(tuple(family), RegionKind.POINT, point=p)

    @staticmethod
    def full_disk(i: int, family: Sequence[Disk]) -> "ArcRegion":
        return ArcRegion(tuple(family), RegionKind.FULL, full_index=i)

    @staticmethod
    def from_arcs(arcs: Sequence[Arc], family: Sequence[Disk]) -> "ArcRegion":
        return ArcRegion(tuple(family), RegionKind.REGION, arcs=tuple(arcs))

    @property
    def is_empty(self) -> bool:
        return self.kind is RegionKind.EMPTY

    def corners(self) -> tuple[QuadPoint, ...]:
        if self.kind is RegionKind.POINT:
            return (self.point,)
        if self.kind is RegionKind.REGION:
            return tuple(arc.start for arc in self.arcs)
        return ()

    def contains(self, p: QuadPoint) -> bool:
        return all(in_disk(p, d) for d in self.family)

    def representative_point(self) -> QuadPoint | None:
        """A deterministic point of the region (lex-least corner for a
        proper region, the center for a full disk)."""
        if self.kind is RegionKind.EMPTY:
            return None
        if self.kind is RegionKind.POINT:
            return self.point
        if self.kind is RegionKind.FULL:
            d = self.family[self.full_index]
            return qpoint(d.x, d.y)
        best = self.arcs[0].start
        for arc in self.arcs[1:]:
            if point_lex_cmp(arc.start, best) < 0:
                best = arc.start
        return best


def pair_lens(a: Disk, b: Disk) -> ArcRegion:
    """Two-disk intersection: a two-arc lens, a point, a full disk, or empty."""
    family = (a, b)
    rel = pair_relation(a, b)
    if rel.kind is PairKind.DISJOINT:
        return ArcRegion.empty(family)
    if rel.kind is PairKind.EXTERNAL_OSCULATION:
        return ArcRegion.single_point(qpoint(*rel.point), family)
    if rel.kind is PairKind.EQUAL:
        return ArcRegion.full_disk(0, family)
    if rel.kind in (PairKind.INTERNAL_TANGENCY, PairKind.PROPER_CONTAINMENT):
        return ArcRegion.full_disk(rel.inner, family)
    low, high = _lens_corners(a, b)
    return ArcRegion.from_arcs((Arc(0, low, high), Arc(1, high, low)), family)


# ---------------------------------------------------------------------------
# Incremental clipping


class _CircleClass(Enum):
    INSIDE = "inside"
    OUTSIDE = "outside"
    TOUCH = "touch"
    CROSS = "cross"


def _circle_vs_disk(circle: Disk, clip: Disk):
    """Relation of the boundary circle of ``circle`` to the closed disk
    ``clip``: fully inside, fully outside, one touch point, or a proper
    crossing with a CCW allowed span (low, high)."""
    dx, dy = clip.x - circle.x, clip.y - circle.y
    d2 = dx * dx + dy * dy
    rsum = circle.r + clip.r
    if d2 > rsum * rsum:
        return (_CircleClass.OUTSIDE, None)
    if d2 == rsum * rsum:
        t = circle.r / rsum
        return (_CircleClass.TOUCH, qpoint(circle.x + t * dx, circle.y + t * dy))
    rdiff = circle.r - clip.r
    if d2 > rdiff * rdiff:
        return (_CircleClass.CROSS, _lens_corners(circle, clip))
    if d2 == rdiff * rdiff:
        if clip.r > circle.r:
            return (_CircleClass.INSIDE, None)
        t = circle.r / (circle.r - clip.r)
        return (_CircleClass.TOUCH, qpoint(circle.x + t * dx, circle.y + t * dy))
    return (_CircleClass.INSIDE, None) if clip.r > circle.r else (_CircleClass.OUTSIDE, None)


def _span_pieces(
    u: QuadPoint,
    v: QuadPoint,
    a: QuadPoint,
    b: QuadPoint,
    cx: Fraction,
    cy: Fraction,
) -> list[tuple[QuadPoint, QuadPoint]]:
    """Intersect the CCW arc span [u, v] with the CCW allowed span [a, b]
    on one circle. Returns pieces in order from u; single points come back
    as degenerate (p, p) pairs."""
    events: list[tuple[QuadPoint, bool]] = []  # (point, opens_allowed)
    for p, opens in ((a, True), (b, False)):
        if same_point(p, u) or same_point(p, v):
            continue
        if ccw_in_span(p, u, v, cx, cy):
            events.append((p, opens))
    if len(events) == 2 and not ccw_in_span(events[0][0], u, events[1][0], cx, cy):
        events.reverse()

    if same_point(u, a):
        state = True
    elif same_point(u, b):
        state = False
    else:
        state = ccw_in_span(u, a, b, cx, cy)

    pieces: list[tuple[QuadPoint, QuadPoint]] = []
    cursor = u if state else None
    for p, opens in events:
        if opens:
            if state:
                raise InvariantViolation("arc clipping events out of order")
            state, cursor = True, p
        else:
            if not state:
                raise InvariantViolation("arc clipping events out of order")
            pieces.append((cursor, p))
            state, cursor = False, None
    if state:
        pieces.append((cursor, v))

    def in_allowed_closed(p: QuadPoint) -> bool:
        return same_point(p, a) or same_point(p, b) or ccw_in_span(p, a, b, cx, cy)

    # Endpoint touches: u or v can sit exactly on the allowed boundary
    # while the open arc next to them is clipped away.
    if not (pieces and same_point(pieces[0][0], u)) and in_allowed_closed(u):
        pieces.insert(0, (u, u))
    if not (pieces and same_point(pieces[-1][1], v)) and in_allowed_closed(v):
        pieces.append((v, v))
    return pieces


def _disk_within(inner: Disk, outer: Disk) -> bool:
    """Closed containment of one disk in another, exact."""
    if inner.r > outer.r:
        return False
    dx, dy = inner.x - outer.x, inner.y - outer.y
    gap = outer.r - inner.r
    return dx * dx + dy * dy <= gap * gap


def _clip_full(full_index: int, new_index: int, family: tuple[Disk, ...]) -> ArcRegion:
    base, new = family[full_index], family[new_index]
    rel = pair_relation(base, new)
    if rel.kind is PairKind.DISJOINT:
        return ArcRegion.empty(family)
    if rel.kind is PairKind.EXTERNAL_OSCULATION:
        return ArcRegion.single_point(qpoint(*rel.point), family)
    if rel.kind is PairKind.EQUAL:
        raise InvariantViolation("duplicate disks must be removed before clipping")
    if rel.kind in (PairKind.INTERNAL_TANGENCY, PairKind.PROPER_CONTAINMENT):
        return ArcRegion.full_disk(full_index if rel.inner == 0 else new_index, family)
    low, high = _lens_corners(base, new)
    return ArcRegion.from_arcs((Arc(full_index, low, high), Arc(new_index, high, low)), family)


def _clip(region: ArcRegion, new_index: int, seen: Sequence[int]) -> ArcRegion:
    family = region.family
    new = family[new_index]
    if region.kind is RegionKind.EMPTY:
        return region
    if region.kind is RegionKind.POINT:
        return region if in_disk(region.point, new) else ArcRegion.empty(family)
    if region.kind is RegionKind.FULL:
        return _clip_full(region.full_index, new_index, family)

    pieces: list[Arc] = []
    touches: list[QuadPoint] = []
    for arc in region.arcs:
        carrier = family[arc.disk]
        klass, payload = _circle_vs_disk(carrier, new)
        if klass is _CircleClass.INSIDE:
            pieces.append(arc)
        elif klass is _CircleClass.OUTSIDE:
            continue
        elif klass is _CircleClass.TOUCH:
            p = payload
            if (
                same_point(p, arc.start)
                or same_point(p, arc.end)
                or ccw_in_span(p, arc.start, arc.end, carrier.x, carrier.y)
            ):
                touches.append(p)
        else:
            low, high = payload
            for s, e in _span_pieces(arc.start, arc.end, low, high, carrier.x, carrier.y):
                if same_point(s, e):
                    touches.append(s)
                else:
                    pieces.append(Arc(arc.disk, s, e))

    if not pieces:
        if touches:
            first = touches[0]
            for other in touches[1:]:
                if not same_point(first, other):
                    raise InvariantViolation("disconnected touch points in a convex clip")
            return ArcRegion.single_point(first, family)
        if all(_disk_within(new, family[j]) for j in seen):
            return ArcRegion.full_disk(new_index, family)
        return ArcRegion.empty(family)

    # Touch points beside surviving pieces are already members of the new
    # region: either a piece endpoint or an interior point of a bridge arc
    # (the new circle passing straight through an old corner or tangency).

    out: list[Arc] = []
    count = len(pieces)
    for i, piece in enumerate(pieces):
        out.append(piece)
        nxt = pieces[(i + 1) % count]
        if not same_point(piece.end, nxt.start):
            out.append(Arc(new_index, piece.end, nxt.start))
    return ArcRegion.from_arcs(out, family)


def intersect_region(family: Sequence[Disk]) -> ArcRegion:
    """Intersection of every disk in the family, by incremental clipping.

    Starts from the first disk as a full-disk region and clips with each
    subsequent one. Duplicates are removed up front (first occurrence
    kept); arc and full-disk indices refer to the family as given.
    """
    disks = tuple(family)
    if not disks:
        raise ValueError("family must be nonempty")
    keep: list[int] = []
    for i, d in enumerate(disks):
        if not any(disks[j] == d for j in keep):
            keep.append(i)
    region = ArcRegion.full_disk(keep[0], disks)
    seen = [keep[0]]
    for idx in keep[1:]:
        region = _clip(region, idx, seen)
        seen.append(idx)
        if region.is_empty:
            break
    return region


# ---------------------------------------------------------------------------
# Triples and the family-wide check


def triple_meet(a: Disk, b: Disk, c: Disk) -> bool:
    """Exact emptiness test for a three-disk intersection.

    Case split: a missing pair settles it; a contained disk reduces the
    triple to a pair; an osculating pair pins the candidate point; with
    all pairs properly met, the triple meets exactly when some pair's
    circle-intersection point lies in the third disk.
    """
    trio = (a, b, c)
    pairs = ((0, 1, 2), (0, 2, 1), (1, 2, 0))
    rels = {}
    for i, j, k in pairs:
        rel = pair_relation(trio[i], trio[j])
        if rel.kind is PairKind.DISJOINT:
            return False
        rels[(i, j)] = (rel, k)
    for (i, j), (rel, k) in rels.items():
        if rel.kind in (PairKind.EQUAL, PairKind.INTERNAL_TANGENCY, PairKind.PROPER_CONTAINMENT):
            inner = trio[i] if (rel.kind is PairKind.EQUAL or rel.inner == 0) else trio[j]
            return pair_relation(inner, trio[k]).kind is not PairKind.DISJOINT
    for (i, j), (rel, k) in rels.items():
        if rel.kind is PairKind.EXTERNAL_OSCULATION:
            return in_disk(qpoint(*rel.point), trio[k])
    for (i, j), (rel, k) in rels.items():
        for corner in _lens_corners(trio[i], trio[j]):
            if in_disk(corner, trio[k]):
                return True
    return False


@dataclass(frozen=True)
class CommonPoint:
    point: QuadPoint


@dataclass(frozen=True)
class ViolatingTriple:
    indices: tuple[int, int, int]


MinimalistVerdict = Union[CommonPoint, ViolatingTriple]


def minimalist_helly_check(family: Sequence[Disk]) -> MinimalistVerdict:
    """Either a point common to every disk, or three disks with no common
    point (the lexicographically first such triple).

    An empty intersection with no failing triple would contradict the
    three-disk guarantee, so that case aborts loudly.
    """
    disks = tuple(family)
    if len(disks) < 3:
        raise ValueError("at least three disks required")
    region = intersect_region(disks)
    if not region.is_empty:
        return CommonPoint(region.representative_point())
    for i, j, k in combinations(range(len(disks)), 3):
        if not triple_meet(disks[i], disks[j], disks[k]):
            return ViolatingTriple((i, j, k))
    raise InvariantViolation(
        "empty intersection but every three disks meet; this contradicts "
        "the three-disk guarantee and indicates a bug"
    )
