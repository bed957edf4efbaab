"""Write-only SVG drawings of disk families and their intersection.

Exact values are converted to floats here and nowhere else; the drawing
is display output, never an input to any predicate.
"""

from __future__ import annotations

from typing import Sequence

from .disks import ArcRegion, Disk, RegionKind
from .radicals import cross_sign, point_float, vec_from

_STYLE_DISK = 'fill="none" stroke="#444444" stroke-width="1.5"'
_STYLE_QUERY = 'fill="none" stroke="#b03030" stroke-width="2"'
_STYLE_REGION = 'fill="#6f9bd8" fill-opacity="0.55" stroke="#1f4e9c" stroke-width="1.5"'
_STYLE_SEGMENT = 'stroke="#1e8a1e" stroke-width="2"'
_STYLE_LINE = 'stroke="#1e8a1e" stroke-width="1.5" stroke-dasharray="6 4"'


class _Canvas:
    def __init__(self, xs: list[float], ys: list[float], size: int) -> None:
        pad = 0.08 * max(max(xs) - min(xs), max(ys) - min(ys), 1e-9)
        self.x0, self.x1 = min(xs) - pad, max(xs) + pad
        self.y0, self.y1 = min(ys) - pad, max(ys) + pad
        span = max(self.x1 - self.x0, self.y1 - self.y0)
        self.scale = size / span
        self.width = (self.x1 - self.x0) * self.scale
        self.height = (self.y1 - self.y0) * self.scale

    def pt(self, x: float, y: float) -> tuple[float, float]:
        return (x - self.x0) * self.scale, (self.y1 - y) * self.scale

    def length(self, w: float) -> float:
        return w * self.scale


def _region_path(region: ArcRegion, cv: _Canvas) -> str:
    parts = []
    first = True
    for arc in region.arcs:
        carrier = region.family[arc.disk]
        sx, sy = cv.pt(*point_float(arc.start))
        ex, ey = cv.pt(*point_float(arc.end))
        if first:
            parts.append(f"M {sx:.3f} {sy:.3f}")
            first = False
        r = cv.length(float(carrier.r))
        s_vec = vec_from(arc.start, carrier.x, carrier.y)
        e_vec = vec_from(arc.end, carrier.x, carrier.y)
        large = 1 if cross_sign(s_vec, e_vec) < 0 else 0
        # world-CCW arcs render with sweep 0 once the y axis is flipped
        parts.append(f"A {r:.3f} {r:.3f} 0 {large} 0 {ex:.3f} {ey:.3f}")
    parts.append("Z")
    return " ".join(parts)


def render_disks(
    family: Sequence[Disk],
    region: ArcRegion | None = None,
    query: int | None = None,
    segment: tuple[tuple[float, float], tuple[float, float]] | None = None,
    line: tuple[tuple[float, float], tuple[float, float]] | None = None,
    size: int = 640,
) -> str:
    xs, ys = [], []
    for d in family:
        xs.extend([float(d.x - d.r), float(d.x + d.r)])
        ys.extend([float(d.y - d.r), float(d.y + d.r)])
    cv = _Canvas(xs, ys, size)

    body = []
    if region is not None and region.kind is RegionKind.FULL:
        d = region.family[region.full_index]
        cxp, cyp = cv.pt(float(d.x), float(d.y))
        body.append(
            f'<circle cx="{cxp:.3f}" cy="{cyp:.3f}" r="{cv.length(float(d.r)):.3f}" {_STYLE_REGION}/>'
        )
    elif region is not None and region.kind is RegionKind.REGION:
        body.append(f'<path d="{_region_path(region, cv)}" {_STYLE_REGION}/>')
    elif region is not None and region.kind is RegionKind.POINT:
        px, py = cv.pt(*point_float(region.point))
        body.append(f'<circle cx="{px:.3f}" cy="{py:.3f}" r="3" fill="#1f4e9c"/>')

    for i, d in enumerate(family):
        cxp, cyp = cv.pt(float(d.x), float(d.y))
        style = _STYLE_QUERY if i == query else _STYLE_DISK
        body.append(
            f'<circle cx="{cxp:.3f}" cy="{cyp:.3f}" r="{cv.length(float(d.r)):.3f}" {style}/>'
        )

    if segment is not None:
        (ax, ay), (bx, by) = segment
        axp, ayp = cv.pt(ax, ay)
        bxp, byp = cv.pt(bx, by)
        body.append(f'<line x1="{axp:.3f}" y1="{ayp:.3f}" x2="{bxp:.3f}" y2="{byp:.3f}" {_STYLE_SEGMENT}/>')
        body.append(f'<circle cx="{axp:.3f}" cy="{ayp:.3f}" r="2.5" fill="#1e8a1e"/>')
        body.append(f'<circle cx="{bxp:.3f}" cy="{byp:.3f}" r="2.5" fill="#1e8a1e"/>')

    if line is not None:
        (ax, ay), (bx, by) = line
        axp, ayp = cv.pt(ax, ay)
        bxp, byp = cv.pt(bx, by)
        body.append(f'<line x1="{axp:.3f}" y1="{ayp:.3f}" x2="{bxp:.3f}" y2="{byp:.3f}" {_STYLE_LINE}/>')

    head = (
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{cv.width:.0f}" '
        f'height="{cv.height:.0f}" viewBox="0 0 {cv.width:.3f} {cv.height:.3f}">'
    )
    background = f'<rect width="{cv.width:.3f}" height="{cv.height:.3f}" fill="#ffffff"/>'
    return "\n".join([head, background, *body, "</svg>"]) + "\n"
