"""SVG rendering of instances and broken line constructions.

Output is deterministic for fixed input; the exact affine map from problem
coordinates to the 800x800 viewbox is recorded in a comment so figures can
be audited back to the rational data.
"""

from __future__ import annotations

from fractions import Fraction

from .geometry import Point
from .polygon import Polygon
from .poncelet import BlcResult

SIZE = 800
MARGIN = 40


def _bounds(points: list[Point]) -> tuple[Fraction, Fraction, Fraction, Fraction]:
    xs = [p.x for p in points]
    ys = [p.y for p in points]
    return min(xs), max(xs), min(ys), max(ys)


class _Map:
    """Affine problem->viewbox map: uniform scale, y flipped."""

    def __init__(self, points: list[Point]):
        x0, x1, y0, y1 = _bounds(points)
        w = max(x1 - x0, Fraction(1, 1000))
        h = max(y1 - y0, Fraction(1, 1000))
        self.scale = Fraction(SIZE - 2 * MARGIN) / max(w, h)
        self.x0, self.y1 = x0, y1

    def __call__(self, p: Point) -> tuple[float, float]:
        x = MARGIN + float(self.scale * (p.x - self.x0))
        y = MARGIN + float(self.scale * (self.y1 - p.y))
        return x, y

    def comment(self) -> str:
        return (
            f"<!-- map: X = {MARGIN} + {self.scale}*(x - {self.x0}), "
            f"Y = {MARGIN} + {self.scale}*({self.y1} - y) -->"
        )


def _poly_path(m: _Map, poly: Polygon) -> str:
    pts = " ".join(f"{x:.3f},{y:.3f}" for x, y in (m(v) for v in poly.vertices))
    return pts


def render_instance(
    P: Polygon,
    Pp: Polygon,
    blc_runs: list[BlcResult] | None = None,
    title: str = "",
) -> str:
    pts = list(P.vertices) + list(Pp.vertices)
    for run in blc_runs or []:
        pts.extend(b.realize() for b in run.points)
    m = _Map(pts)
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {SIZE} {SIZE}">',
        m.comment(),
    ]
    if title:
        parts.append(f'<title>{title}</title>')
    parts.append(
        f'<polygon points="{_poly_path(m, P)}" fill="none" stroke="black" stroke-width="2"/>'
    )
    parts.append(
        f'<polygon points="{_poly_path(m, Pp)}" fill="#dddddd" stroke="#555555" stroke-width="1.5"/>'
    )
    for run in blc_runs or []:
        chain = " ".join(
            f"{x:.3f},{y:.3f}" for x, y in (m(b.realize()) for b in run.points)
        )
        parts.append(
            f'<polyline points="{chain}" fill="none" stroke="#cc2222" '
            f'stroke-width="1.5" stroke-dasharray="6 4"/>'
        )
        for k, b in enumerate(run.points):
            x, y = m(b.realize())
            parts.append(f'<circle cx="{x:.3f}" cy="{y:.3f}" r="4" fill="#cc2222"/>')
            parts.append(
                f'<text x="{x + 8:.3f}" y="{y - 8:.3f}" font-size="18">x{k + 1}</text>'
            )
    for k, v in enumerate(P.vertices):
        x, y = m(v)
        parts.append(f'<circle cx="{x:.3f}" cy="{y:.3f}" r="3" fill="black"/>')
        parts.append(
            f'<text x="{x + 6:.3f}" y="{y + 16:.3f}" font-size="16" fill="#333333">p{k + 1}</text>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
