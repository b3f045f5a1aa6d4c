"""SVG pictures of a two-variable Newton polytope, its n/d contraction and the positive lattice points."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .dilation import NewtonPolytope, mu
from .poly import PolyMap, degree

Point = tuple[Fraction, Fraction]


class NotTwoDimensional(ValueError):
    pass


def _cross(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def convex_hull(points) -> list[tuple]:
    """Andrew's monotone chain, counter-clockwise, collinear points dropped."""
    pts = sorted(set(points))
    if len(pts) <= 2:
        return pts
    lower, upper = [], []
    for p in pts:
        while len(lower) >= 2 and _cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    for p in reversed(pts):
        while len(upper) >= 2 and _cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


@dataclass(frozen=True)
class PolytopePicture:
    hull: tuple[tuple[int, int], ...]
    contraction: Fraction
    contracted_hull: tuple[Point, ...]
    lattice_in_hull: tuple[tuple[int, int], ...]
    lattice_in_contraction: tuple[tuple[int, int], ...]
    witness: tuple[int, int]


def polytope_picture(f: PolyMap) -> PolytopePicture:
    if f.nvars != 2:
        raise NotTwoDimensional(f"plotting needs 2 variables, map has {f.nvars}")
    poly = NewtonPolytope.of(f)
    hull = convex_hull(poly.generators)
    scale = Fraction(f.nvars, degree(f))
    xmax = max(p[0] for p in hull)
    ymax = max(p[1] for p in hull)
    inside, inside_small = [], []
    for x in range(1, xmax + 1):
        for y in range(1, ymax + 1):
            if poly.contains((x, y)):
                inside.append((x, y))
                if poly.contains((x, y), scale):
                    inside_small.append((x, y))
    return PolytopePicture(
        hull=tuple(hull),
        contraction=scale,
        contracted_hull=tuple((scale * x, scale * y) for x, y in hull),
        lattice_in_hull=tuple(inside),
        lattice_in_contraction=tuple(inside_small),
        witness=tuple(mu(f).witness_target),
    )


def _fmt(v) -> str:
    return f"{float(v):.2f}".rstrip("0").rstrip(".")


def render_svg(pic: PolytopePicture, unit: int = 60, margin: int = 40) -> str:
    xmax = max(max(p[0] for p in pic.hull), pic.witness[0]) + 1
    ymax = max(max(p[1] for p in pic.hull), pic.witness[1]) + 1
    width = 2 * margin + unit * xmax
    height = 2 * margin + unit * ymax

    def sx(x):
        return _fmt(margin + unit * x)

    def sy(y):
        return _fmt(height - margin - unit * y)

    def poly_points(pts):
        return " ".join(f"{sx(x)},{sy(y)}" for x, y in pts)

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'<rect x="0" y="0" width="{width}" height="{height}" fill="white"/>',
        '<g id="grid" stroke="#dddddd" stroke-width="1">',
    ]
    for x in range(xmax + 1):
        out.append(f'<line x1="{sx(x)}" y1="{sy(0)}" x2="{sx(x)}" y2="{sy(ymax)}"/>')
    for y in range(ymax + 1):
        out.append(f'<line x1="{sx(0)}" y1="{sy(y)}" x2="{sx(xmax)}" y2="{sy(y)}"/>')
    out.append("</g>")
    out.append(
        f'<line id="x-axis" x1="{sx(0)}" y1="{sy(0)}" x2="{sx(xmax)}" y2="{sy(0)}" stroke="black"/>'
    )
    out.append(
        f'<line id="y-axis" x1="{sx(0)}" y1="{sy(0)}" x2="{sx(0)}" y2="{sy(ymax)}" stroke="black"/>'
    )
    out.append(
        f'<polygon id="newton-polytope" points="{poly_points(pic.hull)}" '
        'fill="#9ecae1" fill-opacity="0.5" stroke="#3182bd" stroke-width="2"/>'
    )
    out.append(
        f'<polygon id="contraction" points="{poly_points(pic.contracted_hull)}" '
        'fill="#fdae6b" fill-opacity="0.6" stroke="#e6550d" stroke-width="2" '
        f'data-scale="{pic.contraction}"/>'
    )
    out.append('<g id="lattice-points">')
    for x in range(1, xmax + 1):
        for y in range(1, ymax + 1):
            if (x, y) in pic.lattice_in_contraction:
                cls, fill = "in-contraction", "#e6550d"
            elif (x, y) in pic.lattice_in_hull:
                cls, fill = "in-polytope", "#3182bd"
            else:
                cls, fill = "outside", "#bbbbbb"
            out.append(
                f'<circle class="{cls}" cx="{sx(x)}" cy="{sy(y)}" r="4" fill="{fill}" '
                f'data-point="{x},{y}"/>'
            )
    out.append("</g>")
    wx, wy = pic.witness
    out.append(
        f'<circle id="mu-witness" cx="{sx(wx)}" cy="{sy(wy)}" r="9" fill="none" '
        f'stroke="#31a354" stroke-width="3" data-point="{wx},{wy}"/>'
    )
    out.append(
        f'<text x="{margin}" y="{margin // 2}" font-family="sans-serif" font-size="14">'
        f"contraction n/d = {pic.contraction}; mu witness ({wx},{wy})</text>"
    )
    out.append("</svg>")
    return "\n".join(out) + "\n"
