"""Standalone SVG pictures of the spectrum hulls.

The drawing is fully deterministic: fixed canvas, fixed float formatting, no
timestamps, so two renders of the same analysis are byte-identical.
"""

from __future__ import annotations

import numpy as np

from .hull import HullAnalysis

# canvas: 800 x 800, unit circle of radius 300 px centered at (400, 400),
# imaginary axis pointing up
_SIZE = 800
_R = 300.0
_CX = _CY = 400.0

# spectrum points by circle label; A carries lam4, then lam1, lam2, lam3
_POINT_LABELS = ("A", "B", "C", "D")
_POINT_INDEX = (3, 0, 1, 2)
# midpoints of DA, AB, BC, CD: exactly the four local-hull vertices
_MID_LABELS = ("P", "Q", "R", "S")
_MID_PAIRS = ((3, 0), (0, 1), (1, 2), (2, 3))


def _fmt(x: float) -> str:
    s = f"{x:.3f}"
    return "0.000" if s == "-0.000" else s


def _xy(z: complex) -> tuple[str, str]:
    return _fmt(_CX + _R * z.real), _fmt(_CY - _R * z.imag)


def _poly_points(vertices: np.ndarray) -> str:
    return " ".join(",".join(_xy(complex(v))) for v in vertices)


def _label(z: complex, text: str, color: str) -> str:
    # push the label radially away from the crowd
    r = abs(z)
    direction = z / r if r > 1e-9 else 1 + 0j
    pos = z + 0.09 * direction
    x, y = _xy(pos)
    return (
        f'<text x="{x}" y="{y}" fill="{color}" font-size="22" '
        f'font-family="monospace" text-anchor="middle" dominant-baseline="middle">{text}</text>'
    )


def render_hull_svg(analysis: HullAnalysis) -> str:
    """The two hulls of one spectrum as an 800 x 800 SVG document."""
    e = analysis.eigenphases
    pts = np.exp(-1j * e)
    parts: list[str] = []
    parts.append(
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_SIZE}" height="{_SIZE}" '
        f'viewBox="0 0 {_SIZE} {_SIZE}">'
    )
    parts.append(f'<rect width="{_SIZE}" height="{_SIZE}" fill="#ffffff"/>')
    # axes and the unit circle
    parts.append(f'<line x1="60" y1="{_fmt(_CY)}" x2="740" y2="{_fmt(_CY)}" stroke="#cccccc" stroke-width="1"/>')
    parts.append(f'<line x1="{_fmt(_CX)}" y1="60" x2="{_fmt(_CX)}" y2="740" stroke="#cccccc" stroke-width="1"/>')
    parts.append(
        f'<circle cx="{_fmt(_CX)}" cy="{_fmt(_CY)}" r="{_fmt(_R)}" fill="none" stroke="#888888" stroke-width="1.5"/>'
    )
    # global hull (filled), then local hull on top
    vg = analysis.hull_global.vertices
    vl = analysis.hull_local.vertices
    if len(vg) >= 3:
        parts.append(f'<polygon points="{_poly_points(vg)}" fill="#dce8f7" stroke="#2c5f9e" stroke-width="2"/>')
    else:
        parts.append(f'<polyline points="{_poly_points(vg)}" fill="none" stroke="#2c5f9e" stroke-width="2"/>')
    if len(vl) >= 3:
        parts.append(
            f'<polygon points="{_poly_points(vl)}" fill="#f8e3d4" fill-opacity="0.8" '
            f'stroke="#c2571a" stroke-width="2"/>'
        )
    else:
        parts.append(f'<polyline points="{_poly_points(vl)}" fill="none" stroke="#c2571a" stroke-width="2"/>')
    # distance segments from the origin to each nearest point
    ox, oy = _xy(0j)
    for nearest, color in ((analysis.nearest_global, "#2c5f9e"), (analysis.nearest_local, "#c2571a")):
        if abs(nearest) > 1e-12:
            nx, ny = _xy(complex(nearest))
            parts.append(
                f'<line x1="{ox}" y1="{oy}" x2="{nx}" y2="{ny}" '
                f'stroke="{color}" stroke-width="2" stroke-dasharray="6,4"/>'
            )
            parts.append(f'<circle cx="{nx}" cy="{ny}" r="5" fill="{color}"/>')
    # origin cross
    parts.append(f'<line x1="{_fmt(_CX - 8)}" y1="{oy}" x2="{_fmt(_CX + 8)}" y2="{oy}" stroke="#000000" stroke-width="2"/>')
    parts.append(f'<line x1="{ox}" y1="{_fmt(_CY - 8)}" x2="{ox}" y2="{_fmt(_CY + 8)}" stroke="#000000" stroke-width="2"/>')
    # spectrum points A..D on the circle
    for label, idx in zip(_POINT_LABELS, _POINT_INDEX):
        z = complex(pts[idx])
        x, y = _xy(z)
        parts.append(f'<circle cx="{x}" cy="{y}" r="6" fill="#2c5f9e"/>')
        parts.append(_label(z, label, "#2c5f9e"))
    # chord midpoints P..S
    for label, (i, j) in zip(_MID_LABELS, _MID_PAIRS):
        z = complex((pts[_POINT_INDEX[i]] + pts[_POINT_INDEX[j]]) / 2)
        x, y = _xy(z)
        parts.append(f'<circle cx="{x}" cy="{y}" r="4" fill="#c2571a"/>')
        parts.append(_label(z, label, "#c2571a"))
    # caption with both distances
    parts.append(
        f'<text x="70" y="40" fill="#000000" font-size="20" font-family="monospace">'
        f"F = {analysis.f_global:.9f}   F_L = {analysis.f_local:.9f}</text>"
    )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
