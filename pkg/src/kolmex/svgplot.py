"""Direct SVG emission for code-point clouds: scatter plus bound curves.

No plotting dependency; a fixed 800 x 600 viewBox, pinned float formats
and deterministic element order keep outputs byte-diffable.
"""

from __future__ import annotations

from typing import Iterable, Sequence

WIDTH, HEIGHT = 800, 600
MARGIN = 60

_CURVE_COLORS = {
    "hamming": "#c0392b",
    "gilbert_varshamov": "#2980b9",
    "singleton": "#27ae60",
}


def _x(delta: float) -> float:
    return MARGIN + delta * (WIDTH - 2 * MARGIN)


def _y(rate: float) -> float:
    return HEIGHT - MARGIN - rate * (HEIGHT - 2 * MARGIN)


def _fmt(v: float) -> str:
    return format(v, ".3f")


def cloud_svg(points: Iterable[tuple[float, float]],
              curves: Sequence[tuple[str, Sequence[tuple[float, float]]]],
              header_comment: str) -> str:
    """points are (delta, R); curves are (name, [(delta, R), ...])."""
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {WIDTH} {HEIGHT}">',
        f"<!-- {header_comment} -->",
        f'<rect width="{WIDTH}" height="{HEIGHT}" fill="white"/>',
    ]
    # axes with unit ticks
    axis = (
        f'<line x1="{_fmt(_x(0))}" y1="{_fmt(_y(0))}" x2="{_fmt(_x(1))}" '
        f'y2="{_fmt(_y(0))}" stroke="black"/>'
        f'<line x1="{_fmt(_x(0))}" y1="{_fmt(_y(0))}" x2="{_fmt(_x(0))}" '
        f'y2="{_fmt(_y(1))}" stroke="black"/>'
    )
    parts.append(axis)
    for i in range(5):
        t = i / 4
        parts.append(
            f'<text x="{_fmt(_x(t))}" y="{_fmt(HEIGHT - MARGIN + 24)}" '
            f'font-size="14" text-anchor="middle">{t:g}</text>'
        )
        parts.append(
            f'<text x="{_fmt(MARGIN - 10)}" y="{_fmt(_y(t) + 5)}" '
            f'font-size="14" text-anchor="end">{t:g}</text>'
        )
    parts.append(
        f'<text x="{_fmt(WIDTH / 2)}" y="{_fmt(HEIGHT - 14)}" font-size="15" '
        f'text-anchor="middle">relative distance</text>'
    )
    parts.append(
        f'<text x="18" y="{_fmt(HEIGHT / 2)}" font-size="15" text-anchor="middle" '
        f'transform="rotate(-90 18 {_fmt(HEIGHT / 2)})">rate</text>'
    )
    for name, samples in curves:
        color = _CURVE_COLORS.get(name, "#7f8c8d")
        coords = " ".join(f"{_fmt(_x(d))},{_fmt(_y(r))}" for d, r in samples)
        parts.append(
            f'<polyline points="{coords}" fill="none" stroke="{color}" '
            f'stroke-width="1.5"/>'
        )
        d0, r0 = samples[len(samples) // 3]
        parts.append(
            f'<text x="{_fmt(_x(d0) + 4)}" y="{_fmt(_y(r0) - 4)}" font-size="12" '
            f'fill="{color}">{name}</text>'
        )
    for d, r in points:
        parts.append(
            f'<circle cx="{_fmt(_x(d))}" cy="{_fmt(_y(r))}" r="2" '
            f'fill="#2c3e50" fill-opacity="0.45"/>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
