"""Static SVG line charts, no rendering dependencies.

One fixed 800x600 viewport, linear axes, a single series. Plots are
decoration over the CSV data, never the source of truth.
"""

from __future__ import annotations

import math
from xml.sax.saxutils import escape

WIDTH = 800
HEIGHT = 600
MARGIN_L = 80
MARGIN_R = 30
MARGIN_T = 50
MARGIN_B = 60


def _nice_ticks(lo: float, hi: float, target: int = 6) -> list[float]:
    if hi <= lo:
        return [lo]
    raw = (hi - lo) / max(target - 1, 1)
    mag = 10.0 ** math.floor(math.log10(raw))
    for mult in (1.0, 2.0, 2.5, 5.0, 10.0):
        step = mult * mag
        if step >= raw:
            break
    first = math.ceil(lo / step) * step
    ticks = []
    t = first
    while t <= hi + 1e-9 * step:
        ticks.append(0.0 if abs(t) < 1e-12 * step else t)
        t += step
    return ticks


def _fmt_tick(v: float) -> str:
    if v == 0:
        return "0"
    if abs(v) >= 1e5 or abs(v) < 1e-3:
        return f"{v:.2e}"
    return f"{v:.6g}"


def line_chart(
    xs: list[float],
    ys: list[float],
    *,
    xlabel: str = "",
    ylabel: str = "",
    title: str = "",
) -> str:
    """Standalone SVG document for one polyline over linear axes."""
    if len(xs) != len(ys) or len(xs) < 2:
        raise ValueError("need two equal-length coordinate lists with >= 2 points")
    x_lo, x_hi = min(xs), max(xs)
    y_lo, y_hi = min(ys), max(ys)
    if x_hi == x_lo:
        x_hi = x_lo + 1.0
    if y_hi == y_lo:
        pad = abs(y_lo) * 1e-6 + 1e-12
        y_lo, y_hi = y_lo - pad, y_hi + pad
    else:
        pad = 0.05 * (y_hi - y_lo)
        y_lo, y_hi = y_lo - pad, y_hi + pad
    plot_w = WIDTH - MARGIN_L - MARGIN_R
    plot_h = HEIGHT - MARGIN_T - MARGIN_B

    def sx(x: float) -> float:
        return MARGIN_L + (x - x_lo) / (x_hi - x_lo) * plot_w

    def sy(y: float) -> float:
        return MARGIN_T + plot_h - (y - y_lo) / (y_hi - y_lo) * plot_h

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" '
        f'viewBox="0 0 {WIDTH} {HEIGHT}">',
        f'<rect width="{WIDTH}" height="{HEIGHT}" fill="white"/>',
        f'<rect x="{MARGIN_L}" y="{MARGIN_T}" width="{plot_w}" height="{plot_h}" '
        'fill="none" stroke="#333" stroke-width="1"/>',
    ]
    for t in _nice_ticks(x_lo, x_hi):
        px = sx(t)
        parts.append(
            f'<line x1="{px:.2f}" y1="{MARGIN_T + plot_h}" x2="{px:.2f}" '
            f'y2="{MARGIN_T + plot_h + 5}" stroke="#333"/>'
        )
        parts.append(
            f'<text x="{px:.2f}" y="{MARGIN_T + plot_h + 20}" font-size="12" '
            f'text-anchor="middle" font-family="sans-serif">{_fmt_tick(t)}</text>'
        )
        parts.append(
            f'<line x1="{px:.2f}" y1="{MARGIN_T}" x2="{px:.2f}" '
            f'y2="{MARGIN_T + plot_h}" stroke="#ddd" stroke-width="0.5"/>'
        )
    for t in _nice_ticks(y_lo, y_hi):
        py = sy(t)
        parts.append(
            f'<line x1="{MARGIN_L - 5}" y1="{py:.2f}" x2="{MARGIN_L}" '
            f'y2="{py:.2f}" stroke="#333"/>'
        )
        parts.append(
            f'<text x="{MARGIN_L - 8}" y="{py + 4:.2f}" font-size="12" '
            f'text-anchor="end" font-family="sans-serif">{_fmt_tick(t)}</text>'
        )
        parts.append(
            f'<line x1="{MARGIN_L}" y1="{py:.2f}" x2="{MARGIN_L + plot_w}" '
            f'y2="{py:.2f}" stroke="#ddd" stroke-width="0.5"/>'
        )
    pts = " ".join(f"{sx(x):.2f},{sy(y):.2f}" for x, y in zip(xs, ys))
    parts.append(
        f'<polyline points="{pts}" fill="none" stroke="#1f77b4" stroke-width="1.5"/>'
    )
    if title:
        parts.append(
            f'<text x="{WIDTH / 2}" y="28" font-size="16" text-anchor="middle" '
            f'font-family="sans-serif">{escape(title)}</text>'
        )
    if xlabel:
        parts.append(
            f'<text x="{MARGIN_L + plot_w / 2}" y="{HEIGHT - 15}" font-size="13" '
            f'text-anchor="middle" font-family="sans-serif">{escape(xlabel)}</text>'
        )
    if ylabel:
        cy = MARGIN_T + plot_h / 2
        parts.append(
            f'<text x="20" y="{cy}" font-size="13" text-anchor="middle" '
            f'font-family="sans-serif" transform="rotate(-90 20 {cy})">'
            f"{escape(ylabel)}</text>"
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
