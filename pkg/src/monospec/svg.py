"""Minimal standalone SVG scatter/curve rendering, no plotting dependency.

Figures are static displays; the CSV datasets are the primary artifact.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = ["Series", "render_svg"]

PALETTE = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#17becf")

WIDTH, HEIGHT = 640, 520
MARGIN = 56


@dataclass(frozen=True)
class Series:
    """One plotted series: scatter points or a polyline."""

    kind: str  # "points" | "line"
    x: np.ndarray
    y: np.ndarray
    label: str = ""


def _ticks(lo: float, hi: float, count: int = 6) -> np.ndarray:
    return np.linspace(lo, hi, count)


def render_svg(series: list[Series], title: str, xlabel: str = "", ylabel: str = "") -> str:
    xs = np.concatenate([np.asarray(s.x, float) for s in series if len(s.x)])
    ys = np.concatenate([np.asarray(s.y, float) for s in series if len(s.y)])
    x0, x1 = float(xs.min()), float(xs.max())
    y0, y1 = float(ys.min()), float(ys.max())
    padx = 0.05 * (x1 - x0 or 1.0)
    pady = 0.05 * (y1 - y0 or 1.0)
    x0, x1, y0, y1 = x0 - padx, x1 + padx, y0 - pady, y1 + pady

    def px(x):
        return MARGIN + (x - x0) / (x1 - x0) * (WIDTH - 2 * MARGIN)

    def py(y):
        return HEIGHT - MARGIN - (y - y0) / (y1 - y0) * (HEIGHT - 2 * MARGIN)

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" '
        f'viewBox="0 0 {WIDTH} {HEIGHT}">',
        f'<rect width="{WIDTH}" height="{HEIGHT}" fill="white"/>',
        f'<text x="{WIDTH / 2:.0f}" y="24" text-anchor="middle" '
        f'font-family="sans-serif" font-size="15">{title}</text>',
    ]
    # axes box and ticks
    parts.append(
        f'<rect x="{MARGIN}" y="{MARGIN}" width="{WIDTH - 2 * MARGIN}" '
        f'height="{HEIGHT - 2 * MARGIN}" fill="none" stroke="#333" stroke-width="1"/>'
    )
    for t in _ticks(x0, x1):
        parts.append(
            f'<line x1="{px(t):.1f}" y1="{HEIGHT - MARGIN}" x2="{px(t):.1f}" '
            f'y2="{HEIGHT - MARGIN + 5}" stroke="#333"/>'
            f'<text x="{px(t):.1f}" y="{HEIGHT - MARGIN + 18}" text-anchor="middle" '
            f'font-family="sans-serif" font-size="10">{t:.3g}</text>'
        )
    for t in _ticks(y0, y1):
        parts.append(
            f'<line x1="{MARGIN - 5}" y1="{py(t):.1f}" x2="{MARGIN}" y2="{py(t):.1f}" '
            f'stroke="#333"/>'
            f'<text x="{MARGIN - 8}" y="{py(t):.1f}" text-anchor="end" dominant-baseline="middle" '
            f'font-family="sans-serif" font-size="10">{t:.3g}</text>'
        )
    if xlabel:
        parts.append(
            f'<text x="{WIDTH / 2:.0f}" y="{HEIGHT - 14}" text-anchor="middle" '
            f'font-family="sans-serif" font-size="12">{xlabel}</text>'
        )
    if ylabel:
        parts.append(
            f'<text x="16" y="{HEIGHT / 2:.0f}" text-anchor="middle" '
            f'font-family="sans-serif" font-size="12" '
            f'transform="rotate(-90 16 {HEIGHT / 2:.0f})">{ylabel}</text>'
        )
    # zero axes when inside range
    if x0 < 0.0 < x1:
        parts.append(
            f'<line x1="{px(0):.1f}" y1="{MARGIN}" x2="{px(0):.1f}" '
            f'y2="{HEIGHT - MARGIN}" stroke="#ccc" stroke-width="0.7"/>'
        )
    if y0 < 0.0 < y1:
        parts.append(
            f'<line x1="{MARGIN}" y1="{py(0):.1f}" x2="{WIDTH - MARGIN}" '
            f'y2="{py(0):.1f}" stroke="#ccc" stroke-width="0.7"/>'
        )

    for i, s in enumerate(series):
        color = PALETTE[i % len(PALETTE)]
        if s.kind == "line":
            pts = " ".join(f"{px(x):.1f},{py(y):.1f}" for x, y in zip(s.x, s.y))
            parts.append(
                f'<polyline points="{pts}" fill="none" stroke="{color}" stroke-width="1.5"/>'
            )
        else:
            for x, y in zip(s.x, s.y):
                parts.append(f'<circle cx="{px(x):.1f}" cy="{py(y):.1f}" r="1.2" fill="{color}"/>')
        if s.label:
            ly = MARGIN + 16 + 14 * i
            parts.append(
                f'<line x1="{WIDTH - MARGIN - 110}" y1="{ly - 4}" x2="{WIDTH - MARGIN - 92}" '
                f'y2="{ly - 4}" stroke="{color}" stroke-width="3"/>'
                f'<text x="{WIDTH - MARGIN - 86}" y="{ly}" font-family="sans-serif" '
                f'font-size="11">{s.label}</text>'
            )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
