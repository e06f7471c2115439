"""Minimal SVG line charts; no plotting dependency.

Good enough for the sweep comparison figures: axes, ticks, legend and one
polyline per series.
"""

from __future__ import annotations

WIDTH, HEIGHT = 720, 480
MARGIN_L, MARGIN_R, MARGIN_T, MARGIN_B = 70, 20, 40, 60
COLORS = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd")


def _ticks(lo: float, hi: float, n: int = 6):
    if hi <= lo:
        hi = lo + 1.0
    span = (hi - lo) / (n - 1)
    return [lo + i * span for i in range(n)]


def line_chart(x, series: dict, title: str, x_label: str, y_label: str) -> str:
    """Render named series over a shared x axis; returns SVG text."""
    xs = list(map(float, x))
    all_y = [float(v) for ys in series.values() for v in ys]
    x_lo, x_hi = min(xs), max(xs)
    y_lo, y_hi = min(all_y + [0.0]), max(all_y)
    if y_hi == y_lo:
        y_hi = y_lo + 1.0
    plot_w = WIDTH - MARGIN_L - MARGIN_R
    plot_h = HEIGHT - MARGIN_T - MARGIN_B

    def px(v):
        return MARGIN_L + (v - x_lo) / (x_hi - x_lo) * plot_w

    def py(v):
        return MARGIN_T + plot_h - (v - y_lo) / (y_hi - y_lo) * plot_h

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}">',
        f'<rect width="{WIDTH}" height="{HEIGHT}" fill="white"/>',
        f'<text x="{WIDTH / 2}" y="24" text-anchor="middle" font-size="16">{title}</text>',
        f'<text x="{MARGIN_L + plot_w / 2}" y="{HEIGHT - 12}" text-anchor="middle" '
        f'font-size="13">{x_label}</text>',
        f'<text x="18" y="{MARGIN_T + plot_h / 2}" text-anchor="middle" font-size="13" '
        f'transform="rotate(-90 18 {MARGIN_T + plot_h / 2})">{y_label}</text>',
        f'<rect x="{MARGIN_L}" y="{MARGIN_T}" width="{plot_w}" height="{plot_h}" '
        f'fill="none" stroke="black"/>',
    ]
    for tx in _ticks(x_lo, x_hi):
        parts.append(
            f'<line x1="{px(tx):.1f}" y1="{MARGIN_T + plot_h}" x2="{px(tx):.1f}" '
            f'y2="{MARGIN_T + plot_h + 5}" stroke="black"/>'
            f'<text x="{px(tx):.1f}" y="{MARGIN_T + plot_h + 20}" text-anchor="middle" '
            f'font-size="11">{tx:g}</text>'
        )
    for ty in _ticks(y_lo, y_hi):
        parts.append(
            f'<line x1="{MARGIN_L - 5}" y1="{py(ty):.1f}" x2="{MARGIN_L}" '
            f'y2="{py(ty):.1f}" stroke="black"/>'
            f'<text x="{MARGIN_L - 8}" y="{py(ty) + 4:.1f}" text-anchor="end" '
            f'font-size="11">{ty:.4g}</text>'
        )
    for idx, (name, ys) in enumerate(series.items()):
        color = COLORS[idx % len(COLORS)]
        pts = " ".join(f"{px(a):.2f},{py(float(b)):.2f}" for a, b in zip(xs, ys))
        parts.append(f'<polyline points="{pts}" fill="none" stroke="{color}" stroke-width="1.5"/>')
        ly = MARGIN_T + 16 + 18 * idx
        parts.append(
            f'<line x1="{MARGIN_L + plot_w - 150}" y1="{ly}" x2="{MARGIN_L + plot_w - 120}" '
            f'y2="{ly}" stroke="{color}" stroke-width="1.5"/>'
            f'<text x="{MARGIN_L + plot_w - 114}" y="{ly + 4}" font-size="12">{name}</text>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
