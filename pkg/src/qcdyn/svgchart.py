"""Minimal static SVG 1.1 line charts.

Deliberately dependency free and deterministic: coordinates are written with
fixed precision, so a given data set always yields byte-identical markup.
"""

import numpy as np

_PALETTE = ("#1f77b4", "#2ca02c", "#d62728", "#9467bd", "#ff7f0e", "#17becf")
_MARGIN_L, _MARGIN_R, _MARGIN_T, _MARGIN_B = 62.0, 18.0, 34.0, 46.0


def line_chart(
    series,
    title: str = "",
    x_label: str = "",
    y_label: str = "",
    width: int = 720,
    height: int = 480,
) -> str:
    """Render labelled (xs, ys) polylines into an SVG document string.

    ``series`` is a sequence of (label, xs, ys) triples.
    """
    xs_all = np.concatenate([np.asarray(s[1], dtype=float) for s in series])
    ys_all = np.concatenate([np.asarray(s[2], dtype=float) for s in series])
    x_lo, x_hi = _padded_range(float(xs_all.min()), float(xs_all.max()))
    y_lo, y_hi = _padded_range(float(ys_all.min()), float(ys_all.max()))

    plot_w = width - _MARGIN_L - _MARGIN_R
    plot_h = height - _MARGIN_T - _MARGIN_B

    def px(x):
        return _MARGIN_L + (x - x_lo) / (x_hi - x_lo) * plot_w

    def py(y):
        return _MARGIN_T + (y_hi - y) / (y_hi - y_lo) * plot_h

    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{width}" height="{height}" viewBox="0 0 {width} {height}">',
        f'<rect x="0" y="0" width="{width}" height="{height}" fill="#ffffff"/>',
        f'<rect x="{_MARGIN_L:.2f}" y="{_MARGIN_T:.2f}" width="{plot_w:.2f}" '
        f'height="{plot_h:.2f}" fill="none" stroke="#333333" stroke-width="1"/>',
    ]
    if title:
        parts.append(
            f'<text x="{width / 2:.2f}" y="20" text-anchor="middle" '
            f'font-family="sans-serif" font-size="14">{_escape(title)}</text>'
        )

    for tick in np.linspace(x_lo, x_hi, 6):
        x = px(float(tick))
        parts.append(
            f'<line x1="{x:.2f}" y1="{py(y_lo):.2f}" x2="{x:.2f}" '
            f'y2="{py(y_lo) + 4:.2f}" stroke="#333333" stroke-width="1"/>'
        )
        parts.append(
            f'<text x="{x:.2f}" y="{py(y_lo) + 17:.2f}" text-anchor="middle" '
            f'font-family="sans-serif" font-size="10">{_tick(tick)}</text>'
        )
    for tick in np.linspace(y_lo, y_hi, 6):
        y = py(float(tick))
        parts.append(
            f'<line x1="{_MARGIN_L - 4:.2f}" y1="{y:.2f}" x2="{_MARGIN_L:.2f}" '
            f'y2="{y:.2f}" stroke="#333333" stroke-width="1"/>'
        )
        parts.append(
            f'<text x="{_MARGIN_L - 7:.2f}" y="{y + 3:.2f}" text-anchor="end" '
            f'font-family="sans-serif" font-size="10">{_tick(tick)}</text>'
        )
    if x_label:
        parts.append(
            f'<text x="{_MARGIN_L + plot_w / 2:.2f}" y="{height - 10:.2f}" '
            f'text-anchor="middle" font-family="sans-serif" font-size="12">{_escape(x_label)}</text>'
        )
    if y_label:
        cx, cy = 16.0, _MARGIN_T + plot_h / 2
        parts.append(
            f'<text x="{cx:.2f}" y="{cy:.2f}" text-anchor="middle" '
            f'font-family="sans-serif" font-size="12" '
            f'transform="rotate(-90 {cx:.2f} {cy:.2f})">{_escape(y_label)}</text>'
        )

    for i, (label, xs, ys) in enumerate(series):
        color = _PALETTE[i % len(_PALETTE)]
        points = " ".join(
            f"{px(float(x)):.2f},{py(float(y)):.2f}" for x, y in zip(xs, ys)
        )
        parts.append(
            f'<polyline fill="none" stroke="{color}" stroke-width="1.5" points="{points}"/>'
        )
        if label:
            ly = _MARGIN_T + 14 + 14 * i
            lx = _MARGIN_L + plot_w - 8
            parts.append(
                f'<text x="{lx:.2f}" y="{ly:.2f}" text-anchor="end" '
                f'font-family="sans-serif" font-size="11" fill="{color}">{_escape(label)}</text>'
            )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def save_chart(path, svg_text: str) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(svg_text)


def _padded_range(lo: float, hi: float) -> tuple[float, float]:
    if hi <= lo:
        pad = max(abs(lo), 1.0) * 0.1
        return lo - pad, lo + pad
    pad = (hi - lo) * 0.05
    return lo - pad, hi + pad


def _tick(value: float) -> str:
    return f"{value:.4g}"


def _escape(text: str) -> str:
    return text.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;")
