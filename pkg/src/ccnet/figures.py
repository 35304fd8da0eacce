"""Static SVG figures: the generation fingerprint and the CDF overlay.

Hand-rolled SVG keeps the outputs bit-exact for golden-file comparison;
no plotting dependency is involved.  All coordinates are formatted with two
fixed decimals, so identical inputs give identical bytes.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np
from scipy.special import ndtr

from .gof import ks_statistic
from .io import AnalysisReport

_PALETTE = (
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
    "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf",
    "#393b79", "#637939", "#8c6d31", "#843c39", "#7b4173",
)

_FONT = 'font-family="Helvetica,Arial,sans-serif"'


def _fmt(v: float) -> str:
    out = f"{v:.2f}"
    return "0.00" if out == "-0.00" else out


def _esc(text: str) -> str:
    return (text.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;")
            .replace('"', "&quot;"))


def render_ngfp(reports: Sequence[AnalysisReport], node_label: str) -> str:
    """Stacked generation-score bars for one node across report years.

    Per year, columns run highest generation to first generation left to
    right; positive segments stack above the zero baseline, negative ones
    below, so each column's net height reproduces the previous column's.
    """
    if not reports:
        raise ValueError("need at least one report")
    scheme_ids = {r.scheme_id for r in reports}
    if len(scheme_ids) != 1:
        raise ValueError(f"reports mix schemes: {sorted(scheme_ids)}")
    for r in reports:
        if node_label not in r.labels:
            raise ValueError(f"node {node_label!r} missing from report {r.source!r}")
    if all(r.year is not None for r in reports):
        reports = sorted(reports, key=lambda r: r.year)

    # collect stacks: per report, per generation column, list of (name, height)
    columns: list[tuple[str, list[list[tuple[str, float]]]]] = []
    color_order: list[str] = []
    for r in reports:
        node_idx = r.labels.index(node_label)
        gens = r.generations.generations()
        stacks = []
        for gen in gens:
            seg = [(g.name, float(g.display_heights[node_idx]))
                   for g in r.generations.by_generation(gen)]
            for name, _ in seg:
                if name not in color_order:
                    color_order.append(name)
            stacks.append(seg)
        label = str(r.year) if r.year is not None else r.source
        columns.append((label, stacks))
    color = {name: _PALETTE[i % len(_PALETTE)] for i, name in enumerate(color_order)}

    n_cols = max(len(stacks) for _, stacks in columns)
    bar_w = 16.0
    col_gap = 4.0
    group_gap = 26.0
    group_w = n_cols * bar_w + (n_cols - 1) * col_gap
    margin_l, margin_r, margin_t, margin_b = 54.0, 16.0, 34.0, 34.0
    width = margin_l + len(columns) * group_w + (len(columns) - 1) * group_gap + margin_r
    height = 360.0
    mid = margin_t + (height - margin_t - margin_b) / 2.0

    peak = 0.0
    for _, stacks in columns:
        for seg in stacks:
            pos = sum(h for _, h in seg if h > 0.0)
            neg = -sum(h for _, h in seg if h < 0.0)
            peak = max(peak, pos, neg)
    peak = peak if peak > 0.0 else 1.0
    scale = (height - margin_t - margin_b) / 2.0 / (peak * 1.08)

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_fmt(width)}" '
        f'height="{_fmt(height)}" viewBox="0 0 {_fmt(width)} {_fmt(height)}">',
        f'<rect width="{_fmt(width)}" height="{_fmt(height)}" fill="white"/>',
        f'<text x="{_fmt(margin_l)}" y="20.00" {_FONT} font-size="13">'
        f'{_esc("generation fingerprint: " + node_label)}</text>',
    ]
    # y-axis ticks in score units
    for tick in (-peak, -peak / 2.0, 0.0, peak / 2.0, peak):
        y = mid - tick * scale
        parts.append(f'<line x1="{_fmt(margin_l - 4)}" y1="{_fmt(y)}" '
                     f'x2="{_fmt(margin_l)}" y2="{_fmt(y)}" stroke="#444444" stroke-width="1"/>')
        parts.append(f'<text x="{_fmt(margin_l - 8)}" y="{_fmt(y + 3.5)}" {_FONT} '
                     f'font-size="9" text-anchor="end">{_fmt(tick)}</text>')

    x = margin_l
    for label, stacks in columns:
        for ci, seg in enumerate(stacks):
            cx = x + ci * (bar_w + col_gap)
            up = mid
            down = mid
            for name, h in seg:
                px = h * scale
                if px >= 0.0:
                    y0, y1 = up - px, up
                    up -= px
                else:
                    y0, y1 = down, down - px
                    down -= px
                parts.append(
                    f'<rect x="{_fmt(cx)}" y="{_fmt(y0)}" width="{_fmt(bar_w)}" '
                    f'height="{_fmt(y1 - y0)}" fill="{color[name]}" stroke="white" '
                    f'stroke-width="0.5"><title>{_esc(f"{label} {name}: {h:.4f}")}</title></rect>'
                )
        parts.append(f'<text x="{_fmt(x + group_w / 2.0)}" y="{_fmt(height - 12.0)}" {_FONT} '
                     f'font-size="11" text-anchor="middle">{_esc(label)}</text>')
        x += group_w + group_gap

    # zero expectation line over the plotting area
    parts.append(f'<line x1="{_fmt(margin_l)}" y1="{_fmt(mid)}" '
                 f'x2="{_fmt(width - margin_r)}" y2="{_fmt(mid)}" '
                 f'stroke="black" stroke-width="1.2"/>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def render_cdf_overlay(scores: Sequence[float]) -> str:
    """Empirical CDF steps with the standard-normal CDF and the KS gap marked."""
    x = np.sort(np.asarray(scores, dtype=float))
    n = x.size
    d_stat = ks_statistic(x)  # enforces n >= 5 and finiteness

    width, height = 560.0, 380.0
    ml, mr, mt, mb = 56.0, 20.0, 30.0, 42.0
    x_lo = min(float(x[0]), -3.0) - 0.4
    x_hi = max(float(x[-1]), 3.0) + 0.4

    def sx(v: float) -> float:
        return ml + (v - x_lo) / (x_hi - x_lo) * (width - ml - mr)

    def sy(p: float) -> float:
        return height - mb - p * (height - mt - mb)

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_fmt(width)}" '
        f'height="{_fmt(height)}" viewBox="0 0 {_fmt(width)} {_fmt(height)}">',
        f'<rect width="{_fmt(width)}" height="{_fmt(height)}" fill="white"/>',
        f'<text x="{_fmt(ml)}" y="18.00" {_FONT} font-size="13">'
        f'composite score CDF vs standard normal</text>',
    ]
    # axes
    parts.append(f'<line x1="{_fmt(ml)}" y1="{_fmt(sy(0.0))}" x2="{_fmt(width - mr)}" '
                 f'y2="{_fmt(sy(0.0))}" stroke="#444444" stroke-width="1"/>')
    parts.append(f'<line x1="{_fmt(ml)}" y1="{_fmt(sy(0.0))}" x2="{_fmt(ml)}" '
                 f'y2="{_fmt(sy(1.0))}" stroke="#444444" stroke-width="1"/>')
    for p in (0.0, 0.25, 0.5, 0.75, 1.0):
        parts.append(f'<text x="{_fmt(ml - 8)}" y="{_fmt(sy(p) + 3.5)}" {_FONT} '
                     f'font-size="9" text-anchor="end">{_fmt(p)}</text>')
    for tick in range(int(np.ceil(x_lo)), int(np.floor(x_hi)) + 1):
        parts.append(f'<line x1="{_fmt(sx(tick))}" y1="{_fmt(sy(0.0))}" '
                     f'x2="{_fmt(sx(tick))}" y2="{_fmt(sy(0.0) + 4)}" '
                     f'stroke="#444444" stroke-width="1"/>')
        parts.append(f'<text x="{_fmt(sx(tick))}" y="{_fmt(sy(0.0) + 16)}" {_FONT} '
                     f'font-size="9" text-anchor="middle">{tick}</text>')

    # standard normal CDF, sampled polyline
    grid = np.linspace(x_lo, x_hi, 201)
    pts = " ".join(f"{_fmt(sx(float(v)))},{_fmt(sy(float(p)))}"
                   for v, p in zip(grid, ndtr(grid)))
    parts.append(f'<polyline points="{pts}" fill="none" stroke="#d62728" stroke-width="1.6"/>')

    # empirical CDF step path
    step = [f"M {_fmt(sx(float(x[0])))} {_fmt(sy(0.0))}"]
    for k in range(n):
        step.append(f"L {_fmt(sx(float(x[k])))} {_fmt(sy(k / n))}")
        step.append(f"L {_fmt(sx(float(x[k])))} {_fmt(sy((k + 1) / n))}")
    step.append(f"L {_fmt(sx(x_hi))} {_fmt(sy(1.0))}")
    parts.append(f'<path d="{" ".join(step)}" fill="none" stroke="#1f77b4" stroke-width="1.4"/>')

    # KS gap marker at the attaining order statistic
    z = ndtr(x)
    i = np.arange(1, n + 1)
    gaps = np.maximum(np.abs(i / n - z), np.abs(z - (i - 1) / n))
    k = int(np.argmax(gaps))
    emp = (i[k] / n) if abs(i[k] / n - z[k]) >= abs(z[k] - (i[k] - 1) / n) else (i[k] - 1) / n
    gx = sx(float(x[k]))
    parts.append(f'<line x1="{_fmt(gx)}" y1="{_fmt(sy(float(z[k])))}" x2="{_fmt(gx)}" '
                 f'y2="{_fmt(sy(float(emp)))}" stroke="#d62728" stroke-width="2" '
                 f'stroke-dasharray="3,2"/>')
    parts.append(f'<text x="{_fmt(width - mr)}" y="{_fmt(mt + 12)}" {_FONT} font-size="11" '
                 f'text-anchor="end">D = {d_stat:.4f}, n = {n}</text>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
