"""Self-contained HTML reports: bucket-frequency bars, runtime/speedup scatter, code sizes.

Charts are inline SVG with inline styles; the output never references an
external resource.
"""

from __future__ import annotations

import html
import statistics
from typing import Iterable, Sequence

from .model import CodeSizeReport, CorrectnessReport, StatsSummary

_STYLE = """
body { font-family: sans-serif; margin: 2em; color: #222; }
table { border-collapse: collapse; margin: 1em 0; }
td, th { border: 1px solid #bbb; padding: 0.25em 0.6em; text-align: right; }
th { background: #eee; }
.bar { fill: #c0398f; }
.dot { fill: #2a6fb0; fill-opacity: 0.6; }
.axis { stroke: #444; stroke-width: 1; }
.muted { color: #777; }
"""


def _num(x, digits=4) -> str:
    if isinstance(x, float):
        return f"{x:.{digits}g}"
    return str(x)


def bar_chart_svg(histogram: dict, width: int = 720, height: int = 280) -> str:
    """Bucket-frequency chart with empty buckets between the extremes drawn as zero."""
    if not histogram:
        return '<p class="muted">no data</p>'
    lo, hi = min(histogram), max(histogram)
    buckets = list(range(lo, hi + 1))
    top = max(histogram.values())
    pad, base = 40, height - 30
    step = (width - 2 * pad) / len(buckets)
    peak = max(sorted(histogram), key=lambda b: histogram[b])
    parts = [f'<svg class="histogram" width="{width}" height="{height}" role="img" '
             f'data-peak-bucket="{peak}" viewBox="0 0 {width} {height}">']
    parts.append(f'<line class="axis" x1="{pad}" y1="{base}" x2="{width - pad}" y2="{base}"/>')
    for k, b in enumerate(buckets):
        c = histogram.get(b, 0)
        h = 0 if top == 0 else (base - 10) * c / top
        x = pad + k * step
        parts.append(f'<rect class="bar" x="{x:.2f}" y="{base - h:.2f}" width="{max(step - 1, 1):.2f}" '
                     f'height="{h:.2f}" data-bucket="{b}" data-count="{c}"><title>{b}: {c}</title></rect>')
        if len(buckets) <= 20 or b % 10 == 0:
            parts.append(f'<text x="{x + step / 2:.2f}" y="{base + 14}" font-size="10" '
                         f'text-anchor="middle">{b}</text>')
    parts.append(f'<text x="{width / 2}" y="{height - 2}" font-size="11" text-anchor="middle">'
                 'floor of improvement factor</text>')
    parts.append("</svg>")
    return "".join(parts)


def scatter_svg(points: Sequence[tuple], width: int = 480, height: int = 320) -> str:
    if len(points) < 2:
        return '<p class="muted">fewer than two points</p>'
    xs, ys = [p[0] for p in points], [p[1] for p in points]
    x0, x1, y0, y1 = min(xs), max(xs), min(ys), max(ys)
    sx = (x1 - x0) or 1.0
    sy = (y1 - y0) or 1.0
    pad = 40
    parts = [f'<svg class="scatter" width="{width}" height="{height}" role="img" '
             f'viewBox="0 0 {width} {height}">',
             f'<line class="axis" x1="{pad}" y1="{height - pad}" x2="{width - pad}" y2="{height - pad}"/>',
             f'<line class="axis" x1="{pad}" y1="{pad}" x2="{pad}" y2="{height - pad}"/>']
    for x, y in points:
        cx = pad + (width - 2 * pad) * (x - x0) / sx
        cy = height - pad - (height - 2 * pad) * (y - y0) / sy
        parts.append(f'<circle class="dot" cx="{cx:.2f}" cy="{cy:.2f}" r="3"/>')
    parts.append(f'<text x="{width / 2}" y="{height - 8}" font-size="11" text-anchor="middle">'
                 'baseline time per run (s)</text>')
    parts.append(f'<text x="12" y="{height / 2}" font-size="11" transform="rotate(-90 12 {height / 2})" '
                 'text-anchor="middle">improvement factor</text>')
    parts.append("</svg>")
    return "".join(parts)


def _table(rows: Iterable[Sequence], header: Sequence[str]) -> str:
    out = ["<table><tr>" + "".join(f"<th>{html.escape(h)}</th>" for h in header) + "</tr>"]
    for r in rows:
        out.append("<tr>" + "".join(f"<td>{html.escape(_num(c))}</td>" for c in r) + "</tr>")
    out.append("</table>")
    return "".join(out)


def render_html(title: str, summary: StatsSummary | None = None, points: Sequence[tuple] = (),
                pearson: float | None = None, sizes: Sequence[CodeSizeReport] = (),
                reference_sizes: dict | None = None, gate: CorrectnessReport | None = None,
                notes: Sequence[str] = ()) -> str:
    body = [f"<h1>{html.escape(title)}</h1>"]
    for n in notes:
        body.append(f'<p class="muted">{html.escape(n)}</p>')
    if gate is not None:
        body.append("<h2>Correctness gate</h2>")
        body.append(_table([(gate.total, gate.mismatched, gate.fraction)],
                           ("items", "mismatched", "fraction")))
        if gate.counterexamples:
            body.append(_table([(c.item_id, c.baseline, c.candidate) for c in gate.counterexamples],
                               ("item", "baseline outcome", "candidate outcome")))
    if summary is not None:
        body.append("<h2>Improvement factor</h2>")
        body.append(_table([(summary.count, summary.mean, summary.std, summary.min_g, summary.max_g,
                             summary.peak_bucket)],
                           ("count", "mean", "std", "min", "max", "peak bucket")))
        body.append(bar_chart_svg(dict(summary.histogram)))
    if points:
        body.append("<h2>Baseline runtime versus improvement factor</h2>")
        if pearson is not None:
            body.append(f"<p>Pearson coefficient: {pearson:.4f}</p>")
        body.append(scatter_svg(points))
    if sizes:
        body.append("<h2>Code size</h2>")
        reference_sizes = reference_sizes or {}
        rows = [(s.unit_id, s.total_size, len(s.parts), s.backend_id,
                 reference_sizes.get(s.unit_id, "")) for s in sizes]
        body.append(_table(rows, ("unit", f"size ({sizes[0].size_unit})", "parts", "backend",
                                  "reference host (informational)")))
        if len(sizes) == 2 and sizes[0].backend_id == sizes[1].backend_id:
            body.append(f"<p>Size delta (candidate - baseline): {sizes[1].total_size - sizes[0].total_size:+d}</p>")
    return ("<!DOCTYPE html><html><head><meta charset=\"utf-8\">"
            f"<title>{html.escape(title)}</title><style>{_STYLE}</style></head>"
            f"<body>{''.join(body)}</body></html>\n")


def summary_line(gs: Sequence[float]) -> str:
    return (f"g min={min(gs):.3f} median={statistics.median(gs):.3f} max={max(gs):.3f} "
            f"(n={len(gs)})")
