"""CSV and SVG writers.

CSV is the authoritative artifact: UTF-8, LF line endings, a header row, and
numbers printed with 17 significant digits independent of locale. SVG output
is a plain line/stem rendering for quick inspection.
"""

from __future__ import annotations

import math
import os
import tempfile
from pathlib import Path
from typing import Iterable, Sequence
from xml.sax.saxutils import escape

import numpy as np

__all__ = ["format_number", "write_csv", "write_svg_plot"]


def format_number(value) -> str:
    if isinstance(value, (bool, np.bool_)):
        return str(int(value))
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    value = float(value)
    if math.isnan(value):
        return "nan"
    if math.isinf(value):
        return "inf" if value > 0 else "-inf"
    return format(value, ".17g")


def _atomic_write(path: Path, text: str):
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def write_csv(path, header: Sequence[str], rows: Iterable[Sequence]) -> Path:
    path = Path(path)
    lines = [",".join(header)]
    lines.extend(",".join(format_number(v) for v in row) for row in rows)
    _atomic_write(path, "\n".join(lines) + "\n")
    return path


_COLORS = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd")


def _ticks(lo: float, hi: float, count: int = 5) -> list[float]:
    if hi == lo:
        return [lo]
    return [lo + (hi - lo) * i / (count - 1) for i in range(count)]


def write_svg_plot(
    path,
    x,
    series: Sequence[tuple[str, np.ndarray]],
    title: str = "",
    xlabel: str = "",
    ylabel: str = "",
    stem: bool = False,
    width: int = 720,
    height: int = 360,
) -> Path:
    """Plot one or more y-series against a shared x axis.

    Non-finite points are skipped. ``stem=True`` draws vertical stems from
    zero with a dot at each value, which suits spectra.
    """
    x = np.asarray(x, dtype=float)
    left, right, top, bottom = 80, 20, 36, 48
    pw, ph = width - left - right, height - top - bottom

    finite = [np.asarray(y, float)[np.isfinite(np.asarray(y, float))] for _, y in series]
    ys = np.concatenate(finite + ([np.zeros(1)] if stem else []))
    ylo, yhi = (float(ys.min()), float(ys.max())) if ys.size else (0.0, 1.0)
    if yhi == ylo:
        ylo, yhi = ylo - 1.0, yhi + 1.0
    xlo, xhi = float(x.min()), float(x.max())
    if xhi == xlo:
        xhi = xlo + 1.0

    def sx(v):
        return left + (v - xlo) / (xhi - xlo) * pw

    def sy(v):
        return top + (yhi - v) / (yhi - ylo) * ph

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}" font-family="sans-serif" font-size="11">',
        f'<rect width="{width}" height="{height}" fill="white"/>',
        f'<rect x="{left}" y="{top}" width="{pw}" height="{ph}" fill="none" stroke="#444"/>',
    ]
    for tv in _ticks(xlo, xhi):
        out.append(f'<text x="{sx(tv):.2f}" y="{top + ph + 16}" text-anchor="middle">{tv:.4g}</text>')
    for tv in _ticks(ylo, yhi):
        out.append(f'<text x="{left - 6}" y="{sy(tv) + 4:.2f}" text-anchor="end">{tv:.4g}</text>')
        out.append(
            f'<line x1="{left}" x2="{left + pw}" y1="{sy(tv):.2f}" y2="{sy(tv):.2f}" stroke="#ddd"/>'
        )
    if title:
        out.append(f'<text x="{width / 2}" y="20" text-anchor="middle" font-size="14">{escape(title)}</text>')
    if xlabel:
        out.append(f'<text x="{left + pw / 2}" y="{height - 10}" text-anchor="middle">{escape(xlabel)}</text>')
    if ylabel:
        out.append(
            f'<text x="16" y="{top + ph / 2}" text-anchor="middle" '
            f'transform="rotate(-90 16 {top + ph / 2})">{escape(ylabel)}</text>'
        )

    for i, (label, y) in enumerate(series):
        color = _COLORS[i % len(_COLORS)]
        y = np.asarray(y, dtype=float)
        ok = np.isfinite(y)
        if stem:
            base = sy(0.0)
            for xv, yv in zip(x[ok], y[ok]):
                out.append(
                    f'<line x1="{sx(xv):.2f}" x2="{sx(xv):.2f}" y1="{base:.2f}" y2="{sy(yv):.2f}" '
                    f'stroke="{color}"/><circle cx="{sx(xv):.2f}" cy="{sy(yv):.2f}" r="1.8" fill="{color}"/>'
                )
        else:
            pts = " ".join(f"{sx(xv):.2f},{sy(yv):.2f}" for xv, yv in zip(x[ok], y[ok]))
            out.append(f'<polyline points="{pts}" fill="none" stroke="{color}" stroke-width="1.2"/>')
        out.append(
            f'<text x="{left + pw - 6}" y="{top + 14 + 14 * i}" text-anchor="end" fill="{color}">{escape(label)}</text>'
        )
    out.append("</svg>")
    path = Path(path)
    _atomic_write(path, "\n".join(out) + "\n")
    return path
