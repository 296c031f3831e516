"""Bar charts of real density matrices, as SVG or CSV.

Each entry sigma[i, j] becomes one bar standing on an oblique (i, j) grid.
Positive bars rise from the floor and negative bars hang below it, so the
picture reads the same in monochrome.
"""

from __future__ import annotations

import csv
import io
import xml.etree.ElementTree as ET
from dataclasses import dataclass

import numpy as np

from .tensor_core import DomainError, qubits_for_side
from .xform import ValidationError

MAX_PLOT_QUBITS = 4
HEIGHT_TOL = 1e-9

# layout, in SVG user units
CELL = 24.0  # step along j (to the right)
SKEW = (12.0, 14.0)  # step along i (right and down), gives the oblique view
BAR_W = 14.0
UNIT_H = 60.0  # height of a bar of value 1
MARGIN = 40.0


@dataclass(frozen=True)
class Bar:
    i: int
    j: int
    value: float
    x: float  # left edge
    base: float  # floor line y
    top: float  # min y of the rectangle
    width: float
    height: float


@dataclass(frozen=True, eq=False)
class BarChart:
    n: int
    labels: tuple
    heights: np.ndarray
    bars: tuple
    width: float
    height: float


def _fmt(x: float) -> str:
    return f"{x:.12g}"


def bar_chart(sigma: np.ndarray) -> BarChart:
    """Lay out one bar per entry, row-major in (i, j)."""
    sigma = np.asarray(sigma, dtype=float)
    if sigma.ndim != 2 or sigma.shape[0] != sigma.shape[1]:
        raise DomainError(f"expected a square matrix, got shape {sigma.shape}")
    n = qubits_for_side(sigma.shape[0])
    if n > MAX_PLOT_QUBITS:
        raise DomainError(f"bar charts are limited to {MAX_PLOT_QUBITS} qubits, got {n}")
    peak = np.max(np.abs(sigma))
    if peak > 1 + HEIGHT_TOL:
        raise ValidationError("height", f"entry of magnitude {peak:.6g} exceeds 1")
    d = 2**n
    top_margin = MARGIN + UNIT_H
    bars = []
    for i in range(d):
        for j in range(d):
            v = float(np.clip(sigma[i, j], -1.0, 1.0))
            x = MARGIN + j * CELL + i * SKEW[0]
            base = top_margin + i * SKEW[1]
            h = abs(v) * UNIT_H
            top = base - h if v >= 0 else base
            bars.append(Bar(i, j, v, x, base, top, BAR_W, h))
    width = MARGIN * 2 + (d - 1) * (CELL + SKEW[0]) + BAR_W
    height = top_margin + (d - 1) * SKEW[1] + UNIT_H + MARGIN
    labels = tuple((b.i, b.j) for b in bars)
    return BarChart(n, labels, sigma.copy(), tuple(bars), width, height)


def render_bars(sigma: np.ndarray, title: str | None = None) -> str:
    chart = bar_chart(sigma)
    d = 2**chart.n
    svg = ET.Element(
        "svg",
        {
            "xmlns": "http://www.w3.org/2000/svg",
            "width": _fmt(chart.width),
            "height": _fmt(chart.height),
            "viewBox": f"0 0 {_fmt(chart.width)} {_fmt(chart.height)}",
        },
    )
    if title:
        ET.SubElement(svg, "title").text = title
    floor = ET.SubElement(svg, "g", {"class": "floor", "stroke": "#999", "stroke-width": "0.5"})
    for i in range(d):
        first, last = chart.bars[i * d], chart.bars[i * d + d - 1]
        ET.SubElement(
            floor,
            "line",
            {"x1": _fmt(first.x), "y1": _fmt(first.base), "x2": _fmt(last.x + BAR_W), "y2": _fmt(last.base)},
        )
    # back rows first so nearer bars are painted over farther ones
    group = ET.SubElement(svg, "g", {"class": "bars", "stroke": "black", "stroke-width": "0.5"})
    for b in chart.bars:
        ET.SubElement(
            group,
            "rect",
            {
                "x": _fmt(b.x),
                "y": _fmt(b.top),
                "width": _fmt(b.width),
                "height": _fmt(b.height),
                "fill": "#4a6fa5" if b.value > 0 else "white",
                "data-i": str(b.i),
                "data-j": str(b.j),
                "data-value": _fmt(b.value),
            },
        )
    labels = ET.SubElement(svg, "g", {"class": "labels", "font-family": "sans-serif", "font-size": "9"})
    last_row = chart.bars[(d - 1) * d : d * d]
    for b in last_row:  # column index j along the front edge
        t = ET.SubElement(labels, "text", {"x": _fmt(b.x + BAR_W / 2), "y": _fmt(b.base + 14), "text-anchor": "middle"})
        t.text = str(b.j)
    for i in range(d):  # row index i along the left edge
        b = chart.bars[i * d]
        t = ET.SubElement(labels, "text", {"x": _fmt(b.x - 4), "y": _fmt(b.base), "text-anchor": "end"})
        t.text = str(i)
    return ET.tostring(svg, encoding="unicode")


def render_csv(sigma: np.ndarray) -> str:
    chart = bar_chart(sigma)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["i", "j", "value"])
    for b in chart.bars:
        writer.writerow([b.i, b.j, _fmt(b.value)])
    return buf.getvalue()
