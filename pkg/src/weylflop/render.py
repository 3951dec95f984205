"""Plain SVG renderings of folded diagrams and curve configurations."""

from __future__ import annotations

from xml.sax.saxutils import escape

import numpy as np

from .family import CurveConfiguration, Section, curve_configuration
from .folding import Folding

BOX = 90
GAP = 0
PALETTE = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2", "#17becf")


def _svg(width: int, height: int, body: list[str]) -> str:
    head = f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">'
    return "\n".join([head, f'<rect width="{width}" height="{height}" fill="white"/>', *body, "</svg>"]) + "\n"


def diagram_svg(folding: Folding) -> str:
    """Chain of surfaces, one box per node of ``xi``.

    Adjacent nodes share an edge labelled by ``m_ij``; unjoined nodes get a
    gap. Nodes whose orbit is larger than one sit over the cover, drawn as a
    doubled base curve.
    """
    xi = folding.xi
    body = []
    x = 20
    y = 30
    prev = None
    for t, node in enumerate(xi.nodes):
        if prev is not None:
            m = xi.m(prev, node)
            if m == 2:
                x += 30
            else:
                body.append(f'<text x="{x}" y="{y - 8}" font-size="13" text-anchor="middle">{m}</text>')
        body.append(f'<rect x="{x}" y="{y}" width="{BOX}" height="{BOX}" fill="#eef3fb" stroke="black"/>')
        orbit = folding.node_orbits[t]
        label = f"{node}: {{{' '.join(map(str, orbit))}}}"
        body.append(f'<text x="{x + BOX / 2}" y="{y + BOX / 2 + 5}" font-size="13" text-anchor="middle">{escape(label)}</text>')
        base_y = y + BOX + 15
        body.append(f'<line x1="{x}" y1="{base_y}" x2="{x + BOX}" y2="{base_y}" stroke="black"/>')
        if len(orbit) > 1:
            body.append(f'<line x1="{x}" y1="{base_y + 4}" x2="{x + BOX}" y2="{base_y + 4}" stroke="black"/>')
        x += BOX + GAP
        prev = node
    body.append(f'<text x="20" y="18" font-size="14">{escape(folding.descriptor())} -> {xi.name}</text>')
    return _svg(x + 20, y + BOX + 40, body)


def _zeros(coeffs: tuple[int, ...]) -> np.ndarray:
    return np.roots(np.array(coeffs, dtype=float)) if len(coeffs) > 1 else np.array([])


def configuration_svg(s: Section, config: CurveConfiguration | None = None) -> str:
    """Base line with root-labelled zero markers; marker radius grows with multiplicity.

    Zeros are placed at their numerical position in the complex plane (real
    part horizontally, imaginary part vertically) purely for display.
    """
    config = config or curve_configuration(s)
    points = []
    for idx, entry in enumerate(config.entries):
        if entry.is_divisor:
            continue
        for f, mult in entry.locus.factors:
            for z in _zeros(f):
                points.append((complex(z), mult, idx, entry))
    width, height = 640, 360
    mid = height / 2
    body = [f'<line x1="20" y1="{mid}" x2="{width - 20}" y2="{mid}" stroke="black"/>']
    scale = max([abs(z.real) for z, *_ in points] + [abs(z.imag) for z, *_ in points] + [1.0])
    sx = (width / 2 - 60) / scale
    sy = (height / 2 - 60) / scale
    for z, mult, idx, entry in points:
        cx = width / 2 + z.real * sx
        cy = mid - z.imag * sy
        color = PALETTE[idx % len(PALETTE)]
        ring = ' stroke="black" stroke-dasharray="2,2"' if entry.locus.curve == "B~" else ""
        body.append(f'<circle cx="{cx:.2f}" cy="{cy:.2f}" r="{3 + 3 * mult}" fill="{color}" fill-opacity="0.7"{ring}/>')
    legend_y = 20
    for idx, entry in enumerate(config.entries):
        color = PALETTE[idx % len(PALETTE)]
        what = "divisor" if entry.is_divisor else f"{entry.locus.curve}: {entry.locus.expr()}"
        body.append(f'<rect x="20" y="{legend_y - 9}" width="10" height="10" fill="{color}"/>')
        body.append(f'<text x="36" y="{legend_y}" font-size="11">{escape(str(list(entry.mu.coords)))} {escape(what)}</text>')
        legend_y += 14
    status = "sufficiently general" if config.general_flag else "special"
    body.append(f'<text x="{width - 20}" y="{height - 10}" font-size="12" text-anchor="end">{status}, {config.curve_count()} curves</text>')
    return _svg(width, max(height, legend_y + 10), body)
