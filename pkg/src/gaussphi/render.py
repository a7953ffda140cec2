"""SVG 1.1 lattice figures: one 16px cell per point, gray level per layer."""

from __future__ import annotations

from xml.sax.saxutils import escape

CELL = 16
MARGIN = 1


def layer_fill(layer: int, n_layers: int) -> str:
    """Grayscale ramp: layer 0 lightest, last layer black."""
    if layer < 0 or n_layers <= 1:
        return "#d0d0d0"
    light, dark = 0xD0, 0x00
    level = light - (light - dark) * layer // (n_layers - 1)
    return f"#{level:02x}{level:02x}{level:02x}"


def render_svg(points, layers, n_layers: int, radius: int, title: str = "") -> str:
    """Draw ``points`` (pairs) with their ``layers`` on a (2*radius+1)^2 grid.

    Axes are unlabeled; the origin cell gets a red outline.
    """
    span = 2 * (radius + MARGIN) + 1
    size = span * CELL
    off = radius + MARGIN

    def corner(x, y):
        # svg y grows downward
        return (x + off) * CELL, (off - y) * CELL

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{size}" height="{size}" viewBox="0 0 {size} {size}">',
    ]
    if title:
        out.append(f"<title>{escape(title)}</title>")
    out.append(f'<rect x="0" y="0" width="{size}" height="{size}" fill="#ffffff"/>')
    mid = off * CELL + CELL // 2
    out.append(
        f'<g stroke="#9a9a9a" stroke-width="1">'
        f'<line x1="0" y1="{mid}" x2="{size}" y2="{mid}"/>'
        f'<line x1="{mid}" y1="0" x2="{mid}" y2="{size}"/></g>'
    )
    out.append('<g stroke="#606060" stroke-width="0.5">')
    for (x, y), layer in zip(points, layers):
        px, py = corner(x, y)
        fill = layer_fill(layer, n_layers)
        out.append(f'<rect x="{px}" y="{py}" width="{CELL}" height="{CELL}" fill="{fill}" data-layer="{layer}"/>')
    out.append("</g>")
    ox, oy = corner(0, 0)
    out.append(
        f'<rect x="{ox + 1}" y="{oy + 1}" width="{CELL - 2}" height="{CELL - 2}" '
        'fill="none" stroke="#cc0000" stroke-width="2"/>'
    )
    out.append("</svg>")
    return "\n".join(out) + "\n"
