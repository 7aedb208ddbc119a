"""Render arc diagrams as Graphviz DOT or as a standalone SVG picture.

Gate order and chord connectivity are exact; the SVG geometry is only a sketch.
"""

import math

from goldman_turaev.diagram import Diagram, Partition, Tag, chord_sign_oracle

_CHORD_COLORS = {Tag.FIRST: "#1f5fa8", Tag.SECOND: "#b8451f"}


def _chord_name(d: Diagram, p: Partition) -> str:
    if len(d.words) == 1:
        return f"φ{p.index}"
    return f"{'vw'[p.tag]}:φ{p.index}"


def to_dot(d: Diagram) -> str:
    """Boundary gates as nodes in boundary order, partitions as directed edges."""
    lines = ["digraph arc_diagram {", "  rankdir=LR;", "  node [shape=circle, fontsize=10];"]
    for n, gate in enumerate(d.gates):
        lines.append(
            f'  g{n} [label="{gate.label}", '
            f'tooltip="{gate.tag.name.lower()} occurrence {gate.occ}"];'
        )
    if len(d.gates) > 1:
        path = " -> ".join(f"g{n}" for n in range(len(d.gates)))
        lines.append(f"  {path} [style=dotted, arrowhead=none];")
    partitions = d.partitions()
    for p in partitions:
        start, end = d.endpoints(p)
        lines.append(
            f'  g{d.position(start)} -> g{d.position(end)} '
            f'[label="{_chord_name(d, p)}", color="{_CHORD_COLORS[p.tag]}", constraint=false];'
        )
    for a, p in enumerate(partitions):
        for q in partitions[a + 1 :]:
            sign = chord_sign_oracle(d, p, q)
            if sign:
                lines.append(f"  // {_chord_name(d, p)} x {_chord_name(d, q)}: {sign:+d}")
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_svg(d: Diagram, size: int = 320) -> str:
    """Disk with the gates spread at equal angles along its upper boundary arc."""
    cx = cy = size / 2
    radius = size * 0.38
    count = len(d.gates)
    points = []
    for n in range(count):
        # first gate on the right, orientation runs counterclockwise
        angle = math.pi * (n + 1) / (count + 1)
        points.append((cx + radius * math.cos(angle), cy - radius * math.sin(angle)))

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {size} {size}" '
        f'width="{size}" height="{size}">',
        '<defs><marker id="arrow" viewBox="0 0 10 10" refX="9" refY="5" '
        'markerWidth="6" markerHeight="6" orient="auto-start-reverse">'
        '<path d="M 0 0 L 10 5 L 0 10 z"/></marker></defs>',
        f'<circle cx="{cx:.2f}" cy="{cy:.2f}" r="{radius:.2f}" fill="none" stroke="black"/>',
        f'<circle cx="{cx:.2f}" cy="{cy + radius:.2f}" r="3" fill="black"/>',
    ]
    for p in d.partitions():
        start, end = d.endpoints(p)
        x1, y1 = points[d.position(start)]
        x2, y2 = points[d.position(end)]
        parts.append(
            f'<path d="M {x1:.2f} {y1:.2f} Q {cx:.2f} {cy:.2f} {x2:.2f} {y2:.2f}" '
            f'fill="none" stroke="{_CHORD_COLORS[p.tag]}" marker-end="url(#arrow)">'
            f"<title>{_chord_name(d, p)}</title></path>"
        )
    for n, gate in enumerate(d.gates):
        x, y = points[n]
        lx = cx + (x - cx) * 1.15
        ly = cy + (y - cy) * 1.15
        parts.append(f'<circle class="gate" cx="{x:.2f}" cy="{y:.2f}" r="2.5" fill="black"/>')
        parts.append(
            f'<text x="{lx:.2f}" y="{ly:.2f}" font-family="monospace" font-size="9" '
            f'text-anchor="middle">{gate.label}</text>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
