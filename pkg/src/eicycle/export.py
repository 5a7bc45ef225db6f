"""Graphviz DOT rendering: C_n on a circle, each hyperedge a coloured closed curve."""
from __future__ import annotations

import math

from .core import Hypergraph
from .sections import format_profile, profile

PALETTE = (
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b",
    "#e377c2", "#7f7f7f", "#bcbd22", "#17becf", "#006400", "#00008b",
)


def to_dot(h: Hypergraph, radius: float = 4.0) -> str:
    n = h.n
    lines = [
        f'graph "EI_C{n}" {{',
        "  layout=neato;",
        '  node [shape=circle, fontsize=10, width=0.3, fixedsize=true];',
    ]
    for v in range(1, n + 1):
        # vertex 1 at the top, clockwise
        angle = math.pi / 2 - 2 * math.pi * (v - 1) / n
        x, y = radius * math.cos(angle), radius * math.sin(angle)
        lines.append(f'  "{v}" [pos="{x:.3f},{y:.3f}!"];')
    lines.append("  // cycle C_n")
    for v in range(1, n + 1):
        lines.append(f'  "{v}" -- "{v % n + 1}" [color="#bbbbbb", penwidth=2];')
    for idx, e in enumerate(h.edges, 1):
        color = PALETTE[(idx - 1) % len(PALETTE)]
        label = "{" + ",".join(map(str, e)) + "}"
        prof = format_profile(profile(e, n)) if len(e) < n else "full"
        lines.append(f'  subgraph "hyperedge_{idx}" {{')
        lines.append(f'    // {label} {prof}')
        lines.append(f'    edge [color="{color}", penwidth=1.5, style=bold];')
        ring = list(e) + [e[0]]
        lines.append("    " + " -- ".join(f'"{v}"' for v in ring) + ";")
        lines.append("  }")
    lines.append("}")
    return "\n".join(lines) + "\n"
