"""Matplotlib renderings of certificates and divisibility tables.

Everything here draws onto a bare Figure object, no pyplot and no
global state, so it works headless and never touches a display.
"""

from __future__ import annotations

import os
from typing import Optional, Sequence

from matplotlib.figure import Figure
from matplotlib.patches import Rectangle

from .partitions import Partition
from .tableaux import SkewFilling
from .witness import WitnessCertificate

INNER_FILL = "#d0d0d0"
MARK_FILL = "#ffffff"
EDGE = "#404040"


def _draw_filling(ax, filling: SkewFilling, title: Optional[str] = None):
    shape = filling.shape
    outer, inner = shape.outer, shape.inner
    n_rows = len(outer)
    width = outer.part(1) if n_rows else 1
    for i in range(1, n_rows + 1):
        for j in range(1, outer.part(i) + 1):
            x, y = j - 1, n_rows - i
            is_inner = j <= inner.part(i)
            ax.add_patch(Rectangle(
                (x, y), 1, 1,
                facecolor=INNER_FILL if is_inner else MARK_FILL,
                edgecolor=EDGE, linewidth=1.0,
            ))
            if not is_inner:
                ax.text(x + 0.5, y + 0.5, str(filling.entry(i, j)),
                        ha="center", va="center", fontsize=12)
    ax.set_xlim(-0.25, max(width, 1) + 0.25)
    ax.set_ylim(-0.25, max(n_rows, 1) + 0.25)
    ax.set_aspect("equal")
    ax.axis("off")
    if title:
        ax.set_title(title, fontsize=11)


def witness_figure(cert: WitnessCertificate) -> Figure:
    """Diagram of the certified filling: inner shape a shaded, each box
    of c/a labeled by its entry."""
    a, b, c = cert.a, cert.b, cert.c
    fig = Figure(figsize=(6, 4))
    ax = fig.add_subplot(111)
    title = (
        f"{cert.ctx}: ({','.join(map(str, a)) or '0'}) * "
        f"({','.join(map(str, b)) or '0'}) reaches "
        f"({','.join(map(str, c)) or '0'}) [{cert.case.value}]"
    )
    _draw_filling(ax, cert.filling, title)
    fig.tight_layout()
    return fig


def divisibility_chart(rows: Sequence[dict]) -> Figure:
    """Bar chart of ed values per context from table rows (dicts with
    at least "label" and "ed")."""
    fig = Figure(figsize=(max(6, 0.8 * len(rows)), 4))
    ax = fig.add_subplot(111)
    labels = [r["label"] for r in rows]
    values = [r["ed"] for r in rows]
    ax.bar(range(len(rows)), values, color="#4878a8", edgecolor=EDGE)
    ax.set_xticks(range(len(rows)))
    ax.set_xticklabels(labels, rotation=45, ha="right", fontsize=8)
    ax.set_ylabel("effective good divisibility")
    ax.grid(axis="y", alpha=0.3)
    fig.tight_layout()
    return fig


def save_figure(fig: Figure, path: str, dpi: int = 150) -> str:
    out_dir = os.path.dirname(os.path.abspath(path))
    os.makedirs(out_dir, exist_ok=True)
    fig.savefig(path, dpi=dpi)
    return path
