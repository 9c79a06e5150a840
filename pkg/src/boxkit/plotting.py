"""Matplotlib figures for box representations and parameter sweeps.

Uses ``matplotlib.figure.Figure`` directly, so no pyplot state or GUI backend
is involved.  SVG output keeps text as text and uses a fixed hash salt with
no date stamp, which makes it byte-identical across runs.
"""

from __future__ import annotations

import io

import matplotlib
from matplotlib.figure import Figure
from matplotlib.patches import Rectangle

from .realization import BoxRepresentation

SVG_RC = {"svg.hashsalt": "boxkit", "svg.fonttype": "none"}
PALETTE = ["#4C72B0", "#DD8452", "#55A868", "#C44E52", "#8172B3",
           "#937860", "#DA8BC3", "#8C8C8C", "#CCB974", "#64B5CD"]


def _save(fig: Figure, target, fmt: str):
    with matplotlib.rc_context(SVG_RC):
        fig.savefig(target, format=fmt, metadata={"Date": None} if fmt == "svg" else None,
                    bbox_inches="tight")


def boxes_figure(b: BoxRepresentation, title: str = "") -> Figure:
    """Rectangles for k = 2, one horizontal segment per vertex for k = 1."""
    if b.k not in (1, 2):
        raise ValueError(f"can only draw 1- or 2-dimensional boxes, got k={b.k}")
    fig = Figure(figsize=(5, 4))
    ax = fig.add_subplot()
    if b.k == 2:
        for v, ((x0, x1), (y0, y1)) in enumerate(b.boxes):
            color = PALETTE[v % len(PALETTE)]
            ax.add_patch(Rectangle((x0, y0), x1 - x0, y1 - y0, fill=True, alpha=0.25,
                                   facecolor=color, edgecolor=color, linewidth=2))
            ax.text((x0 + x1) / 2, (y0 + y1) / 2, str(v), ha="center", va="center")
        xs = [p for box in b.boxes for p in box[0]]
        ys = [p for box in b.boxes for p in box[1]]
    else:
        for v, ((x0, x1),) in enumerate(b.boxes):
            color = PALETTE[v % len(PALETTE)]
            ax.plot([x0, x1], [v, v], color=color, linewidth=3, marker="|", markersize=10)
            ax.text(x1 + 0.15, v, str(v), va="center")
        xs = [p for box in b.boxes for p in box[0]]
        ys = [0, max(len(b.boxes) - 1, 0)]
        ax.set_yticks([])
    if xs:
        ax.set_xlim(min(xs) - 0.5, max(xs) + 0.5)
        ax.set_ylim(min(ys) - 0.5, max(ys) + 0.5)
    if title:
        ax.set_title(title)
    return fig


def boxes_svg(b: BoxRepresentation) -> bytes:
    buf = io.BytesIO()
    _save(boxes_figure(b), buf, "svg")
    return buf.getvalue()


def save_boxes(b: BoxRepresentation, path: str, title: str = ""):
    fmt = path.rsplit(".", 1)[-1].lower()
    _save(boxes_figure(b, title), path, fmt)


def sweep_figure(rows: list[dict]) -> Figure:
    """Status grid over (a, b) from ``explore`` rows."""
    status_color = {"construction": "#55A868", "neighborhoods": "#4C72B0",
                    "cycle": "#8172B3", "oracle": "#CCB974", "open": "#C44E52"}
    fig = Figure(figsize=(7, 4))
    ax = fig.add_subplot()
    for status, color in status_color.items():
        pts = [(r["a"], r["b"]) for r in rows if r["status"] == status]
        if pts:
            ax.scatter([p[0] for p in pts], [p[1] for p in pts], c=color, marker="s",
                       s=60, label=status)
    ax.set_xlabel("a")
    ax.set_ylabel("b")
    ax.legend(loc="upper left", fontsize=8)
    return fig


def save_sweep(rows: list[dict], path: str):
    _save(sweep_figure(rows), path, path.rsplit(".", 1)[-1].lower())
