"""Figures for labelings, solver benchmarks and suite summaries.

All functions write a file and close their figure; nothing is shown
interactively.
"""

from __future__ import annotations

import math
from collections import Counter, defaultdict
from typing import Iterable, Optional, Sequence

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .graph import Graph  # noqa: E402
from .labeling import Labeling, verify  # noqa: E402

LABEL_COLORS = {-1: "#d62728", 1: "#7f7f7f", 2: "#1f77b4"}
STATUS_COLORS = {"confirmed": "#2ca02c", "refuted": "#d62728", "skipped-scale": "#bcbd22"}


def set_style(fontsize: int = 10) -> None:
    plt.rcParams.update({
        "font.size": fontsize,
        "axes.labelsize": fontsize,
        "legend.fontsize": fontsize - 2,
        "xtick.labelsize": fontsize - 2,
        "ytick.labelsize": fontsize - 2,
        "axes.spines.top": False,
        "axes.spines.right": False,
        "savefig.bbox": "tight",
        "savefig.dpi": 150,
    })


def _ring(vertices: Sequence[int], radius: float, pos: dict[int, tuple[float, float]]) -> None:
    k = len(vertices)
    for i, v in enumerate(vertices):
        theta = math.pi / 2 - 2 * math.pi * i / max(k, 1)
        pos[v] = (radius * math.cos(theta), radius * math.sin(theta))


def layout(g: Graph, split: Optional[int] = None) -> dict[int, tuple[float, float]]:
    """Hub-and-ring for graphs whose vertex 0 is universal, two rings for joins, one ring otherwise."""
    pos: dict[int, tuple[float, float]] = {}
    if split is not None and 0 < split < g.order:
        _ring(range(split), 0.5, pos)
        _ring(range(split, g.order), 1.0, pos)
    elif g.order > 3 and len(g.neighbors[0]) == g.order - 1:
        pos[0] = (0.0, 0.0)
        _ring(range(1, g.order), 1.0, pos)
    else:
        _ring(range(g.order), 1.0, pos)
    return pos


def draw_labeling(g: Graph, f: Labeling, path: str, title: str = "", split: Optional[int] = None) -> str:
    """Draw ``g`` with every vertex coloured and annotated by its label."""
    set_style()
    report = verify(g, f)
    pos = layout(g, split)
    size = 4 if g.order <= 30 else 7
    fig, ax = plt.subplots(figsize=(size, size))
    for u, v in g.edges():
        (x0, y0), (x1, y1) = pos[u], pos[v]
        ax.plot([x0, x1], [y0, y1], color="#9ecae1", lw=0.8 if g.order <= 30 else 0.2, zorder=1)
    bad = set(report.condition_a_failures) | set(report.condition_b_failures)
    for v in range(g.order):
        x, y = pos[v]
        ax.scatter([x], [y], s=220 if g.order <= 30 else 40, color=LABEL_COLORS[f[v]],
                   edgecolor="black" if v not in bad else "red", linewidth=1.0 if v not in bad else 2.5, zorder=2)
        if g.order <= 60:
            ax.annotate(str(f[v]), (x, y), ha="center", va="center", color="white", fontsize=7, zorder=3)
    status = "SRDF" if report.valid else f"not an SRDF ({len(bad)} violations)"
    ax.set_title(f"{title}  weight {report.weight}, {status}".strip())
    ax.set_aspect("equal")
    ax.axis("off")
    fig.savefig(path)
    plt.close(fig)
    return path


def plot_bench(rows: Iterable[dict], path: str) -> str:
    """Search nodes and wall time against graph order, one marker per instance."""
    set_style()
    rows = [r for r in rows if r.get("status") == "ok"]
    fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(9, 3.5))
    by_method = defaultdict(list)
    for r in rows:
        by_method[r["method"]].append(r)
    for method, rs in sorted(by_method.items()):
        ax1.scatter([r["order"] for r in rs], [r["nodes"] for r in rs], label=method, s=18)
        ax2.scatter([r["order"] for r in rs], [r["seconds"] for r in rs], label=method, s=18)
    for ax, ylabel in ((ax1, "nodes explored"), (ax2, "seconds")):
        ax.set_xlabel("order")
        ax.set_ylabel(ylabel)
        ax.set_yscale("log")
        ax.legend()
    fig.savefig(path)
    plt.close(fig)
    return path


def plot_check_summary(records: Iterable[dict], path: str) -> str:
    """Stacked horizontal bars: per claim id, how many checks ended in each status."""
    set_style()
    counts: dict[str, Counter] = defaultdict(Counter)
    for r in records:
        counts[r["claim"]][r["status"]] += 1
    claims = sorted(counts)
    fig, ax = plt.subplots(figsize=(7, 0.3 * len(claims) + 1))
    left = [0] * len(claims)
    for status, color in STATUS_COLORS.items():
        vals = [counts[c][status] for c in claims]
        ax.barh(claims, vals, left=left, color=color, label=status)
        left = [a + b for a, b in zip(left, vals)]
    ax.set_xscale("symlog")
    ax.set_xlabel("checks")
    ax.invert_yaxis()
    ax.legend(loc="lower right")
    fig.savefig(path)
    plt.close(fig)
    return path
