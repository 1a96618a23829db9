"""Matplotlib figures for the report command.

Everything is drawn with the Agg backend straight to files.
"""

from __future__ import annotations

import math
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .homs import cluster_homs  # noqa: E402
from .knitting import ClusterCategory, f_normalize, in_fundamental_domain, zq_window  # noqa: E402
from .dynkin import coxeter_data  # noqa: E402
from .tilting import ExchangeGraph  # noqa: E402

STYLE = {
    "font.size": 9,
    "axes.titlesize": 10,
    "savefig.dpi": 150,
    "savefig.bbox": "tight",
}


def _slice_depth(cc: ClusterCategory) -> dict[int, int]:
    # longest path into each vertex of the projective slice
    slice_arrows = [(j, i) for i, j in cc.orientation.arrows]
    depth = {i: 0 for i in cc.dtype.vertices}
    for _ in cc.dtype.vertices:
        for a, b in slice_arrows:
            depth[b] = max(depth[b], depth[a] + 1)
    return depth


def ar_positions(cc: ClusterCategory) -> dict[int, tuple[float, float]]:
    """Plane coordinates of each object at its first appearance in ZQ."""
    h, _ = coxeter_data(cc.dtype)
    w = zq_window(cc.mc, 0, h + 2)
    depth = _slice_depth(cc)
    rank = cc.rank
    pos: dict[int, tuple[float, float]] = {}
    for v in w.vertices:
        x = w.labels[v]
        if not in_fundamental_domain(cc.mc, x):
            continue
        k, i = v // rank, v % rank + 1
        pos.setdefault(cc.index[f_normalize(cc.mc, x)], (2 * k + depth[i], float(i)))
    return pos


def plot_ar_quiver(cc: ClusterCategory, path: str | Path) -> Path:
    pos = ar_positions(cc)
    with plt.rc_context(STYLE):
        fig, ax = plt.subplots(figsize=(max(4, 0.5 * len(cc)), 1 + 0.6 * cc.rank))
        for s, t in cc.quiver.arrows:
            (x0, y0), (x1, y1) = pos[s], pos[t]
            if x1 < x0:
                continue  # arrows that wrap around the quotient
            ax.annotate(
                "", xy=(x1, y1), xytext=(x0, y0),
                arrowprops=dict(arrowstyle="->", color="0.5", shrinkA=9, shrinkB=9, lw=0.8),
            )
        for k, (x, y) in pos.items():
            shifted = not cc.is_module(k)
            ax.text(
                x, y, cc.name(k), ha="center", va="center",
                bbox=dict(boxstyle="round,pad=0.2", fc="#fde0c5" if shifted else "white", ec="0.3", lw=0.6),
            )
        xs = [p[0] for p in pos.values()]
        ax.set_xlim(min(xs) - 1, max(xs) + 1)
        ax.set_ylim(0.3, cc.rank + 0.7)
        ax.set_axis_off()
        ax.set_title(f"AR-quiver of the cluster category, {cc.dtype}")
        out = Path(path)
        fig.savefig(out)
        plt.close(fig)
    return out


def plot_exchange_graph(cc: ClusterCategory, eg: ExchangeGraph, path: str | Path) -> Path:
    n = len(eg.vertices)
    pos = [
        (math.cos(2 * math.pi * i / max(n, 1)), math.sin(2 * math.pi * i / max(n, 1))) for i in range(n)
    ]
    with plt.rc_context(STYLE):
        fig, ax = plt.subplots(figsize=(5, 5))
        for a, b in eg.edges:
            ax.plot([pos[a][0], pos[b][0]], [pos[a][1], pos[b][1]], color="0.6", lw=0.5, zorder=1)
        ax.scatter([p[0] for p in pos], [p[1] for p in pos], s=12, color="#1f4e79", zorder=2)
        if n <= 20:
            for i, t in enumerate(eg.vertices):
                x, y = pos[i]
                ax.text(1.12 * x, 1.12 * y, ",".join(cc.name(k) for k in t), ha="center", va="center", fontsize=7)
        ax.set_aspect("equal")
        ax.set_axis_off()
        ax.set_title(f"Exchange graph, {cc.dtype}: {n} tilting sets, {len(eg.edges)} edges", pad=18)
        out = Path(path)
        fig.savefig(out)
        plt.close(fig)
    return out


def plot_ext_heatmap(cc: ClusterCategory, path: str | Path) -> Path:
    ext = cluster_homs(cc).ext
    names = [cc.name(k) for k in range(len(cc))]
    with plt.rc_context(STYLE):
        size = max(4, 0.22 * len(cc))
        fig, ax = plt.subplots(figsize=(size, size))
        im = ax.imshow(ext, cmap="Blues", vmin=0)
        if len(cc) <= 50:
            ax.set_xticks(range(len(cc)), names, rotation=90, fontsize=6)
            ax.set_yticks(range(len(cc)), names, fontsize=6)
        fig.colorbar(im, ax=ax, shrink=0.7, label="dim Ext¹")
        ax.set_title(f"Ext¹ in the cluster category, {cc.dtype}")
        out = Path(path)
        fig.savefig(out)
        plt.close(fig)
    return out
