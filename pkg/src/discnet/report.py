"""Render session reports: metric series charts and network snapshots.

Figures land next to the delimited metric output so a report directory is
self-contained: ``series_<kind>_<metric>.csv`` + ``series_<kind>.png`` +
``network_<kind>_step<k>.png``.  Node positions come from a deterministic
force-directed layout seeded by the circular order of the canonical node
list, so the same session always renders the same picture.
"""

from __future__ import annotations

import math
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from . import exports, gateway, metrics
from .netcore import Network
from .sessions import Session

_FIG_DPI = 150


def spring_layout(net: Network, iterations: int = 60) -> dict[str, tuple[float, float]]:
    """Fruchterman-Reingold positions from a circular start; no randomness."""
    n = net.n_nodes
    if n == 0:
        return {}
    if n == 1:
        return {net.nodes[0]: (0.0, 0.0)}
    angles = 2.0 * math.pi * np.arange(n) / n
    pos = np.column_stack([np.cos(angles), np.sin(angles)])
    index = {v: i for i, v in enumerate(net.nodes)}
    edges = np.array(
        [[index[a], index[b]] for a, b in net.edges], dtype=np.intp
    ).reshape(-1, 2)
    k = 1.0 / math.sqrt(n)
    temperature = 0.1
    for _ in range(iterations):
        delta = pos[:, None, :] - pos[None, :, :]
        dist = np.linalg.norm(delta, axis=-1)
        np.fill_diagonal(dist, 1.0)
        repulse = (k * k / dist**2)[:, :, None] * delta
        disp = repulse.sum(axis=1)
        if len(edges):
            dvec = pos[edges[:, 0]] - pos[edges[:, 1]]
            dlen = np.maximum(np.linalg.norm(dvec, axis=1, keepdims=True), 1e-9)
            pull = dvec / dlen * (dlen**2 / k)
            np.add.at(disp, edges[:, 0], -pull)
            np.add.at(disp, edges[:, 1], pull)
        lengths = np.maximum(np.linalg.norm(disp, axis=1, keepdims=True), 1e-9)
        pos += disp / lengths * min(temperature, 1.0)
        temperature *= 0.95
    pos -= pos.mean(axis=0)
    scale = np.abs(pos).max()
    if scale > 0:
        pos /= scale
    return {v: (float(x), float(y)) for v, (x, y) in zip(net.nodes, pos)}


def render_network(net: Network, path: Path, title: str = "") -> None:
    """Draw one projection: node size by degree, edge width by weight."""
    pos = spring_layout(net)
    fig, ax = plt.subplots(figsize=(6.0, 6.0))
    max_w = max(net.edges.values(), default=1)
    for a, b, w in net.sorted_edges():
        (x1, y1), (x2, y2) = pos[a], pos[b]
        ax.plot(
            [x1, x2],
            [y1, y2],
            color="#8899aa",
            linewidth=0.5 + 2.0 * w / max_w,
            zorder=1,
        )
    degrees = net.degrees
    max_d = max(degrees.values(), default=0)
    for v in net.nodes:
        x, y = pos[v]
        size = 40.0 + (160.0 * degrees[v] / max_d if max_d else 0.0)
        ax.scatter([x], [y], s=size, color="#2b6cb0", zorder=2)
        ax.annotate(
            v, (x, y), textcoords="offset points", xytext=(0, 6), ha="center", fontsize=7
        )
    ax.set_title(title or f"{net.kind} network")
    ax.set_axis_off()
    ax.set_aspect("equal")
    fig.tight_layout()
    fig.savefig(path, dpi=_FIG_DPI)
    plt.close(fig)


def render_series(series_list, path: Path, title: str = "") -> None:
    fig, ax = plt.subplots(figsize=(7.0, 4.0))
    for series in series_list:
        ax.plot(range(len(series.values)), series.values, marker="o", ms=3, label=series.metric)
    ax.set_xlabel("discourse step k")
    ax.set_ylabel("value")
    ax.set_title(title)
    ax.legend()
    ax.grid(True, alpha=0.3)
    fig.tight_layout()
    fig.savefig(path, dpi=_FIG_DPI)
    plt.close(fig)


def write_report(
    session: Session,
    out_dir: Path | str,
    kinds: tuple[str, ...] = ("words", "units", "agents"),
    metric_names: tuple[str, ...] = ("density", "total-degree"),
    steps: tuple[int, ...] | None = None,
) -> list[Path]:
    """Write metric CSVs and figures for a session; returns written paths."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    if steps is None:
        steps = (session.n_units,)
    written: list[Path] = []
    for kind in kinds:
        series_list = [gateway.get_metric_series(session, kind, m) for m in metric_names]
        for series in series_list:
            csv_path = out / f"series_{kind}_{series.metric}.csv"
            csv_path.write_bytes(exports.series_csv_bytes(series))
            written.append(csv_path)
        fig_path = out / f"series_{kind}.png"
        render_series(series_list, fig_path, title=f"{kind} network over discourse time")
        written.append(fig_path)
        for k in steps:
            net = metrics.network_at_step(session.bip, kind, k)
            net_path = out / f"network_{kind}_step{k}.png"
            render_network(net, net_path, title=f"{kind} network at step {k}")
            written.append(net_path)
    return written
