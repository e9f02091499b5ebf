"""Per-node SNA metrics and metric time series over discourse steps.

Conventions, fixed once for the whole workbench:

- degree centrality: deg(v)/(n-1) for n >= 2, else 0
- betweenness: shortest-path betweenness on the undirected unweighted graph,
  endpoints excluded, each unordered pair counted once, unnormalized
- clustering: local C(v) = 2*T(v) / (k(v)*(k(v)-1)) for k(v) >= 2, else 0
- density: 2E / (n*(n-1)) for n >= 2, else 0

Betweenness uses Brandes' accumulation; graphs past a size threshold switch
to a level-synchronous variant over numpy adjacency matrices, which is the
same algorithm with all sources advanced in lockstep.
"""

from __future__ import annotations

from collections import deque
from typing import Callable, NamedTuple

import numpy as np

from .errors import ParameterError, StepRangeError
from .netcore import (
    BipartiteGraph,
    MetricSeries,
    Network,
    advance,
    edge_key,
    step_state,
)

# Above this node count the numpy betweenness path wins; below it the pure
# Python loop is faster and exact in integer path counts.
_NUMPY_BETWEENNESS_MIN_NODES = 96

SERIES_METRICS = ("density", "total-degree", "degree", "average-clustering", "betweenness")


class ClusteringResult(NamedTuple):
    per_node: dict[str, float]
    average: float


def degree_centrality(net: Network) -> dict[str, float]:
    n = net.n_nodes
    if n < 2:
        return dict.fromkeys(net.nodes, 0.0)
    return {v: d / (n - 1) for v, d in net.degrees.items()}


def density(net: Network) -> float:
    n = net.n_nodes
    if n < 2:
        return 0.0
    return 2.0 * net.n_edges / (n * (n - 1))


def clustering_coefficient(net: Network) -> ClusteringResult:
    adj = {v: set(ns) for v, ns in net.neighbors().items()}
    per_node: dict[str, float] = {}
    for v, neigh in adj.items():
        k = len(neigh)
        if k < 2:
            per_node[v] = 0.0
            continue
        links = 0
        for u in neigh:
            links += len(adj[u] & neigh)
        # each triangle edge counted twice in the sum above
        per_node[v] = links / (k * (k - 1))
    average = sum(per_node.values()) / len(per_node) if per_node else 0.0
    return ClusteringResult(per_node=per_node, average=average)


def average_clustering(net: Network) -> float:
    return clustering_coefficient(net).average


def _int_adjacency(net: Network) -> list[list[int]]:
    index = {v: i for i, v in enumerate(net.nodes)}
    adj: list[list[int]] = [[] for _ in net.nodes]
    for a, b in net.edges:
        ia, ib = index[a], index[b]
        adj[ia].append(ib)
        adj[ib].append(ia)
    return adj


def _brandes_python(adj: list[list[int]]) -> list[float]:
    n = len(adj)
    score = [0.0] * n
    for s in range(n):
        sigma = [0] * n
        dist = [-1] * n
        preds: list[list[int]] = [[] for _ in range(n)]
        sigma[s] = 1
        dist[s] = 0
        order: list[int] = []
        queue = deque([s])
        while queue:
            v = queue.popleft()
            order.append(v)
            dv = dist[v]
            sv = sigma[v]
            for w in adj[v]:
                if dist[w] < 0:
                    dist[w] = dv + 1
                    queue.append(w)
                if dist[w] == dv + 1:
                    sigma[w] += sv
                    preds[w].append(v)
        delta = [0.0] * n
        for w in reversed(order):
            coeff = (1.0 + delta[w]) / sigma[w]
            for v in preds[w]:
                delta[v] += sigma[v] * coeff
            if w != s:
                score[w] += delta[w]
    # every unordered pair was accumulated from both endpoints
    return [x / 2.0 for x in score]


def _brandes_numpy(net: Network) -> list[float]:
    n = net.n_nodes
    index = {v: i for i, v in enumerate(net.nodes)}
    amat = np.zeros((n, n), dtype=np.float64)
    for a, b in net.edges:
        ia, ib = index[a], index[b]
        amat[ia, ib] = 1.0
        amat[ib, ia] = 1.0

    sigma = np.eye(n, dtype=np.float64)
    dist = np.full((n, n), -1, dtype=np.int32)
    np.fill_diagonal(dist, 0)
    frontier = np.eye(n, dtype=bool)
    level = 0
    levels: list[np.ndarray] = [frontier]
    while True:
        contrib = (sigma * frontier) @ amat
        nxt = (contrib > 0) & (dist < 0)
        if not nxt.any():
            break
        level += 1
        sigma[nxt] = contrib[nxt]
        dist[nxt] = level
        frontier = nxt
        levels.append(frontier)

    delta = np.zeros((n, n), dtype=np.float64)
    for lvl in range(level, 0, -1):
        mask = levels[lvl]
        ratio = np.where(mask, (1.0 + delta) / np.where(sigma > 0, sigma, 1.0), 0.0)
        spread = ratio @ amat
        prev = levels[lvl - 1]
        delta += np.where(prev, spread * sigma, 0.0)
    score = delta.sum(axis=0) - delta.diagonal()
    return (score / 2.0).tolist()


def betweenness_centrality(net: Network, method: str = "auto") -> dict[str, float]:
    """Unnormalized shortest-path betweenness per node.

    ``method`` is one of ``auto``, ``python``, ``numpy``; ``auto`` picks by
    graph size.  Both paths implement the same contract.
    """
    if method not in ("auto", "python", "numpy"):
        raise ParameterError(f"unknown betweenness method {method!r}")
    if method == "auto":
        method = "numpy" if net.n_nodes >= _NUMPY_BETWEENNESS_MIN_NODES else "python"
    if method == "numpy":
        values = _brandes_numpy(net)
    else:
        values = _brandes_python(_int_adjacency(net))
    return dict(zip(net.nodes, values))


def _mean(values) -> float:
    vals = list(values)
    return sum(vals) / len(vals) if vals else 0.0


# step-wise evaluators over full Network snapshots (slow path)
_SNAPSHOT_METRICS: dict[str, Callable[[Network], float]] = {
    "density": density,
    "total-degree": lambda net: 2.0 * net.n_edges,
    "degree": lambda net: _mean(degree_centrality(net).values()),
    "average-clustering": average_clustering,
    "betweenness": lambda net: _mean(betweenness_centrality(net).values()),
}


def _counting_series(bip: BipartiteGraph, kind: str, metric: str) -> tuple[float, ...]:
    """Single streaming pass for metrics that only need node/edge counts."""

    def value(n_nodes: int, n_edges: int) -> float:
        if metric == "total-degree":
            return 2.0 * n_edges
        return 2.0 * n_edges / (n_nodes * (n_nodes - 1)) if n_nodes >= 2 else 0.0

    values: list[float] = []
    edges: set[tuple[int, int]] = set()
    if kind == "words":
        values.append(value(bip.n_words, 0))
        for pos in range(bip.n_units):
            row = sorted(bip.matrix.rows[pos])
            for i in range(len(row)):
                for j in range(i + 1, len(row)):
                    edges.add((row[i], row[j]))
            values.append(value(bip.n_words, len(edges)))
    elif kind == "units":
        values.append(value(0, 0))
        for pos in range(bip.n_units):
            for w in bip.matrix.rows[pos]:
                for q in bip.word_units[w]:
                    if q >= pos:
                        break
                    edges.add((q, pos))
            values.append(value(pos + 1, len(edges)))
    else:
        values.append(value(0, 0))
        agent_words: dict[str, set[int]] = {}
        pair_edges: set[tuple[str, str]] = set()
        for pos in range(bip.n_units):
            agent = bip.unit_agents[pos]
            words = agent_words.setdefault(agent, set())
            added = bip.matrix.rows[pos] - words
            if added:
                for other, ws in agent_words.items():
                    if other != agent and added & ws:
                        pair_edges.add(edge_key(agent, other))
            words |= added
            values.append(value(len(agent_words), len(pair_edges)))
    return tuple(values)


def metric_timeseries(bip: BipartiteGraph, kind: str, metric: str) -> MetricSeries:
    """Evaluate one metric on every prefix step k = 0..n.

    ``density``, ``total-degree`` and mean ``degree`` stream over the corpus
    in one pass.  ``average-clustering`` and mean ``betweenness`` recompute
    on each snapshot and are meant for classroom-sized corpora.
    """
    if kind not in ("words", "units", "agents"):
        raise ParameterError(f"unknown network kind {kind!r}")
    if metric not in SERIES_METRICS:
        raise ParameterError(
            f"unknown metric {metric!r}; expected one of {', '.join(SERIES_METRICS)}"
        )
    if metric in ("density", "total-degree", "degree"):
        return MetricSeries(metric=metric, kind=kind, values=_counting_series(bip, kind, metric))

    evaluate = _SNAPSHOT_METRICS[metric]
    state = step_state(bip, 0)
    values = [evaluate(state.networks()[kind])]
    for _ in range(bip.n_units):
        state = advance(state, bip)
        values.append(evaluate(state.networks()[kind]))
    return MetricSeries(metric=metric, kind=kind, values=tuple(values))


def network_at_step(bip: BipartiteGraph, kind: str, k: int) -> Network:
    """Convenience accessor for one projection at one step."""
    if kind not in ("words", "units", "agents"):
        raise ParameterError(f"unknown network kind {kind!r}")
    if not 0 <= k <= bip.n_units:
        raise StepRangeError(f"step {k} outside [0, {bip.n_units}]")
    return step_state(bip, k).networks()[kind]
