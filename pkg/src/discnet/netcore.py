"""Bipartite words x units graph, its three one-mode projections, and
prefix-by-prefix stepping through discourse time.

All three derived networks are simple undirected graphs.  Edge weights hold
co-occurrence support counts and are metadata only: every metric downstream
treats the graph as unweighted.  Word nodes persist at every step (stable
layout across time); unit and agent nodes appear with their first unit.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from functools import cached_property
from itertools import combinations

from .corpus import Corpus, OccurrenceMatrix, Vocabulary
from .errors import IntegrityError, StepRangeError

KINDS = ("words", "units", "agents")

Edge = tuple[str, str]


def edge_key(a: str, b: str) -> Edge:
    """Canonical unordered pair: lexicographically sorted labels."""
    return (a, b) if a <= b else (b, a)


@dataclass(frozen=True)
class BipartiteGraph:
    """Occurrence matrix wrapped with its word, unit, and agent labels."""

    matrix: OccurrenceMatrix
    words: tuple[str, ...]
    unit_ids: tuple[int, ...]
    unit_agents: tuple[str, ...]

    @property
    def n_units(self) -> int:
        return self.matrix.n_units

    @property
    def n_words(self) -> int:
        return self.matrix.n_words

    @property
    def incidence_count(self) -> int:
        return self.matrix.incidence_count

    @cached_property
    def unit_labels(self) -> tuple[str, ...]:
        return tuple(f"u{i}" for i in self.unit_ids)

    @cached_property
    def word_units(self) -> tuple[tuple[int, ...], ...]:
        """For each word index, the ascending unit positions containing it."""
        per_word: list[list[int]] = [[] for _ in range(self.n_words)]
        for pos, row in enumerate(self.matrix.rows):
            for w in row:
                per_word[w].append(pos)
        return tuple(tuple(ps) for ps in per_word)


def build_bipartite(matrix: OccurrenceMatrix, corpus: Corpus, vocab: Vocabulary) -> BipartiteGraph:
    """Attach labels to an occurrence matrix after checking dimensions."""
    if matrix.n_units != len(corpus):
        raise IntegrityError(
            f"matrix has {matrix.n_units} unit rows but corpus has {len(corpus)} units"
        )
    if matrix.n_words != len(vocab):
        raise IntegrityError(
            f"matrix has {matrix.n_words} word columns but vocabulary has {len(vocab)} words"
        )
    return BipartiteGraph(
        matrix=matrix,
        words=vocab.words,
        unit_ids=corpus.unit_ids,
        unit_agents=tuple(u.agent for u in corpus.units),
    )


@dataclass(frozen=True)
class Network:
    """Simple undirected graph snapshot with support-count edge weights."""

    kind: str
    nodes: tuple[str, ...]
    edges: dict[Edge, int]

    def __post_init__(self):
        if self.kind not in KINDS:
            raise IntegrityError(f"unknown network kind {self.kind!r}")
        node_set = set(self.nodes)
        for a, b in self.edges:
            if a == b:
                raise IntegrityError(f"self-loop on {a!r}")
            if (a, b) != edge_key(a, b):
                raise IntegrityError(f"edge ({a!r}, {b!r}) is not in canonical order")
            if a not in node_set or b not in node_set:
                raise IntegrityError(f"edge ({a!r}, {b!r}) references an undeclared node")

    @property
    def n_nodes(self) -> int:
        return len(self.nodes)

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    @cached_property
    def degrees(self) -> dict[str, int]:
        deg = dict.fromkeys(self.nodes, 0)
        for a, b in self.edges:
            deg[a] += 1
            deg[b] += 1
        return deg

    def neighbors(self) -> dict[str, list[str]]:
        adj: dict[str, list[str]] = {v: [] for v in self.nodes}
        for a, b in self.edges:
            adj[a].append(b)
            adj[b].append(a)
        return adj

    def sorted_edges(self) -> list[tuple[str, str, int]]:
        return [(a, b, self.edges[(a, b)]) for a, b in sorted(self.edges)]


@dataclass(frozen=True)
class NetworkTriple:
    """The three projections derived from the same k-unit prefix."""

    step: int
    word_net: Network
    unit_net: Network
    agent_net: Network
    # Words already attributed to each agent within the prefix; carried so
    # advance() stays O(new unit).  Not part of the snapshot's value.
    _agent_words: dict[str, frozenset[int]] | None = field(
        default=None, compare=False, repr=False
    )

    def networks(self) -> dict[str, Network]:
        return {"words": self.word_net, "units": self.unit_net, "agents": self.agent_net}


@dataclass(frozen=True)
class MetricSeries:
    """One metric evaluated on every prefix k = 0..n of the corpus."""

    metric: str
    kind: str
    values: tuple[float, ...]

    def __len__(self) -> int:
        return len(self.values)


def _check_step(bip: BipartiteGraph, k: int) -> None:
    if not 0 <= k <= bip.n_units:
        raise StepRangeError(f"step {k} outside [0, {bip.n_units}]")


def _project_words_prefix(bip: BipartiteGraph, k: int) -> Network:
    edges: dict[Edge, int] = {}
    words = bip.words
    for pos in range(k):
        row = sorted(bip.matrix.rows[pos])
        for i, j in combinations(row, 2):
            key = edge_key(words[i], words[j])
            edges[key] = edges.get(key, 0) + 1
    return Network(kind="words", nodes=words, edges=edges)


def _project_units_prefix(bip: BipartiteGraph, k: int) -> Network:
    edges: dict[Edge, int] = {}
    labels = bip.unit_labels
    for positions in bip.word_units:
        inside = [p for p in positions if p < k]
        for i, j in combinations(inside, 2):
            key = edge_key(labels[i], labels[j])
            edges[key] = edges.get(key, 0) + 1
    return Network(kind="units", nodes=labels[:k], edges=edges)


def _prefix_agent_words(bip: BipartiteGraph, k: int) -> dict[str, set[int]]:
    acc: dict[str, set[int]] = {}
    for pos in range(k):
        acc.setdefault(bip.unit_agents[pos], set()).update(bip.matrix.rows[pos])
    return acc


def _project_agents_prefix(bip: BipartiteGraph, k: int) -> tuple[Network, dict[str, frozenset[int]]]:
    agent_words = _prefix_agent_words(bip, k)
    nodes = tuple(agent_words)  # insertion order = first appearance
    edges: dict[Edge, int] = {}
    for a, b in combinations(nodes, 2):
        shared = len(agent_words[a] & agent_words[b])
        if shared:
            edges[edge_key(a, b)] = shared
    frozen = {a: frozenset(ws) for a, ws in agent_words.items()}
    return Network(kind="agents", nodes=nodes, edges=edges), frozen


def project_words(bip: BipartiteGraph) -> Network:
    """Word network: two words linked iff some unit contains both."""
    return _project_words_prefix(bip, bip.n_units)


def project_units(bip: BipartiteGraph) -> Network:
    """Unit network: two units linked iff they share a matched word."""
    return _project_units_prefix(bip, bip.n_units)


def project_agents(bip: BipartiteGraph) -> Network:
    """Agent network: two agents linked iff their units share a matched word."""
    return _project_agents_prefix(bip, bip.n_units)[0]


def step_state(bip: BipartiteGraph, k: int) -> NetworkTriple:
    """All three projections computed on the first k units.

    Word nodes are always the full vocabulary; unit and agent nodes are only
    those appearing in the prefix.
    """
    _check_step(bip, k)
    agent_net, agent_words = _project_agents_prefix(bip, k)
    return NetworkTriple(
        step=k,
        word_net=_project_words_prefix(bip, k),
        unit_net=_project_units_prefix(bip, k),
        agent_net=agent_net,
        _agent_words=agent_words,
    )


def advance(state: NetworkTriple, bip: BipartiteGraph) -> NetworkTriple:
    """The state for step+1, touching only edges incident to the new unit.

    Equals ``step_state(bip, state.step + 1)`` exactly.
    """
    k = state.step
    if k >= bip.n_units:
        raise StepRangeError(f"already at final step {k}")
    pos = k
    row = sorted(bip.matrix.rows[pos])
    words = bip.words
    labels = bip.unit_labels
    new_label = labels[pos]
    agent = bip.unit_agents[pos]

    word_edges = dict(state.word_net.edges)
    for i, j in combinations(row, 2):
        key = edge_key(words[i], words[j])
        word_edges[key] = word_edges.get(key, 0) + 1
    word_net = replace(state.word_net, edges=word_edges)

    unit_edges = dict(state.unit_net.edges)
    shared: dict[int, int] = {}
    for w in row:
        for q in bip.word_units[w]:
            if q >= pos:
                break
            shared[q] = shared.get(q, 0) + 1
    for q, count in shared.items():
        unit_edges[edge_key(labels[q], new_label)] = count
    unit_net = Network(kind="units", nodes=labels[: k + 1], edges=unit_edges)

    agent_words = state._agent_words
    if agent_words is None:
        agent_words = {a: frozenset(ws) for a, ws in _prefix_agent_words(bip, k).items()}
    prev = agent_words.get(agent, frozenset())
    added = frozenset(row) - prev
    agent_edges = dict(state.agent_net.edges)
    if added:
        for other, ws in agent_words.items():
            if other == agent:
                continue
            gained = len(added & ws)
            if gained:
                key = edge_key(agent, other)
                agent_edges[key] = agent_edges.get(key, 0) + gained
    next_agent_words = dict(agent_words)
    next_agent_words[agent] = prev | added
    agent_nodes = (
        state.agent_net.nodes
        if agent in agent_words
        else state.agent_net.nodes + (agent,)
    )
    agent_net = Network(kind="agents", nodes=agent_nodes, edges=agent_edges)

    return NetworkTriple(
        step=k + 1,
        word_net=word_net,
        unit_net=unit_net,
        agent_net=agent_net,
        _agent_words=next_agent_words,
    )
