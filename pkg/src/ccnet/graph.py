"""Weighted directed graphs: construction, LSCTG preprocessing and whole-graph statistics.

A graph is held as a dense non-negative weight matrix over labelled nodes
(``w[i, j] > 0`` iff the edge i->j exists, no self-loops).  Dense storage is
deliberate: the target networks have a few hundred nodes, where dense linear
algebra beats sparse bookkeeping.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np


class GraphError(ValueError):
    """Structurally invalid graph, or an operation applied outside its domain."""


@dataclass(frozen=True)
class WeightedDigraph:
    """Node-labelled directed graph with strictly positive edge weights.

    Invariants enforced on construction: unique non-empty labels, square
    weight matrix, finite non-negative weights, zero diagonal (no self-loops).
    """

    labels: tuple[str, ...]
    weights: np.ndarray

    def __post_init__(self) -> None:
        w = np.asarray(self.weights, dtype=float)
        n = len(self.labels)
        if w.shape != (n, n):
            raise GraphError(f"weight matrix shape {w.shape} does not match {n} labels")
        if len(set(self.labels)) != n:
            raise GraphError("node labels must be unique")
        if any(not lbl for lbl in self.labels):
            raise GraphError("node labels must be non-empty strings")
        if not np.all(np.isfinite(w)):
            raise GraphError("weights must be finite")
        if np.any(w < 0.0):
            raise GraphError("weights must be non-negative")
        if n and np.any(np.diagonal(w) != 0.0):
            raise GraphError("self-loops are not allowed")
        w = w.copy()
        w.setflags(write=False)
        object.__setattr__(self, "weights", w)
        object.__setattr__(self, "labels", tuple(self.labels))

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def n_edges(self) -> int:
        return int(np.count_nonzero(self.weights))

    @property
    def total_weight(self) -> float:
        return float(self.weights.sum())

    def adjacency(self) -> np.ndarray:
        """Directed boolean adjacency (a[i, j] iff edge i->j)."""
        return self.weights > 0.0

    def simple_adjacency(self) -> np.ndarray:
        """Underlying simple graph: symmetric, unweighted, no self-loops."""
        a = self.adjacency()
        return a | a.T

    def index(self, node: int | str) -> int:
        if isinstance(node, str):
            try:
                return self.labels.index(node)
            except ValueError:
                raise GraphError(f"unknown node label {node!r}") from None
        if not 0 <= node < self.n:
            raise GraphError(f"node index {node} out of range")
        return int(node)

    def edge_list(self) -> list[tuple[str, str, float]]:
        src, dst = np.nonzero(self.weights)
        return [(self.labels[i], self.labels[j], float(self.weights[i, j]))
                for i, j in zip(src.tolist(), dst.tolist())]

    def transpose(self) -> "WeightedDigraph":
        """Graph with every edge direction reversed."""
        return WeightedDigraph(self.labels, self.weights.T)

    def subgraph(self, indices: Sequence[int]) -> "WeightedDigraph":
        idx = list(indices)
        labels = tuple(self.labels[i] for i in idx)
        return WeightedDigraph(labels, self.weights[np.ix_(idx, idx)])


@dataclass(frozen=True)
class GraphSummary:
    """Whole-graph descriptive statistics of an analysis substrate."""

    n: int
    n_edges: int
    diameter: int
    mean_aspl: float
    mean_maxflow: float
    mean_degree: float
    mean_strength: float
    asymmetry: float
    edge_density: float
    mean_clustering: float
    algebraic_connectivity: float
    assortativity: float | None
    coverage: float


def build_graph(labeled_edges: Iterable[tuple[str, str, float]]) -> WeightedDigraph:
    """Build a graph from (source label, target label, weight) triples.

    Nodes are collected in first-appearance order.  Self-loops, non-positive
    weights and duplicate (source, target) pairs are errors.
    """
    order: dict[str, int] = {}
    edges: list[tuple[str, str, float]] = []
    seen: set[tuple[str, str]] = set()
    for src, dst, w in labeled_edges:
        if not src or not dst:
            raise GraphError("edge labels must be non-empty")
        if src == dst:
            raise GraphError(f"self-loop edge on {src!r}")
        w = float(w)
        if not np.isfinite(w) or w <= 0.0:
            raise GraphError(f"non-positive weight {w!r} on edge {src!r}->{dst!r}")
        if (src, dst) in seen:
            raise GraphError(f"duplicate edge {src!r}->{dst!r}")
        seen.add((src, dst))
        for lbl in (src, dst):
            if lbl not in order:
                order[lbl] = len(order)
        edges.append((src, dst, w))
    n = len(order)
    weights = np.zeros((n, n))
    for src, dst, w in edges:
        weights[order[src], order[dst]] = w
    return WeightedDigraph(tuple(order), weights)


def threshold_graph(g: WeightedDigraph, e_th: float) -> WeightedDigraph:
    """Drop every edge with weight below ``e_th`` (boundary inclusive: >= kept).

    Nodes are retained even if isolated; a later LSCC extraction removes them.
    """
    if not e_th > 0.0:
        raise GraphError(f"threshold must be positive, got {e_th!r}")
    w = np.where(g.weights >= e_th, g.weights, 0.0)
    return WeightedDigraph(g.labels, w)


def strongly_connected_components(g: WeightedDigraph) -> list[list[int]]:
    """All strongly connected components as lists of node indices (Tarjan, iterative)."""
    n = g.n
    adj = [np.flatnonzero(row).tolist() for row in g.adjacency()]
    index = [-1] * n
    low = [0] * n
    on_stack = [False] * n
    stack: list[int] = []
    components: list[list[int]] = []
    counter = 0

    for start in range(n):
        if index[start] != -1:
            continue
        index[start] = low[start] = counter
        counter += 1
        stack.append(start)
        on_stack[start] = True
        call: list[tuple[int, Iterable[int]]] = [(start, iter(adj[start]))]
        while call:
            v, it = call[-1]
            advanced = False
            for w in it:
                if index[w] == -1:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack[w] = True
                    call.append((w, iter(adj[w])))
                    advanced = True
                    break
                if on_stack[w]:
                    low[v] = min(low[v], index[w])
            if advanced:
                continue
            call.pop()
            if call:
                parent = call[-1][0]
                low[parent] = min(low[parent], low[v])
            if low[v] == index[v]:
                comp = []
                while True:
                    u = stack.pop()
                    on_stack[u] = False
                    comp.append(u)
                    if u == v:
                        break
                components.append(sorted(comp))
    return components


def largest_scc(g: WeightedDigraph) -> WeightedDigraph:
    """Induced subgraph on the largest strongly connected component.

    Size ties are broken towards the component containing the smallest node
    index.  A largest component with fewer than 2 nodes is an error: no path
    measure is definable on it.
    """
    if g.n < 1:
        raise GraphError("empty graph has no components")
    components = strongly_connected_components(g)
    best_size = max(len(c) for c in components)
    if best_size < 2:
        raise GraphError("largest strongly connected component has < 2 nodes")
    candidates = [c for c in components if len(c) == best_size]
    chosen = min(candidates, key=lambda c: c[0])
    return g.subgraph(chosen)


def graph_asymmetry(g: WeightedDigraph) -> float:
    """Frobenius-norm weight imbalance ||W - W^T||_F / (2 ||W||_F), in [0, 1]."""
    if g.n_edges < 1:
        raise GraphError("asymmetry undefined on an empty edge set")
    w = g.weights
    return float(np.linalg.norm(w - w.T) / (2.0 * np.linalg.norm(w)))


def edge_density(g: WeightedDigraph) -> float:
    """Fraction of realised directed edges, N_e / (N^2 - N)."""
    if g.n < 2:
        raise GraphError("edge density needs at least 2 nodes")
    return g.n_edges / (g.n * g.n - g.n)


def hop_distance_matrix(g: WeightedDigraph) -> np.ndarray:
    """All-pairs unweighted hop distances via per-source BFS; -1 marks unreachable."""
    n = g.n
    adj = g.adjacency()
    dist = np.full((n, n), -1, dtype=np.int64)
    for s in range(n):
        d = dist[s]
        d[s] = 0
        frontier = np.zeros(n, dtype=bool)
        frontier[s] = True
        level = 0
        while frontier.any():
            level += 1
            nxt = adj[frontier].any(axis=0) & (d < 0)
            d[nxt] = level
            frontier = nxt
    return dist


def diameter(g: WeightedDigraph) -> int:
    """Maximum hop distance over ordered node pairs; requires strong connectivity."""
    if g.n < 2:
        raise GraphError("diameter needs at least 2 nodes")
    dist = hop_distance_matrix(g)
    if np.any(dist < 0):
        raise GraphError("graph is not strongly connected")
    return int(dist.max())


def clustering(g: WeightedDigraph) -> tuple[np.ndarray, float]:
    """Per-node clustering coefficients of the underlying simple graph, plus the mean.

    Nodes with fewer than 2 neighbours get coefficient 0 by convention, so the
    graph mean is always defined.
    """
    a = g.simple_adjacency()
    n = g.n
    coeffs = np.zeros(n)
    for i in range(n):
        nb = np.flatnonzero(a[i])
        k = nb.size
        if k < 2:
            continue
        links = int(np.count_nonzero(a[np.ix_(nb, nb)])) // 2
        coeffs[i] = links / (k * (k - 1) / 2)
    return coeffs, float(coeffs.mean()) if n else 0.0


def algebraic_connectivity(g: WeightedDigraph) -> float:
    """Smallest non-zero eigenvalue of the normalized Laplacian of the symmetrized weights.

    Directed weights are symmetrized as (W + W^T)/2 before building
    L = I - D^{-1/2} W' D^{-1/2}; the result is scale-free in the weights.
    """
    if g.n < 2:
        raise GraphError("algebraic connectivity needs at least 2 nodes")
    sym = (g.weights + g.weights.T) / 2.0
    if not _connected(sym > 0.0):
        raise GraphError("graph is not connected")
    strength = sym.sum(axis=1)
    inv_sqrt = 1.0 / np.sqrt(strength)
    lap = np.eye(g.n) - inv_sqrt[:, None] * sym * inv_sqrt[None, :]
    vals = np.linalg.eigvalsh(lap)
    return float(vals[1])


def assortativity(g: WeightedDigraph) -> float | None:
    """Pearson correlation of total strengths across directed edges (source vs target).

    Returns None when either endpoint series has zero variance: the
    correlation is then undefined (degenerate), not a number.
    """
    if g.n_edges < 2:
        raise GraphError("assortativity needs at least 2 edges")
    src, dst = np.nonzero(g.weights)
    s_total = g.weights.sum(axis=1) + g.weights.sum(axis=0)
    x = s_total[src]
    y = s_total[dst]
    if x.std() == 0.0 or y.std() == 0.0:
        return None
    return float(np.corrcoef(x, y)[0, 1])


def coverage(full: WeightedDigraph, reduced: WeightedDigraph) -> float:
    """Fraction of total edge weight of ``full`` retained in ``reduced``.

    ``reduced`` must be an edge-subset of ``full`` under node labels, with
    identical weights (as produced by thresholding and LSCC extraction).
    """
    pos = {lbl: i for i, lbl in enumerate(full.labels)}
    total_reduced = 0.0
    for src, dst, w in reduced.edge_list():
        if src not in pos or dst not in pos:
            raise GraphError(f"node {src!r} or {dst!r} not present in the full graph")
        if full.weights[pos[src], pos[dst]] != w:
            raise GraphError(f"edge {src!r}->{dst!r} is not an edge of the full graph")
        total_reduced += w
    total_full = full.total_weight
    if total_full <= 0.0:
        raise GraphError("full graph has no edge weight")
    return total_reduced / total_full


def _connected(sym_adj: np.ndarray) -> bool:
    n = sym_adj.shape[0]
    if n == 0:
        return False
    reached = np.zeros(n, dtype=bool)
    reached[0] = True
    frontier = reached.copy()
    while frontier.any():
        nxt = sym_adj[frontier].any(axis=0) & ~reached
        reached |= nxt
        frontier = nxt
    return bool(reached.all())
