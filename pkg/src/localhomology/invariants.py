"""Vertex and edge invariants used in the correlation study.

Conventions are fixed for determinism: closeness is (n-1) over the distance
sum, betweenness counts each unordered endpoint pair once and excludes the
endpoints themselves, and random-walk betweenness follows the current-flow
formulation (unit current injected per source-sink pair, endpoints counted
with throughput one, averaged over all pairs). Pearson correlation is
invariant under positive affine rescaling, so these choices do not affect
any correlation table.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import DisconnectedGraphError, PreconditionError
from .graphs import Graph, maximal_cliques


@dataclass(frozen=True)
class VertexScores:
    name: str
    values: tuple[float, ...]

    def to_csv(self, labels=None) -> str:
        lines = ["vertex,score"]
        for v, score in enumerate(self.values):
            label = labels[v] if labels is not None else v
            lines.append(f"{label},{score:.10g}")
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class EdgeScores:
    name: str
    values: dict[tuple[int, int], float]

    def to_csv(self, labels=None) -> str:
        lines = ["u,v,score"]
        for (u, v) in sorted(self.values):
            lu = labels[u] if labels is not None else u
            lv = labels[v] if labels is not None else v
            lines.append(f"{lu},{lv},{self.values[(u, v)]:.10g}")
        return "\n".join(lines) + "\n"


def degree_centrality(graph: Graph) -> VertexScores:
    if graph.n <= 1:
        raise PreconditionError("degree centrality needs at least two vertices")
    scale = graph.n - 1
    return VertexScores(
        "degree_centrality",
        tuple(len(graph.adjacency[v]) / scale for v in range(graph.n)),
    )


def _bfs_distances(graph: Graph, source: int) -> list[int]:
    dist = [-1] * graph.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in graph.adjacency[u]:
            if dist[w] < 0:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def closeness_centrality(graph: Graph) -> VertexScores:
    if graph.n <= 1:
        raise PreconditionError("closeness centrality needs at least two vertices")
    if not graph.is_connected():
        raise DisconnectedGraphError("closeness centrality requires a connected graph")
    values = []
    for v in range(graph.n):
        total = sum(_bfs_distances(graph, v))
        values.append((graph.n - 1) / total)
    return VertexScores("closeness_centrality", tuple(values))


def _brandes_pass(graph: Graph, source: int):
    """Single-source shortest-path counts and dependency order."""
    sigma = [0] * graph.n
    dist = [-1] * graph.n
    preds: list[list[int]] = [[] for _ in range(graph.n)]
    sigma[source] = 1
    dist[source] = 0
    order = []
    queue = deque([source])
    while queue:
        u = queue.popleft()
        order.append(u)
        for w in graph.adjacency[u]:
            if dist[w] < 0:
                dist[w] = dist[u] + 1
                queue.append(w)
            if dist[w] == dist[u] + 1:
                sigma[w] += sigma[u]
                preds[w].append(u)
    return order, sigma, preds


def betweenness_vertex(graph: Graph) -> VertexScores:
    """Brandes shortest-path betweenness, endpoints excluded, unordered pairs.

    Dependencies accumulate as exact rationals; scores become floats only on
    output.
    """
    scores = [Fraction(0)] * graph.n
    for source in range(graph.n):
        order, sigma, preds = _brandes_pass(graph, source)
        delta = [Fraction(0)] * graph.n
        for w in reversed(order):
            for v in preds[w]:
                delta[v] += Fraction(sigma[v], sigma[w]) * (1 + delta[w])
            if w != source:
                scores[w] += delta[w]
    return VertexScores("betweenness_vertex", tuple(float(s / 2) for s in scores))


def betweenness_edge(graph: Graph) -> EdgeScores:
    values = {edge: Fraction(0) for edge in graph.edges}
    for source in range(graph.n):
        order, sigma, preds = _brandes_pass(graph, source)
        delta = [Fraction(0)] * graph.n
        for w in reversed(order):
            for v in preds[w]:
                contribution = Fraction(sigma[v], sigma[w]) * (1 + delta[w])
                key = (v, w) if v < w else (w, v)
                values[key] += contribution
                delta[v] += contribution
    return EdgeScores("betweenness_edge", {e: float(s / 2) for e, s in values.items()})


def random_walk_betweenness(graph: Graph) -> VertexScores:
    """Current-flow betweenness from a grounded-Laplacian solve.

    For every source-sink pair a unit current is injected and extracted; the
    throughput of an interior vertex is half the absolute current over its
    incident edges, endpoints count as one, and scores are averaged over all
    unordered pairs.
    """
    n = graph.n
    if n <= 1:
        raise PreconditionError("random-walk betweenness needs at least two vertices")
    if not graph.is_connected():
        raise DisconnectedGraphError("random-walk betweenness requires a connected graph")
    adjacency = np.zeros((n, n))
    for u, v in graph.edges:
        adjacency[u, v] = adjacency[v, u] = 1.0
    laplacian = np.diag(adjacency.sum(axis=1)) - adjacency
    # Ground the last vertex; potentials of the rest come from the inverse.
    inverse = np.zeros((n, n))
    inverse[:-1, :-1] = np.linalg.inv(laplacian[:-1, :-1])
    totals = np.zeros(n)
    for s in range(n):
        for t in range(s + 1, n):
            potentials = inverse[:, s] - inverse[:, t]
            diffs = np.abs(potentials[:, None] - potentials[None, :]) * adjacency
            throughput = 0.5 * diffs.sum(axis=1)
            throughput[s] = 1.0
            throughput[t] = 1.0
            totals += throughput
    pair_count = n * (n - 1) / 2.0
    return VertexScores("random_walk_betweenness", tuple(totals / pair_count))


def maximal_clique_count(graph: Graph) -> VertexScores:
    counts = [0] * graph.n
    for clique in maximal_cliques(graph):
        for v in clique:
            counts[v] += 1
    return VertexScores("maximal_cliques", tuple(float(c) for c in counts))


def clustering_scores(graph: Graph) -> VertexScores:
    return VertexScores(
        "clustering_coefficient",
        tuple(float(graph.clustering_coefficient(v)) for v in range(graph.n)),
    )
