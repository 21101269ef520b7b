"""Exact centrality measures on a transit network.

One breadth-first sweep per source feeds every measure: hop distances give
closeness and eccentricity, and dependency accumulation over the per-source
shortest-path DAG gives node and edge betweenness (each unordered pair is
seen from both endpoints, so the accumulated totals are halved).

The sweep is vectorized over a CSR view of the adjacency so the cost stays
at O(n*m) array work rather than O(n*m) interpreter work; 10k-node graphs
are fine. Pair counting is unnormalized, endpoints are excluded for node
betweenness, and equal-length paths split credit fractionally.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

import numpy as np

from .errors import AnalysisError, ValidationError
from .model import TransitNetwork

# Shortest-path counts are held in float64, which is exact up to 2**53.
# Beyond that the count would silently lose precision, so we refuse.
_SIGMA_LIMIT = float(2**53)

ORACLE_MAX_STATIONS = 64


@dataclass(frozen=True)
class DistanceRow:
    """Hop distances and shortest-path counts from one source station.

    ``path_counts`` uses Python integers, so counts never overflow.
    """

    source: str
    dist: dict[str, int]
    path_counts: dict[str, int]


@dataclass(frozen=True)
class CentralityTable:
    """Per-station measures plus per-link edge betweenness."""

    degree: dict[str, int]
    closeness: dict[str, float]
    betweenness: dict[str, float]
    eccentricity: dict[str, int]
    edge_betweenness: dict[tuple[str, str], float]

    NODE_MEASURES = ("degree", "closeness", "betweenness", "eccentricity")

    def node_values(self, measure: str) -> dict[str, float]:
        if measure not in self.NODE_MEASURES:
            raise UnknownMeasureError(measure)
        return getattr(self, measure)


class UnknownMeasureError(ValidationError):
    def __init__(self, measure: str):
        super().__init__(
            f"unknown measure {measure!r}; expected one of "
            + ", ".join(CentralityTable.NODE_MEASURES)
        )


def bfs_row(network: TransitNetwork, source: str) -> DistanceRow:
    """Exact distances and shortest-path counts from ``source``."""
    if source not in network.adjacency:
        raise ValidationError(f"unknown station id {source!r}")
    dist = {source: 0}
    sigma = {source: 1}
    queue = deque([source])
    while queue:
        v = queue.popleft()
        dv = dist[v]
        sv = sigma[v]
        for w in network.adjacency[v]:
            if w not in dist:
                dist[w] = dv + 1
                queue.append(w)
            if dist[w] == dv + 1:
                sigma[w] = sigma.get(w, 0) + sv
    return DistanceRow(source=source, dist=dist, path_counts=sigma)


class _CsrGraph:
    """Index-based CSR adjacency with an undirected edge id per slot."""

    def __init__(self, network: TransitNetwork):
        self.ids = list(network.station_ids)
        self.index = {sid: i for i, sid in enumerate(self.ids)}
        self.edge_keys = list(network.links)
        self.n = len(self.ids)
        self.m = len(self.edge_keys)

        degrees = np.zeros(self.n, dtype=np.int64)
        for a, b in self.edge_keys:
            degrees[self.index[a]] += 1
            degrees[self.index[b]] += 1
        self.indptr = np.zeros(self.n + 1, dtype=np.int64)
        np.cumsum(degrees, out=self.indptr[1:])
        self.nbr = np.zeros(2 * self.m, dtype=np.int64)
        self.edge_id = np.zeros(2 * self.m, dtype=np.int64)
        cursor = self.indptr[:-1].copy()
        for eid, (a, b) in enumerate(self.edge_keys):
            ia, ib = self.index[a], self.index[b]
            self.nbr[cursor[ia]] = ib
            self.edge_id[cursor[ia]] = eid
            cursor[ia] += 1
            self.nbr[cursor[ib]] = ia
            self.edge_id[cursor[ib]] = eid
            cursor[ib] += 1


def _sweep(graph: _CsrGraph, accumulate: bool):
    """Run one BFS + (optionally) dependency accumulation per source.

    Returns (total_dist, ecc, node_flow, edge_flow); the flow arrays are the
    raw double-counted accumulations (halve for betweenness) and are None
    when ``accumulate`` is false.
    """
    n, m = graph.n, graph.m
    indptr, nbr, edge_id = graph.indptr, graph.nbr, graph.edge_id

    total_dist = np.zeros(n, dtype=np.int64)
    ecc = np.zeros(n, dtype=np.int64)
    node_flow = np.zeros(n, dtype=np.float64) if accumulate else None
    edge_flow = np.zeros(m, dtype=np.float64) if accumulate else None

    for s in range(n):
        dist = np.full(n, -1, dtype=np.int64)
        sigma = np.zeros(n, dtype=np.float64)
        dist[s] = 0
        sigma[s] = 1.0
        frontier = np.array([s], dtype=np.int64)
        levels = []
        level = 0
        while frontier.size:
            starts = indptr[frontier]
            counts = indptr[frontier + 1] - starts
            total = int(counts.sum())
            if total == 0:
                break
            cum = np.cumsum(counts)
            slots = np.arange(total, dtype=np.int64) + np.repeat(
                starts - (cum - counts), counts
            )
            tails = np.repeat(frontier, counts)
            heads = nbr[slots]
            fresh = heads[dist[heads] < 0]
            dist[fresh] = level + 1
            dag = dist[heads] == level + 1
            dag_tails = tails[dag]
            dag_heads = heads[dag]
            sigma += np.bincount(dag_heads, weights=sigma[dag_tails], minlength=n)
            if accumulate:
                levels.append((dag_tails, dag_heads, edge_id[slots[dag]]))
            frontier = np.unique(fresh)
            level += 1

        if sigma.max() > _SIGMA_LIMIT:
            raise OverflowError(
                "shortest-path count exceeds the exactly representable range"
            )

        total_dist += dist
        np.maximum(ecc, dist, out=ecc)

        if accumulate:
            delta = np.zeros(n, dtype=np.float64)
            for dag_tails, dag_heads, dag_eids in reversed(levels):
                coeff = sigma[dag_tails] / sigma[dag_heads] * (1.0 + delta[dag_heads])
                delta += np.bincount(dag_tails, weights=coeff, minlength=n)
                edge_flow += np.bincount(dag_eids, weights=coeff, minlength=m)
            delta[s] = 0.0
            node_flow += delta

    return total_dist, ecc, node_flow, edge_flow


def closeness(network: TransitNetwork) -> dict[str, float]:
    """Freeman closeness (n-1)/sum-of-distances; higher is more central."""
    graph = _CsrGraph(network)
    if graph.n < 2:
        raise ValidationError("closeness needs at least two stations")
    total_dist, _, _, _ = _sweep(graph, accumulate=False)
    scale = float(graph.n - 1)
    return {sid: scale / float(d) for sid, d in zip(graph.ids, total_dist)}

def eccentricity(network: TransitNetwork) -> dict[str, int]:
    """Maximum hop distance to any station; lower is more central."""
    graph = _CsrGraph(network)
    _, ecc, _, _ = _sweep(graph, accumulate=False)
    return {sid: int(e) for sid, e in zip(graph.ids, ecc)}


def betweenness(network: TransitNetwork) -> dict[str, float]:
    """Unnormalized pair-once betweenness, endpoints excluded."""
    graph = _CsrGraph(network)
    _, _, node_flow, _ = _sweep(graph, accumulate=True)
    return {sid: float(flow) / 2.0 for sid, flow in zip(graph.ids, node_flow)}


def edge_betweenness(network: TransitNetwork) -> dict[tuple[str, str], float]:
    """Pair-once betweenness of each link; endpoint pairs contribute."""
    graph = _CsrGraph(network)
    _, _, _, edge_flow = _sweep(graph, accumulate=True)
    return {key: float(flow) / 2.0 for key, flow in zip(graph.edge_keys, edge_flow)}


def all_measures(network: TransitNetwork) -> CentralityTable:
    """All five measures from a single BFS sweep per source."""
    graph = _CsrGraph(network)
    if graph.n < 2:
        raise ValidationError("centrality needs at least two stations")
    total_dist, ecc, node_flow, edge_flow = _sweep(graph, accumulate=True)
    scale = float(graph.n - 1)
    return CentralityTable(
        degree={sid: len(network.adjacency[sid]) for sid in graph.ids},
        closeness={sid: scale / float(d) for sid, d in zip(graph.ids, total_dist)},
        betweenness={sid: float(f) / 2.0 for sid, f in zip(graph.ids, node_flow)},
        eccentricity={sid: int(e) for sid, e in zip(graph.ids, ecc)},
        edge_betweenness={k: float(f) / 2.0 for k, f in zip(graph.edge_keys, edge_flow)},
    )
