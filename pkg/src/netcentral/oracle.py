"""Naive reference implementation of the centrality measures.

Deliberately independent of the production engine: distances come from
plain per-source breadth-first search over the id-based adjacency, and
betweenness comes from literally enumerating every shortest path between
every station pair (depth-first over the predecessor DAG) and splitting one
unit of credit across them. Exponential in the worst case, hence the hard
station cap; use it to cross-check, never to analyze.
"""

from __future__ import annotations

from collections import deque

from .centrality import ORACLE_MAX_STATIONS, CentralityTable
from .errors import AnalysisError
from .model import TransitNetwork


def _distances_from(network: TransitNetwork, source: str) -> dict[str, int]:
    dist = {source: 0}
    queue = deque([source])
    while queue:
        v = queue.popleft()
        for w in network.adjacency[v]:
            if w not in dist:
                dist[w] = dist[v] + 1
                queue.append(w)
    return dist


def _predecessors(network: TransitNetwork, dist: dict[str, int]) -> dict[str, list[str]]:
    preds: dict[str, list[str]] = {v: [] for v in dist}
    for v in dist:
        for w in network.adjacency[v]:
            if dist[w] == dist[v] + 1:
                preds[w].append(v)
    return preds


def _all_shortest_paths(
    preds: dict[str, list[str]], source: str, target: str
) -> list[list[str]]:
    if target == source:
        return [[source]]
    paths = []
    for p in preds[target]:
        for partial in _all_shortest_paths(preds, source, p):
            paths.append(partial + [target])
    return paths


def oracle_measures(network: TransitNetwork) -> CentralityTable:
    """Same table as ``all_measures``, produced the slow, obvious way."""
    ids = sorted(network.stations)
    n = len(ids)
    if n > ORACLE_MAX_STATIONS:
        raise AnalysisError(
            f"network has {n} stations; the oracle is capped at {ORACLE_MAX_STATIONS}"
        )

    dist = {s: _distances_from(network, s) for s in ids}
    preds = {s: _predecessors(network, dist[s]) for s in ids}

    node_b = {v: 0.0 for v in ids}
    edge_b = {key: 0.0 for key in network.links}
    for i, s in enumerate(ids):
        for t in ids[i + 1 :]:
            paths = _all_shortest_paths(preds[s], s, t)
            unit = 1.0 / len(paths)
            for path in paths:
                for interior in path[1:-1]:
                    node_b[interior] += unit
                for a, b in zip(path, path[1:]):
                    key = (a, b) if a < b else (b, a)
                    edge_b[key] += unit

    return CentralityTable(
        degree={v: len(network.adjacency[v]) for v in ids},
        closeness={v: (n - 1) / sum(dist[v].values()) for v in ids},
        betweenness=node_b,
        eccentricity={v: max(dist[v].values()) for v in ids},
        edge_betweenness=edge_b,
    )
