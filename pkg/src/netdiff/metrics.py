"""Per-node centralities and network density over inverse-weight distances.

Distance between adjacent nodes is the inverse of the edge weight, so pairs
with many co-mentions are "close".  Shortest paths carry a relative tie
tolerance (``TIE_RTOL``): inverse-weight path lengths are ratios of small
integers, and two routes of equal length must both be counted even when
floating-point summation makes them differ in the last bits.

Betweenness follows the pair-dependency accumulation scheme: one Dijkstra
per source, dependencies pushed backward through the shortest-path DAG.
Per-source passes are independent; the final merge always runs in ascending
source-label order so results are bit-identical at any parallelism degree.
"""

from __future__ import annotations

import heapq
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .errors import DegenerateNetwork
from .graph import WeightedNetwork, edge_set

# Two path lengths are equal when |a - b| <= TIE_RTOL * max(1, |a|, |b|).
TIE_RTOL = 1e-9

INF = float("inf")


def tied(a: float, b: float) -> bool:
    """Whether two path lengths are equal within the shared tie tolerance."""
    if a == b:
        return True
    if a == INF or b == INF:
        return False
    return abs(a - b) <= TIE_RTOL * max(1.0, abs(a), abs(b))


@dataclass(frozen=True)
class PathSolution:
    """Single-source shortest-path structure.

    ``dist`` maps each node to its shortest-path distance from ``source``
    (+inf when unreachable); ``sigma`` counts the distinct shortest paths;
    ``predecessors`` lists the immediate predecessors on those paths.
    """

    source: str
    dist: dict[str, float]
    sigma: dict[str, int]
    predecessors: dict[str, tuple[str, ...]]


class ClosenessResult(NamedTuple):
    """Closeness value plus a flag marking unreachable peers."""

    value: float
    disconnected: bool


@dataclass(frozen=True)
class NodeMetricsRow:
    label: str
    degree: int
    strength: float
    closeness: float
    betweenness: float


class _Sssp(NamedTuple):
    # index-based single-source solution: arrays over node positions
    dist: list[float]
    sigma: list[int]
    preds: list[list[int]]
    order: list[int]  # reachable nodes in nondecreasing distance order


def _adjacency_lists(net: WeightedNetwork) -> list[list[tuple[int, float]]]:
    adj = net.adjacency
    out: list[list[tuple[int, float]]] = []
    for i in range(net.n_nodes):
        row = np.nonzero(adj[i])[0]
        out.append([(int(j), 1.0 / float(adj[i, j])) for j in row])
    return out


def _dijkstra_counting(
    neighbors: list[list[tuple[int, float]]], source: int
) -> _Sssp:
    """Dijkstra with shortest-path counting under the tie tolerance.

    Edge lengths are strictly positive, so a node's distance is final when
    it is popped; predecessor/sigma updates only ever flow from finalized
    nodes, which keeps the counts consistent.
    """
    n = len(neighbors)
    dist = [INF] * n
    sigma = [0] * n
    preds: list[list[int]] = [[] for _ in range(n)]
    done = [False] * n
    order: list[int] = []

    dist[source] = 0.0
    sigma[source] = 1
    heap: list[tuple[float, int]] = [(0.0, source)]
    while heap:
        d, u = heapq.heappop(heap)
        if done[u]:
            continue
        done[u] = True
        order.append(u)
        for v, length in neighbors[u]:
            if done[v]:
                continue
            alt = dist[u] + length
            if alt < dist[v] and not tied(alt, dist[v]):
                dist[v] = alt
                sigma[v] = sigma[u]
                preds[v] = [u]
                heapq.heappush(heap, (alt, v))
            elif tied(alt, dist[v]):
                sigma[v] += sigma[u]
                preds[v].append(u)
    return _Sssp(dist, sigma, preds, order)


def shortest_paths(net: WeightedNetwork, source: str) -> PathSolution:
    """Single-source shortest distances and path counts from ``source``."""
    s = net.index(source)
    sol = _dijkstra_counting(_adjacency_lists(net), s)
    labels = net.labels
    return PathSolution(
        source=labels[s],
        dist={labels[i]: sol.dist[i] for i in range(net.n_nodes)},
        sigma={labels[i]: sol.sigma[i] for i in range(net.n_nodes)},
        predecessors={
            labels[i]: tuple(labels[p] for p in sol.preds[i])
            for i in range(net.n_nodes)
        },
    )


def degree(net: WeightedNetwork, label: str) -> int:
    """Number of positive-weight edges incident to the node."""
    i = net.index(label)
    return int(np.count_nonzero(net.adjacency[i]))


def strength(net: WeightedNetwork, label: str) -> float:
    """Total weight of the node's incident edges."""
    i = net.index(label)
    return float(net.adjacency[i].sum())


def closeness(net: WeightedNetwork, label: str) -> ClosenessResult:
    """(N-1) over the summed shortest-path distances to every other node.

    When any peer is unreachable the value is 0.0 and the disconnected flag
    is set, so ablation pipelines can keep rendering reports.
    """
    if net.n_nodes < 2:
        raise DegenerateNetwork("closeness needs at least 2 nodes")
    i = net.index(label)
    sol = _dijkstra_counting(_adjacency_lists(net), i)
    total = 0.0
    for j in range(net.n_nodes):
        if j == i:
            continue
        if sol.dist[j] == INF:
            return ClosenessResult(0.0, True)
        total += sol.dist[j]
    return ClosenessResult((net.n_nodes - 1) / total, False)


def _source_dependencies(
    neighbors: list[list[tuple[int, float]]], source: int
) -> list[float]:
    """Pair dependencies of one source on every other node.

    Backward sweep over the shortest-path DAG in reverse finalization
    order: delta[v] += sigma[v]/sigma[w] * (1 + delta[w]) for each w with
    predecessor v.
    """
    sol = _dijkstra_counting(neighbors, source)
    delta = [0.0] * len(neighbors)
    contrib = [0.0] * len(neighbors)
    for w in reversed(sol.order):
        for v in sol.preds[w]:
            delta[v] += sol.sigma[v] / sol.sigma[w] * (1.0 + delta[w])
        if w != source:
            contrib[w] = delta[w]
    return contrib


def betweenness_all(net: WeightedNetwork, workers: int = 1) -> dict[str, float]:
    """Betweenness for every node, normalized to [0, 1].

    For node i the raw score sums s_jk(i)/s_jk over unordered pairs {j, k}
    not containing i, where s_jk counts shortest j-k paths and s_jk(i) those
    passing through i; the result is divided by (N-1)(N-2)/2.  Per-source
    contributions are always merged in ascending source-label order, so the
    output is bit-identical for any ``workers`` value.
    """
    n = net.n_nodes
    if n < 3:
        raise DegenerateNetwork("betweenness needs at least 3 nodes")
    neighbors = _adjacency_lists(net)
    source_order = sorted(range(n), key=lambda i: net.labels[i])

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            contribs = list(
                pool.map(lambda s: _source_dependencies(neighbors, s), source_order)
            )
    else:
        contribs = [_source_dependencies(neighbors, s) for s in source_order]

    raw = [0.0] * n
    for contrib in contribs:  # fixed ascending-source order
        for i in range(n):
            raw[i] += contrib[i]
    # raw counts each unordered pair twice; normalize by 2 * (N-1)(N-2)/2
    scale = 1.0 / ((n - 1) * (n - 2))
    return {
        net.labels[i]: min(1.0, max(0.0, raw[i] * scale)) for i in range(n)
    }


def density(net: WeightedNetwork) -> float:
    """Existing edges as a fraction of the N(N-1)/2 possible pairs."""
    if net.n_nodes < 2:
        raise DegenerateNetwork("density needs at least 2 nodes")
    n = net.n_nodes
    return len(edge_set(net)) / (n * (n - 1) / 2)


def metrics_all(net: WeightedNetwork, workers: int = 1) -> list[NodeMetricsRow]:
    """One metrics row per node, in network label order.

    Betweenness entries are 0.0 when the network has fewer than 3 nodes.
    """
    if net.n_nodes < 2:
        raise DegenerateNetwork("metrics need at least 2 nodes")
    if net.n_nodes >= 3:
        betweenness = betweenness_all(net, workers=workers)
    else:
        betweenness = {label: 0.0 for label in net.labels}
    rows = []
    for label in net.labels:
        rows.append(
            NodeMetricsRow(
                label=label,
                degree=degree(net, label),
                strength=strength(net, label),
                closeness=closeness(net, label).value,
                betweenness=betweenness[label],
            )
        )
    return rows
