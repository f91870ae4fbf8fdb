"""Weighted modularity, deterministic Louvain, and cluster composition.

The Louvain pass is implemented from scratch because its output depends on
the node processing order, which the usual references leave unspecified.
Here every ordering is pinned: local moves sweep nodes in ascending label
order (ascending community id on aggregated levels), equal-gain moves keep
the current community or pick the lowest candidate id, and the final
community ids are assigned by (size descending, lowest member label).  The
same input therefore produces the same partition on every run and platform.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

import numpy as np

from .errors import EmptyNetwork, IncompletePartition, UnknownAttribute
from .graph import WeightedNetwork

# label -> {attribute name -> value}; missing entries are simply absent
AttributeTable = Mapping[str, Mapping[str, str]]


@dataclass(frozen=True, eq=True)
class Partition:
    """Node-to-community assignment with dense ids starting at 0."""

    assignment: dict[str, int]
    modularity: float | None = None

    def __post_init__(self) -> None:
        ids = set(self.assignment.values())
        if ids and ids != set(range(max(ids) + 1)):
            raise ValueError("community ids must be contiguous from 0")
        object.__setattr__(self, "assignment", dict(self.assignment))

    @classmethod
    def from_communities(cls, groups: Iterable[Iterable[str]]) -> "Partition":
        assignment: dict[str, int] = {}
        for cid, group in enumerate(groups):
            for label in group:
                if label in assignment:
                    raise ValueError(f"label {label!r} assigned twice")
                assignment[label] = cid
        return cls(assignment)

    def communities(self) -> list[list[str]]:
        """Member lists sorted by (size descending, lowest label), members sorted."""
        by_id: dict[int, list[str]] = {}
        for label, cid in self.assignment.items():
            by_id.setdefault(cid, []).append(label)
        groups = [sorted(members) for members in by_id.values()]
        groups.sort(key=lambda g: (-len(g), g[0]))
        return groups


def modularity(net: WeightedNetwork, p: Partition) -> float:
    """Weighted Newman modularity of the partition.

    Q = (1/2m) * sum_ij [d_ij - k_i k_j / 2m] delta(c_i, c_j) with k the
    node strengths and 2m the total weight counted over ordered pairs.
    """
    missing = [label for label in net.labels if label not in p.assignment]
    if missing:
        raise IncompletePartition(f"partition misses nodes {missing}")
    adj = net.adjacency
    two_m = float(adj.sum())
    if two_m == 0.0:
        raise EmptyNetwork("modularity needs at least one edge")
    k = adj.sum(axis=1)
    members: dict[int, list[int]] = {}
    for i, label in enumerate(net.labels):
        members.setdefault(p.assignment[label], []).append(i)
    q = 0.0
    for cid in sorted(members):
        idx = members[cid]
        s_in = float(adj[np.ix_(idx, idx)].sum())
        s_tot = float(k[idx].sum())
        q += s_in / two_m - (s_tot / two_m) ** 2
    return q


@dataclass
class _LevelGraph:
    # aggregated working graph; self-loop weight is kept in ordered-pair
    # units so total weight (two_m) is invariant across levels
    neighbors: list[dict[int, float]]
    loops: list[float]

    @property
    def n(self) -> int:
        return len(self.neighbors)

    def strengths(self) -> list[float]:
        return [
            sum(nbrs.values()) + self.loops[u]
            for u, nbrs in enumerate(self.neighbors)
        ]


def _one_level(
    graph: _LevelGraph,
    move_order: list[int],
    two_m: float,
    resolution: float,
    min_gain: float,
) -> tuple[list[int], bool]:
    """Sweep local moves until a full pass changes nothing.

    Returns the (non-dense) community assignment and whether any node moved.
    """
    k = graph.strengths()
    community = list(range(graph.n))
    sigma_tot = list(k)
    moved_any = False
    moved_this_pass = True
    while moved_this_pass:
        moved_this_pass = False
        for u in move_order:
            c_old = community[u]
            links: dict[int, float] = {}
            for v, w in graph.neighbors[u].items():
                c = community[v]
                links[c] = links.get(c, 0.0) + w
            sigma_tot[c_old] -= k[u]
            base_links = links.get(c_old, 0.0)
            best_c = c_old
            best_gain = 0.0
            for c in sorted(links):
                if c == c_old:
                    continue
                gain = (
                    2.0 * (links[c] - base_links) / two_m
                    - resolution
                    * 2.0
                    * k[u]
                    * (sigma_tot[c] - sigma_tot[c_old])
                    / (two_m * two_m)
                )
                if gain > min_gain and gain > best_gain:
                    best_gain = gain
                    best_c = c
            sigma_tot[best_c] += k[u]
            community[u] = best_c
            if best_c != c_old:
                moved_this_pass = True
                moved_any = True
    return community, moved_any


def _aggregate(
    graph: _LevelGraph, community: list[int]
) -> tuple[_LevelGraph, dict[int, int]]:
    """Collapse communities into super-nodes, old ids remapped densely in
    ascending order."""
    remap = {c: i for i, c in enumerate(sorted(set(community)))}
    n_new = len(remap)
    neighbors: list[dict[int, float]] = [{} for _ in range(n_new)]
    loops = [0.0] * n_new
    for u in range(graph.n):
        cu = remap[community[u]]
        loops[cu] += graph.loops[u]
        for v, w in graph.neighbors[u].items():
            cv = remap[community[v]]
            if cu == cv:
                loops[cu] += w
            else:
                neighbors[cu][cv] = neighbors[cu].get(cv, 0.0) + w
    return _LevelGraph(neighbors, loops), remap


def louvain(
    net: WeightedNetwork, resolution: float = 1.0, min_gain: float = 1e-9
) -> Partition:
    """Multi-level Louvain community detection.

    Local moves and aggregation alternate until a level makes no move;
    isolated nodes end up as singleton communities.  ``resolution`` scales
    the expected-weight term in the gain (1.0 is stock behavior, smaller
    values favor larger communities); ``min_gain`` is the absolute
    modularity improvement a move must beat.
    """
    adj = net.adjacency
    two_m = float(adj.sum())
    if two_m == 0.0:
        raise EmptyNetwork("community detection needs at least one edge")

    n = net.n_nodes
    neighbors: list[dict[int, float]] = []
    for i in range(n):
        row = np.nonzero(adj[i])[0]
        neighbors.append({int(j): float(adj[i, j]) for j in row})
    graph = _LevelGraph(neighbors, [0.0] * n)
    membership = list(range(n))
    # level 0 sweeps nodes in ascending label order; aggregated levels use
    # ascending community id, which inherits that determinism
    move_order = sorted(range(n), key=lambda i: net.labels[i])

    while True:
        community, moved = _one_level(
            graph, move_order, two_m, resolution, min_gain
        )
        if not moved:
            break
        graph, remap = _aggregate(graph, community)
        membership = [remap[community[c]] for c in membership]
        if graph.n == len(community):
            break
        move_order = list(range(graph.n))

    # dense final ids ordered by (size desc, lowest member label)
    groups: dict[int, list[str]] = {}
    for i, label in enumerate(net.labels):
        groups.setdefault(membership[i], []).append(label)
    ordered = sorted(groups.values(), key=lambda g: (-len(g), min(g)))
    assignment = {
        label: cid for cid, group in enumerate(ordered) for label in group
    }
    p = Partition(assignment)
    return Partition(assignment, modularity=modularity(net, p))


def cluster_composition(
    p: Partition, attrs: AttributeTable, attribute: str
) -> dict[int, dict[str, int]]:
    """Histogram of one attribute's values inside each community.

    Nodes without the attribute are tallied under ``"unknown"``.
    """
    known = any(
        attribute in attrs.get(label, {}) for label in p.assignment
    )
    if not known:
        raise UnknownAttribute(f"no node carries attribute {attribute!r}")
    out: dict[int, dict[str, int]] = {}
    for label, cid in sorted(p.assignment.items()):
        value = attrs.get(label, {}).get(attribute) or "unknown"
        hist = out.setdefault(cid, {})
        hist[value] = hist.get(value, 0) + 1
    return {cid: dict(sorted(hist.items())) for cid, hist in sorted(out.items())}
