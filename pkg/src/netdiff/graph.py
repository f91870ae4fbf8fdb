"""Weighted undirected networks: construction, node ablation, edge sets.

The central type is :class:`WeightedNetwork`, an immutable pairing of an
ordered label tuple with a symmetric nonnegative adjacency matrix.  All
mutation happens by building new values, so instances are safe to share
across threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    CannotEmptyNetwork,
    DuplicatePair,
    InvalidLabel,
    NonPositiveWeight,
    SelfLoop,
    UnknownLabel,
)

EdgePair = tuple[str, str]
EdgeRecord = tuple[str, str, float]


def canonical_label(text: str) -> str:
    """Trim surrounding whitespace and reject empty labels."""
    label = str(text).strip()
    if not label:
        raise InvalidLabel(f"empty node label {text!r}")
    return label


def canonical_pair(a: str, b: str) -> EdgePair:
    """Return the unordered pair (a, b) in lexicographic order."""
    return (a, b) if a <= b else (b, a)


@dataclass(frozen=True, eq=False)
class WeightedNetwork:
    """Labeled nodes plus a symmetric nonnegative adjacency matrix.

    Invariants are enforced at construction time: the matrix is square with
    one row per label, exactly symmetric, zero on the diagonal, and free of
    negative or non-finite weights.  The adjacency array is marked read-only.
    """

    labels: tuple[str, ...]
    adjacency: np.ndarray

    def __post_init__(self) -> None:
        labels = tuple(canonical_label(l) for l in self.labels)
        if len(set(labels)) != len(labels):
            raise InvalidLabel("duplicate node labels in network")
        if not labels:
            raise InvalidLabel("a network needs at least one node")
        adj = np.array(self.adjacency, dtype=float)
        n = len(labels)
        if adj.shape != (n, n):
            raise ValueError(f"adjacency shape {adj.shape} does not match {n} labels")
        if not np.all(np.isfinite(adj)):
            raise ValueError("adjacency weights must be finite")
        if np.any(adj < 0):
            raise ValueError("adjacency weights must be nonnegative")
        if np.any(np.diagonal(adj) != 0):
            raise ValueError("adjacency diagonal must be zero")
        if not np.array_equal(adj, adj.T):
            raise ValueError("adjacency must be symmetric")
        adj.flags.writeable = False
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "adjacency", adj)
        object.__setattr__(self, "_index", {label: i for i, label in enumerate(labels)})

    @property
    def n_nodes(self) -> int:
        return len(self.labels)

    def __contains__(self, label: str) -> bool:
        return label in self._index

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise UnknownLabel(f"no node labeled {label!r}") from None

    def weight(self, a: str, b: str) -> float:
        return float(self.adjacency[self.index(a), self.index(b)])

    def edges(self) -> list[EdgeRecord]:
        """Positive-weight edges as (source, target, weight), source < target,
        sorted by (source, target)."""
        out = []
        for a, b in edge_set(self):
            out.append((a, b, self.weight(a, b)))
        out.sort()
        return out

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, WeightedNetwork):
            return NotImplemented
        return self.labels == other.labels and np.array_equal(
            self.adjacency, other.adjacency
        )

    def __hash__(self) -> int:
        return hash((self.labels, self.adjacency.tobytes()))

    def __repr__(self) -> str:
        n_edges = len(edge_set(self))
        return f"WeightedNetwork(n_nodes={self.n_nodes}, n_edges={n_edges})"


def from_edge_list(
    records: Iterable[tuple[str, str, float]],
    extra_nodes: Sequence[str] = (),
) -> WeightedNetwork:
    """Build a network from weighted unordered-pair records.

    Labels are the sorted union of all record endpoints and ``extra_nodes``;
    the latter admits isolated (degree-0) nodes.  Each unordered pair may
    appear once with strictly positive weight.
    """
    weights: dict[EdgePair, float] = {}
    labels: set[str] = {canonical_label(x) for x in extra_nodes}
    for rec in records:
        a, b, w = canonical_label(rec[0]), canonical_label(rec[1]), float(rec[2])
        if a == b:
            raise SelfLoop(f"record {rec!r} connects {a!r} to itself")
        if not (w > 0) or w == float("inf"):
            raise NonPositiveWeight(
                f"record {rec!r} needs a positive finite weight"
            )
        pair = canonical_pair(a, b)
        if pair in weights:
            raise DuplicatePair(f"record {rec!r} repeats the unordered pair {pair}")
        weights[pair] = w
        labels.add(a)
        labels.add(b)
    ordered = tuple(sorted(labels))
    index = {label: i for i, label in enumerate(ordered)}
    adj = np.zeros((len(ordered), len(ordered)))
    for (a, b), w in weights.items():
        adj[index[a], index[b]] = w
        adj[index[b], index[a]] = w
    return WeightedNetwork(ordered, adj)


def remove_node(net: WeightedNetwork, label: str) -> WeightedNetwork:
    """Induced subnetwork on every node except ``label``.

    All edges not incident to the removed node keep their weights.
    """
    i = net.index(label)
    if net.n_nodes < 2:
        raise CannotEmptyNetwork(f"cannot remove {label!r} from a 1-node network")
    keep = [j for j in range(net.n_nodes) if j != i]
    labels = tuple(net.labels[j] for j in keep)
    adj = net.adjacency[np.ix_(keep, keep)]
    return WeightedNetwork(labels, adj)


def edge_set(net: WeightedNetwork) -> frozenset[EdgePair]:
    """Unordered label pairs with positive weight, each in lexicographic order."""
    rows, cols = np.nonzero(net.adjacency)
    pairs = set()
    for i, j in zip(rows.tolist(), cols.tolist()):
        if i < j:
            pairs.add(canonical_pair(net.labels[i], net.labels[j]))
    return frozenset(pairs)
