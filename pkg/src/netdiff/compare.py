"""Whole-network similarity: degree cosine, strength cosine, edge Jaccard.

Two networks rarely share a node set (one may have been ablated), so every
metric first aligns both onto the sorted union of their labels; a node
absent from one side contributes zero degree and strength there, which
correctly dilutes the similarity.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import EmptyUnion
from .graph import WeightedNetwork, edge_set
from .metrics import density


@dataclass(frozen=True)
class ComparisonReport:
    ndc: float
    nsc: float
    eej: float
    density_a: float
    density_b: float
    node_union: tuple[str, ...]
    only_in_a: tuple[str, ...]
    only_in_b: tuple[str, ...]


def align_nodes(
    a: WeightedNetwork, b: WeightedNetwork
) -> tuple[tuple[str, ...], dict[str, int], dict[str, int]]:
    """Sorted union of both label sets plus per-network index maps.

    The maps cover only the labels present in each network; absent labels
    are read as degree 0 / strength 0 by the vector builders.
    """
    union = tuple(sorted(set(a.labels) | set(b.labels)))
    index_a = {label: a.index(label) for label in a.labels}
    index_b = {label: b.index(label) for label in b.labels}
    return union, index_a, index_b


def _aligned_vectors(
    a: WeightedNetwork, b: WeightedNetwork, kind: str
) -> tuple[np.ndarray, np.ndarray]:
    union, index_a, index_b = align_nodes(a, b)

    def vec(net: WeightedNetwork, index: dict[str, int]) -> np.ndarray:
        v = np.zeros(len(union))
        for pos, label in enumerate(union):
            i = index.get(label)
            if i is None:
                continue
            row = net.adjacency[i]
            v[pos] = np.count_nonzero(row) if kind == "degree" else row.sum()
        return v

    return vec(a, index_a), vec(b, index_b)


def _cosine(va: np.ndarray, vb: np.ndarray) -> float:
    norm_a = float(np.dot(va, va))
    norm_b = float(np.dot(vb, vb))
    if norm_a == 0.0 or norm_b == 0.0:
        return 0.0
    return float(np.dot(va, vb)) / float(np.sqrt(norm_a * norm_b))


def ndc(a: WeightedNetwork, b: WeightedNetwork) -> float:
    """Cosine similarity of the aligned per-node degree vectors."""
    return _cosine(*_aligned_vectors(a, b, "degree"))


def nsc(a: WeightedNetwork, b: WeightedNetwork) -> float:
    """Cosine similarity of the aligned per-node strength vectors."""
    return _cosine(*_aligned_vectors(a, b, "strength"))


def eej(a: WeightedNetwork, b: WeightedNetwork) -> float:
    """Shared edges over the union of edges, as unordered label pairs.

    Weights are ignored entirely; only edge existence matters.
    """
    ea, eb = edge_set(a), edge_set(b)
    union = ea | eb
    if not union:
        raise EmptyUnion("both networks have no edges")
    return len(ea & eb) / len(union)


def compare(a: WeightedNetwork, b: WeightedNetwork) -> ComparisonReport:
    """All three similarity metrics plus densities and alignment diagnostics."""
    union, _, _ = align_nodes(a, b)
    set_a, set_b = set(a.labels), set(b.labels)
    return ComparisonReport(
        ndc=ndc(a, b),
        nsc=nsc(a, b),
        eej=eej(a, b),
        density_a=density(a),
        density_b=density(b),
        node_union=union,
        only_in_a=tuple(sorted(set_a - set_b)),
        only_in_b=tuple(sorted(set_b - set_a)),
    )
