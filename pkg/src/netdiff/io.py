"""File formats: edge-list CSV, node CSV, alias JSON, counts CSV, JSON reports.

Writers are byte-deterministic: rows are sorted, newlines are always LF,
and floats use repr (shortest round-tripping form).
"""

from __future__ import annotations

import csv
import io as _io
import json
from pathlib import Path
from typing import Mapping

from .cluster import Partition
from .compare import ComparisonReport
from .errors import FormatError
from .graph import EdgeRecord, WeightedNetwork, canonical_label, from_edge_list

EDGE_HEADER = ["source", "target", "weight"]
COUNTS_HEADER = ["mentioner", "mentioned", "count"]


def _number(x: float) -> float | int:
    # weights are conceptually counts; render 3.0 as 3 in CSV but keep
    # fractional weights exact
    return int(x) if float(x).is_integer() else float(x)


def edge_list_csv(net: WeightedNetwork) -> str:
    """Edge rows with header ``source,target,weight``, source < target,
    sorted by (source, target)."""
    buf = _io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(EDGE_HEADER)
    for a, b, w in net.edges():
        writer.writerow([a, b, repr(_number(w))])
    return buf.getvalue()


def parse_edge_list(text: str) -> list[EdgeRecord]:
    rows = list(csv.reader(_io.StringIO(text)))
    if not rows or rows[0] != EDGE_HEADER:
        raise FormatError("edge list must start with header 'source,target,weight'")
    records: list[EdgeRecord] = []
    for lineno, row in enumerate(rows[1:], start=2):
        if not row:
            continue
        if len(row) != 3:
            raise FormatError(f"edge list line {lineno}: expected 3 fields")
        try:
            weight = float(row[2])
        except ValueError:
            raise FormatError(
                f"edge list line {lineno}: bad weight {row[2]!r}"
            ) from None
        records.append((row[0], row[1], weight))
    return records


def read_edge_list(path: str | Path) -> list[EdgeRecord]:
    return parse_edge_list(Path(path).read_text(encoding="utf-8"))


def write_edge_list(net: WeightedNetwork, path: str | Path) -> None:
    Path(path).write_text(edge_list_csv(net), encoding="utf-8")


def parse_node_table(text: str) -> tuple[list[str], dict[str, dict[str, str]]]:
    """Node CSV: header ``label`` plus arbitrary attribute columns.

    Returns the labels in file order and a label -> {column -> value} map;
    empty cells are treated as missing values.
    """
    rows = list(csv.reader(_io.StringIO(text)))
    if not rows or not rows[0] or rows[0][0] != "label":
        raise FormatError("node file must start with a 'label' header column")
    columns = rows[0][1:]
    labels: list[str] = []
    attrs: dict[str, dict[str, str]] = {}
    for row in rows[1:]:
        if not row:
            continue
        label = canonical_label(row[0])
        labels.append(label)
        values = {}
        for name, cell in zip(columns, row[1:]):
            if cell.strip():
                values[name] = cell.strip()
        attrs[label] = values
    return labels, attrs


def read_node_table(path: str | Path) -> tuple[list[str], dict[str, dict[str, str]]]:
    return parse_node_table(Path(path).read_text(encoding="utf-8"))


def load_network(
    edges_path: str | Path, nodes_path: str | Path | None = None
) -> WeightedNetwork:
    """Network from an edge-list CSV, optionally widened by a node file."""
    records = read_edge_list(edges_path)
    extra: list[str] = []
    if nodes_path is not None:
        extra, _ = read_node_table(nodes_path)
    return from_edge_list(records, extra_nodes=extra)


def read_alias_table(path: str | Path) -> dict[str, list[str]]:
    """Alias JSON: ``{"label": ["match string", ...], ...}``."""
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise FormatError(f"alias file is not valid JSON: {exc}") from None
    if not isinstance(data, dict):
        raise FormatError("alias file must be a JSON object")
    table: dict[str, list[str]] = {}
    for label, strings in data.items():
        if not isinstance(strings, list) or not all(
            isinstance(s, str) for s in strings
        ):
            raise FormatError(f"aliases for {label!r} must be a list of strings")
        table[canonical_label(label)] = strings
    return table


def counts_csv(counts: Mapping[tuple[str, str], int]) -> str:
    """Directed mention counts with header ``mentioner,mentioned,count``,
    positive counts only, sorted by (mentioner, mentioned)."""
    buf = _io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(COUNTS_HEADER)
    for (i, j), count in sorted(counts.items()):
        if count > 0:
            writer.writerow([i, j, count])
    return buf.getvalue()


def write_counts(counts: Mapping[tuple[str, str], int], path: str | Path) -> None:
    Path(path).write_text(counts_csv(counts), encoding="utf-8")


def partition_json(p: Partition) -> str:
    """Partition as ``{"communities": [[labels...], ...], "modularity": q}``,
    communities sorted by (size descending, lowest label)."""
    payload = {"communities": p.communities(), "modularity": p.modularity}
    return json.dumps(payload, indent=2) + "\n"


def parse_partition(text: str) -> Partition:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"partition file is not valid JSON: {exc}") from None
    if not isinstance(data, dict) or "communities" not in data:
        raise FormatError("partition file must be an object with 'communities'")
    try:
        p = Partition.from_communities(data["communities"])
    except (TypeError, ValueError) as exc:
        raise FormatError(f"bad communities list: {exc}") from None
    modularity = data.get("modularity")
    if modularity is None:
        return p
    return Partition(p.assignment, modularity=float(modularity))


def read_partition(path: str | Path) -> Partition:
    return parse_partition(Path(path).read_text(encoding="utf-8"))


def comparison_json(report: ComparisonReport) -> str:
    payload = {
        "ndc": report.ndc,
        "nsc": report.nsc,
        "eej": report.eej,
        "density_a": report.density_a,
        "density_b": report.density_b,
        "only_in_a": list(report.only_in_a),
        "only_in_b": list(report.only_in_b),
    }
    return json.dumps(payload, indent=2) + "\n"


def comparison_table(report: ComparisonReport) -> str:
    """Three-decimal human-readable comparison summary."""
    lines = [
        f"ndc        {report.ndc:.3f}",
        f"nsc        {report.nsc:.3f}",
        f"eej        {report.eej:.3f}",
        f"density_a  {report.density_a:.3f}",
        f"density_b  {report.density_b:.3f}",
        f"only_in_a  {', '.join(report.only_in_a) or '-'}",
        f"only_in_b  {', '.join(report.only_in_b) or '-'}",
    ]
    return "\n".join(lines) + "\n"
