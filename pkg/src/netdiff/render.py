"""DOT diagram emission and centrality report tables.

Output is plain text and fully deterministic: nodes render in label order,
edges in canonical pair order, and numbers use fixed formats.  Layout is
left to external DOT renderers.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .cluster import Partition
from .errors import EmptyInput
from .graph import WeightedNetwork
from .metrics import NodeMetricsRow

# fixed palette; community i gets color i mod 12
PALETTE = (
    "#a6cee3",
    "#1f78b4",
    "#b2df8a",
    "#33a02c",
    "#fb9a99",
    "#e31a1c",
    "#fdbf6f",
    "#ff7f00",
    "#cab2d6",
    "#6a3d9a",
    "#ffff99",
    "#b15928",
)

METRIC_COLUMNS = ("degree", "strength", "closeness", "betweenness")


@dataclass(frozen=True)
class RenderOptions:
    """Knobs for DOT emission.

    Edge thickness grows linearly with weight from a floor, so weight-1
    edges stay visible next to heavy ones.
    """

    min_penwidth: float = 0.5
    penwidth_per_weight: float = 0.5
    color_by_partition: Partition | None = None
    layout_hint: str = "neato"

    def __post_init__(self) -> None:
        if not (self.min_penwidth > 0 and self.penwidth_per_weight > 0):
            raise ValueError("penwidth parameters must be positive")


def _quote(label: str) -> str:
    escaped = label.replace("\\", "\\\\").replace('"', '\\"')
    return f'"{escaped}"'


def to_dot(net: WeightedNetwork, opts: RenderOptions | None = None) -> str:
    """Render the network as an undirected DOT ``graph`` document."""
    opts = opts or RenderOptions()
    assignment = (
        opts.color_by_partition.assignment if opts.color_by_partition else {}
    )
    lines = ["graph mentions {"]
    lines.append(f"  layout={_quote(opts.layout_hint)};")
    for label in sorted(net.labels):
        attrs = ""
        cid = assignment.get(label)
        if cid is not None:
            color = PALETTE[cid % len(PALETTE)]
            attrs = f' [style=filled, fillcolor="{color}"]'
        lines.append(f"  {_quote(label)}{attrs};")
    for a, b, w in net.edges():
        penwidth = opts.min_penwidth + opts.penwidth_per_weight * w
        lines.append(f"  {_quote(a)} -- {_quote(b)} [penwidth={penwidth:g}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _format_cell(column: str, row: NodeMetricsRow) -> str:
    if column == "degree":
        return str(row.degree)
    if column == "strength":
        return repr(row.strength)
    if column == "closeness":
        return f"{row.closeness:.3f}"
    if column == "betweenness":
        return f"{row.betweenness:.3f}"
    raise ValueError(f"unknown column {column!r}")


def _check_columns(columns: Sequence[str]) -> tuple[str, ...]:
    cols = tuple(columns)
    for c in cols:
        if c not in METRIC_COLUMNS:
            raise ValueError(f"unknown column {c!r}")
    if not cols:
        raise ValueError("need at least one column")
    return cols


def _align(header: list[str], body: list[list[str]]) -> str:
    widths = [len(h) for h in header]
    for cells in body:
        for i, cell in enumerate(cells):
            widths[i] = max(widths[i], len(cell))
    out = []
    for cells in [header] + body:
        padded = [cells[0].ljust(widths[0])]
        padded += [c.rjust(w) for c, w in zip(cells[1:], widths[1:])]
        out.append("  ".join(padded).rstrip())
    return "\n".join(out) + "\n"


def metrics_table(
    rows: Sequence[NodeMetricsRow],
    columns: Sequence[str] = METRIC_COLUMNS,
    fmt: str = "text",
) -> str:
    """Per-node metric report, aligned text or CSV.

    Closeness and betweenness round half-to-even to three decimals;
    strength keeps full precision.
    """
    if not rows:
        raise EmptyInput("no metric rows to render")
    cols = _check_columns(columns)
    body = [[row.label] + [_format_cell(c, row) for c in cols] for row in rows]
    header = ["label"] + list(cols)
    if fmt == "csv":
        return "\n".join(",".join(cells) for cells in [header] + body) + "\n"
    if fmt == "text":
        return _align(header, body)
    raise ValueError(f"unknown format {fmt!r}")


def metrics_table_multi(
    networks: Sequence[tuple[str, Sequence[NodeMetricsRow]]],
    columns: Sequence[str] = ("closeness", "betweenness"),
    fmt: str = "text",
) -> str:
    """Juxtapose several networks' metric columns side by side.

    Rows cover the union of labels; a network missing a node shows ``--``
    in its cells.
    """
    if not networks or all(not rows for _, rows in networks):
        raise EmptyInput("no metric rows to render")
    cols = _check_columns(columns)
    by_net = [{row.label: row for row in rows} for _, rows in networks]
    labels = sorted(set().union(*(d.keys() for d in by_net)))
    header = ["label"] + [
        f"{name}:{c}" for name, _ in networks for c in cols
    ]
    body = []
    for label in labels:
        cells = [label]
        for d in by_net:
            row = d.get(label)
            cells += [
                _format_cell(c, row) if row is not None else "--" for c in cols
            ]
        body.append(cells)
    if fmt == "csv":
        return "\n".join(",".join(cells) for cells in [header] + body) + "\n"
    if fmt == "text":
        return _align(header, body)
    raise ValueError(f"unknown format {fmt!r}")
