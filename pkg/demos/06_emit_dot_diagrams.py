"""
Emitting DOT diagrams and report tables
=======================================

Diagrams are plain DOT text: edge thickness scales linearly with weight,
and an optional partition colors nodes by community.  Feed the output to
any graphviz renderer, e.g. ``neato -Tpng network.dot -o network.png``.
"""

from netdiff import (
    RenderOptions,
    from_edge_list,
    louvain,
    metrics_all,
    metrics_table,
    metrics_table_multi,
    remove_node,
    to_dot,
)

net = from_edge_list([
    ("Ash", "Birch", 1), ("Ash", "Cedar", 1), ("Birch", "Cedar", 1),
    ("Dell", "Elm", 1), ("Dell", "Fir", 1), ("Elm", "Fir", 1),
    ("Cedar", "Dell", 0.1),
])

# Plain rendering: penwidth = 0.5 + 0.5 * weight.
print(to_dot(net))

# Color nodes by their Louvain community and hint a different layout.
opts = RenderOptions(color_by_partition=louvain(net), layout_hint="fdp")
print(to_dot(net, opts))

# Side-by-side report in the style of a two-edition centrality table:
# `--` marks nodes absent from one of the networks.
sub = remove_node(net, "Cedar")
print(metrics_table_multi([
    ("full", metrics_all(net)),
    ("sans Cedar", metrics_all(sub)),
]))

# Single-network table with chosen columns.
print(metrics_table(metrics_all(net), columns=["degree", "strength"]))
