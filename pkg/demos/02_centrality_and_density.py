"""
Centrality measures on a weighted network
=========================================

Degree counts a node's edges, strength sums their weights, and the two
path-based measures (closeness, betweenness) treat 1/weight as distance:
a heavily co-mentioned pair sits close together.
"""

from netdiff import (
    closeness,
    density,
    from_edge_list,
    metrics_all,
    metrics_table,
    shortest_paths,
)

# A small network with one clear broker: "Hub" joins two lobes.
net = from_edge_list([
    ("Ash", "Birch", 3),
    ("Ash", "Hub", 1),
    ("Birch", "Hub", 2),
    ("Hub", "Oak", 2),
    ("Oak", "Pine", 4),
    ("Hub", "Pine", 1),
])

# Inverse-weight distances: the Ash->Pine shortest path prefers heavy
# edges even when they add hops.
sol = shortest_paths(net, "Ash")
print("distances from Ash (length = sum of 1/weight):")
for label in net.labels:
    print(f"  {label:<6} {sol.dist[label]:.3f}  via {sol.predecessors[label]}")

# The whole per-node report in one call.
rows = metrics_all(net)
print()
print(metrics_table(rows))

# Density: 6 edges out of the 10 a 5-node network could have.
print(f"density: {density(net):.3f}")

# Closeness flags disconnection instead of failing, which matters once
# ablation starts cutting networks apart.
island = from_edge_list([("A", "B", 1)], extra_nodes=["Drift"])
value, disconnected = closeness(island, "Drift")
print(f"isolated node closeness: {value} (disconnected={disconnected})")
