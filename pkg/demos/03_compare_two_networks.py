"""
Comparing two networks
======================

Three whole-network metrics, all in [0, 1]:

* NDC - cosine similarity of the per-node degree vectors,
* NSC - the same for strength vectors,
* EEJ - Jaccard overlap of the edge sets (weights ignored).

Node sets need not match: both networks are aligned onto the sorted union
of their labels, with absent nodes contributing zeros.
"""

from netdiff import compare, from_edge_list, remove_node

before = from_edge_list([
    ("Ash", "Birch", 3),
    ("Ash", "Hub", 1),
    ("Birch", "Hub", 2),
    ("Hub", "Oak", 2),
    ("Oak", "Pine", 4),
    ("Hub", "Pine", 1),
])

# An "edition change": Pine drops out, a new node Sloe arrives, and one
# existing relationship doubles in weight.
after = from_edge_list([
    ("Ash", "Birch", 6),
    ("Ash", "Hub", 1),
    ("Birch", "Hub", 2),
    ("Hub", "Oak", 2),
    ("Oak", "Sloe", 1),
    ("Hub", "Sloe", 1),
])

report = compare(before, after)
print(f"NDC {report.ndc:.3f}   NSC {report.nsc:.3f}   EEJ {report.eej:.3f}")
print(f"density before {report.density_a:.3f}, after {report.density_b:.3f}")
print(f"only in before: {report.only_in_a}")
print(f"only in after:  {report.only_in_b}")

# Ablating a degree-d node from an E-edge network always gives
# EEJ = (E - d) / E, a handy sanity check.
sub = remove_node(before, "Pine")
ablation = compare(before, sub)
print(f"\nEEJ(before, before sans Pine) = {ablation.eej:.3f}  (= (6-2)/6)")

# Self-comparison is exactly 1 on all three metrics.
self_report = compare(before, before)
print(f"self comparison: {self_report.ndc}, {self_report.nsc}, {self_report.eej}")
