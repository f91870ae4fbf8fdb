"""
Building a co-mention network from profile texts
=================================================

Every entity gets one profile text.  Counting how often profile i names
entity j gives a directed count n_ij; folding both directions together
(d_ij = n_ij + n_ji) yields a weighted undirected network.
"""

from netdiff import count_mentions, symmetrize

# A miniature corpus: three profiles that talk about each other.  In real
# use these come from a directory of <label>.txt files (see load_corpus).
corpus = {
    "Brightwell": (
        "Brightwell trades grain with Harrowgate. Harrowgate's barges "
        "dock here every spring, and even Stonereach sends buyers."
    ),
    "Harrowgate": (
        "Harrowgate remembers the flood. Brightwell sent aid; Stonereach "
        "sent nothing. Stonereach claims otherwise."
    ),
    "Stonereach": "Stonereach keeps to its quarries.",
}

# Directed counts: whole-word, case-insensitive, self-mentions ignored.
counts = count_mentions(corpus)
print("directed mention counts")
for (i, j), c in sorted(counts.items()):
    print(f"  {i:>10} -> {j:<10} {c}")

# Symmetrize into the weighted network. The universe argument lists every
# node that should exist, so entities nobody mentions stay visible.
net = symmetrize(counts, sorted(corpus))
print("\nedges (weight = mentions in either direction)")
for a, b, w in net.edges():
    print(f"  {a} -- {b}  weight {w:g}")

print(f"\nnodes: {net.labels}")
