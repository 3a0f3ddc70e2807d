"""The (4,2)-star graph next to the split that turns it into S_4.

Run: python3 demos/01_small_nkstar.py
"""

import numpy as np

from starkit import build_nkstar, build_star, edge_sets_equal, split_nkstar
from starkit.topology import neighbors

G = build_nkstar(4, 2)
print(f"S(4,2): {G.vertex_count} vertices, {G.edge_count} edges, regular of degree 3: {G.is_regular(3)}")

v = G.index_of("2.1")
for w in sorted(neighbors(G, v)):
    print(f"  2.1 -- {G.labels[w]:4s} ({G.edge_kind(v, w)})")

# Spectrum of the adjacency matrix; a regular graph has its degree as the top eigenvalue.
eig = np.linalg.eigvalsh(G.adjacency_matrix().astype(float))
print("adjacency spectrum:", np.round(np.sort(eig)[::-1], 3) + 0.0)

# Each vertex u becomes the block of full permutations that start with u.
Gt, smap = split_nkstar(4, 2)
print(f"\n2-split: {Gt.vertex_count} vertices; block of 2.1 is",
      [Gt.labels[x] for x in smap.blocks[v]])
print("split graph has exactly the edges of S_4:", edge_sets_equal(Gt, build_star(4)))
