"""How kappa and lambda vary with h across S(n,k), printed as matrices.

Rows are k = 2..n-1, columns h = 0..n-2. The two measures coincide once
h reaches n-k; below that they can differ.

Run: python3 demos/04_formula_landscape.py [n]
"""

import sys

import numpy as np

from starkit.formulas import formula

n = int(sys.argv[1]) if len(sys.argv) > 1 else 7
ks = range(2, n)
hs = range(n - 1)
kap = np.array([[formula("nkstar", n, h, k, "kappa").value for h in hs] for k in ks])
lam = np.array([[formula("nkstar", n, h, k, "lambda").value for h in hs] for k in ks])

np.set_printoptions(linewidth=120)
print(f"kappa for S({n},k)\n{kap}\n")
print(f"lambda for S({n},k)\n{lam}\n")
cells = [(ks[i], int(h)) for i, h in zip(*np.nonzero(kap != lam))]
print("entries where they differ (k, h):", cells)
assert all(h < n - k for k, h in cells)
