"""AN_n and S(n, n-2) are the same graph; find the isomorphism explicitly.

Run: python3 demos/03_alternating_network.py
"""

from starkit import build_alternating_network, build_nkstar, isomorphic
from starkit.formulas import an_formula, formula

for n in (4, 5):
    A, B = build_alternating_network(n), build_nkstar(n, n - 2)
    w = isomorphic(A, B)
    print(f"AN_{n} ({A.vertex_count} vertices) vs S({n},{n - 2}): witness found={w is not None}, verified={w.verified}")
    sample = list(zip(A.labels, (B.labels[j] for j in w.mapping)))[:4]
    print("   ", ", ".join(f"{a} -> {b}" for a, b in sample), "...")

print("\nh-super connectivity of AN_n, half the star-graph value for h >= 2:")
for n in range(4, 9):
    row = [an_formula(n, h).value for h in range(n - 1)]
    star = [formula("nkstar", n, h, n - 2).value for h in range(n - 1)]
    assert row == star
    print(f"  n={n}: {row}")
