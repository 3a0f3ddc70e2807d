"""Label-level graph equality plus a backtracking isomorphism search."""

from __future__ import annotations

import json
from dataclasses import dataclass

from .errors import ResourceError
from .topology import Graph, bits

MAX_ISO_VERTICES = 120
DEFAULT_NODE_BUDGET = 2_000_000


@dataclass(frozen=True)
class IsoWitness:
    mapping: tuple[int, ...]
    verified: bool

    def to_json(self, G1: Graph, G2: Graph) -> str:
        m = {G1.labels[u]: G2.labels[v] for u, v in enumerate(self.mapping)}
        return json.dumps({"mapping": m, "verified": self.verified}, ensure_ascii=False) + "\n"


def _full_labels(G: Graph) -> tuple[str, ...]:
    # an (n-1)-arrangement names the same vertex as its unique completion to P(n)
    fam = G.family
    if fam is not None and fam.family == "nkstar" and fam.k == fam.n - 1 and G.arrangements:
        return tuple(f"{lab}.{a.unused()[0]}" for lab, a in zip(G.labels, G.arrangements))
    return G.labels


def edge_sets_equal(G1: Graph, G2: Graph) -> bool:
    """Same label set and the same edges between labels.

    Labels of S_{n,n-1} are read as full permutations, so it compares
    directly with S_n.
    """
    L1, L2 = _full_labels(G1), _full_labels(G2)
    if set(L1) != set(L2) or len(L1) != len(G1.labels) or len(L2) != len(G2.labels):
        return False
    e1 = {frozenset((L1[u], L1[v])) for u, v in G1.edges()}
    e2 = {frozenset((L2[u], L2[v])) for u, v in G2.edges()}
    return e1 == e2


def is_isomorphism(G1: Graph, G2: Graph, mapping: tuple[int, ...]) -> bool:
    """Full re-check: bijection preserving adjacency and non-adjacency."""
    n = G1.vertex_count
    if n != G2.vertex_count or len(mapping) != n or sorted(mapping) != list(range(n)):
        return False
    for u in range(n):
        image = 0
        for w in bits(G1.rows[u]):
            image |= 1 << mapping[w]
        if image != G2.rows[mapping[u]]:
            return False
    return True


def _local_invariant(G: Graph, v: int, deg: list[int]) -> tuple:
    return deg[v], tuple(sorted(deg[w] for w in bits(G.rows[v])))


def isomorphic(G1: Graph, G2: Graph, node_budget: int = DEFAULT_NODE_BUDGET) -> IsoWitness | None:
    """Find an isomorphism G1 -> G2, or None if none exists.

    Vertices of G1 are placed in BFS order from vertex 0; the image of each
    one must be adjacent to its already-placed neighbors' images. Candidates
    are also filtered by a local degree signature and by distance to the
    root's image.
    Raises ResourceError when more than ``node_budget`` placements are tried.
    """
    n = G1.vertex_count
    for G in (G1, G2):
        if G.vertex_count > MAX_ISO_VERTICES:
            raise ResourceError(f"isomorphism search limited to {MAX_ISO_VERTICES} vertices")
    if n != G2.vertex_count or G1.edge_count != G2.edge_count:
        return None
    if sorted(G1.degrees()) != sorted(G2.degrees()):
        return None
    if n == 0:
        return IsoWitness((), True)

    deg1, deg2 = G1.degrees(), G2.degrees()
    inv1 = [_local_invariant(G1, v, deg1) for v in range(n)]
    inv2 = [_local_invariant(G2, v, deg2) for v in range(n)]
    if sorted(inv1) != sorted(inv2):
        return None
    if G1.is_connected() != G2.is_connected():
        return None

    # BFS order over every component of G1; a new component root has no parent
    order: list[int] = []
    seen = 0
    for s in range(n):
        if seen >> s & 1:
            continue
        comp_order = [s]
        seen |= 1 << s
        i = 0
        while i < len(comp_order):
            for w in bits(G1.rows[comp_order[i]] & ~seen):
                seen |= 1 << w
                comp_order.append(w)
            i += 1
        order.extend(comp_order)
    position = [0] * n
    for i, v in enumerate(order):
        position[v] = i
    dist1 = G1.bfs_distances(0)

    rows1, rows2 = G1.rows, G2.rows
    mapping = [-1] * n
    used = 0
    nodes = 0
    dist2: list[int] = []

    def image_of(mask: int) -> int:
        out = 0
        for w in bits(mask):
            out |= 1 << mapping[w]
        return out

    def candidates(v: int) -> list[int]:
        placed = rows1[v] & placed_mask[position[v]]
        if placed:
            first = (placed & -placed).bit_length() - 1
            pool = rows2[mapping[first]] & ~used
        else:
            pool = ((1 << n) - 1) & ~used
        return [c for c in bits(pool) if inv2[c] == inv1[v]]

    # vertices placed before position i
    placed_mask = [0] * (n + 1)
    for i, v in enumerate(order):
        placed_mask[i + 1] = placed_mask[i] | 1 << v

    def place(i: int) -> bool:
        nonlocal used, nodes
        if i == n:
            return True
        v = order[i]
        before = placed_mask[i]
        want_adj = rows1[v] & before
        for c in candidates(v):
            nodes += 1
            if nodes > node_budget:
                raise ResourceError(f"isomorphism search exceeded {node_budget} nodes")
            if dist1[v] >= 0 and dist2[c] != dist1[v]:
                continue
            if rows2[c] & used != image_of(want_adj):
                continue
            mapping[v] = c
            used |= 1 << c
            if place(i + 1):
                return True
            used &= ~(1 << c)
            mapping[v] = -1
        return False

    root = order[0]
    for c in range(n):
        if inv2[c] != inv1[root]:
            continue
        dist2 = G2.bfs_distances(c)
        if sorted(dist1) != sorted(dist2):
            continue
        nodes += 1
        mapping[root] = c
        used = 1 << c
        if place(1):
            result = tuple(mapping)
            if not is_isomorphism(G1, G2, result):
                raise AssertionError("isomorphism search produced an invalid mapping")
            return IsoWitness(result, True)
        mapping[root] = -1
        used = 0
    return None
