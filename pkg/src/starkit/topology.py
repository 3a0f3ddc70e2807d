"""Immutable graphs and the permutation-network generators.

Adjacency is stored one row per vertex as a Python ``int`` bitset (bit j set
means an edge to vertex rank j). Neighborhood unions and intersections in the
oracle are then single big-int operations.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import DomainError
from .perm import (
    Arrangement,
    compose,
    count_arrangements,
    cycles_to_permutation,
    enumerate_arrangements,
    format_label,
    parity,
    rank,
    replace_first,
    swap_digit,
)

MAX_NKSTAR_VERTICES = 40320  # 8!; dense bitset rows make 10**6 vertices ~125 GB


@dataclass(frozen=True)
class FamilyTag:
    family: str
    n: int = -1
    k: int = -1

    def __str__(self) -> str:
        return f"{self.family}(n={self.n}, k={self.k})"


@dataclass(frozen=True)
class FamilyParams:
    """(n, k, h) for an (n,k)-star question; ``h = -1`` when unused."""

    n: int
    k: int
    h: int = -1

    def validate(self, *, need_h: bool = False) -> "FamilyParams":
        n, k, h = self.n, self.k, self.h
        if not 2 <= k <= n - 1:
            raise DomainError(f"need 2 <= k <= n-1, got n={n}, k={k}")
        if need_h and h < 0:
            raise DomainError("h is required")
        if h != -1 and not 0 <= h <= n - 2:
            raise DomainError(f"need 0 <= h <= n-2, got h={h} for n={n}")
        return self


def bits(x: int) -> Iterator[int]:
    """Indices of set bits, ascending."""
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def popcount(x: int) -> int:
    return bin(x).count("1")


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def label_sort_key(label: str) -> tuple:
    """Numeric-aware key: "2.10:1" sorts as ((2, 10), (1,))."""
    try:
        return (0, tuple(tuple(int(x) for x in part.split(".")) for part in label.split(":")))
    except ValueError:
        return (1, label)


class Graph:
    """Simple undirected graph on ranks 0..V-1 with text labels.

    Instances are treated as immutable; the builders below are the only
    intended way to make one.
    """

    __slots__ = ("labels", "rows", "family", "arrangements", "_kinds", "_index")

    def __init__(
        self,
        labels: Sequence[str],
        rows: Sequence[int],
        family: FamilyTag | None = None,
        arrangements: Sequence[Arrangement] | None = None,
        edge_kinds: dict[tuple[int, int], str] | None = None,
    ) -> None:
        self.labels = tuple(labels)
        self.rows = tuple(rows)
        self.family = family
        self.arrangements = tuple(arrangements) if arrangements is not None else None
        self._kinds = dict(edge_kinds or {})
        self._index = {lab: i for i, lab in enumerate(self.labels)}
        if len(self._index) != len(self.labels):
            raise DomainError("duplicate vertex labels")
        if len(self.rows) != len(self.labels):
            raise DomainError("row count does not match label count")
        for v, row in enumerate(self.rows):
            if row >> v & 1:
                raise DomainError(f"loop at vertex {self.labels[v]}")
            if row >> len(self.rows):
                raise DomainError(f"row {v} points past the vertex set")
            for w in bits(row):
                if not self.rows[w] >> v & 1:
                    raise DomainError(f"asymmetric adjacency between {v} and {w}")

    @classmethod
    def from_edges(
        cls,
        labels: Sequence[str],
        edges: Iterable[tuple[int, int]],
        family: FamilyTag | None = None,
        arrangements: Sequence[Arrangement] | None = None,
        edge_kinds: dict[tuple[int, int], str] | None = None,
    ) -> "Graph":
        rows = [0] * len(labels)
        for u, v in edges:
            if u == v:
                raise DomainError(f"loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(labels, rows, family, arrangements, edge_kinds)

    @property
    def vertex_count(self) -> int:
        return len(self.rows)

    @property
    def full_mask(self) -> int:
        return (1 << len(self.rows)) - 1

    def __len__(self) -> int:
        return len(self.rows)

    def __repr__(self) -> str:
        fam = f" {self.family}" if self.family else ""
        return f"<Graph{fam} V={self.vertex_count} E={self.edge_count}>"

    def index_of(self, label: str | Arrangement) -> int:
        if isinstance(label, Arrangement):
            label = format_label(label)
        try:
            return self._index[label]
        except KeyError:
            raise DomainError(f"no vertex labeled {label!r}") from None

    def degree(self, v: int) -> int:
        return popcount(self.rows[v])

    def degrees(self) -> list[int]:
        return [popcount(r) for r in self.rows]

    def neighbors(self, v: int) -> frozenset[int]:
        return neighbors(self, v)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    @property
    def edge_count(self) -> int:
        return sum(popcount(r) for r in self.rows) // 2

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) with u < v, sorted."""
        out = []
        for u, row in enumerate(self.rows):
            for v in bits(row >> (u + 1)):
                out.append((u, u + 1 + v))
        return out

    def edge_kind(self, u: int, v: int) -> str | None:
        """'swap-<i>' or 'unswap' on (n,k)-star graphs; None when untagged."""
        if not self.has_edge(u, v):
            raise DomainError(f"{u}-{v} is not an edge")
        return self._kinds.get((min(u, v), max(u, v)))

    def label_edge(self, u: int, v: int) -> tuple[str, str]:
        """Edge as a label pair, smaller rank first."""
        if u > v:
            u, v = v, u
        return self.labels[u], self.labels[v]

    def edge_label_set(self) -> set[tuple[str, str]]:
        return {tuple(sorted(self.label_edge(u, v))) for u, v in self.edges()}

    def is_regular(self, d: int | None = None) -> bool:
        degs = set(self.degrees())
        if d is None:
            return len(degs) <= 1
        return degs <= {d}

    def component_of(self, start: int, within: int | None = None) -> int:
        """Bitmask of the component of ``start`` inside the vertex mask ``within``."""
        if within is None:
            within = self.full_mask
        seen = 1 << start
        frontier = seen
        rows = self.rows
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= rows[v]
            nxt &= within & ~seen
            seen |= nxt
            frontier = nxt
        return seen

    def is_connected(self) -> bool:
        if not self.rows:
            return True
        return self.component_of(0) == self.full_mask

    def adjacency_matrix(self) -> np.ndarray:
        """Dense boolean adjacency matrix (copy)."""
        n = self.vertex_count
        mat = np.zeros((n, n), dtype=bool)
        for u, v in self.edges():
            mat[u, v] = mat[v, u] = True
        return mat

    def packed_rows(self) -> np.ndarray:
        """Adjacency rows bit-packed with ``numpy.packbits`` (little bit order)."""
        return np.packbits(self.adjacency_matrix(), axis=1, bitorder="little")

    def bfs_distances(self, source: int) -> list[int]:
        dist = [-1] * self.vertex_count
        dist[source] = 0
        queue = deque([source])
        while queue:
            u = queue.popleft()
            for w in bits(self.rows[u]):
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        return dist


def neighbors(G: Graph, v: int) -> frozenset[int]:
    if not 0 <= v < G.vertex_count:
        raise DomainError(f"vertex rank {v} outside 0..{G.vertex_count - 1}")
    return frozenset(bits(G.rows[v]))


def _from_arrangements(
    verts: list[Arrangement],
    adjacent: Iterable[tuple[Arrangement, Arrangement, str]],
    family: FamilyTag,
    index=None,
) -> Graph:
    if index is None:
        index = {a: i for i, a in enumerate(verts)}
    rows = [0] * len(verts)
    kinds: dict[tuple[int, int], str] = {}
    for a, b, kind in adjacent:
        i, j = index[a], index[b]
        rows[i] |= 1 << j
        rows[j] |= 1 << i
        kinds[(min(i, j), max(i, j))] = kind
    return Graph([format_label(a) for a in verts], rows, family, verts, kinds)


def build_nkstar(n: int, k: int) -> Graph:
    """(n,k)-star graph on P(n,k): swap edges (first digit with digit i <= k)
    and unswap edges (first digit replaced by an unused symbol)."""
    if not 1 <= k <= n - 1:
        raise DomainError(f"need 1 <= k <= n-1, got n={n}, k={k}")
    if count_arrangements(n, k) > MAX_NKSTAR_VERTICES:
        raise DomainError(f"S_({n},{k}) exceeds {MAX_NKSTAR_VERTICES} vertices")
    verts = enumerate_arrangements(n, k)

    def moves():
        for a in verts:
            for i in range(2, k + 1):
                b = swap_digit(a, i)
                if a < b:
                    yield a, b, f"swap-{i}"
            for s in a.unused():
                b = replace_first(a, s)
                if a < b:
                    yield a, b, "unswap"

    return _from_arrangements(verts, moves(), FamilyTag("nkstar", n, k))


def build_star(n: int) -> Graph:
    """n-dimensional star graph on P(n)."""
    if not 2 <= n <= 8:
        raise DomainError(f"star graph needs 2 <= n <= 8, got {n}")
    verts = enumerate_arrangements(n, n)

    def moves():
        for a in verts:
            for i in range(2, n + 1):
                b = swap_digit(a, i)
                if a < b:
                    yield a, b, f"swap-{i}"

    return _from_arrangements(verts, moves(), FamilyTag("star", n, n))


def alternating_generators(n: int) -> list[tuple[int, ...]]:
    """(1 2 3), (1 3 2) and (1 2)(3 i) for 4 <= i <= n, in one-line form."""
    gens = [cycles_to_permutation(n, [[1, 2, 3]]), cycles_to_permutation(n, [[1, 3, 2]])]
    gens += [cycles_to_permutation(n, [[1, 2], [3, i]]) for i in range(4, n + 1)]
    return gens


def build_alternating_network(n: int) -> Graph:
    """Cayley graph AN_n of the alternating group, generators acting on positions
    by right composition."""
    if not 3 <= n <= 6:
        raise DomainError(f"AN_n needs 3 <= n <= 6, got {n}")
    verts = [p for p in enumerate_arrangements(n, n) if parity(p) == "even"]
    index = {a: i for i, a in enumerate(verts)}
    gens = alternating_generators(n)

    def moves():
        for a in verts:
            for g in gens:
                b = compose(a, g)
                if a < b:
                    yield a, b, "generator"

    return _from_arrangements(verts, moves(), FamilyTag("an", n, n), index)


def build_complete(n: int) -> Graph:
    """K_n, labeled like S_{n,1} ("1".."n")."""
    if n < 1:
        raise DomainError("K_n needs n >= 1")
    full = (1 << n) - 1
    verts = [Arrangement((i,), n) for i in range(1, n + 1)]
    rows = [full & ~(1 << v) for v in range(n)]
    return Graph([str(i) for i in range(1, n + 1)], rows, FamilyTag("complete", n, 1), verts)


def build_cycle(n: int) -> Graph:
    """C_n on labels "1".."n"."""
    if n < 3:
        raise DomainError("C_n needs n >= 3")
    edges = [(i, (i + 1) % n) for i in range(n)]
    return Graph.from_edges([str(i) for i in range(1, n + 1)], edges, FamilyTag("cycle", n, -1))


def build_family(family: str, n: int, k: int | None = None) -> Graph:
    """Dispatch by family name: star, nkstar, an, complete, cycle."""
    if family == "star":
        return build_star(n)
    if family == "nkstar":
        if k is None:
            raise DomainError("nkstar needs k")
        return build_nkstar(n, k)
    if family == "an":
        return build_alternating_network(n)
    if family == "complete":
        return build_complete(n)
    if family == "cycle":
        return build_cycle(n)
    raise DomainError(f"unknown family {family!r}")


def vertex_rank(G: Graph, a: Arrangement) -> int:
    """Rank of an arrangement inside ``G``; equals perm.rank for nkstar/star."""
    if G.family is not None and G.family.family in ("nkstar", "star") and G.arrangements:
        return rank(a)
    return G.index_of(a)


# -- serialization -----------------------------------------------------------


def _header(G: Graph) -> str:
    fam = G.family or FamilyTag("custom")
    return f"# family={fam.family} n={fam.n} k={fam.k} nv={G.vertex_count} ne={G.edge_count}"


def to_edgelist(G: Graph) -> str:
    lines = [_header(G)]
    lines += [f"{G.labels[u]} {G.labels[v]}" for u, v in G.edges()]
    return "\n".join(lines) + "\n"


def from_edgelist(text: str) -> Graph:
    """Parse the edgelist format. Vertex order follows ``label_sort_key``."""
    family = None
    nv = None
    pairs = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            fields = dict(tok.split("=", 1) for tok in line[1:].split() if "=" in tok)
            if "family" in fields:
                family = FamilyTag(fields["family"], int(fields.get("n", -1)), int(fields.get("k", -1)))
                nv = int(fields["nv"]) if "nv" in fields else None
            continue
        parts = line.split()
        if len(parts) != 2:
            raise DomainError(f"bad edgelist line {raw!r}")
        pairs.append((parts[0], parts[1]))
    labels = sorted({x for p in pairs for x in p}, key=label_sort_key)
    if nv is not None and nv != len(labels):
        raise DomainError(f"header says nv={nv} but edges touch {len(labels)} vertices")
    index = {lab: i for i, lab in enumerate(labels)}
    G = Graph.from_edges(labels, [(index[a], index[b]) for a, b in pairs], family)
    return _reattach_arrangements(G)


def to_dimacs(G: Graph) -> tuple[str, str]:
    """DIMACS edge text plus the companion JSON mapping rank -> label."""
    lines = [f"p edge {G.vertex_count} {G.edge_count}"]
    lines += [f"e {u + 1} {v + 1}" for u, v in G.edges()]
    mapping = {str(i): lab for i, lab in enumerate(G.labels)}
    return "\n".join(lines) + "\n", json.dumps(mapping, ensure_ascii=False) + "\n"


def from_dimacs(text: str, labels_json: str | None = None) -> Graph:
    nv = None
    edges = []
    for raw in text.splitlines():
        parts = raw.split()
        if not parts or parts[0] == "c":
            continue
        if parts[0] == "p":
            nv = int(parts[2])
        elif parts[0] == "e":
            edges.append((int(parts[1]) - 1, int(parts[2]) - 1))
        else:
            raise DomainError(f"bad DIMACS line {raw!r}")
    if nv is None:
        raise DomainError("DIMACS text has no problem line")
    if labels_json:
        mapping = json.loads(labels_json)
        labels = [mapping[str(i)] for i in range(nv)]
    else:
        labels = [str(i + 1) for i in range(nv)]
    return _reattach_arrangements(Graph.from_edges(labels, edges))


def _reattach_arrangements(G: Graph) -> Graph:
    """Recover Arrangement labels (and swap/unswap kinds) when every label parses."""
    from .perm import parse_label

    try:
        n = max(max(int(x) for x in lab.split(".")) for lab in G.labels)
        arrs = [parse_label(lab, n) for lab in G.labels]
    except (ValueError, DomainError):
        return G
    if G.family is not None and G.family.n > 0:
        n = G.family.n
        arrs = [Arrangement(a.digits, n) for a in arrs]
    return Graph(G.labels, G.rows, G.family, arrs, _infer_kinds(G, arrs))


def _infer_kinds(G: Graph, arrs: Sequence[Arrangement]) -> dict[tuple[int, int], str]:
    kinds = {}
    for u, v in G.edges():
        a, b = arrs[u].digits, arrs[v].digits
        if len(a) != len(b):
            return {}
        diff = [i for i in range(len(a)) if a[i] != b[i]]
        if len(diff) == 2 and diff[0] == 0 and a[0] == b[diff[1]] and a[diff[1]] == b[0]:
            kinds[(u, v)] = f"swap-{diff[1] + 1}"
        elif diff == [0]:
            kinds[(u, v)] = "unswap"
    return kinds
