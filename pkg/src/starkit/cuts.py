"""Cut certificates for (n,k)-star graphs and definition-level cut verifiers.

A set T of vertices (resp. F of edges) is an h-vertex-cut (h-edge-cut) when
removing it leaves a disconnected graph whose minimum degree is at least h.
The verifiers here check exactly that and report the first violation;
they never raise on an invalid cut.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable

from .errors import DomainError, StructureError
from .perm import Arrangement, enumerate_arrangements, format_label
from .topology import FamilyParams, Graph, bits, build_nkstar, mask_of, popcount


@dataclass(frozen=True)
class Verdict:
    valid: bool
    reason: str | None = None
    witness: int | None = None

    def __bool__(self) -> bool:
        return self.valid

    def __str__(self) -> str:
        return "valid" if self.valid else f"invalid({self.reason})"


VALID = Verdict(True)


def _verdict_after_removal(G: Graph, alive: int, rows: list[int] | tuple[int, ...], h: int) -> Verdict:
    if not alive:
        return Verdict(False, "still connected")
    start = (alive & -alive).bit_length() - 1
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= rows[v]
        nxt &= alive & ~seen
        seen |= nxt
        frontier = nxt
    if seen == alive:
        return Verdict(False, "still connected", start)
    for v in bits(alive):
        d = popcount(rows[v] & alive)
        if d < h:
            return Verdict(False, f"min degree {d} < {h}", v)
    return VALID


def verify_vertex_cut(G: Graph, T: Iterable[int], h: int) -> Verdict:
    """Is G - T disconnected with every surviving vertex of degree >= h?"""
    T = list(T)
    for v in T:
        if not 0 <= v < G.vertex_count:
            return Verdict(False, f"vertex {v} not in graph", v)
    alive = G.full_mask & ~mask_of(T)
    return _verdict_after_removal(G, alive, G.rows, h)


def verify_edge_cut(G: Graph, F: Iterable[tuple[int, int]], h: int) -> Verdict:
    """Is G - F disconnected with minimum degree >= h?"""
    rows = list(G.rows)
    for u, v in F:
        if not (0 <= u < G.vertex_count and 0 <= v < G.vertex_count) or not G.has_edge(u, v):
            return Verdict(False, f"{u}-{v} is not an edge", u)
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
    return _verdict_after_removal(G, G.full_mask, rows, h)


# -- certificates ------------------------------------------------------------


@dataclass(frozen=True)
class CutCertificate:
    params: FamilyParams
    kind: str
    fragment: tuple[str, ...]
    cut_vertices: tuple[str, ...] = ()
    cut_edges: tuple[tuple[str, str], ...] = ()
    claimed_size: int = field(default=-1)

    def __post_init__(self) -> None:
        if self.kind not in ("vertex", "edge"):
            raise DomainError(f"unknown certificate kind {self.kind!r}")
        size = len(self.cut_vertices) if self.kind == "vertex" else len(self.cut_edges)
        if self.claimed_size == -1:
            object.__setattr__(self, "claimed_size", size)
        elif self.claimed_size != size:
            raise DomainError(f"claimed size {self.claimed_size} != actual {size}")
        if set(self.fragment) & set(self.cut_vertices):
            raise DomainError("fragment and cut overlap")

    def to_json(self) -> str:
        cut = list(self.cut_vertices) if self.kind == "vertex" else [list(e) for e in self.cut_edges]
        doc = {
            "family": "nkstar",
            "n": self.params.n,
            "k": self.params.k,
            "h": self.params.h,
            "kind": self.kind,
            "fragment": list(self.fragment),
            "cut": cut,
            "size": self.claimed_size,
        }
        return json.dumps(doc, ensure_ascii=False) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "CutCertificate":
        doc = json.loads(text)
        params = FamilyParams(int(doc["n"]), int(doc["k"]), int(doc["h"]))
        kind = doc["kind"]
        if kind == "vertex":
            return cls(params, kind, tuple(doc.get("fragment", [])), tuple(doc["cut"]), (), int(doc["size"]))
        edges = tuple((a, b) for a, b in doc["cut"])
        return cls(params, kind, tuple(doc.get("fragment", [])), (), edges, int(doc["size"]))

    def verify(self, G: Graph) -> Verdict:
        """Check the cut against ``G`` at this certificate's h (labels resolved in G)."""
        try:
            if self.kind == "vertex":
                return verify_vertex_cut(G, [G.index_of(x) for x in self.cut_vertices], self.params.h)
            return verify_edge_cut(G, [(G.index_of(a), G.index_of(b)) for a, b in self.cut_edges], self.params.h)
        except DomainError as exc:
            return Verdict(False, str(exc))


def _check_high_range(p: FamilyParams) -> None:
    n, k, h = p.n, p.k, p.h
    if not (2 <= k <= n - 1 and n - k <= h <= n - 2):
        raise DomainError(f"need 2 <= k <= n-1 and n-k <= h <= n-2, got n={n}, k={k}, h={h}")


def build_fragment_X(p: FamilyParams) -> list[Arrangement]:
    """Arrangements of P(n,k) ending in 1, 2, ..., n-1-h (lexicographic order)."""
    _check_high_range(p)
    tail = tuple(range(1, p.n - p.h))
    m = len(tail)
    return [a for a in enumerate_arrangements(p.n, p.k) if a.digits[p.k - m :] == tail]


def build_cuts_from_X(
    G: Graph, X: Iterable[Arrangement], h: int
) -> tuple[CutCertificate, CutCertificate]:
    """T = N(X) outside X and F = the X-T edges, with the size and swap-edge
    claims asserted."""
    if G.family is None or G.family.family != "nkstar":
        raise DomainError("build_cuts_from_X needs an nkstar graph")
    n, k = G.family.n, G.family.k
    p = FamilyParams(n, k, h)
    _check_high_range(p)
    xs = sorted(G.index_of(a) for a in X)
    xmask = mask_of(xs)
    tmask = 0
    for x in xs:
        tmask |= G.rows[x]
    tmask &= ~xmask
    F = [(min(x, t), max(x, t)) for x in xs for t in bits(G.rows[x] & tmask)]
    F.sort()
    expect = len(xs) * (n - 1 - h)
    if not (len(F) == popcount(tmask) == expect):
        raise StructureError(f"|F|={len(F)}, |T|={popcount(tmask)}, expected {expect}")
    for u, v in F:
        kind = G.edge_kind(u, v)
        if not kind or not kind.startswith("swap"):
            raise StructureError(f"X-T edge {G.labels[u]}-{G.labels[v]} is not a swap edge")
    frag = tuple(G.labels[x] for x in xs)
    vcert = CutCertificate(p, "vertex", frag, tuple(G.labels[t] for t in bits(tmask)))
    ecert = CutCertificate(p, "edge", frag, (), tuple(G.label_edge(u, v) for u, v in F))
    return vcert, ecert


def tail_certificates(n: int, k: int, h: int) -> tuple[Graph, CutCertificate, CutCertificate]:
    """Build S_{n,k} and both certificates for (n, k, h) in one call."""
    p = FamilyParams(n, k, h)
    G = build_nkstar(n, k)
    vc, ec = build_cuts_from_X(G, build_fragment_X(p), h)
    return G, vc, ec


@dataclass(frozen=True)
class FragmentReport:
    induced_is_nkstar: bool
    counts_ok: bool
    outside_at_most_one: bool
    fragment_size: int
    cut_size: int
    small_params: tuple[int, int]

    @property
    def ok(self) -> bool:
        return self.induced_is_nkstar and self.counts_ok and self.outside_at_most_one


def check_fragment_structure(p: FamilyParams) -> FragmentReport:
    """Exhaustively check the three structural claims about X, T on S_{n,k}.

    (a) G[X] equals S_{h+1, h+1-(n-k)} after relabeling the j-th smallest
        symbol not in the fixed tail as j;
    (b) each X-vertex has h neighbors in X and n-1-h in T, with no T-vertex
        shared by two X-vertices;
    (c) every vertex outside X and T has at most one neighbor in T.
    """
    _check_high_range(p)
    n, k, h = p.n, p.k, p.h
    G = build_nkstar(n, k)
    X = build_fragment_X(p)
    xs = [G.index_of(a) for a in X]
    xmask = mask_of(xs)
    tmask = 0
    for x in xs:
        tmask |= G.rows[x]
    tmask &= ~xmask

    # (a)
    m = n - 1 - h
    small_n, small_k = h + 1, h + 1 - (n - k)
    free = list(range(m + 1, n + 1))
    relabel = {s: j + 1 for j, s in enumerate(free)}
    small = build_nkstar(small_n, small_k)
    images = []
    ok_a = True
    for a in X:
        head = a.digits[: k - m]
        try:
            images.append(small.index_of(Arrangement(tuple(relabel[d] for d in head), small_n)))
        except (KeyError, DomainError):
            ok_a = False
            break
    if ok_a:
        ok_a = sorted(images) == list(range(small.vertex_count))
    if ok_a:
        pos = {x: images[i] for i, x in enumerate(xs)}
        for i, x in enumerate(xs):
            want = small.rows[images[i]]
            got = mask_of(pos[y] for y in bits(G.rows[x] & xmask))
            if want != got:
                ok_a = False
                break

    # (b)
    ok_b = True
    seen_t = 0
    for x in xs:
        inside = popcount(G.rows[x] & xmask)
        outside = G.rows[x] & tmask
        if inside != h or popcount(outside) != n - 1 - h or seen_t & outside:
            ok_b = False
            break
        seen_t |= outside

    # (c)
    rest = G.full_mask & ~xmask & ~tmask
    ok_c = all(popcount(G.rows[u] & tmask) <= 1 for u in bits(rest))
    return FragmentReport(ok_a, ok_b, ok_c, len(xs), popcount(tmask), (small_n, small_k))
