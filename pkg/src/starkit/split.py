"""t-split graphs: every vertex becomes t independent copies and every edge a
perfect matching between the two copy blocks.

Two deterministic matching rules are supported: ``parallel`` (copy j of u is
matched with copy j of v) and ``lemma2_6`` (the suffix rule that turns the
(n-k)!-split of S_{n,k} into the star graph S_n; see ``split_nkstar``).
"""

from __future__ import annotations

import itertools
import json
from math import factorial
from dataclasses import dataclass, field
from typing import Iterable

from .errors import DomainError
from .perm import Arrangement, enumerate_arrangements, format_label, rank
from .topology import FamilyTag, Graph, build_nkstar

RULES = ("parallel", "lemma2_6")


@dataclass(frozen=True)
class SplitMap:
    t: int
    rule: str
    block_of: tuple[int, ...]
    blocks: tuple[tuple[int, ...], ...]
    matchings: dict[tuple[int, int], tuple[tuple[int, int], ...]] = field(repr=False)
    base_labels: tuple[str, ...] = field(repr=False)
    split_labels: tuple[str, ...] = field(repr=False)

    def to_json(self) -> str:
        blocks = {
            self.base_labels[u]: [self.split_labels[x] for x in blk] for u, blk in enumerate(self.blocks)
        }
        return json.dumps({"t": self.t, "rule": self.rule, "blocks": blocks}, ensure_ascii=False) + "\n"


def _norm(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


def split_graph(G: Graph, t: int, rule: str = "parallel") -> tuple[Graph, SplitMap]:
    """t-split of an arbitrary graph with the parallel matching rule.

    Copy j of base vertex u gets rank u*t + j and label ``"<label>:<j+1>"``
    (the base label itself when t = 1).
    """
    if t < 1:
        raise DomainError(f"t must be >= 1, got {t}")
    if rule != "parallel":
        raise DomainError("only the parallel rule applies to arbitrary graphs; use split_nkstar")
    V = G.vertex_count
    if t == 1:
        labels = list(G.labels)
    else:
        labels = [f"{lab}:{j + 1}" for lab in G.labels for j in range(t)]
    blocks = tuple(tuple(u * t + j for j in range(t)) for u in range(V))
    block_of = tuple(x // t for x in range(V * t))
    matchings = {}
    edges = []
    kinds = {}
    for u, v in G.edges():
        m = tuple((u * t + j, v * t + j) for j in range(t))
        matchings[(u, v)] = m
        edges.extend(m)
        kind = G._kinds.get((u, v))
        if kind is not None:
            kinds.update({e: kind for e in m})
    fam = FamilyTag("split", G.family.n if G.family else -1, G.family.k if G.family else -1)
    Gt = Graph.from_edges(labels, edges, fam, edge_kinds=kinds)
    return Gt, SplitMap(t, rule, block_of, blocks, matchings, G.labels, Gt.labels)


def split_nkstar(n: int, k: int) -> tuple[Graph, SplitMap]:
    """The (n-k)!-split of S_{n,k} on vertex set P(n).

    Block V_u holds u followed by every ordering of its unused symbols
    (suffixes in lexicographic order). A swap edge matches equal suffixes; an
    unswap edge u -> s p2..pk matches x with the y whose suffix has p1 where
    x's suffix has s. The result is labeled in P(n) rank order.
    """
    if not 2 <= k <= n - 1:
        raise DomainError(f"need 2 <= k <= n-1, got n={n}, k={k}")
    if n > 6:
        raise DomainError(f"split_nkstar supports n <= 6, got {n}")
    base = build_nkstar(n, k)
    verts = enumerate_arrangements(n, n)
    t = factorial(n - k)

    blocks = []
    for a in base.arrangements:
        blk = [rank(Arrangement(a.digits + suf, n)) for suf in itertools.permutations(a.unused())]
        blocks.append(tuple(blk))
    block_of = [0] * len(verts)
    for u, blk in enumerate(blocks):
        for x in blk:
            block_of[x] = u

    matchings = {}
    edges = []
    kinds = {}
    for u, v in base.edges():
        kind = base.edge_kind(u, v)
        pairs = []
        for x in blocks[u]:
            xd = verts[x].digits
            if kind.startswith("swap"):
                yd = base.arrangements[v].digits + xd[k:]
            else:
                p1 = xd[0]
                s = base.arrangements[v].digits[0]
                suffix = list(xd[k:])
                suffix[suffix.index(s)] = p1
                yd = base.arrangements[v].digits + tuple(suffix)
            y = rank(Arrangement(yd, n))
            pairs.append(_norm(x, y))
        m = tuple(sorted(pairs))
        matchings[(u, v)] = m
        edges.extend(m)
        kinds.update({e: kind for e in m})
    Gt = Graph.from_edges([format_label(a) for a in verts], edges, FamilyTag("split", n, k), verts, kinds)
    smap = SplitMap(t, "lemma2_6", tuple(block_of), tuple(blocks), matchings, base.labels, Gt.labels)
    return Gt, smap


def lift_vertex_cut(m: SplitMap, T: Iterable[int]) -> frozenset[int]:
    """Union of the blocks of the base vertices in ``T``."""
    out: set[int] = set()
    for u in T:
        if not 0 <= u < len(m.blocks):
            raise DomainError(f"base vertex {u} out of range")
        out.update(m.blocks[u])
    return frozenset(out)


def lift_edge_cut(m: SplitMap, F: Iterable[tuple[int, int]]) -> frozenset[tuple[int, int]]:
    """Union of the matchings replacing the base edges in ``F``."""
    out: set[tuple[int, int]] = set()
    for u, v in F:
        try:
            out.update(m.matchings[_norm(u, v)])
        except KeyError:
            raise DomainError(f"{u}-{v} is not a base edge") from None
    return frozenset(out)
