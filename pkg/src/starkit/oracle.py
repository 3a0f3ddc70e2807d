"""Exact h-super connectivity and h-super edge-connectivity by fragment search.

A *fragment* is a connected vertex set A; the oracle minimizes over fragments
with min degree >= h inside A and |A| <= fragment_cap (default floor(|V|/2)):

* kappa: |V| - |A| - |C| where C is the h-core of V - A - N(A) (C nonempty);
* lambda: the number of edges leaving A, when V - A also has min degree >= h.

The smallest component of an optimal cut is such a fragment, so the cap
floor(|V|/2) keeps the answer exact.

The fragment space is explored by include/exclude branching on the frontier
of A, with constraint propagation from the min-degree condition and max-flow
lower bounds:

* lambda: vertices excluded from A lie on the far side, so the edge min-cut
  between A and the excluded set bounds every completion.
* kappa: the search additionally grows a set Y known to survive on the far
  side (seeded by z, the lowest-ranked far-side vertex); excluded vertices
  are cut vertices and the vertex min-cut between A and Y bounds the rest.

Ties are kept (a branch is dropped only when its bound exceeds the incumbent)
and witnesses compare by (value, sorted cut, sorted fragment), so the result
is a function of the graph and options only, independent of search order and
of how the work is split across processes.
"""

from __future__ import annotations

import json
import logging
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable

from .errors import DomainError, OracleTimeout
from .flow import EdgeFlowNetwork, VertexFlowNetwork
from .topology import Graph, bits, mask_of, popcount

log = logging.getLogger(__name__)

_CHECK_EVERY = 256


@dataclass(frozen=True)
class ExactResult:
    measure: str
    h: int
    value: int | None
    witness_fragment: tuple[int, ...] = ()
    witness_cut: tuple = ()
    enumerated_fragments: int = field(default=0, compare=False)
    exhaustive: bool = True
    symmetry_reduced: bool = False
    search_nodes: int = field(default=0, compare=False)

    @property
    def exists(self) -> bool:
        return self.value is not None

    def to_json(self, G: Graph) -> str:
        labels = G.labels
        if self.measure == "kappa":
            cut = [labels[v] for v in self.witness_cut]
        else:
            cut = [[labels[u], labels[v]] for u, v in self.witness_cut]
        doc = {
            "measure": self.measure,
            "h": self.h,
            "value": self.value if self.value is not None else "none",
            "witness_fragment": [labels[v] for v in self.witness_fragment],
            "witness_cut": cut,
            "enumerated_fragments": self.enumerated_fragments,
            "exhaustive": self.exhaustive,
            "symmetry": self.symmetry_reduced,
        }
        return json.dumps(doc, ensure_ascii=False) + "\n"


# -- plumbing ---------------------------------------------------------------


def _core_mask(rows: tuple[int, ...], W: int, h: int) -> int:
    if h <= 0:
        return W
    while W:
        drop = 0
        for v in bits(W):
            if popcount(rows[v] & W) < h:
                drop |= 1 << v
        if not drop:
            break
        W &= ~drop
    return W


def h_core(G: Graph, W: Iterable[int], h: int) -> frozenset[int]:
    """Largest subset of W whose induced subgraph has min degree >= h."""
    return frozenset(bits(_core_mask(G.rows, mask_of(W), h)))


@dataclass
class EnumerationStats:
    visited: int = 0
    by_size: dict[int, int] = field(default_factory=dict)


def enumerate_connected_sets(
    G: Graph, cap: int, visit: Callable[[frozenset[int]], None]
) -> EnumerationStats:
    """Call ``visit`` once for every connected vertex set of size <= cap.

    Sets are grown from their lowest-ranked vertex; a candidate that has been
    branched on is excluded for the rest of its siblings' subtrees, so no set
    is produced twice.
    """
    if not 1 <= cap <= G.vertex_count:
        raise DomainError(f"cap {cap} outside 1..{G.vertex_count}")
    rows = G.rows
    stats = EnumerationStats()

    def grow(A: int, size: int, cand: int, excl: int) -> None:
        visit(frozenset(bits(A)))
        stats.visited += 1
        stats.by_size[size] = stats.by_size.get(size, 0) + 1
        if size == cap:
            return
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            child_excl = excl | low
            grow(A | low, size + 1, (cand | rows[v]) & ~child_excl & ~A, child_excl)
            excl = child_excl

    for r in range(G.vertex_count):
        below = (1 << (r + 1)) - 1
        grow(1 << r, 1, rows[r] & ~below, below)
    return stats


# -- the search -------------------------------------------------------------


@dataclass
class _Best:
    value: float = float("inf")
    key: tuple = ()
    fragment: int = 0
    cut: object = None

    def offer(self, value: int, key: tuple, fragment: int, cut: object) -> None:
        # a bound passed in from outside has no key; equal values still win
        if value < self.value or (value == self.value and (self.cut is None or key < self.key)):
            self.value, self.key, self.fragment, self.cut = value, key, fragment, cut


class _Search:
    def __init__(self, G: Graph, h: int, cap: int, deadline: float | None, bound: float) -> None:
        self.rows = G.rows
        self.n = G.vertex_count
        self.full = G.full_mask
        self.deg = G.degrees()
        self.h = h
        self.cap = cap
        self.deadline = deadline
        self.best = _Best(value=bound)
        self.fragments = 0
        self.nodes = 0

    def tick(self) -> None:
        self.nodes += 1
        if self.deadline is not None and self.nodes % _CHECK_EVERY == 0:
            if time.monotonic() > self.deadline:
                raise OracleTimeout("exact oracle exceeded its time limit")

    def nbh(self, A: int) -> int:
        rows = self.rows
        r = 0
        for a in bits(A):
            r |= rows[a]
        return r & ~A

    def min_deg_ok(self, S: int) -> bool:
        rows, h = self.rows, self.h
        return all(popcount(rows[v] & S) >= h for v in bits(S))


class _LambdaSearch(_Search):
    def __init__(self, G: Graph, *args) -> None:
        super().__init__(G, *args)
        self.net = EdgeFlowNetwork(G.rows)

    def boundary(self, A: int, B: int) -> int:
        rows = self.rows
        return sum(popcount(rows[a] & B) for a in bits(A))

    def evaluate(self, A: int) -> None:
        rest = self.full & ~A
        if not rest or not self.min_deg_ok(A) or not self.min_deg_ok(rest):
            return
        self.fragments += 1
        rows = self.rows
        cut = tuple((min(a, b), max(a, b)) for a in bits(A) for b in bits(rows[a] & rest))
        cut = tuple(sorted(cut))
        self.best.offer(len(cut), (cut, tuple(bits(A))), A, cut)

    def propagate(self, A: int, X: int):
        rows, deg, h = self.rows, self.deg, self.h
        while True:
            grown = False
            for a in bits(A):
                slack = deg[a] - h - popcount(rows[a] & X)
                if slack < 0:
                    return None
                if slack == 0:
                    free = rows[a] & ~A & ~X
                    if free:
                        A |= free
                        grown = True
            for x in bits(X):
                slack = deg[x] - h - popcount(rows[x] & A)
                if slack < 0:
                    return None
                if slack == 0:
                    free = rows[x] & ~A & ~X
                    if free:
                        X |= free
                        grown = True
            if A & X or popcount(A) > self.cap:
                return None
            if not grown:
                return A, X

    def run(self, root: int) -> None:
        below = (1 << root) - 1
        self.evaluate_if_new(1 << root, 0, fresh=True)
        self.rec(1 << root, below, fresh=False)

    def evaluate_if_new(self, A: int, before: int, fresh: bool) -> None:
        if fresh or A != before:
            self.evaluate(A)

    def rec(self, A: int, X: int, fresh: bool) -> None:
        self.tick()
        state = self.propagate(A, X)
        if state is None:
            return
        A2, X = state
        self.evaluate_if_new(A2, A, fresh)
        A = A2
        limit = self.best.value
        if X:
            if self.boundary(A, X) > limit:
                return
            if limit != float("inf") and self.net.max_flow(A, X, int(limit)) > limit:
                return
        frontier = self.nbh(A) & ~X
        if not frontier:
            return
        rows = self.rows
        v = max(bits(frontier), key=lambda w: (popcount(rows[w] & A), -w))
        self.rec(A | 1 << v, X, True)
        self.rec(A, X | 1 << v, False)


class _KappaSearch(_Search):
    def __init__(self, G: Graph, *args) -> None:
        super().__init__(G, *args)
        self.net = VertexFlowNetwork(G.rows)
        self.low_a = 0
        self.low_y = 0

    def evaluate(self, A: int) -> None:
        if not self.min_deg_ok(A):
            return
        C = _core_mask(self.rows, self.full & ~A & ~self.nbh(A), self.h)
        if not C:
            return
        self.fragments += 1
        T = self.full & ~A & ~C
        cut = tuple(bits(T))
        self.best.offer(len(cut), (cut, tuple(bits(A))), A, cut)

    def propagate(self, A: int, X: int, Y: int):
        rows, deg, h = self.rows, self.deg, self.h
        low_a, low_y = self.low_a, self.low_y
        while True:
            grown = False
            NA, NY = self.nbh(A), self.nbh(Y)
            if NA & Y or A & X or Y & X or A & Y:
                return None
            # adjacent to both sides, or barred from the side it touches: cut vertex
            forced = ((NA & NY) | (NA & low_a) | (NY & low_y)) & ~X
            if forced:
                X |= forced
                grown = True
            not_a = X | Y | NY | low_a
            for a in bits(A):
                slack = deg[a] - h - popcount(rows[a] & not_a)
                if slack < 0:
                    return None
                if slack == 0:
                    free = rows[a] & ~A & ~not_a
                    if free:
                        A |= free
                        grown = True
            not_y = X | A | NA | low_y
            for y in bits(Y):
                slack = deg[y] - h - popcount(rows[y] & not_y)
                if slack < 0:
                    return None
                if slack == 0:
                    free = rows[y] & ~Y & ~not_y
                    if free:
                        Y |= free
                        grown = True
            if popcount(A) > self.cap:
                return None
            if not grown:
                return A, X, Y

    def run(self, root: int, z: int) -> None:
        self.low_a = (1 << root) - 1
        self.low_y = (1 << z) - 1
        self.rec(1 << root, 0, 1 << z, False)

    def rec(self, A: int, X: int, Y: int, fresh: bool) -> None:
        self.tick()
        state = self.propagate(A, X, Y)
        if state is None:
            return
        A2, X, Y = state
        if fresh or A2 != A:
            self.evaluate(A2)
        A = A2
        limit = self.best.value
        nx = popcount(X)
        if nx > limit:
            return
        if limit != float("inf"):
            room = int(limit) - nx
            if self.net.max_flow(A, Y, X, room) > room:
                return
        rows = self.rows
        fa = self.nbh(A) & ~X
        fy = self.nbh(Y) & ~X
        if fy and (popcount(Y) <= popcount(A) or not fa):
            w = max(bits(fy), key=lambda u: (popcount(rows[u] & Y), -u))
            self.rec(A, X, Y | 1 << w, False)
            self.rec(A, X | 1 << w, Y, False)
        elif fa:
            v = max(bits(fa), key=lambda u: (popcount(rows[u] & A), -u))
            self.rec(A | 1 << v, X, Y, True)
            self.rec(A, X | 1 << v, Y, False)


# -- units of work and their reduction ---------------------------------------


def _units(G: Graph, measure: str, symmetry: bool) -> list[tuple[int, ...]]:
    roots = [0] if symmetry else list(range(G.vertex_count))
    if measure == "lambda":
        return [(r,) for r in roots]
    units = []
    for r in roots:
        closed = G.rows[r] | 1 << r
        units += [(r, z) for z in range(G.vertex_count) if not closed >> z & 1]
    return units


def _run_units(G, measure, h, cap, units, deadline, bound):
    """Run ``units`` sequentially sharing one incumbent; returns summary tuple."""
    if measure == "kappa":
        s = _KappaSearch(G, h, cap, deadline, bound)
        seen_roots = set()
        for r, z in units:
            if r not in seen_roots:
                seen_roots.add(r)
                s.low_a = (1 << r) - 1
                s.evaluate(1 << r)
            s.run(r, z)
    else:
        s = _LambdaSearch(G, h, cap, deadline, bound)
        for (r,) in units:
            s.run(r)
    b = s.best
    if b.cut is None:
        return None, (), 0, (), s.fragments, s.nodes
    return b.value, b.key, b.fragment, b.cut, s.fragments, s.nodes


def _unit_worker(args):
    G, measure, h, cap, unit, remaining, bound = args
    deadline = None if remaining is None else time.monotonic() + remaining
    return _run_units(G, measure, h, cap, [unit], deadline, bound)


def _resolve_workers(workers: int | None) -> int:
    if workers is None:
        env = os.environ.get("STARKIT_THREADS")
        workers = int(env) if env else (os.cpu_count() or 1)
    return max(1, int(workers))


def _exact(
    G: Graph,
    h: int,
    measure: str,
    symmetry: bool,
    fragment_cap: int | None,
    workers: int | None,
    timeout: float | None,
) -> ExactResult:
    V = G.vertex_count
    if not 0 <= h < V:
        raise DomainError(f"need 0 <= h < |V| = {V}, got {h}")
    if V == 0:
        raise DomainError("exact oracle needs a nonempty graph")
    full_cap = V // 2
    cap = full_cap if fragment_cap is None else int(fragment_cap)
    if cap < 1:
        if V == 1:
            return ExactResult(measure, h, None, symmetry_reduced=symmetry)
        raise DomainError(f"fragment cap must be >= 1, got {cap}")
    cap = min(cap, full_cap) if fragment_cap is None else min(cap, V - 1)
    exhaustive = cap >= full_cap
    deadline = None if timeout is None else time.monotonic() + timeout
    units = _units(G, measure, symmetry)
    nworkers = min(_resolve_workers(workers), max(1, len(units)))
    started = time.monotonic()

    if nworkers == 1 or len(units) <= 1:
        results = [_run_units(G, measure, h, cap, units, deadline, float("inf"))]
    else:
        # first unit alone gives the shared starting bound; the bound only
        # prunes, it cannot change the canonical minimum
        first = _run_units(G, measure, h, cap, units[:1], deadline, float("inf"))
        bound = float("inf") if first[0] is None else first[0]
        remaining = None if deadline is None else max(0.0, deadline - time.monotonic())
        jobs = [(G, measure, h, cap, u, remaining, bound) for u in units[1:]]
        with ProcessPoolExecutor(max_workers=nworkers) as pool:
            results = [first] + list(pool.map(_unit_worker, jobs, chunksize=max(1, len(jobs) // (4 * nworkers))))

    found = [r for r in results if r[0] is not None]
    fragments = sum(r[4] for r in results)
    nodes = sum(r[5] for r in results)
    log.debug("%s h=%d: %d units, %d nodes, %.3fs", measure, h, len(units), nodes, time.monotonic() - started)
    if not found:
        return ExactResult(measure, h, None, (), (), fragments, exhaustive, symmetry, nodes)
    value, key, frag, cut, _, _ = min(found, key=lambda r: (r[0], r[1]))
    return ExactResult(measure, h, int(value), tuple(bits(frag)), tuple(cut), fragments, exhaustive, symmetry, nodes)


def exact_kappa_s(
    G: Graph,
    h: int,
    *,
    symmetry: bool = False,
    fragment_cap: int | None = None,
    workers: int | None = 1,
    timeout: float | None = None,
) -> ExactResult:
    """Minimum h-vertex-cut of ``G`` (value None when no h-vertex-cut exists).

    ``symmetry=True`` restricts fragments to those containing vertex 0, which
    is exact only for vertex-transitive graphs; the caller vouches for that.
    ``workers=None`` reads STARKIT_THREADS, falling back to the CPU count.
    """
    return _exact(G, h, "kappa", symmetry, fragment_cap, workers, timeout)


def exact_lambda_s(
    G: Graph,
    h: int,
    *,
    symmetry: bool = False,
    fragment_cap: int | None = None,
    workers: int | None = 1,
    timeout: float | None = None,
) -> ExactResult:
    """Minimum h-edge-cut of ``G``; options as for :func:`exact_kappa_s`."""
    return _exact(G, h, "lambda", symmetry, fragment_cap, workers, timeout)


def exact(G: Graph, h: int, measure: str, **opts) -> ExactResult:
    if measure == "kappa":
        return exact_kappa_s(G, h, **opts)
    if measure == "lambda":
        return exact_lambda_s(G, h, **opts)
    raise DomainError(f"unknown measure {measure!r}")
