"""Independent brute-force reference implementations used across the tests.

These work on plain adjacency sets and never call the package's search or
verification code.
"""

from __future__ import annotations

import itertools
import sys

import pytest

from starkit.topology import Graph


def adjacency(G: Graph) -> list[set[int]]:
    return [set(G.neighbors(v)) for v in range(G.vertex_count)]


def _components(adj: list[set[int]], alive: set[int]) -> int:
    left = set(alive)
    count = 0
    while left:
        count += 1
        stack = [left.pop()]
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if w in left:
                    left.remove(w)
                    stack.append(w)
    return count


def is_h_vertex_cut(adj: list[set[int]], T: set[int], h: int) -> bool:
    alive = set(range(len(adj))) - T
    if _components(adj, alive) < 2:
        return False
    return all(len(adj[v] & alive) >= h for v in alive)


def brute_kappa(G: Graph, h: int, limit: int | None = None) -> int | None:
    """Smallest T (by exhaustive subsets) that is an h-vertex-cut."""
    adj = adjacency(G)
    V = G.vertex_count
    top = V if limit is None else min(V, limit)
    for size in range(top + 1):
        for T in itertools.combinations(range(V), size):
            if is_h_vertex_cut(adj, set(T), h):
                return size
    return None


def brute_lambda(G: Graph, h: int) -> int | None:
    """Min edge boundary over all bipartitions with min degree >= h on both sides."""
    adj = adjacency(G)
    V = G.vertex_count
    best = None
    for mask in range(1, (1 << V) - 1):
        if not mask & 1:
            continue  # each bipartition once
        A = {v for v in range(V) if mask >> v & 1}
        B = set(range(V)) - A
        if any(len(adj[v] & A) < h for v in A) or any(len(adj[v] & B) < h for v in B):
            continue
        size = sum(len(adj[v] & B) for v in A)
        if best is None or size < best:
            best = size
    return best


@pytest.fixture
def adjacency_of():
    return adjacency


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
