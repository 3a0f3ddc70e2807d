import json

import pytest
from hypothesis import given, settings, strategies as st

from starkit.errors import ResourceError
from starkit.iso import edge_sets_equal, is_isomorphism, isomorphic
from starkit.split import split_nkstar
from starkit.topology import (
    Graph,
    build_alternating_network,
    build_complete,
    build_cycle,
    build_nkstar,
    build_star,
)


def drop_edge(G, u, v):
    rows = list(G.rows)
    rows[u] &= ~(1 << v)
    rows[v] &= ~(1 << u)
    return Graph(G.labels, rows, G.family)


def test_edge_set_examples():
    assert edge_sets_equal(split_nkstar(4, 2)[0], build_star(4))
    assert edge_sets_equal(build_nkstar(4, 3), build_star(4))
    S = build_star(4)
    u, v = S.edges()[0]
    assert not edge_sets_equal(S, drop_edge(S, u, v))
    assert not edge_sets_equal(build_cycle(4), build_complete(4))


@pytest.mark.parametrize("G", [build_star(4), build_nkstar(5, 3), build_alternating_network(5), build_cycle(7)])
def test_edge_sets_reflexive(G):
    assert edge_sets_equal(G, G)


@pytest.mark.parametrize("n", [4, 5])
def test_alternating_network_is_nkstar(n):
    A, B = build_alternating_network(n), build_nkstar(n, n - 2)
    for G1, G2 in ((A, B), (B, A)):
        w = isomorphic(G1, G2)
        assert w is not None and w.verified and is_isomorphism(G1, G2, w.mapping)


def test_non_isomorphic_pairs():
    assert isomorphic(build_complete(4), build_cycle(4)) is None
    assert isomorphic(build_nkstar(5, 2), build_nkstar(5, 3)) is None
    # same degree sequence, different structure: C6 vs two triangles
    two = Graph.from_edges([str(i) for i in range(6)], [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
    assert isomorphic(build_cycle(6), two) is None
    assert isomorphic(two, build_cycle(6)) is None


def test_budget_and_size_limits():
    with pytest.raises(ResourceError):
        isomorphic(build_nkstar(5, 3), build_alternating_network(5), node_budget=5)
    with pytest.raises(ResourceError):
        isomorphic(build_alternating_network(6), build_nkstar(6, 4))


def test_witness_json():
    A, B = build_alternating_network(4), build_nkstar(4, 2)
    w = isomorphic(A, B)
    doc = json.loads(w.to_json(A, B))
    assert list(doc) == ["mapping", "verified"] and doc["verified"] is True
    assert set(doc["mapping"]) == set(A.labels) and set(doc["mapping"].values()) == set(B.labels)


@settings(max_examples=40, deadline=None)
@given(st.integers(3, 8).flatmap(lambda n: st.tuples(st.just(n), st.permutations(range(n)),
       st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=14))))
def test_relabelled_copy_found_and_symmetric(data):
    n, perm, raw = data
    edges = {(min(a, b), max(a, b)) for a, b in raw if a != b}
    G = Graph.from_edges([str(i) for i in range(n)], sorted(edges))
    H = Graph.from_edges([str(i) for i in range(n)], sorted((perm[a], perm[b]) for a, b in edges))
    w = isomorphic(G, H)
    assert w is not None and is_isomorphism(G, H, w.mapping)
    assert isomorphic(H, G) is not None
