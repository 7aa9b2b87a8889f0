import random

import pytest

from motifclust import Hyperedge, Hypergraph, InputError
from motifclust.testing import random_hypergraph


def test_neighbors_single_edge():
    H = Hypergraph.from_members([[0, 1, 2]])
    assert H.neighbors(0) == {1, 2}


def test_neighbors_pairwise_and_union():
    H = Hypergraph.from_members([[0, 1], [1, 2]])
    assert H.neighbors(0) == {1}
    assert H.neighbors(1) == {0, 2}


def test_neighbors_out_of_range():
    H = Hypergraph.from_members([[0, 1]])
    with pytest.raises(InputError):
        H.neighbors(7)


def test_closed_neighborhood():
    H = Hypergraph.from_members([[0, 1], [1, 2], [3, 4]])
    assert H.closed_neighborhood([]) == frozenset()
    assert H.closed_neighborhood({0}) == {0, 1}
    H2 = Hypergraph.from_members([[0, 1, 2], [2, 3]])
    assert H2.closed_neighborhood({0}) == {0, 1, 2}


def test_induced_subhypergraph_keeps_contained_edges():
    H = Hypergraph.from_members([[0, 1, 2], [0, 1], [2, 3]])
    sub, node_map, edge_map = H.induced_subhypergraph({0, 1, 2})
    members = {tuple(node_map[v] for v in e.members) for e in sub.edges}
    assert members == {(0, 1, 2), (0, 1)}
    assert edge_map == (0, 1)


def test_induced_subhypergraph_identity_and_partial():
    H = Hypergraph.from_members([[0, 1, 2]])
    sub, node_map, _ = H.induced_subhypergraph(range(3))
    assert sub.num_edges == 1 and node_map == (0, 1, 2)
    sub2, _, _ = H.induced_subhypergraph({0, 1})
    assert sub2.num_edges == 0


def test_connected_component():
    H = Hypergraph.from_members([[0, 1], [2, 3]])
    assert H.connected_component({0}) == {0, 1}
    H2 = Hypergraph.from_members([[0, 1, 2], [2, 3], [4, 5]])
    assert H2.connected_component({3}) == {0, 1, 2, 3}
    with pytest.raises(InputError):
        H.connected_component(set())


def test_duplicate_edges_rejected_at_construction():
    with pytest.raises(InputError):
        Hypergraph(3, [[0, 1], [1, 0]])


def test_hyperedge_canonical_form():
    e = Hyperedge.of([2, 0, 1, 1])
    assert e.members == (0, 1, 2)
    with pytest.raises(InputError):
        Hyperedge.of([3])


def test_neighbor_symmetry_randomized():
    rng = random.Random(42)
    for _ in range(20):
        H = random_hypergraph(rng, rng.randint(4, 10), 0.2, 0.08, big_edge_p=0.02)
        for v in range(H.n):
            for u in H.neighbors(v):
                assert v in H.neighbors(u)


def test_handshake_identity_randomized():
    rng = random.Random(7)
    for _ in range(20):
        H = random_hypergraph(rng, rng.randint(4, 10), 0.25, 0.1)
        assert sum(H.degree(v) for v in range(H.n)) == sum(len(e) for e in H.edges)


def test_induced_full_set_isomorphic_randomized():
    rng = random.Random(3)
    for _ in range(10):
        H = random_hypergraph(rng, 8, 0.25, 0.1)
        sub, node_map, edge_map = H.induced_subhypergraph(range(H.n))
        assert sub.n == H.n and sub.num_edges == H.num_edges
        for new_idx, old_idx in enumerate(edge_map):
            mapped = tuple(node_map[v] for v in sub.edge(new_idx).members)
            assert mapped == H.edge(old_idx).members


def test_connected_component_idempotent_randomized():
    rng = random.Random(11)
    for _ in range(15):
        H = random_hypergraph(rng, rng.randint(4, 10), 0.15, 0.05)
        comp = H.connected_component({0})
        for v in sorted(comp):
            assert H.connected_component({v}) == comp
