import random

import pytest

from motifclust import (
    COMPLEMENT,
    ConstraintError,
    MotifOccurrence,
    MotifPattern,
    build_aux,
    cut_net,
    enumerate_motifs,
    motif_cut,
)
from motifclust.auxiliary import dump_aux
from motifclust.testing import brute_motifs, random_ball_nodes, random_hypergraph


def occ(*nodes):
    return MotifOccurrence(tuple(sorted(nodes)), MotifPattern.III)


def test_build_aux_toy():
    M = [occ(0, 1, 2), occ(2, 3, 4)]
    aux = build_aux(M, {0, 1, 2}, [0, 1, 2])
    assert aux.u == 3
    assert aux.edges == (((0, 1, 2), 1), ((2, 3), 1))
    assert aux.back_map == (0, 1, 2, COMPLEMENT)


def test_build_aux_merges_parallel_crossing_edges():
    M = [occ(0, 5, 6), occ(0, 7, 8)]
    aux = build_aux(M, {0}, [0])
    assert aux.edges == (((0, 1), 2),)


def test_build_aux_all_inside_leaves_u_isolated():
    M = [occ(0, 1, 2)]
    aux = build_aux(M, {0, 1, 2}, [0, 1, 2])
    assert all(aux.u not in members for members, _ in aux.edges)
    assert aux.incident_edges(aux.u) == ()


def test_build_aux_rejects_outside_occurrence():
    with pytest.raises(ConstraintError):
        build_aux([occ(5, 6, 7)], {0, 1}, [0, 1])


def test_build_aux_rejects_seed_outside_ball():
    with pytest.raises(ConstraintError):
        build_aux([occ(0, 1, 2)], {0, 1, 2}, [0, 9])


def test_weight_conservation_and_u_mass_randomized():
    rng = random.Random(51)
    for _ in range(30):
        H = random_hypergraph(rng, rng.randint(4, 11), 0.25, 0.12)
        if H.num_edges == 0:
            continue
        seed = H.edge(rng.randrange(H.num_edges)).members
        ball = random_ball_nodes(rng, H, seed)
        pattern = rng.choice(list(MotifPattern))
        M = enumerate_motifs(H, ball, pattern)
        if not M:
            continue
        aux = build_aux(M, ball, seed)
        assert aux.total_weight() == len(M)
        crossing = sum(1 for o in M if not set(o.nodes) <= ball)
        u_mass = sum(w for members, w in aux.edges if aux.u in members)
        assert u_mass == crossing
        for members, _ in aux.edges:
            assert len(members) >= 2
            assert all(0 <= v <= aux.u for v in members)


def test_cut_net_equals_motif_cut_randomized():
    # any 2-way aux split maps back to a split of H whose brute-force
    # motif-cut equals the aux cut-net (u's block absorbs the complement)
    rng = random.Random(77)
    checked = 0
    while checked < 40:
        H = random_hypergraph(rng, rng.randint(4, 11), 0.25, 0.12)
        if H.num_edges == 0:
            continue
        seed = H.edge(rng.randrange(H.num_edges)).members
        ball = random_ball_nodes(rng, H, seed)
        pattern = rng.choice(list(MotifPattern))
        M = enumerate_motifs(H, ball, pattern)
        if not M:
            continue
        aux = build_aux(M, ball, seed)
        blocks = [rng.randint(0, 1) for _ in range(aux.num_nodes)]
        blocks[aux.u] = 1
        if sum(blocks) == len(blocks):
            blocks[0] = 0
        cluster = {aux.back_map[a] for a in range(aux.u) if blocks[a] == 0}
        M_global = brute_motifs(H, pattern)
        assert cut_net(aux, blocks) == motif_cut(M_global, cluster)
        checked += 1


def test_dump_aux(tmp_path):
    aux = build_aux([occ(0, 1, 2), occ(2, 3, 4)], {0, 1, 2}, [0, 1, 2])
    path = tmp_path / "aux.txt"
    dump_aux(aux, path)
    lines = path.read_text().splitlines()
    assert lines[0].startswith("#")
    assert lines[1:] == ["0 1 2 1", "2 3 1"]
