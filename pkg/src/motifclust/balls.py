"""Phase one: candidate node sets (balls) around a seed hyperedge.

Two strategies: neighborhood-based core decomposition (peel by neighbor count
inside the surviving strongly-induced subhypergraph, then descend core levels
until the seed's component is big enough) and layered hypergraph BFS (cumulative
layer unions starting at the first union that exceeds the size threshold).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .core import Hypergraph, canonical_members
from .errors import InputError


@dataclass(frozen=True)
class Ball:
    """A seed-containing node set plus provenance.

    ``detail`` is the core level k for method "core" and the index of the
    deepest BFS layer included (0 = seed layer) for method "bfs".
    """

    nodes: frozenset[int]
    method: str
    detail: int


@dataclass(frozen=True)
class CoreDecomposition:
    core_number: tuple[int, ...]
    max_core: int

    def level_set(self, k: int) -> frozenset[int]:
        """Nodes with core number >= k."""
        return frozenset(v for v, c in enumerate(self.core_number) if c >= k)


def nbr_core_decomposition(H: Hypergraph) -> CoreDecomposition:
    """Neighborhood-based core numbers via progressive peeling.

    For k = 1, 2, ... repeatedly delete every node with fewer than k neighbors
    in the surviving strongly-induced subhypergraph (deleting a node kills all
    hyperedges containing it). A node deleted during round k has core number
    k - 1. Simultaneously sub-threshold nodes are deleted in ascending id order.
    """
    n = H.n
    if n == 0:
        raise InputError("core decomposition of an empty hypergraph")
    alive = bytearray([1]) * n
    edge_alive = bytearray([1]) * H.num_edges
    # pair_count[(u, w)] = number of surviving hyperedges containing both
    pair_count: dict[tuple[int, int], int] = {}
    for e in H.edges:
        for pair in combinations(e.members, 2):
            pair_count[pair] = pair_count.get(pair, 0) + 1
    nbr_count = [0] * n
    for a, b in pair_count:
        nbr_count[a] += 1
        nbr_count[b] += 1

    core = [0] * n
    remaining = n
    k = 0
    while remaining:
        k += 1
        queue = deque(v for v in range(n) if alive[v] and nbr_count[v] < k)
        queued = set(queue)
        while queue:
            v = queue.popleft()
            alive[v] = 0
            core[v] = k - 1
            remaining -= 1
            for ei in H.incident_edges(v):
                if not edge_alive[ei]:
                    continue
                edge_alive[ei] = 0
                mem = H.edge(ei).members
                for pair in combinations(mem, 2):
                    left = pair_count[pair] - 1
                    pair_count[pair] = left
                    if left == 0:
                        for x in pair:
                            if alive[x]:
                                nbr_count[x] -= 1
                                if nbr_count[x] < k and x not in queued:
                                    queue.append(x)
                                    queued.add(x)
    return CoreDecomposition(tuple(core), max(core, default=0))


def _require_seed_edge(H: Hypergraph, seed: Iterable[int]) -> tuple[int, ...]:
    members = canonical_members(seed)
    if H.edge_index_of(members) is None:
        raise InputError(f"seed {members!r} is not a hyperedge of the hypergraph")
    return members


def _component_within(
    H: Hypergraph, start: Sequence[int], allowed: frozenset[int] | set[int]
) -> frozenset[int]:
    """Connected component of ``start`` in the strongly-induced subhypergraph
    on ``allowed`` (edges are traversed only when fully contained in it)."""
    visited = set(start)
    frontier = list(start)
    edge_done = bytearray(H.num_edges)
    while frontier:
        nxt: list[int] = []
        for v in frontier:
            for ei in H.incident_edges(v):
                if edge_done[ei]:
                    continue
                mem = H.edge(ei).members
                if not all(u in allowed for u in mem):
                    edge_done[ei] = 1  # dead for this level set either way
                    continue
                edge_done[ei] = 1
                for u in mem:
                    if u not in visited:
                        visited.add(u)
                        nxt.append(u)
        frontier = nxt
    return frozenset(visited)


def core_ball(
    H: Hypergraph,
    seed: Iterable[int],
    min_size: int = 100,
    decomposition: CoreDecomposition | None = None,
) -> Ball:
    """Seed-containing component of the deepest core level reaching ``min_size``.

    Starting from k* = min core number over the seed's nodes (so the whole seed
    hyperedge survives), descend k and take the component containing the seed
    inside the strongly-induced subhypergraph on {v : core(v) >= k}; return the
    first component with >= min_size nodes, or the k = 1 component if none does.
    """
    members = _require_seed_edge(H, seed)
    if min_size < len(members):
        raise InputError(f"min_size {min_size} smaller than the seed ({len(members)} nodes)")
    decomp = decomposition if decomposition is not None else nbr_core_decomposition(H)
    k_star = max(1, min(decomp.core_number[v] for v in members))
    comp: frozenset[int] = frozenset(members)
    used_k = k_star
    for k in range(k_star, 0, -1):
        allowed = decomp.level_set(k)
        comp = _component_within(H, members, allowed)
        used_k = k
        if len(comp) >= min_size:
            break
    return Ball(comp, "core", used_k)


def bfs_layers(H: Hypergraph, seed: Iterable[int]) -> list[list[int]]:
    """Layered hypergraph BFS; layer 0 is the seed's nodes.

    Any nonempty node set works as layer 0 (ball construction passes a seed
    hyperedge's nodes). A hyperedge is traversed when any member is expanded,
    enqueueing all its unvisited members into the next layer. Deterministic:
    layers are sorted.
    """
    members = tuple(sorted(set(seed)))
    if not members:
        raise InputError("bfs_layers needs a nonempty seed set")
    for v in members:
        H._check_node(v)
    visited = set(members)
    layers: list[list[int]] = [list(members)]
    frontier = list(members)
    edge_done = bytearray(H.num_edges)
    while frontier:
        nxt: set[int] = set()
        for v in frontier:
            for ei in H.incident_edges(v):
                if edge_done[ei]:
                    continue
                edge_done[ei] = 1
                for u in H.edge(ei).members:
                    if u not in visited:
                        visited.add(u)
                        nxt.add(u)
        if not nxt:
            break
        layer = sorted(nxt)
        layers.append(layer)
        frontier = layer
    return layers


def bfs_balls(
    H: Hypergraph, seed: Iterable[int], alpha: int = 3, min_size: int = 100
) -> list[Ball]:
    """Up to ``alpha`` cumulative BFS balls of consecutive depths.

    The first depth is the smallest l whose cumulative union of layers 0..l has
    more than ``min_size`` nodes; if BFS exhausts first (the seed's component
    has at most min_size nodes), the whole component is the single ball.
    """
    if alpha < 1:
        raise InputError(f"alpha must be >= 1, got {alpha}")
    if min_size < 1:
        raise InputError(f"min_size must be >= 1, got {min_size}")
    layers = bfs_layers(H, seed)
    cumulative: list[frozenset[int]] = []
    acc: set[int] = set()
    for layer in layers:
        acc.update(layer)
        cumulative.append(frozenset(acc))
    first = next(
        (l for l, nodes in enumerate(cumulative) if len(nodes) > min_size),
        len(cumulative) - 1,
    )
    balls: list[Ball] = []
    seen: set[frozenset[int]] = set()
    for l in range(first, min(first + alpha, len(cumulative))):
        nodes = cumulative[l]
        if nodes not in seen:
            seen.add(nodes)
            balls.append(Ball(nodes, "bfs", l))
    return balls
