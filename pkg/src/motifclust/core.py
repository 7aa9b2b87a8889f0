"""Immutable hypergraph with an incidence index and neighborhood primitives.

Nodes are dense integers 0..n-1. Hyperedges are canonical strictly-increasing
member tuples with at least two distinct members; no two hyperedges share the
same member set (ingestion merges duplicates before construction). Everything
downstream (ball selection, motif enumeration, partitioning) reads this object
without mutating it, so it is safe to share across concurrent phases; the lazy
adjacency caches memoize pure values and behave as if precomputed eagerly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import InputError

Members = tuple[int, ...]


def canonical_members(members: Iterable[int]) -> Members:
    """Sort, deduplicate and validate a member collection (>= 2 distinct nodes)."""
    out = tuple(sorted({int(v) for v in members}))
    if len(out) < 2:
        raise InputError(f"hyperedge needs at least 2 distinct nodes, got {out!r}")
    return out


@dataclass(frozen=True)
class Hyperedge:
    """A hyperedge: strictly increasing member tuple plus a positive weight."""

    members: Members
    weight: Fraction = Fraction(1)

    def __post_init__(self) -> None:
        mem = self.members
        if len(mem) < 2 or any(mem[i] >= mem[i + 1] for i in range(len(mem) - 1)):
            raise InputError(f"members must be >= 2 strictly increasing node ids, got {mem!r}")
        if mem[0] < 0:
            raise InputError(f"negative node id in hyperedge {mem!r}")
        if self.weight <= 0:
            raise InputError(f"hyperedge weight must be positive, got {self.weight}")

    @staticmethod
    def of(members: Iterable[int], weight: Fraction | int = 1) -> "Hyperedge":
        return Hyperedge(canonical_members(members), Fraction(weight))

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, v: int) -> bool:
        return v in self.members


class Hypergraph:
    """Immutable node/hyperedge store with an incidence index.

    ``incidence[v]`` lists the indices of hyperedges containing ``v``, so the
    node degree is ``len(incidence[v])``. Node weights are carried but unused
    by any balance constraint.
    """

    def __init__(
        self,
        n: int,
        edges: Iterable[Hyperedge | Sequence[int]],
        node_weights: Sequence[Fraction] | None = None,
    ):
        if n < 0:
            raise InputError(f"node count must be >= 0, got {n}")
        self._n = n
        norm: list[Hyperedge] = []
        seen: set[Members] = set()
        incidence: list[list[int]] = [[] for _ in range(n)]
        for e in edges:
            he = e if isinstance(e, Hyperedge) else Hyperedge.of(e)
            if he.members[-1] >= n:
                raise InputError(f"hyperedge {he.members!r} references node >= n={n}")
            if he.members in seen:
                raise InputError(f"duplicate hyperedge {he.members!r}; merge before construction")
            seen.add(he.members)
            idx = len(norm)
            norm.append(he)
            for v in he.members:
                incidence[v].append(idx)
        self._edges: tuple[Hyperedge, ...] = tuple(norm)
        self._incidence: tuple[tuple[int, ...], ...] = tuple(tuple(lst) for lst in incidence)
        if node_weights is not None:
            if len(node_weights) != n:
                raise InputError("node_weights length must equal n")
            if any(w <= 0 for w in node_weights):
                raise InputError("node weights must be positive")
            self._node_weights = tuple(Fraction(w) for w in node_weights)
        else:
            self._node_weights = None
        # lazy caches (pure values; racy double-compute is benign)
        self._nbr_cache: dict[int, frozenset[int]] = {}
        self._small_index: tuple[frozenset, frozenset, dict, tuple] | None = None
        self._edge_lookup: dict[Members, int] | None = None

    @classmethod
    def from_members(
        cls, member_lists: Iterable[Iterable[int]], n: int | None = None
    ) -> "Hypergraph":
        """Build from raw member lists; infers n = max id + 1 unless given."""
        canon = [canonical_members(m) for m in member_lists]
        if n is None:
            n = max((m[-1] for m in canon), default=-1) + 1
        return cls(n, [Hyperedge(m) for m in canon])

    # -- basic accessors -------------------------------------------------

    @property
    def n(self) -> int:
        return self._n

    @property
    def num_edges(self) -> int:
        return len(self._edges)

    @property
    def edges(self) -> tuple[Hyperedge, ...]:
        return self._edges

    def edge(self, i: int) -> Hyperedge:
        return self._edges[i]

    def incident_edges(self, v: int) -> tuple[int, ...]:
        self._check_node(v)
        return self._incidence[v]

    def degree(self, v: int) -> int:
        self._check_node(v)
        return len(self._incidence[v])

    def max_degree(self) -> int:
        return max((len(inc) for inc in self._incidence), default=0)

    def node_weight(self, v: int) -> Fraction:
        self._check_node(v)
        return Fraction(1) if self._node_weights is None else self._node_weights[v]

    def _check_node(self, v: int) -> None:
        if not 0 <= v < self._n:
            raise InputError(f"node id {v} out of range [0, {self._n})")

    def edge_index_of(self, members: Iterable[int]) -> int | None:
        """Index of the hyperedge with exactly these members, or None."""
        if self._edge_lookup is None:
            self._edge_lookup = {e.members: i for i, e in enumerate(self._edges)}
        return self._edge_lookup.get(canonical_members(members))

    # -- neighborhoods ---------------------------------------------------

    def neighbors(self, v: int) -> frozenset[int]:
        """Open neighborhood: every u != v sharing at least one hyperedge with v."""
        self._check_node(v)
        cached = self._nbr_cache.get(v)
        if cached is None:
            acc: set[int] = set()
            for ei in self._incidence[v]:
                acc.update(self._edges[ei].members)
            acc.discard(v)
            cached = frozenset(acc)
            self._nbr_cache[v] = cached
        return cached

    def closed_neighborhood(self, nodes: Iterable[int]) -> frozenset[int]:
        """N[S] = S together with every neighbor of a node of S."""
        acc: set[int] = set()
        for v in nodes:
            acc.add(v)
            acc.update(self.neighbors(v))
        return frozenset(acc)

    # -- subhypergraphs and connectivity ----------------------------------

    def induced_subhypergraph(
        self, keep: Iterable[int]
    ) -> tuple["Hypergraph", tuple[int, ...], tuple[int, ...]]:
        """Strongly induced subhypergraph: keeps hyperedges fully inside ``keep``.

        Returns (subhypergraph, node_map, edge_map) where node_map[new_id] and
        edge_map[new_edge_index] give the original ids.
        """
        kept = sorted(set(keep))
        for v in kept:
            self._check_node(v)
        new_id = {v: i for i, v in enumerate(kept)}
        kept_set = set(kept)
        sub_edges: list[Hyperedge] = []
        edge_map: list[int] = []
        for i, e in enumerate(self._edges):
            if kept_set.issuperset(e.members):
                sub_edges.append(
                    Hyperedge(tuple(new_id[v] for v in e.members), e.weight)
                )
                edge_map.append(i)
        weights = None
        if self._node_weights is not None:
            weights = [self._node_weights[v] for v in kept]
        sub = Hypergraph(len(kept), sub_edges, weights)
        return sub, tuple(kept), tuple(edge_map)

    def connected_component(self, start: Iterable[int]) -> frozenset[int]:
        """All nodes reachable from ``start`` via shared-hyperedge adjacency."""
        frontier = sorted(set(start))
        if not frontier:
            raise InputError("connected_component requires a nonempty start set")
        for v in frontier:
            self._check_node(v)
        visited = set(frontier)
        edge_done = bytearray(len(self._edges))
        while frontier:
            nxt: list[int] = []
            for v in frontier:
                for ei in self._incidence[v]:
                    if edge_done[ei]:
                        continue
                    edge_done[ei] = 1
                    for u in self._edges[ei].members:
                        if u not in visited:
                            visited.add(u)
                            nxt.append(u)
            frontier = nxt
        return frozenset(visited)

    # -- small-edge index (dyads / triads), used by motif classification --

    def _build_small_index(self) -> tuple[frozenset, frozenset, dict, tuple]:
        idx = self._small_index
        if idx is None:
            dyads: set[tuple[int, int]] = set()
            triads: set[tuple[int, int, int]] = set()
            triad_edge_ids: list[int] = []
            dyadic_adj: dict[int, set[int]] = {}
            for i, e in enumerate(self._edges):
                if len(e.members) == 2:
                    a, b = e.members
                    dyads.add(e.members)
                    dyadic_adj.setdefault(a, set()).add(b)
                    dyadic_adj.setdefault(b, set()).add(a)
                elif len(e.members) == 3:
                    triads.add(e.members)
                    triad_edge_ids.append(i)
            adj = {v: frozenset(s) for v, s in dyadic_adj.items()}
            idx = (frozenset(dyads), frozenset(triads), adj, tuple(triad_edge_ids))
            self._small_index = idx
        return idx

    @property
    def dyads(self) -> frozenset[tuple[int, int]]:
        """Member tuples of all size-2 hyperedges."""
        return self._build_small_index()[0]

    @property
    def triads(self) -> frozenset[tuple[int, int, int]]:
        """Member tuples of all size-3 hyperedges."""
        return self._build_small_index()[1]

    def dyadic_neighbors(self, v: int) -> frozenset[int]:
        """Neighbors of v via size-2 hyperedges only."""
        self._check_node(v)
        return self._build_small_index()[2].get(v, frozenset())

    def triad_edge_indices(self) -> tuple[int, ...]:
        return self._build_small_index()[3]

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"Hypergraph(n={self._n}, m={self.num_edges})"
