"""Phase three: the contracted weighted auxiliary hypergraph.

Every motif occurrence touching the ball becomes one hyperedge over the ball's
nodes; everything outside the ball is contracted into a single fresh node u.
Parallel crossing hyperedges merge with weight = number of occurrences they
represent, so the total hyperedge weight always equals |M|. All nodes carry
equal (unit) weight for balancing purposes.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .errors import ConstraintError, InputError
from .motifs import MotifOccurrence

COMPLEMENT = "complement"  # back_map symbol for the contracted node u


class AuxHypergraph:
    """Weighted hypergraph on ball nodes 0..u-1 plus the contracted node u."""

    def __init__(
        self,
        num_ball_nodes: int,
        edges: Iterable[tuple[Sequence[int], int]],
        seed_nodes: Iterable[int],
        back_map: Sequence[int] | None = None,
    ):
        if num_ball_nodes < 1:
            raise InputError("auxiliary hypergraph needs at least one ball node")
        self.u = num_ball_nodes
        self.num_nodes = num_ball_nodes + 1
        mem_list: list[tuple[int, ...]] = []
        weights: list[int] = []
        seen: set[tuple[int, ...]] = set()
        incidence: list[list[int]] = [[] for _ in range(self.num_nodes)]
        for members, weight in edges:
            mem = tuple(members)
            if len(mem) < 2 or any(mem[i] >= mem[i + 1] for i in range(len(mem) - 1)):
                raise InputError(f"aux hyperedge members must be >= 2 strictly increasing: {mem!r}")
            if mem[0] < 0 or mem[-1] > self.u:
                raise InputError(f"aux hyperedge {mem!r} out of node range 0..{self.u}")
            if mem in seen:
                raise InputError(f"parallel aux hyperedge {mem!r}; merge weights first")
            if weight < 1:
                raise InputError(f"aux hyperedge weight must be a positive integer, got {weight}")
            seen.add(mem)
            idx = len(mem_list)
            mem_list.append(mem)
            weights.append(int(weight))
            for v in mem:
                incidence[v].append(idx)
        self._members = tuple(mem_list)
        self._weights = tuple(weights)
        self._incidence = tuple(tuple(lst) for lst in incidence)
        self.seed_nodes = frozenset(seed_nodes)
        if not self.seed_nodes:
            raise InputError("aux hypergraph needs at least one seed node")
        if self.u in self.seed_nodes or any(not 0 <= s < self.u for s in self.seed_nodes):
            raise InputError("seed nodes must be ball nodes (0..u-1)")
        if back_map is None:
            self.back_map: tuple = tuple(range(num_ball_nodes)) + (COMPLEMENT,)
        else:
            if len(back_map) != num_ball_nodes:
                raise InputError("back_map must cover exactly the ball nodes")
            self.back_map = tuple(back_map) + (COMPLEMENT,)

    @property
    def num_edges(self) -> int:
        return len(self._members)

    def edge_members(self, i: int) -> tuple[int, ...]:
        return self._members[i]

    def weight(self, i: int) -> int:
        return self._weights[i]

    @property
    def edges(self) -> tuple[tuple[tuple[int, ...], int], ...]:
        return tuple(zip(self._members, self._weights))

    def incident_edges(self, v: int) -> tuple[int, ...]:
        return self._incidence[v]

    def total_weight(self) -> int:
        return sum(self._weights)

    def original_nodes(self, aux_nodes: Iterable[int]) -> list:
        """Map aux ids back to original node ids (u maps to COMPLEMENT)."""
        return [self.back_map[a] for a in aux_nodes]

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"AuxHypergraph(ball={self.u}, m={self.num_edges})"


def build_aux(
    M: Iterable[MotifOccurrence], ball, seed: Iterable[int]
) -> AuxHypergraph:
    """Contract a motif occurrence collection over a ball into an AuxHypergraph.

    An occurrence fully inside the ball maps to its own (weight-1) hyperedge;
    an occurrence reaching outside maps to its inside nodes plus u, and
    parallel crossing hyperedges merge with their multiplicity as weight.
    Construction is linear in |ball| + |M|.
    """
    ball_nodes = sorted(getattr(ball, "nodes", ball))
    if not ball_nodes:
        raise InputError("ball must be nonempty")
    aux_of = {v: i for i, v in enumerate(ball_nodes)}
    u = len(ball_nodes)
    seed_set = frozenset(seed)
    if not seed_set:
        raise InputError("seed must be nonempty")
    if not seed_set.issubset(aux_of):
        raise ConstraintError(f"seed nodes {sorted(seed_set)} are not all inside the ball")
    acc: dict[tuple[int, ...], int] = {}
    for occ in M:
        inside = sorted(aux_of[v] for v in occ.nodes if v in aux_of)
        if not inside:
            raise ConstraintError(f"occurrence {occ.nodes!r} has no node in the ball")
        key = tuple(inside) if len(inside) == 3 else tuple(inside) + (u,)
        acc[key] = acc.get(key, 0) + 1
    edges = sorted(acc.items())
    return AuxHypergraph(
        u,
        edges,
        seed_nodes=(aux_of[v] for v in seed_set),
        back_map=ball_nodes,
    )


def dump_aux(aux: AuxHypergraph, path) -> None:
    """Debug dump: one line per aux hyperedge, members then weight."""
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("# aux hypergraph: member aux-ids then weight; u = %d\n" % aux.u)
        for members, weight in aux.edges:
            fh.write(" ".join(str(v) for v in members) + f" {weight}\n")
