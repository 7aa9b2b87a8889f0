"""Phase four: 2-way cut-net partitioning of the auxiliary hypergraph.

Fiduccia-Mattheyses refinement with per-hyperedge pin counts and a lazy
max-gain heap, restarted under randomized imbalance. Block 0 is the cluster
side (holds the seed nodes); block 1 holds the contracted node u. The
contracted node never moves; seed handling is either a post-hoc move
(seeds free during refinement, moved back afterwards, the default) or
fixed-vertex (seeds pinned throughout).
"""

from __future__ import annotations

import heapq
import math
import random
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .auxiliary import AuxHypergraph
from .errors import ConstraintError, InputError, UndefinedConductanceError

Blocks = list[int]

# diagnostic counter: number of fm_refine calls that ended worse than they
# started (must stay 0; checked by the acceptance suite)
refine_violations = 0


def size_bound(num_nodes: int, eps: float) -> int:
    """Per-block size cap ceil((1 + eps) * num_nodes / 2) for unit node weights."""
    if eps <= 0:
        raise InputError(f"imbalance eps must be > 0, got {eps}")
    return math.ceil((1 + eps) * num_nodes / 2)


def _check_blocks(aux: AuxHypergraph, blocks: Sequence[int]) -> None:
    if len(blocks) != aux.num_nodes:
        raise InputError(f"partition covers {len(blocks)} nodes, aux has {aux.num_nodes}")
    ones = sum(blocks)
    if any(b not in (0, 1) for b in blocks):
        raise InputError("block values must be 0 or 1")
    if ones == 0 or ones == len(blocks):
        raise ConstraintError("both blocks must be nonempty")


def cut_net(aux: AuxHypergraph, blocks: Sequence[int]) -> int:
    """Total weight of aux hyperedges with members in both blocks."""
    _check_blocks(aux, blocks)
    total = 0
    for i in range(aux.num_edges):
        mem = aux.edge_members(i)
        first = blocks[mem[0]]
        if any(blocks[v] != first for v in mem[1:]):
            total += aux.weight(i)
    return total


def is_consistent(aux: AuxHypergraph, blocks: Sequence[int]) -> bool:
    """Seed nodes in block 0 and u in block 1."""
    return blocks[aux.u] == 1 and all(blocks[s] == 0 for s in aux.seed_nodes)


def enforce_consistency(aux: AuxHypergraph, blocks: Sequence[int]) -> Blocks:
    """Relabel so u sits in block 1, then move stray seed nodes to block 0.

    The post-hoc move may leave block 1 holding only u; that is still valid.
    """
    out = list(blocks)
    if out[aux.u] == 0:
        out = [1 - b for b in out]
    for s in aux.seed_nodes:
        out[s] = 0
    return out


def random_feasible_partition(
    aux: AuxHypergraph, eps: float, rng: random.Random, max_attempts: int = 10000
) -> Blocks:
    """u in block 1, seeds in block 0, the rest uniform subject to the size cap."""
    n = aux.num_nodes
    bound = size_bound(n, eps)
    if len(aux.seed_nodes) > bound:
        raise ConstraintError(
            f"{len(aux.seed_nodes)} seed nodes exceed the block size bound {bound}"
        )
    base = [0] * n
    base[aux.u] = 1
    free = [v for v in range(n) if v != aux.u and v not in aux.seed_nodes]
    for _ in range(max_attempts):
        blocks = list(base)
        for v in free:
            blocks[v] = 1 if rng.random() < 0.5 else 0
        ones = sum(blocks)
        if ones <= bound and n - ones <= bound:
            return blocks
    # extremely unlikely fallback: same rng stream, capacity-aware assignment
    blocks = list(base)
    counts = [len(aux.seed_nodes), 1]
    for v in free:
        side = 1 if rng.random() < 0.5 else 0
        if counts[side] + 1 > bound:
            side = 1 - side
        blocks[v] = side
        counts[side] += 1
    return blocks


def _initial_gains(
    aux: AuxHypergraph, blocks: Sequence[int], pins: list[list[int]], movable: Iterable[int]
) -> dict[int, int]:
    gains: dict[int, int] = {}
    for v in movable:
        mine = blocks[v]
        g = 0
        for ei in aux.incident_edges(v):
            w = aux.weight(ei)
            p_mine = pins[ei][mine]
            p_other = pins[ei][1 - mine]
            if p_other > 0:
                g += w
            if p_mine > 1:
                g -= w
        gains[v] = g
    return gains


def fm_refine(
    aux: AuxHypergraph,
    blocks: Sequence[int],
    eps: float,
    max_passes: int = 10,
    movable: Iterable[int] | None = None,
    observer: Callable | None = None,
) -> Blocks:
    """FM passes: move the best-gain unlocked node that keeps the size bound,
    lock it, and roll back to the best prefix at pass end. Stops when a pass
    brings no improvement. Never returns a worse cut than it received.

    By default u and the seed nodes are not movable; a caller may widen
    ``movable`` (u is excluded regardless). ``observer(event, blocks, moved,
    cut)`` is called with event "pass" at each pass start and "move" after
    each committed move (before any rollback); observers must not mutate
    ``blocks``.
    """
    blocks = list(blocks)
    _check_blocks(aux, blocks)
    bound = size_bound(aux.num_nodes, eps)
    if movable is None:
        movable_set = frozenset(range(aux.num_nodes)) - {aux.u} - aux.seed_nodes
    else:
        movable_set = frozenset(movable) - {aux.u}
    initial_cut = cut_net(aux, blocks)
    cur = initial_cut
    for _ in range(max_passes):
        if observer is not None:
            observer("pass", blocks, None, cur)
        pins = [[0, 0] for _ in range(aux.num_edges)]
        for ei in range(aux.num_edges):
            for v in aux.edge_members(ei):
                pins[ei][blocks[v]] += 1
        counts = [len(blocks) - sum(blocks), sum(blocks)]
        gains = _initial_gains(aux, blocks, pins, movable_set)
        heap = [(-g, v) for v, g in gains.items()]
        heapq.heapify(heap)
        locked: set[int] = set()
        trail: list[int] = []
        best_cut = cur
        best_len = 0
        while True:
            stash = []
            chosen = None
            while heap:
                negg, v = heapq.heappop(heap)
                if v in locked or -negg != gains[v]:
                    continue  # stale entry
                # a move must respect the size bound and may not empty a block
                if counts[1 - blocks[v]] + 1 > bound or counts[blocks[v]] == 1:
                    stash.append((negg, v))
                    continue
                chosen = (v, -negg)
                break
            for item in stash:
                heapq.heappush(heap, item)
            if chosen is None:
                break
            v, gain = chosen
            f = blocks[v]
            t = 1 - f
            for ei in aux.incident_edges(v):
                w = aux.weight(ei)
                mem = aux.edge_members(ei)
                pf = pins[ei][f]
                pt = pins[ei][t]
                if pt == 0:
                    for x in mem:
                        if x != v and x not in locked and x in gains:
                            gains[x] += w
                            heapq.heappush(heap, (-gains[x], x))
                elif pt == 1:
                    for x in mem:
                        if x != v and blocks[x] == t:
                            if x not in locked and x in gains:
                                gains[x] -= w
                                heapq.heappush(heap, (-gains[x], x))
                            break
                pins[ei][f] = pf - 1
                pins[ei][t] = pt + 1
                if pf - 1 == 0:
                    for x in mem:
                        if x != v and x not in locked and x in gains:
                            gains[x] -= w
                            heapq.heappush(heap, (-gains[x], x))
                elif pf - 1 == 1:
                    for x in mem:
                        if x != v and blocks[x] == f:
                            if x not in locked and x in gains:
                                gains[x] += w
                                heapq.heappush(heap, (-gains[x], x))
                            break
            blocks[v] = t
            counts[f] -= 1
            counts[t] += 1
            cur -= gain
            locked.add(v)
            trail.append(v)
            if observer is not None:
                observer("move", blocks, v, cur)
            if cur < best_cut:
                best_cut = cur
                best_len = len(trail)
        for v in trail[best_len:]:
            blocks[v] = 1 - blocks[v]
        cur = best_cut
        if best_len == 0:
            break
    if cur > initial_cut:
        global refine_violations
        refine_violations += 1
        raise AssertionError(
            f"fm_refine worsened the cut: {initial_cut} -> {cur}"
        )
    return blocks


class RatioObjective:
    """Incremental conductance scorer for refinement states.

    ``node_volumes[a]`` is the motif degree behind aux node a (0 for u); the
    denominator is the block-0 volume, or the smaller of the two sides when
    ``min_side_total`` (three times the occurrence count) is given, which is
    the whole-component regime. phi(cut, vol0) returns None when undefined.
    """

    def __init__(self, node_volumes: Sequence[int], min_side_total: int | None = None):
        self.node_volumes = tuple(node_volumes)
        self.min_side_total = min_side_total

    def phi(self, cut: int, vol0: int) -> Fraction | None:
        denom = vol0
        if self.min_side_total is not None:
            denom = min(vol0, self.min_side_total - vol0)
        if denom <= 0:
            return None
        return Fraction(cut, denom)


def partition_search(
    aux: AuxHypergraph,
    beta: int,
    eps_range: tuple[float, float],
    rng: random.Random,
    evaluator: Callable[[Sequence[int]], Fraction],
    seed_mode: str = "posthoc",
    max_passes: int = 10,
    ratio: RatioObjective | None = None,
) -> tuple[Blocks, Fraction] | None:
    """Best consistent partition over ``beta`` randomized-imbalance restarts.

    Each run draws its own RNG stream from the master rng, samples eps
    uniformly from ``eps_range``, initializes randomly, refines, enforces
    consistency, and scores with ``evaluator`` (which returns the motif
    conductance as a Fraction or raises UndefinedConductanceError). When a
    ``ratio`` objective is supplied, every consistent state visited during
    refinement is scored incrementally as well: refinement minimizes the cut,
    so the best-conductance state is often mid-trajectory rather than final.
    Ties break by smaller cut-net, then smaller block 0, then first found.
    Returns None when no run produced a defined conductance.
    """
    if beta < 1:
        raise InputError(f"beta must be >= 1, got {beta}")
    lo, hi = eps_range
    if not (0 < lo <= hi):
        raise InputError(f"invalid eps range {eps_range!r}")
    if seed_mode not in ("posthoc", "fixed"):
        raise InputError(f"seed_mode must be 'posthoc' or 'fixed', got {seed_mode!r}")
    movable = None
    if seed_mode == "posthoc":
        movable = frozenset(range(aux.num_nodes)) - {aux.u}
    run_seeds = [rng.randrange(2**63) for _ in range(beta)]
    best_key: tuple | None = None
    best_blocks: Blocks | None = None

    def consider(key: tuple, blocks: Sequence[int]) -> None:
        nonlocal best_key, best_blocks
        if best_key is None or key < best_key:
            best_key = key
            best_blocks = list(blocks)

    for i, run_seed in enumerate(run_seeds):
        r = random.Random(run_seed)
        eps = lo if lo == hi else r.uniform(lo, hi)
        init = random_feasible_partition(aux, eps, r)
        observer = None
        if ratio is not None:
            observer = _StateScorer(aux, ratio, i, consider)
        refined = fm_refine(
            aux, init, eps, max_passes=max_passes, movable=movable, observer=observer
        )
        final = enforce_consistency(aux, refined)
        try:
            phi = evaluator(final)
        except UndefinedConductanceError:
            continue
        consider((phi, cut_net(aux, final), len(final) - sum(final), i), final)
    if best_blocks is None:
        return None
    return best_blocks, best_key[0]


class _StateScorer:
    """fm_refine observer: tracks (cut, block-0 volume, stray seeds, block-0
    size) incrementally and offers every consistent state to the search."""

    __slots__ = ("aux", "ratio", "run", "consider", "vol0", "size0", "displaced", "seeds")

    def __init__(self, aux: AuxHypergraph, ratio: RatioObjective, run: int, consider):
        self.aux = aux
        self.ratio = ratio
        self.run = run
        self.consider = consider
        self.seeds = aux.seed_nodes
        self.vol0 = 0
        self.size0 = 0
        self.displaced = 0

    def __call__(self, event: str, blocks: Sequence[int], moved: int | None, cut: int) -> None:
        vols = self.ratio.node_volumes
        if event == "pass":
            self.vol0 = sum(vols[a] for a in range(self.aux.u) if blocks[a] == 0)
            self.size0 = len(blocks) - sum(blocks)
            self.displaced = sum(1 for s in self.seeds if blocks[s] == 1)
        else:
            if blocks[moved] == 0:  # moved into block 0
                self.vol0 += vols[moved]
                self.size0 += 1
                if moved in self.seeds:
                    self.displaced -= 1
            else:
                self.vol0 -= vols[moved]
                self.size0 -= 1
                if moved in self.seeds:
                    self.displaced += 1
        if self.displaced:
            return
        phi = self.ratio.phi(cut, self.vol0)
        if phi is not None:
            self.consider((phi, cut, self.size0, self.run), blocks)
