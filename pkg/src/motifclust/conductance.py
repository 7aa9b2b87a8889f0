"""Motif-cut and motif-conductance evaluation.

Two routes: directly over an occurrence collection (the oracle/testing path)
and through the auxiliary hypergraph, whose cut-net equals the motif-cut and
whose block-0 motif volume is the conductance denominator whenever the ball's
motif volume does not exceed its complement's. All arithmetic is exact
(fractions); rendering to decimals happens only in reports.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .auxiliary import AuxHypergraph
from .errors import BudgetExceededError, ConstraintError, UndefinedConductanceError
from .motifs import MotifOccurrence, MotifPattern, enumerate_motifs, motif_degrees
from .partition import cut_net


class ConductanceResult:
    """phi = motif_cut / volume_used, with the side whose volume was used."""

    __slots__ = ("phi", "motif_cut", "volume_used", "side")

    def __init__(self, phi: Fraction, motif_cut: int, volume_used: int, side: str):
        self.phi = phi
        self.motif_cut = motif_cut
        self.volume_used = volume_used
        self.side = side

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return (
            f"ConductanceResult(phi={self.phi}, cut={self.motif_cut}, "
            f"volume={self.volume_used}, side={self.side!r})"
        )


def motif_cut(M: Iterable[MotifOccurrence], cluster: Iterable[int]) -> int:
    """Occurrences with at least one node inside the cluster and one outside."""
    C = frozenset(cluster)
    if not C:
        return 0
    total = 0
    for occ in M:
        inside = sum(1 for v in occ.nodes if v in C)
        if 0 < inside < 3:
            total += 1
    return total


def conductance_direct(
    M_global: Iterable[MotifOccurrence], cluster: Iterable[int]
) -> ConductanceResult:
    """Exact definition: cut / min(d_mu(C), d_mu(complement)) over all occurrences.

    ``M_global`` must contain every occurrence of the pattern in the hypergraph.
    Zero motif volume on the complement side (e.g. C = V) is 0/0 and raises
    UndefinedConductanceError; zero volume on the cluster side alone (which
    forces cut = 0) yields phi = 0 by convention.
    """
    C = frozenset(cluster)
    M = list(M_global)
    cut = 0
    vol_c = 0
    for occ in M:
        inside = sum(1 for v in occ.nodes if v in C)
        vol_c += inside
        if 0 < inside < 3:
            cut += 1
    vol_rest = 3 * len(M) - vol_c
    if vol_rest == 0:
        raise UndefinedConductanceError(
            "complement side has zero motif volume (degenerate split)"
        )
    if vol_c == 0:
        # a crossing occurrence would add volume to both sides, so cut == 0 here
        return ConductanceResult(Fraction(0), 0, 0, "cluster")
    if vol_c <= vol_rest:
        return ConductanceResult(Fraction(cut, vol_c), cut, vol_c, "cluster")
    return ConductanceResult(Fraction(cut, vol_rest), cut, vol_rest, "complement")


def conductance_via_aux(
    aux: AuxHypergraph, blocks: Sequence[int], dmu: Mapping[int, int]
) -> ConductanceResult:
    """Contracted route: aux cut-net over the block-0 motif volume.

    ``dmu`` maps original node ids to motif degrees (as from motif_degrees on
    the ball-touching occurrence collection). Equals conductance_direct of the
    mapped-back cluster whenever d_mu(cluster) <= d_mu(complement) and the
    enumeration was exact. Requires u in block 1.
    """
    if blocks[aux.u] != 1:
        raise ConstraintError("conductance_via_aux requires u in block 1")
    cut = cut_net(aux, blocks)
    vol0 = 0
    for a in range(aux.u):
        if blocks[a] == 0:
            vol0 += dmu.get(aux.back_map[a], 0)
    if vol0 == 0:
        raise UndefinedConductanceError("block 0 participates in no motif occurrence")
    return ConductanceResult(Fraction(cut, vol0), cut, vol0, "cluster")


def verify_volume_assumption(
    H,
    ball,
    pattern: MotifPattern,
    max_nodes: int = 20000,
    force: bool = False,
) -> bool:
    """Check d_mu(B) <= d_mu(complement of B) by global enumeration.

    Refused (BudgetExceededError) above ``max_nodes`` unless ``force`` is set,
    since global enumeration defeats the locality of the pipeline.
    """
    if H.n > max_nodes and not force:
        raise BudgetExceededError(
            f"global enumeration over {H.n} nodes exceeds the {max_nodes}-node "
            "threshold; pass force=True to override"
        )
    B = frozenset(getattr(ball, "nodes", ball))
    M_global = enumerate_motifs(H, frozenset(range(H.n)), pattern, scope="exact")
    degrees = motif_degrees(M_global)
    vol_b = sum(degrees.get(v, 0) for v in B)
    return vol_b <= 3 * len(M_global) - vol_b
