"""Phase two: order-3 motif classification, enumeration, and motif degrees.

A connected induced subhypergraph on three nodes is classified by which of the
four possible sub-edges exist: the three dyads plus the triad (hyperedges of
size > 3 can never be contained in a 3-set, so they are invisible here). The
six connected patterns are:

    I   = no triad, 2 dyads (open wedge)
    II  = no triad, 3 dyads (dyadic triangle)
    III = triad, 0 dyads
    IV  = triad, 1 dyad
    V   = triad, 2 dyads
    VI  = triad, 3 dyads

No triad with 0 or 1 dyads leaves the triple disconnected, hence no pattern.
"""

from __future__ import annotations

from collections import Counter
from enum import Enum
from typing import Iterable, Mapping, NamedTuple

from .core import Hypergraph
from .errors import InputError


class MotifPattern(Enum):
    I = (False, 2)
    II = (False, 3)
    III = (True, 0)
    IV = (True, 1)
    V = (True, 2)
    VI = (True, 3)

    @property
    def has_triadic(self) -> bool:
        return self.value[0]

    @property
    def dyad_count(self) -> int:
        return self.value[1]

    @property
    def number(self) -> int:
        """1-based pattern number (I -> 1, ..., VI -> 6)."""
        return list(MotifPattern).index(self) + 1

    @classmethod
    def from_flags(cls, has_triadic: bool, dyad_count: int) -> "MotifPattern | None":
        return _BY_FLAGS.get((has_triadic, dyad_count))

    @classmethod
    def from_spec(cls, spec: "str | int | MotifPattern") -> "MotifPattern":
        """Accepts 1..6 (int or str) or a roman-numeral name, case-insensitive."""
        if isinstance(spec, MotifPattern):
            return spec
        text = str(spec).strip().upper()
        if text.isdigit():
            num = int(text)
            if 1 <= num <= 6:
                return list(MotifPattern)[num - 1]
            raise InputError(f"motif pattern number must be in 1..6, got {num}")
        try:
            return cls[text]
        except KeyError:
            raise InputError(f"unknown motif pattern {spec!r} (expected 1..6 or I..VI)") from None


_BY_FLAGS = {p.value: p for p in MotifPattern}


class MotifOccurrence(NamedTuple):
    nodes: tuple[int, int, int]  # sorted triple
    pattern: MotifPattern


def classify_triple(H: Hypergraph, a: int, b: int, c: int) -> MotifPattern | None:
    """Pattern of the induced subhypergraph on {a, b, c}, or None if disconnected."""
    if a == b or a == c or b == c:
        raise InputError(f"classify_triple needs three distinct nodes, got {(a, b, c)}")
    x, y, z = sorted((a, b, c))
    if x < 0 or z >= H.n:
        raise InputError(f"node id out of range in triple {(a, b, c)}")
    dyads = H.dyads
    d = ((x, y) in dyads) + ((x, z) in dyads) + ((y, z) in dyads)
    return MotifPattern.from_flags((x, y, z) in H.triads, d)


def enumerate_motifs(
    H: Hypergraph,
    ball,
    pattern: MotifPattern,
    scope: str = "exact",
) -> list[MotifOccurrence]:
    """All occurrences of ``pattern`` with at least one node in the ball.

    ``ball`` may be a Ball or any iterable of node ids. ``scope="exact"``
    (default) finds every such occurrence; ``scope="paper"`` restricts triples
    to the closed neighborhood N[B], which can miss wedge occurrences (pattern
    I) whose far endpoint lies outside N[B]. Occurrences containing a triadic
    hyperedge, or forming a dyadic triangle, always lie inside N[B], so only
    pattern I differs between the scopes. Each triple is reported exactly once,
    sorted; the result is sorted by triple.
    """
    nodes = getattr(ball, "nodes", ball)
    B = frozenset(nodes)
    if not B:
        raise InputError("ball must be nonempty")
    for v in B:
        if not 0 <= v < H.n:
            raise InputError(f"ball node {v} out of range")
    if scope not in ("exact", "paper"):
        raise InputError(f"scope must be 'exact' or 'paper', got {scope!r}")
    region = H.closed_neighborhood(B)
    dyads = H.dyads
    triads = H.triads
    out: list[MotifOccurrence] = []

    if pattern.has_triadic:
        want = pattern.dyad_count
        for ei in H.triad_edge_indices():
            mem = H.edge(ei).members
            if B.isdisjoint(mem):
                continue
            x, y, z = mem
            d = ((x, y) in dyads) + ((x, z) in dyads) + ((y, z) in dyads)
            if d == want:
                out.append(MotifOccurrence(mem, pattern))
    elif pattern is MotifPattern.II:
        # dyadic triangles; any triangle touching B lies inside N[B]
        for a in sorted(region):
            na = H.dyadic_neighbors(a)
            for b in sorted(na):
                if b <= a or b not in region:
                    continue
                for c in sorted(na & H.dyadic_neighbors(b)):
                    if c <= b:
                        continue
                    triple = (a, b, c)
                    if B.isdisjoint(triple) or triple in triads:
                        continue
                    out.append(MotifOccurrence(triple, pattern))
    else:
        # pattern I: open wedges; the center is always inside N[B], the two
        # endpoints may sit one step further out under scope="exact"
        for center in sorted(region):
            nbrs = sorted(H.dyadic_neighbors(center))
            for i, a in enumerate(nbrs):
                for b in nbrs[i + 1 :]:
                    triple = tuple(sorted((a, center, b)))
                    if B.isdisjoint(triple):
                        continue
                    if scope == "paper" and not region.issuperset(triple):
                        continue
                    if (a, b) in dyads or triple in triads:
                        continue
                    out.append(MotifOccurrence(triple, pattern))
    out.sort(key=lambda o: o.nodes)
    return out


def motif_degrees(
    M: Iterable[MotifOccurrence], nodes: Iterable[int] | None = None
) -> dict[int, int]:
    """d_mu(v): occurrences containing v. With ``nodes`` given, every requested
    node is present (zero when absent from M); set volume d_mu(S) is the sum of
    the member values."""
    counts: Counter[int] = Counter()
    for occ in M:
        counts.update(occ.nodes)
    if nodes is None:
        return dict(counts)
    return {v: counts.get(v, 0) for v in nodes}


def motif_volume(degrees: Mapping[int, int], nodes: Iterable[int]) -> int:
    """d_mu of a node set given a degree map (missing nodes count 0)."""
    return sum(degrees.get(v, 0) for v in nodes)
