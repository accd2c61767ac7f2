"""K4-minus detection and saturation checking.

A graph contains K4^- (the diamond) iff some edge ``uv`` has at least two
common neighbors; that edge is the *base edge* of the copy.  The fast
routines below all rest on this, while :func:`naive_contains` and
:func:`naive_is_saturated` do a generic injection search and serve as the
independent oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .graph import Graph, build_graph, iter_bits, shortest_odd_cycle

K4_MINUS = build_graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])

MAX_PATTERN_VERTICES = 5


@dataclass(frozen=True)
class SaturationVerdict:
    h_free: bool
    saturated: bool
    free_witness: Optional[tuple[int, int, int, int]] = None
    nonedge_witness: Optional[tuple[int, int]] = None

    def to_dict(self) -> dict:
        out: dict = {"h_free": self.h_free, "saturated": self.saturated}
        if self.free_witness is not None:
            out["free_witness"] = list(self.free_witness)
        if self.nonedge_witness is not None:
            out["nonedge_witness"] = list(self.nonedge_witness)
        return out

    def agrees_with(self, other: "SaturationVerdict") -> bool:
        """Same decision and same non-edge witness.

        Copies found by different searches may differ, so the K4^- witness
        is not compared; each side is checked by :func:`verify_verdict`.
        """
        return (
            self.h_free == other.h_free
            and self.saturated == other.saturated
            and self.nonedge_witness == other.nonedge_witness
        )


def contains_k4_minus(G: Graph) -> Optional[tuple[int, int, int, int]]:
    """Return ``(u, v, c1, c2)`` with base edge ``uv`` and two common
    neighbors, for the lexicographically first such edge; else ``None``."""
    adj = G.adj
    for u in range(G.n):
        au = adj[u]
        for v in iter_bits(au >> (u + 1) << (u + 1)):
            common = au & adj[v]
            if common.bit_count() >= 2:
                it = iter_bits(common)
                return (u, v, next(it), next(it))
    return None


def _creates(adj: tuple[int, ...], u: int, v: int) -> bool:
    nu = adj[u] | (1 << v)
    nv = adj[v] | (1 << u)
    if (adj[u] & adj[v]).bit_count() >= 2:
        return True
    # every edge of a diamond touches an endpoint of its base edge, so a new
    # copy through uv has its base edge at u or at v
    for w in iter_bits(adj[u]):
        if (nu & adj[w]).bit_count() >= 2:
            return True
    for w in iter_bits(adj[v]):
        if (nv & adj[w]).bit_count() >= 2:
            return True
    return False


def creates_k4_minus_on_add(G: Graph, u: int, v: int) -> bool:
    """Whether adding the non-edge ``uv`` to the K4^--free graph ``G``
    creates a K4^-."""
    if u == v or not (0 <= u < G.n and 0 <= v < G.n):
        raise ValueError(f"need two distinct vertices below {G.n}, got ({u}, {v})")
    if G.has_edge(u, v):
        raise ValueError(f"({u}, {v}) is already an edge")
    if contains_k4_minus(G) is not None:
        raise ValueError("graph already contains K4^-")
    return _creates(G.adj, u, v)


def is_k4_minus_saturated(G: Graph) -> SaturationVerdict:
    witness = contains_k4_minus(G)
    if witness is not None:
        return SaturationVerdict(False, False, free_witness=witness)
    adj = G.adj
    full = (1 << G.n) - 1
    for u in range(G.n):
        au = adj[u]
        missing = ~au & full & ~((2 << u) - 1)
        while missing:
            low = missing & -missing
            missing ^= low
            v = low.bit_length() - 1
            # cheap common case: uv itself becomes a base edge
            if (au & adj[v]).bit_count() >= 2:
                continue
            if not _creates(adj, u, v):
                return SaturationVerdict(True, False, nonedge_witness=(u, v))
    return SaturationVerdict(True, True)


# -- generic oracle ---------------------------------------------------------------


def naive_find(G: Graph, H: Graph) -> Optional[tuple[int, ...]]:
    """Images of ``H``'s vertices under some edge-preserving injection
    into ``G`` (subgraph, not induced), or ``None``."""
    if H.n > MAX_PATTERN_VERTICES:
        raise ValueError(f"pattern has {H.n} vertices, limit is {MAX_PATTERN_VERTICES}")
    if H.n > G.n or H.num_edges > G.num_edges:
        return None
    order = sorted(range(H.n), key=lambda x: -H.degree(x))
    hdeg = [H.degree(x) for x in range(H.n)]
    gdeg = [G.degree(y) for y in range(G.n)]
    image = [-1] * H.n
    used = [False] * G.n

    def extend(k: int) -> bool:
        if k == H.n:
            return True
        x = order[k]
        for y in range(G.n):
            if used[y] or gdeg[y] < hdeg[x]:
                continue
            if any(
                image[z] >= 0 and H.has_edge(x, z) and not G.has_edge(y, image[z])
                for z in range(H.n)
            ):
                continue
            image[x] = y
            used[y] = True
            if extend(k + 1):
                return True
            image[x] = -1
            used[y] = False
        return False

    return tuple(image) if extend(0) else None


def naive_contains(G: Graph, H: Graph) -> bool:
    return naive_find(G, H) is not None


def naive_is_saturated(G: Graph) -> SaturationVerdict:
    found = naive_find(G, K4_MINUS)
    if found is not None:
        return SaturationVerdict(False, False, free_witness=found)
    for u, v in G.non_edges():
        if not naive_contains(G.plus_edge(u, v), K4_MINUS):
            return SaturationVerdict(True, False, nonedge_witness=(u, v))
    return SaturationVerdict(True, True)


def verify_verdict(G: Graph, verdict: SaturationVerdict) -> bool:
    """Re-check every witness a verdict carries against ``G``."""
    if verdict.saturated and not verdict.h_free:
        return False
    if not verdict.h_free:
        w = verdict.free_witness
        if w is None or verdict.nonedge_witness is not None or len(set(w)) != 4:
            return False
        return G.induced_edge_count(w) >= 5
    if verdict.free_witness is not None:
        return False
    if verdict.saturated:
        return verdict.nonedge_witness is None
    pair = verdict.nonedge_witness
    if pair is None:
        return False
    u, v = pair
    if u == v or G.has_edge(u, v):
        return False
    return contains_k4_minus(G.plus_edge(u, v)) is None


# -- odd-cycle neighbor bound ---------------------------------------------------


def odd_cycle_neighbor_bound(G: Graph) -> bool:
    """For a shortest odd cycle ``C`` of length ``2t+1``, check that every
    vertex off ``C`` has at most ``t`` neighbors on ``C``.

    Always true for K4^--free graphs; ``False`` means a bug upstream.
    """
    if contains_k4_minus(G) is not None:
        raise ValueError("graph contains K4^-")
    info = shortest_odd_cycle(G)
    if info is None:
        raise ValueError("graph is bipartite")
    cmask = info.mask
    return all(
        (G.adj[v] & cmask).bit_count() <= info.t for v in range(G.n) if not (cmask >> v) & 1
    )
