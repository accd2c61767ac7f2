"""Immutable simple graphs on at most 62 labeled vertices.

Adjacency is stored as one Python int per vertex, used as a bitset:
bit ``u`` of ``adj[v]`` is set iff ``u`` and ``v`` are adjacent.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, NamedTuple, Optional, Sequence

import numpy as np

MAX_VERTICES = 62


class GraphFormatError(ValueError):
    """Raised for malformed graph input (bad labels, loops, bad graph6)."""


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def bits_of(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph with vertices ``0..n-1``.

    Usually built with :func:`build_graph`; the constructor validates the
    adjacency tuple (range, loops, symmetry) either way.
    """

    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 1 <= self.n <= MAX_VERTICES:
            raise GraphFormatError(f"vertex count {self.n} outside 1..{MAX_VERTICES}")
        if len(self.adj) != self.n:
            raise GraphFormatError("adjacency length does not match n")
        full = (1 << self.n) - 1
        for v, nbrs in enumerate(self.adj):
            if nbrs < 0 or nbrs & ~full:
                raise GraphFormatError(f"vertex {v} has a neighbor label >= n")
        rows = np.array(self.adj, dtype=np.uint64)
        matrix = (rows[:, None] >> np.arange(self.n, dtype=np.uint64)) & np.uint64(1)
        if matrix.diagonal().any():
            raise GraphFormatError(f"loop at vertex {int(np.flatnonzero(matrix.diagonal())[0])}")
        if not np.array_equal(matrix, matrix.T):
            raise GraphFormatError("adjacency is not symmetric")

    @property
    def num_edges(self) -> int:
        return sum(nbrs.bit_count() for nbrs in self.adj) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.adj[u] >> v) & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def edges(self) -> list[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        return [(u, v) for u in range(self.n) for v in iter_bits(self.adj[u] >> (u + 1) << (u + 1))]

    def non_edges(self) -> Iterator[tuple[int, int]]:
        """Non-adjacent pairs ``(u, v)``, ``u < v``, in lexicographic order."""
        full = (1 << self.n) - 1
        for u in range(self.n):
            missing = ~self.adj[u] & full & ~((1 << (u + 1)) - 1)
            for v in iter_bits(missing):
                yield (u, v)

    def plus_edge(self, u: int, v: int) -> "Graph":
        """Return a new graph with the edge ``uv`` added."""
        if u == v or not (0 <= u < self.n and 0 <= v < self.n):
            raise ValueError(f"invalid pair ({u}, {v}) for a graph on {self.n} vertices")
        adj = list(self.adj)
        adj[u] |= 1 << v
        adj[v] |= 1 << u
        return Graph(self.n, tuple(adj))

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph whose vertex ``perm[v]`` plays the role of ``v``."""
        return build_graph(self.n, [(perm[u], perm[v]) for u, v in self.edges()])

    def induced_edge_count(self, vertices: Iterable[int]) -> int:
        mask = bits_of(vertices)
        return sum((self.adj[v] & mask).bit_count() for v in iter_bits(mask)) // 2

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.num_edges}, g6={graph6_encode(self).decode()!r})"


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a frozen graph on ``n`` vertices; duplicate edges collapse."""
    if not isinstance(n, int) or not 1 <= n <= MAX_VERTICES:
        raise GraphFormatError(f"vertex count {n!r} outside 1..{MAX_VERTICES}")
    adj = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"edge ({u}, {v}) has an endpoint outside [0, {n})")
        if u == v:
            raise GraphFormatError(f"loop ({u}, {v}) is not allowed")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def empty_graph(n: int) -> Graph:
    return build_graph(n, [])


def complete_graph(n: int) -> Graph:
    return build_graph(n, combinations(range(n), 2))


def cycle_graph(n: int) -> Graph:
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def common_neighbors(G: Graph, u: int, v: int) -> int:
    """Bitset of ``N(u) & N(v)``."""
    if u == v or not (0 <= u < G.n and 0 <= v < G.n):
        raise ValueError(f"need two distinct vertices below {G.n}, got ({u}, {v})")
    return G.adj[u] & G.adj[v]


def edges_between(G: Graph, s1: Iterable[int], s2: Iterable[int]) -> int:
    """Number of edges with one end in ``s1`` and the other in ``s2``.

    Sets are expected to be disjoint; shared vertices would count an
    edge once from each side.
    """
    mask2 = bits_of(s2)
    return sum((G.adj[v] & mask2).bit_count() for v in set(s1))


# -- bipartiteness and odd cycles ---------------------------------------------


class OddCycleInfo(NamedTuple):
    cycle: tuple[int, ...]
    t: int

    @property
    def length(self) -> int:
        return len(self.cycle)

    @property
    def mask(self) -> int:
        return bits_of(self.cycle)


class BipartiteResult(NamedTuple):
    is_bipartite: bool
    coloring: Optional[tuple[int, ...]]
    odd_walk: Optional[tuple[int, ...]]


def is_bipartite(G: Graph) -> BipartiteResult:
    """Two-color ``G`` by BFS.

    On failure the result carries an odd closed walk: the listed vertices
    are consecutive along the walk and the last one is adjacent to the
    first.
    """
    color = [-1] * G.n
    parent = [-1] * G.n
    for root in range(G.n):
        if color[root] >= 0:
            continue
        color[root] = 0
        queue = deque([root])
        while queue:
            x = queue.popleft()
            for y in iter_bits(G.adj[x]):
                if color[y] < 0:
                    color[y] = 1 - color[x]
                    parent[y] = x
                    queue.append(y)
                elif color[y] == color[x]:
                    return BipartiteResult(False, None, _closed_walk(parent, x, y))
    return BipartiteResult(True, tuple(color), None)


def _closed_walk(parent: list[int], x: int, y: int) -> tuple[int, ...]:
    # root -> ... -> x, then y -> ... -> root; the edge xy closes it.
    def to_root(v: int) -> list[int]:
        path = [v]
        while parent[path[-1]] >= 0:
            path.append(parent[path[-1]])
        return path

    px, py = to_root(x), to_root(y)
    return tuple(reversed(px)) + tuple(py[:-1])


def is_odd_closed_walk(G: Graph, walk: Sequence[int]) -> bool:
    if len(walk) % 2 == 0:
        return False
    return all(G.has_edge(walk[i], walk[(i + 1) % len(walk)]) for i in range(len(walk)))


def shortest_odd_cycle(G: Graph) -> Optional[OddCycleInfo]:
    """A shortest odd cycle of ``G``, or ``None`` when ``G`` is bipartite.

    Runs BFS on the bipartite double cover (states ``(vertex, parity)``)
    from every source; the first time a source reaches its own odd copy
    gives the shortest odd closed walk through it.
    """
    best: Optional[tuple[int, ...]] = None
    for s in range(G.n):
        limit = len(best) if best is not None else G.n + 1
        walk = _odd_return(G, s, limit)
        if walk is not None and (best is None or len(walk) < len(best)):
            best = walk
            if len(best) == 3:
                break
    if best is None:
        return None
    return OddCycleInfo(best, (len(best) - 1) // 2)


def _odd_return(G: Graph, s: int, limit: int) -> Optional[tuple[int, ...]]:
    # dist/parent indexed by 2*v + parity
    dist = [-1] * (2 * G.n)
    parent = [-1] * (2 * G.n)
    dist[2 * s] = 0
    queue = deque([2 * s])
    target = 2 * s + 1
    while queue:
        state = queue.popleft()
        d = dist[state]
        if d + 1 >= limit:
            break
        x, p = divmod(state, 2)
        for y in iter_bits(G.adj[x]):
            nxt = 2 * y + (1 - p)
            if dist[nxt] < 0:
                dist[nxt] = d + 1
                parent[nxt] = state
                if nxt == target:
                    inner = []
                    cur = parent[target]
                    while cur != 2 * s:
                        inner.append(cur // 2)
                        cur = parent[cur]
                    return (s,) + tuple(reversed(inner))
                queue.append(nxt)
    return None


# -- graph6 ---------------------------------------------------------------------


def graph6_encode(G: Graph) -> bytes:
    """Short-form graph6 bytes (no header, no trailing newline)."""
    bits = [(G.adj[j] >> i) & 1 for j in range(1, G.n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    out = bytearray([G.n + 63])
    for k in range(0, len(bits), 6):
        group = 0
        for b in bits[k : k + 6]:
            group = (group << 1) | b
        out.append(group + 63)
    return bytes(out)


def graph6_decode(data: bytes | str) -> Graph:
    if isinstance(data, str):
        data = data.encode("ascii", errors="replace")
    data = data.strip()
    if data.startswith(b">>graph6<<"):
        data = data[len(b">>graph6<<") :]
    if not data:
        raise GraphFormatError("empty graph6 input")
    bad = [c for c in data if not 63 <= c <= 126]
    if bad:
        raise GraphFormatError(f"byte {bad[0]} outside the graph6 range 63..126")
    n = data[0] - 63
    if n > MAX_VERTICES:
        raise GraphFormatError("long-form graph6 (n > 62) is not supported")
    if n < 1:
        raise GraphFormatError("graph6 with zero vertices is not supported")
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    payload = data[1:]
    if len(payload) != need:
        raise GraphFormatError(f"graph6 payload has {len(payload)} bytes, expected {need}")
    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = payload[k // 6] - 63
            if (byte >> (5 - k % 6)) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    return Graph(n, tuple(adj))


# -- edge list text -------------------------------------------------------------


def to_edge_list(G: Graph) -> str:
    edges = G.edges()
    lines = [f"{G.n} {len(edges)}"] + [f"{u} {v}" for u, v in edges]
    return "\n".join(lines) + "\n"


def from_edge_list(text: str) -> Graph:
    rows = [line.split() for line in text.splitlines() if line.strip()]
    try:
        n, m = map(int, rows[0])
        edges = [(int(u), int(v)) for u, v in rows[1:]]
    except (IndexError, ValueError) as exc:
        raise GraphFormatError(f"malformed edge list: {exc}") from None
    if len(edges) != m:
        raise GraphFormatError(f"edge list header announces {m} edges, found {len(edges)}")
    return build_graph(n, edges)
