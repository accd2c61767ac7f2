"""Exhaustive enumeration of K4^--saturated graphs on at most 8 vertices.

The search assigns vertex-pair slots in graph6 column order
``(0,1), (0,2), (1,2), (0,3), ...`` one column at a time: column ``j``
chooses the neighbourhood of vertex ``j`` among ``0..j-1``.  A column
choice that creates a K4^- is pruned together with its whole subtree,
since supergraphs of a K4^--containing graph still contain it.

Graphs are identified by an integer *key*: bit ``M-1-s`` is set when slot
``s`` holds an edge (``M = n(n-1)/2``).  Comparing keys is the same as
comparing graph6 strings, so the canonical form is simply the smallest
key over all relabelings.
"""

from __future__ import annotations

import json
import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import permutations
from typing import Literal, Optional

import numpy as np
from numba import njit

from .constructions import bipartite_threshold
from .graph import Graph, build_graph, graph6_encode, is_bipartite, shortest_odd_cycle
from .saturation import (
    _creates,
    is_k4_minus_saturated,
    naive_is_saturated,
    odd_cycle_neighbor_bound,
)

MAX_ENUM_N = 8
DEFAULT_CERT_CAP = 100

CheckerMode = Literal["fast", "naive", "both"]

# kernel statistics, in order
_STATS = (
    "visited",
    "pruned",
    "nonbipartite",
    "neighbor_violations",
    "saturated_nonbipartite",
    "edge_bound_violations",
)


def num_slots(n: int) -> int:
    return n * (n - 1) // 2


def slot_index(i: int, j: int) -> int:
    if i > j:
        i, j = j, i
    return j * (j - 1) // 2 + i


def slot_pairs(n: int) -> list[tuple[int, int]]:
    return [(i, j) for j in range(1, n) for i in range(j)]


def graph_key(G: Graph) -> int:
    m = num_slots(G.n)
    return sum(1 << (m - 1 - slot_index(u, v)) for u, v in G.edges())


def key_to_graph(n: int, key: int) -> Graph:
    m = num_slots(n)
    return build_graph(n, [p for s, p in enumerate(slot_pairs(n)) if (key >> (m - 1 - s)) & 1])


def _check_n(n: int) -> None:
    if not 1 <= n <= MAX_ENUM_N:
        raise ValueError(f"exhaustive search is limited to 1 <= n <= {MAX_ENUM_N}, got {n}")


# -- search tasks ----------------------------------------------------------------


@dataclass(frozen=True)
class SearchTask:
    """Fixed presence (1) / absence (0) for the first ``len(prefix)`` slots."""

    n: int
    prefix: tuple[int, ...]

    def fixed_columns(self) -> tuple[np.ndarray, np.ndarray]:
        mask = np.zeros(max(self.n, 1), dtype=np.int64)
        val = np.zeros(max(self.n, 1), dtype=np.int64)
        for (i, j), bit in zip(slot_pairs(self.n), self.prefix):
            mask[j] |= 1 << i
            if bit:
                val[j] |= 1 << i
        return mask, val


def _partition(n: int, prefix_len: int) -> tuple[list[SearchTask], int]:
    m = num_slots(n)
    if not 0 <= prefix_len <= m:
        raise ValueError(f"prefix length must lie in [0, {m}], got {prefix_len}")
    pairs = slot_pairs(n)
    tasks: list[SearchTask] = []
    pruned = 0
    adj = [0] * n
    prefix: list[int] = []

    def walk(depth: int) -> None:
        nonlocal pruned
        if depth == prefix_len:
            tasks.append(SearchTask(n, tuple(prefix)))
            return
        prefix.append(0)
        walk(depth + 1)
        prefix.pop()
        i, j = pairs[depth]
        if _creates(tuple(adj), i, j):
            pruned += 1 << (m - depth - 1)
            return
        adj[i] |= 1 << j
        adj[j] |= 1 << i
        prefix.append(1)
        walk(depth + 1)
        prefix.pop()
        adj[i] &= ~(1 << j)
        adj[j] &= ~(1 << i)

    walk(0)
    return tasks, pruned


def partition_tasks(n: int, prefix_len: int) -> list[SearchTask]:
    """Disjoint search tasks covering every K4^--free labeled graph.

    Prefixes whose fixed edges already contain a K4^- are left out.
    """
    _check_n(n)
    return _partition(n, prefix_len)[0]


def default_prefix_len(n: int, workers: int) -> int:
    if workers <= 1:
        return 0
    return min(num_slots(n), math.ceil(math.log2(8 * workers)))


# -- numba kernel ----------------------------------------------------------------


@njit(cache=True)
def _popcount(x):
    c = 0
    while x:
        x &= x - 1
        c += 1
    return c


@njit(cache=True)
def _lowbit_index(x):
    i = 0
    while not (x >> i) & 1:
        i += 1
    return i


@njit(cache=True)
def _leaf_is_saturated(adj, n):
    for u in range(n):
        for v in range(u + 1, n):
            if (adj[u] >> v) & 1:
                continue
            common = adj[u] & adj[v]
            if _popcount(common) >= 2:
                continue
            # otherwise a new diamond needs base edge uw or vw with w common
            ok = False
            while common:
                w = _lowbit_index(common)
                common &= common - 1
                if (adj[u] & adj[w]) or (adj[v] & adj[w]):
                    ok = True
            if not ok:
                return False
    return True


@njit(cache=True)
def _bfs(adj, n, s, dist, parent, queue):
    for v in range(n):
        dist[v] = -1
        parent[v] = -1
    dist[s] = 0
    head = 0
    tail = 1
    queue[0] = s
    while head < tail:
        x = queue[head]
        head += 1
        nb = adj[x]
        while nb:
            y = _lowbit_index(nb)
            nb &= nb - 1
            if dist[y] < 0:
                dist[y] = dist[x] + 1
                parent[y] = x
                queue[tail] = y
                tail += 1


@njit(cache=True)
def _shortest_odd_cycle_mask(adj, n, dist, parent, queue):
    """Return (t, cycle mask) for a shortest odd cycle, or (-1, 0)."""
    best = n + 1
    best_s = -1
    best_x = -1
    best_y = -1
    for s in range(n):
        _bfs(adj, n, s, dist, parent, queue)
        for x in range(n):
            if dist[x] < 0 or 2 * dist[x] + 1 >= best:
                continue
            nb = adj[x] >> (x + 1)
            y = x + 1
            while nb:
                if nb & 1 and dist[y] == dist[x]:
                    best = 2 * dist[x] + 1
                    best_s = s
                    best_x = x
                    best_y = y
                nb >>= 1
                y += 1
    if best_s < 0:
        return -1, 0
    _bfs(adj, n, best_s, dist, parent, queue)
    mask = 0
    x = best_x
    while x >= 0:
        mask |= 1 << x
        x = parent[x]
    y = best_y
    while y >= 0:
        mask |= 1 << y
        y = parent[y]
    return (best - 1) // 2, mask


@njit(cache=True)
def _search(n, fixed_mask, fixed_val, prefix_len, check_bound, threshold):
    m = n * (n - 1) // 2
    stats = np.zeros(6, np.int64)
    keys = np.empty(1024, np.int64)
    nkeys = 0
    adj = np.zeros(max(n, 1), np.int64)
    cur = np.full(max(n, 1), -1, np.int64)
    dist = np.empty(max(n, 1), np.int64)
    parent = np.empty(max(n, 1), np.int64)
    queue = np.empty(max(n, 1), np.int64)
    j = 1
    leaf = n == 1
    while True:
        if leaf:
            leaf = False
            stats[0] += 1
            sat = _leaf_is_saturated(adj, n)
            if sat:
                key = 0
                for jj in range(1, n):
                    for ii in range(jj):
                        if (adj[jj] >> ii) & 1:
                            key |= 1 << (m - 1 - (jj * (jj - 1) // 2 + ii))
                if nkeys == keys.shape[0]:
                    grown = np.empty(2 * nkeys, np.int64)
                    grown[:nkeys] = keys
                    keys = grown
                keys[nkeys] = key
                nkeys += 1
            if check_bound:
                t, cmask = _shortest_odd_cycle_mask(adj, n, dist, parent, queue)
                if t >= 1:
                    stats[2] += 1
                    bad = _popcount(cmask) != 2 * t + 1
                    for v in range(n):
                        if not (cmask >> v) & 1 and _popcount(adj[v] & cmask) > t:
                            bad = True
                    if bad:
                        stats[3] += 1
                    if sat:
                        stats[4] += 1
                        edges = 0
                        for v in range(n):
                            edges += _popcount(adj[v])
                        if edges // 2 > threshold - (t - 1) * (t - 1):
                            stats[5] += 1
            if n == 1:
                break
        if j < 1:
            break
        # retract the current choice at column j
        S = cur[j]
        if S >= 0:
            for u in range(j):
                if (S >> u) & 1:
                    adj[u] &= ~(1 << j)
            adj[j] = 0
        end = j * (j + 1) // 2
        free_after = m - (end if end > prefix_len else prefix_len)
        S += 1
        found = False
        while S < (1 << j):
            if (S & fixed_mask[j]) != fixed_val[j]:
                S += 1
                continue
            ok = True
            for u in range(j):
                if (S >> u) & 1:
                    c = adj[u] & S
                    if c & (c - 1):
                        ok = False
                        break
                    if c and (adj[u] & adj[_lowbit_index(c)]):
                        ok = False
                        break
            if ok:
                found = True
                break
            stats[1] += 1 << free_after
            S += 1
        if not found:
            cur[j] = -1
            j -= 1
            continue
        cur[j] = S
        for u in range(j):
            if (S >> u) & 1:
                adj[u] |= 1 << j
        adj[j] = S
        if j == n - 1:
            leaf = True
        else:
            j += 1
            cur[j] = -1
    return stats, keys[:nkeys].copy()


@dataclass
class TaskResult:
    stats: dict[str, int]
    keys: np.ndarray


def run_task(task: SearchTask, check_bound: bool = False) -> TaskResult:
    mask, val = task.fixed_columns()
    stats, keys = _search(
        task.n, mask, val, len(task.prefix), check_bound, bipartite_threshold(task.n)
    )
    return TaskResult(dict(zip(_STATS, map(int, stats))), keys)


def _run_task_star(args: tuple[SearchTask, bool]) -> TaskResult:
    return run_task(*args)


def search(n: int, workers: int = 1, check_bound: bool = False, prefix_len: Optional[int] = None):
    """Run the pruned search; returns (merged stats, sorted saturated keys)."""
    _check_n(n)
    if prefix_len is None:
        prefix_len = default_prefix_len(n, workers)
    tasks, prefix_pruned = _partition(n, prefix_len)
    jobs = [(t, check_bound) for t in tasks]
    if workers <= 1 or len(tasks) <= 1:
        results = [_run_task_star(j) for j in jobs]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_run_task_star, jobs))
    stats = {name: sum(r.stats[name] for r in results) for name in _STATS}
    stats["pruned"] += prefix_pruned
    keys = np.unique(np.concatenate([r.keys for r in results])) if results else np.array([], np.int64)
    return stats, keys


# -- canonical forms -------------------------------------------------------------


@lru_cache(maxsize=None)
def _permutation_table(n: int) -> np.ndarray:
    return np.array(list(permutations(range(n))), dtype=np.int64).reshape(-1, n)


def _orbit_keys(n: int, edges: list[tuple[int, int]]) -> np.ndarray:
    perms = _permutation_table(n)
    m = num_slots(n)
    keys = np.zeros(len(perms), dtype=np.int64)
    for u, v in edges:
        pu, pv = perms[:, u], perms[:, v]
        lo, hi = np.minimum(pu, pv), np.maximum(pu, pv)
        keys |= np.left_shift(np.int64(1), m - 1 - (hi * (hi - 1) // 2 + lo))
    return keys


def canonical_key(G: Graph) -> int:
    _check_n(G.n)
    return int(_orbit_keys(G.n, G.edges()).min())


def canonical_form(G: Graph) -> str:
    """Smallest graph6 string over all ``n!`` relabelings of ``G``."""
    return graph6_encode(key_to_graph(G.n, canonical_key(G))).decode()


def group_into_classes(n: int, keys) -> dict[int, int]:
    """Map canonical key -> number of labeled members, for a set of keys
    closed under relabeling."""
    remaining = set(int(k) for k in keys)
    classes: dict[int, int] = {}
    for key in sorted(remaining):
        if key not in remaining:
            continue
        orbit = np.unique(_orbit_keys(n, key_to_graph(n, key).edges()))
        members = set(orbit.tolist())
        if not members <= remaining:
            raise RuntimeError("key set is not closed under relabeling")
        classes[int(orbit[0])] = len(members)
        remaining -= members
    return classes


# -- reports ---------------------------------------------------------------------


@dataclass
class SizeEntry:
    labeled_count: int
    unlabeled_count: Optional[int]
    certificates: list[str]

    def to_dict(self) -> dict:
        return {
            "labeled_count": self.labeled_count,
            "unlabeled_count": self.unlabeled_count,
            "certificates": list(self.certificates),
        }


@dataclass
class SpectrumReport:
    n: int
    checker_mode: str
    sizes: dict[int, SizeEntry]
    stats: dict[str, int] = field(default_factory=dict, compare=False)

    @property
    def edge_counts(self) -> list[int]:
        return sorted(self.sizes)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "checker_mode": self.checker_mode,
            "sizes": {str(m): self.sizes[m].to_dict() for m in sorted(self.sizes)},
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    def same_content(self, other: "SpectrumReport") -> bool:
        return self.n == other.n and {
            m: e.to_dict() for m, e in self.sizes.items()
        } == {m: e.to_dict() for m, e in other.sizes.items()}


def naive_saturated_keys(n: int) -> np.ndarray:
    """Keys of all saturated labeled graphs, by running the generic oracle
    on every one of the ``2^(n(n-1)/2)`` labeled graphs."""
    _check_n(n)
    found = [key for key in range(1 << num_slots(n)) if naive_is_saturated(key_to_graph(n, key)).saturated]
    return np.array(found, dtype=np.int64)


def _build_report(n: int, mode: str, keys, dedup: bool, cert_cap: int, stats) -> SpectrumReport:
    m = num_slots(n)
    sizes: dict[int, SizeEntry] = {}

    def edge_count(key: int) -> int:
        return bin(key).count("1")

    if dedup:
        classes = group_into_classes(n, keys)
        for key in sorted(classes):
            e = sizes.setdefault(edge_count(key), SizeEntry(0, 0, []))
            e.labeled_count += classes[key]
            e.unlabeled_count += 1
            if len(e.certificates) < cert_cap:
                e.certificates.append(graph6_encode(key_to_graph(n, key)).decode())
    else:
        for key in sorted(int(k) for k in keys):
            e = sizes.setdefault(edge_count(key), SizeEntry(0, None, []))
            e.labeled_count += 1
            if len(e.certificates) < cert_cap:
                e.certificates.append(graph6_encode(key_to_graph(n, key)).decode())
    assert all(0 <= s <= m for s in sizes)
    return SpectrumReport(n, mode, sizes, dict(stats))


def enumerate_saturated(
    n: int,
    dedup: bool = True,
    cert_cap: int = DEFAULT_CERT_CAP,
    workers: int = 1,
    checker: CheckerMode = "fast",
) -> SpectrumReport:
    """Census of all K4^--saturated labeled graphs on ``n`` vertices.

    ``checker="fast"`` runs the pruned bitset search; ``"naive"`` visits
    every labeled graph with the generic subgraph oracle (practical up to
    n = 6); ``"both"`` runs the two and raises ``RuntimeError`` if their
    reports differ.
    """
    _check_n(n)
    if checker not in ("fast", "naive", "both"):
        raise ValueError(f"unknown checker mode {checker!r}")
    if cert_cap < 0:
        raise ValueError("cert_cap must be non-negative")
    reports = {}
    if checker in ("fast", "both"):
        stats, keys = search(n, workers=workers)
        reports["fast"] = _build_report(n, checker, keys, dedup, cert_cap, stats)
    if checker in ("naive", "both"):
        keys = naive_saturated_keys(n)
        stats = {"visited": 1 << num_slots(n), "pruned": 0}
        reports["naive"] = _build_report(n, checker, keys, dedup, cert_cap, stats)
    if checker == "both" and not reports["fast"].same_content(reports["naive"]):
        raise RuntimeError(f"fast and naive censuses disagree at n={n}")
    return reports["fast" if "fast" in reports else "naive"]


# -- threshold checks ------------------------------------------------------------


@dataclass
class Check:
    ok: bool
    counterexamples: list[str] = field(default_factory=list)
    details: dict = field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.ok


def saturated_classes(n: int, workers: int = 1) -> dict[int, int]:
    _, keys = search(n, workers=workers)
    return group_into_classes(n, keys)


def verify_bipartite_threshold(n: int, workers: int = 1) -> Check:
    """No saturated non-bipartite graph on ``n`` vertices has more than
    ``bipartite_threshold(n)`` edges."""
    _check_n(n)
    limit = bipartite_threshold(n)
    bad: list[str] = []
    classes = saturated_classes(n, workers)
    nonbipartite = 0
    for key in sorted(classes):
        G = key_to_graph(n, key)
        if not is_k4_minus_saturated(G).saturated:
            raise RuntimeError("search returned a graph the checker rejects")
        if not is_bipartite(G).is_bipartite:
            nonbipartite += 1
            if G.num_edges > limit:
                bad.append(graph6_encode(G).decode())
    return Check(not bad, bad, {"classes": len(classes), "nonbipartite_classes": nonbipartite, "threshold": limit})


def verify_proof_bound(n: int, workers: int = 1) -> Check:
    """Odd-cycle bounds for every K4^--free non-bipartite graph on ``n``
    vertices.

    Two routes: the search kernel tests the neighbor bound on every labeled
    K4^--free graph and the edge bound on every saturated one; then each
    saturated isomorphism class is re-checked with the pure-Python
    shortest-odd-cycle code.
    """
    _check_n(n)
    limit = bipartite_threshold(n)
    stats, keys = search(n, workers=workers, check_bound=True)
    bad: list[str] = []
    checked = 0
    for key in sorted(group_into_classes(n, keys)):
        G = key_to_graph(n, key)
        info = shortest_odd_cycle(G)
        if info is None:
            continue
        checked += 1
        if G.num_edges > limit - (info.t - 1) ** 2 or not odd_cycle_neighbor_bound(G):
            bad.append(graph6_encode(G).decode())
    ok = not bad and stats["neighbor_violations"] == 0 and stats["edge_bound_violations"] == 0
    details = dict(stats, python_checked_classes=checked)
    return Check(ok, bad, details)


def env_workers(default: int = 1) -> int:
    raw = os.environ.get("K4SAT_JOBS")
    try:
        return max(1, int(raw)) if raw else default
    except ValueError:
        return default
