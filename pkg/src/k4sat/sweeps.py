"""Parameter sweeps that check the construction-side claims over ranges of n.

Each sweep returns an :class:`~k4sat.enumeration.Check` whose
``counterexamples`` hold short descriptions (or graph6 strings) of every
failure.  Sweeps over ``n`` take a ``workers`` argument; results never
depend on it.
"""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable

from . import constructions as cons
from .enumeration import Check, MAX_ENUM_N, enumerate_saturated, key_to_graph, num_slots
from .graph import Graph, build_graph, graph6_encode, is_bipartite, is_odd_closed_walk
from .saturation import (
    _creates,
    is_k4_minus_saturated,
    naive_is_saturated,
    verify_verdict,
)


def _map(fn: Callable, items: Iterable, workers: int) -> list:
    items = list(items)
    if workers <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))


def _merge(parts: list[Check], **details) -> Check:
    bad = [c for part in parts for c in part.counterexamples]
    merged: dict = dict(details)
    for part in parts:
        for k, v in part.details.items():
            if isinstance(v, int):
                merged[k] = merged.get(k, 0) + v
    return Check(not bad and all(parts), bad, merged)


def _family_params(n: int, b_min: int, b_max: int | None = None):
    top = n - 5 if b_max is None else min(b_max, n - 5)
    for b in range(b_min, top + 1):
        for a in range(0, n - b - 4):
            yield a, b


# -- edge formula ----------------------------------------------------------------


def _edge_formula_at(n: int) -> Check:
    bad = []
    checked = 0
    for a, b in _family_params(n, 1):
        checked += 1
        got = cons.construct_f(n, a, b)[0].num_edges
        if got != cons.f_formula(n, a, b):
            bad.append(f"F({n},{a},{b}): {got} edges, formula {cons.f_formula(n, a, b)}")
    return Check(not bad, bad, {"instances": checked})


def sweep_edge_formula(n_min: int, n_max: int, workers: int = 1) -> Check:
    """Construction edge count equals the closed form for all ``b >= 1``."""
    return _merge(_map(_edge_formula_at, range(n_min, n_max + 1), workers), n_min=n_min, n_max=n_max)


# -- family saturation -----------------------------------------------------------


def _family_saturation_at(n: int) -> Check:
    bad = []
    saturated = 0
    small_b_saturated = 0
    for a, b in _family_params(n, 0):
        G, _ = cons.construct_f(n, a, b)
        verdict = is_k4_minus_saturated(G)
        if not verify_verdict(G, verdict):
            bad.append(f"F({n},{a},{b}): witness does not re-verify")
        elif b >= 2 and not verdict.saturated:
            bad.append(f"F({n},{a},{b}): not saturated, witness {verdict.nonedge_witness}")
        elif b < 2 and verdict.saturated:
            small_b_saturated += 1
            bad.append(f"F({n},{a},{b}): b < 2 yet saturated")
        elif b >= 2:
            saturated += 1
    return Check(not bad, bad, {"saturated": saturated, "small_b_saturated": small_b_saturated})


def sweep_family_saturation(n_min: int, n_max: int, workers: int = 1) -> Check:
    """Every ``F_n(a, b)`` with ``b >= 2`` is saturated, and every instance
    with ``b`` in ``{0, 1}`` is reported non-saturated with a valid
    non-edge witness."""
    return _merge(_map(_family_saturation_at, range(n_min, n_max + 1), workers), n_min=n_min, n_max=n_max)


def _family_saturation_b2_at(n: int) -> Check:
    bad = []
    for a, b in _family_params(n, 2):
        G, _ = cons.construct_f(n, a, b)
        if not is_k4_minus_saturated(G).saturated:
            bad.append(f"F({n},{a},{b})")
    return Check(not bad, bad)


def sweep_family_saturation_b2(n_min: int, n_max: int, workers: int = 1) -> Check:
    """Only the ``b >= 2`` half of :func:`sweep_family_saturation`."""
    return _merge(_map(_family_saturation_b2_at, range(n_min, n_max + 1), workers))


def small_b_saturated_instances(n_min: int, n_max: int) -> list[tuple[int, int, int]]:
    out = []
    for n in range(n_min, n_max + 1):
        for a, b in _family_params(n, 0, 1):
            if is_k4_minus_saturated(cons.construct_f(n, a, b)[0]).saturated:
                out.append((n, a, b))
    return out


# -- coverage --------------------------------------------------------------------


def _coverage_at(n: int) -> Check:
    bad = []
    check = cons.verify_coverage_interval(n)
    if not check.ok:
        bad.append(f"n={n}: missing {list(check.missing)}")
    if n >= 11 and not cons.verify_overlap_inequality(n):
        bad.append(f"n={n}: overlap inequality fails")
    return Check(not bad, bad)


def sweep_coverage(n_min: int, n_max: int, workers: int = 1) -> Check:
    return _merge(_map(_coverage_at, range(n_min, n_max + 1), workers))


def sweep_overlap(n_min: int, n_max: int, workers: int = 1) -> Check:
    bad = [f"n={n}" for n in range(max(n_min, 11), n_max + 1) if not cons.verify_overlap_inequality(n)]
    return Check(not bad, bad)


# -- non-bipartite witnesses -------------------------------------------------------


def _witnesses_at(n: int) -> Check:
    bad = []
    for m in cons.target_interval(n):
        params = cons.parameters_for_size(n, m)
        if params is None:
            bad.append(f"n={n}, m={m}: no parameters")
            continue
        a, b = params
        G, _ = cons.construct_f(n, a, b)
        bip = is_bipartite(G)
        if G.num_edges != m or not is_k4_minus_saturated(G).saturated:
            bad.append(f"n={n}, m={m}: F({n},{a},{b}) is not a saturated graph of size m")
        elif bip.is_bipartite or not is_odd_closed_walk(G, bip.odd_walk):
            bad.append(f"n={n}, m={m}: no odd-cycle witness")
    return Check(not bad, bad, {"sizes": len(cons.target_interval(n))})


def sweep_nonbipartite_witnesses(n_min: int, n_max: int, workers: int = 1) -> Check:
    """Each size in ``[3n-11, bipartite_threshold(n)]`` is realised by a
    saturated, provably non-bipartite ``F_n(a, b)``."""
    return _merge(_map(_witnesses_at, range(n_min, n_max + 1), workers))


# -- extremal endpoints ----------------------------------------------------------


def _endpoints_at(n: int) -> Check:
    bad = []
    G = cons.construct_star_matching(n)
    if G.num_edges != cons.sat_number(n) or not is_k4_minus_saturated(G).saturated:
        bad.append(f"star-matching n={n}")
    for i in range(2, n - 1):
        if not is_k4_minus_saturated(cons.construct_complete_bipartite(n, i)).saturated:
            bad.append(f"K({i},{n - i})")
    for i in (1, n - 1):
        verdict = is_k4_minus_saturated(cons.construct_complete_bipartite(n, i))
        if verdict.saturated:
            bad.append(f"K({i},{n - i}) unexpectedly saturated")
    return Check(not bad, bad)


def sweep_extremal_endpoints(n_min: int, n_max: int, workers: int = 1) -> Check:
    return _merge(_map(_endpoints_at, range(n_min, n_max + 1), workers))


def sweep_spectrum_consistency(n_min: int, n_max: int) -> Check:
    """Every generator-produced saturated graph has a size the closed-form
    spectrum lists."""
    bad = []
    for n in range(n_min, n_max + 1):
        spectrum = set(cons.spectrum_formula(n).sizes)
        sizes = {cons.construct_star_matching(n).num_edges}
        sizes |= {cons.construct_complete_bipartite(n, i).num_edges for i in range(2, n - 1)}
        sizes |= set(cons.coverage_set(n).sizes)
        bad += [f"n={n}, m={m}" for m in sorted(sizes - spectrum)]
    return Check(not bad, bad)


# -- checker equivalence ---------------------------------------------------------


def random_diamond_free(n: int, rng: random.Random, saturate: bool) -> Graph:
    """Random K4^--free graph grown by adding random pairs that keep it
    free; with ``saturate`` it is grown until no pair can be added."""
    adj = [0] * n
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    rng.shuffle(pairs)
    stop = len(pairs) if saturate else rng.randrange(len(pairs) + 1)
    for u, v in pairs[:stop]:
        if not _creates(tuple(adj), u, v):
            adj[u] |= 1 << v
            adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def random_test_graph(n: int, rng: random.Random) -> Graph:
    kind = rng.randrange(4)
    if kind == 0:
        return random_diamond_free(n, rng, saturate=True)
    if kind == 1:
        G = random_diamond_free(n, rng, saturate=True)
        edges = G.edges()
        if edges:
            edges.pop(rng.randrange(len(edges)))
        return build_graph(n, edges)
    if kind == 2:
        return random_diamond_free(n, rng, saturate=False)
    p = rng.uniform(0.1, 0.6)
    return build_graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


def _compare(G: Graph) -> str | None:
    fast, slow = is_k4_minus_saturated(G), naive_is_saturated(G)
    if not fast.agrees_with(slow) or not verify_verdict(G, fast) or not verify_verdict(G, slow):
        return graph6_encode(G).decode()
    return None


def _exhaustive_chunk(args: tuple[int, int, int]) -> list[str]:
    n, start, stop = args
    return [g for key in range(start, stop) if (g := _compare(key_to_graph(n, key))) is not None]


def exhaustive_checker_equivalence(n: int, workers: int = 1) -> Check:
    total = 1 << num_slots(n)
    step = max(1, total // (8 * max(workers, 1)))
    chunks = [(n, s, min(s + step, total)) for s in range(0, total, step)]
    bad = [g for part in _map(_exhaustive_chunk, chunks, workers) for g in part]
    return Check(not bad, bad, {"graphs": total})


def _random_chunk(args: tuple[int, int, int, int]) -> list[str]:
    seed, count, n_lo, n_hi = args
    rng = random.Random(seed)
    bad = []
    for _ in range(count):
        g = _compare(random_test_graph(rng.randint(n_lo, n_hi), rng))
        if g is not None:
            bad.append(g)
    return bad


def random_checker_equivalence(
    samples: int, n_lo: int = 7, n_hi: int = 12, seed: int = 0, workers: int = 1
) -> Check:
    chunk = 500
    jobs = [(seed * 1_000_003 + k, min(chunk, samples - s), n_lo, n_hi) for k, s in enumerate(range(0, samples, chunk))]
    bad = [g for part in _map(_random_chunk, jobs, workers) for g in part]
    return Check(not bad, bad, {"graphs": samples})


def census_dual_check(n: int) -> Check:
    """Fast and naive enumeration must produce identical reports."""
    if n > MAX_ENUM_N:
        raise ValueError(f"n must be at most {MAX_ENUM_N}")
    fast = enumerate_saturated(n, checker="fast")
    naive = enumerate_saturated(n, checker="naive")
    ok = fast.same_content(naive)
    return Check(ok, [] if ok else [f"n={n}"])
