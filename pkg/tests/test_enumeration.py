import json
from itertools import permutations

import pytest

from k4sat.enumeration import (
    SearchTask,
    _partition,
    canonical_form,
    enumerate_saturated,
    graph_key,
    key_to_graph,
    num_slots,
    partition_tasks,
    run_task,
    search,
    slot_pairs,
    verify_bipartite_threshold,
    verify_proof_bound,
)
from k4sat.graph import build_graph, complete_graph, cycle_graph, graph6_decode, graph6_encode
from k4sat.saturation import K4_MINUS, contains_k4_minus, is_k4_minus_saturated, naive_is_saturated

C4 = cycle_graph(4)
PAW = build_graph(4, [(0, 1), (0, 2), (0, 3), (1, 2)])


def degree_profile(G):
    return (G.num_edges, tuple(sorted(G.degree(v) for v in range(G.n))))


def brute_isomorphic(G, H):
    if G.n != H.n or degree_profile(G) != degree_profile(H):
        return False
    target = set(H.edges())
    g_edges = G.edges()
    return any({tuple(sorted((p[u], p[v]))) for u, v in g_edges} == target for p in permutations(range(G.n)))


def test_slot_order_matches_graph6():
    assert slot_pairs(4) == [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (2, 3)]
    G = build_graph(4, [(0, 2), (1, 3)])
    key = graph_key(G)
    assert key == 0b010010
    assert key_to_graph(4, key) == G


def test_census_n4():
    report = enumerate_saturated(4)
    assert report.edge_counts == [4]
    entry = report.sizes[4]
    assert entry.unlabeled_count == 2 and entry.labeled_count == 15
    assert set(entry.certificates) == {canonical_form(C4), canonical_form(PAW)}


def test_census_n4_matches_naive_brute_force():
    found = [key for key in range(1 << 6) if naive_is_saturated(key_to_graph(4, key)).saturated]
    assert len(found) == 15
    assert enumerate_saturated(4, checker="naive").to_json() == enumerate_saturated(4).to_json().replace(
        '"fast"', '"naive"'
    )


def test_census_n3_includes_triangle():
    report = enumerate_saturated(3)
    assert 3 in report.sizes
    assert report.sizes[3].certificates == [graph6_encode(complete_graph(3)).decode()]


def test_census_tiny():
    assert enumerate_saturated(1).sizes[0].labeled_count == 1
    assert enumerate_saturated(2).edge_counts == [1]


def test_census_n7_self_consistent():
    report = enumerate_saturated(7, cert_cap=1000)
    for m, entry in report.sizes.items():
        assert entry.unlabeled_count == len(entry.certificates)
        for cert in entry.certificates:
            G = graph6_decode(cert)
            assert G.num_edges == m
            assert naive_is_saturated(G).saturated
            assert is_k4_minus_saturated(G).saturated
            assert canonical_form(G) == cert


def test_census_rejects_large_n():
    with pytest.raises(ValueError):
        enumerate_saturated(9)
    with pytest.raises(ValueError):
        enumerate_saturated(4, checker="other")


def test_dual_checker_agreement_up_to_6():
    for n in range(1, 7):
        enumerate_saturated(n, checker="both")


def test_dedup_matches_pairwise_isomorphism():
    for n in range(1, 7):
        _, keys = search(n)
        reps = []
        for key in keys:
            G = key_to_graph(n, int(key))
            if not any(brute_isomorphic(G, R) for R in reps):
                reps.append(G)
        report = enumerate_saturated(n)
        assert sum(e.unlabeled_count for e in report.sizes.values()) == len(reps)
        assert sum(e.labeled_count for e in report.sizes.values()) == len(keys)


def test_no_dedup_lists_labeled_graphs():
    report = enumerate_saturated(4, dedup=False)
    entry = report.sizes[4]
    assert entry.unlabeled_count is None and len(entry.certificates) == 15


def test_certificate_cap_keeps_exact_counts():
    full = enumerate_saturated(8, cert_cap=1000)
    capped = enumerate_saturated(8, cert_cap=2)
    for m in full.sizes:
        assert capped.sizes[m].unlabeled_count == full.sizes[m].unlabeled_count
        assert capped.sizes[m].certificates == full.sizes[m].certificates[:2]


def test_report_json_shape():
    data = json.loads(enumerate_saturated(4).to_json())
    assert set(data) == {"n", "checker_mode", "sizes"}
    assert data["sizes"]["4"]["unlabeled_count"] == 2


def test_report_independent_of_workers():
    assert enumerate_saturated(7, workers=1).to_json() == enumerate_saturated(7, workers=2).to_json()


# -- canonical forms -----------------------------------------------------------------


def test_canonical_form_invariance():
    labelings = [build_graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)]),
                 build_graph(4, [(0, 2), (2, 1), (1, 3), (3, 0)]),
                 build_graph(4, [(0, 1), (1, 3), (3, 2), (2, 0)])]
    assert len({canonical_form(G) for G in labelings}) == 1


def test_canonical_form_distinguishes():
    assert canonical_form(C4) != canonical_form(PAW)


def test_canonical_form_k4():
    K4 = complete_graph(4)
    assert {canonical_form(K4.relabel(p)) for p in permutations(range(4))} == {graph6_encode(K4).decode()}


def test_canonical_form_is_minimum_over_relabelings():
    G = build_graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)])
    expected = min(graph6_encode(G.relabel(p)).decode() for p in permutations(range(5)))
    assert canonical_form(G) == expected


def test_canonical_form_guard():
    with pytest.raises(ValueError):
        canonical_form(cycle_graph(9))


# -- tasks ------------------------------------------------------------------------


def test_partition_examples():
    assert partition_tasks(4, 0) == [SearchTask(4, ())]
    tasks = partition_tasks(4, 2)
    assert len(tasks) <= 4
    assert len({t.prefix for t in tasks}) == len(tasks)


def test_partition_prunes_diamond_prefix():
    tasks = partition_tasks(4, 5)
    assert (1, 1, 1, 1, 1) not in {t.prefix for t in tasks}
    prefix_graph = build_graph(4, [p for p, bit in zip(slot_pairs(4), (1, 1, 1, 1, 1)) if bit])
    assert contains_k4_minus(prefix_graph) is not None


def test_partition_rejects_bad_prefix():
    with pytest.raises(ValueError):
        partition_tasks(4, 7)


@pytest.mark.parametrize("n, k", [(4, 0), (4, 2), (4, 6), (5, 4), (6, 7), (7, 9)])
def test_tasks_cover_and_are_disjoint(n, k):
    tasks, prefix_pruned = _partition(n, k)
    visited = pruned = 0
    seen = set()
    for task in tasks:
        result = run_task(task)
        visited += result.stats["visited"]
        pruned += result.stats["pruned"]
        for key in result.keys.tolist():
            assert key not in seen
            seen.add(key)
            bits = [(key >> (num_slots(n) - 1 - s)) & 1 for s in range(len(task.prefix))]
            assert tuple(bits) == task.prefix
    assert visited + pruned + prefix_pruned == 1 << num_slots(n)
    _, all_keys = search(n)
    assert seen == set(all_keys.tolist())


def test_visited_leaves_are_exactly_the_diamond_free_graphs():
    for n in range(1, 6):
        stats, _ = search(n)
        free = sum(contains_k4_minus(key_to_graph(n, k)) is None for k in range(1 << num_slots(n)))
        assert stats["visited"] == free


# -- threshold checks -------------------------------------------------------------


PRISM = build_graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)])


@pytest.mark.parametrize("n", [3, 4, 5, 7])
def test_bipartite_threshold_small(n):
    check = verify_bipartite_threshold(n)
    assert check.ok and check.counterexamples == []


def test_prism_exceeds_bipartite_threshold_at_6():
    # two disjoint triangles joined by a perfect matching: 9 > 8 edges
    assert is_k4_minus_saturated(PRISM).saturated and naive_is_saturated(PRISM).saturated
    check = verify_bipartite_threshold(6)
    assert not check.ok
    assert check.counterexamples == [canonical_form(PRISM)] == ["ELv_"]


@pytest.mark.parametrize("n", [4, 5, 7])
def test_proof_bound_small(n):
    check = verify_proof_bound(n)
    assert check
    assert check.details["neighbor_violations"] == 0


def test_proof_bound_at_6():
    check = verify_proof_bound(6)
    assert check.details["neighbor_violations"] == 0
    # only the edge bound fails, on the 6!/12 labelings of the prism
    assert check.details["edge_bound_violations"] == 60
    assert check.counterexamples == ["ELv_"]


def test_c5_not_saturated():
    verdict = is_k4_minus_saturated(cycle_graph(5))
    assert verdict.h_free and not verdict.saturated
