from collections import defaultdict

import pytest

from srdf.families import every_third
from srdf.graph import FamilySpec, Kind, cycle, path
from srdf.graph6 import write_graph6
from srdf.theorems import (
    ClaimCheck, ConstructionRanges, Status, StructuralConfig, check_construction, check_formula,
    check_negative_neighbour, check_structural, large_join_lower_bound, random_tree, recheck_counterexample,
    run_suite, scan_weight_one_cycle, summarize,
)

import random


def cycle_weight_one_counts(n: int) -> tuple[int, int]:
    """Transfer-matrix count over C_n: (weight-1 labelings, those with every closed sum >= 0).

    Independent of the block enumerator: walks the cycle keeping the first two
    values, the last two values and the running sum.
    """
    vals = (-1, 1, 2)
    total = defaultdict(int)
    good = defaultdict(int)
    for a in vals:
        for b in vals:
            total[(a, b, a, b, a + b)] += 1
            good[(a, b, a, b, a + b)] += 1
    for _ in range(n - 2):
        nt, ng = defaultdict(int), defaultdict(int)
        for (a, b, p, q, s), c in total.items():
            for x in vals:
                nt[(a, b, q, x, s + x)] += c
        for (a, b, p, q, s), c in good.items():
            for x in vals:
                if p + q + x >= 0:
                    ng[(a, b, q, x, s + x)] += c
        total, good = nt, ng
    t = sum(c for (_, _, _, _, s), c in total.items() if s == 1)
    g = sum(c for (a, b, p, q, s), c in good.items() if s == 1 and p + q + a >= 0 and q + a + b >= 0)
    return t, g


@pytest.mark.parametrize("n", [3, 4, 5, 7, 8, 11, 13, 14])
def test_scan_matches_transfer_matrix(n):
    total, nonneg, first = scan_weight_one_cycle(n)
    assert (total, nonneg) == cycle_weight_one_counts(n)
    if nonneg:
        assert sum(first) == 1


def test_transfer_matrix_values_at_lemma_orders():
    assert cycle_weight_one_counts(13)[1] == 0
    assert cycle_weight_one_counts(14)[1] == 14
    assert cycle_weight_one_counts(15)[1] == 0
    assert cycle_weight_one_counts(16)[1] == 0


def test_negative_neighbour_c13_confirmed():
    c = check_negative_neighbour(13)
    assert c.claim_id == "negative-neighbour"
    assert c.status is Status.CONFIRMED
    assert c.evidence["nonnegative"] == 0


def test_negative_neighbour_c14_reports_every_third_pattern():
    c = check_negative_neighbour(14)
    assert c.claim_id == "negative-neighbour:hypothesis-needed"
    assert c.status is Status.CONFIRMED
    assert c.evidence["pattern"] == every_third(14)
    assert c.evidence["nonnegative"] == 14
    cx = c.evidence["counterexample_to_unrestricted"]
    assert recheck_counterexample(ClaimCheck("x", "C14", Status.REFUTED, {"counterexample": cx}))


def test_negative_neighbour_below_range_is_data():
    c = check_negative_neighbour(7)
    assert c.claim_id == "negative-neighbour:below-range"
    assert c.status is Status.CONFIRMED
    c = check_negative_neighbour(3)
    assert c.status is Status.REFUTED
    assert recheck_counterexample(c)


def test_negative_neighbour_scale_guard():
    assert check_negative_neighbour(19, max_n=16).status is Status.SKIPPED_SCALE


def test_formula_check_confirms_and_records_method():
    specs = [FamilySpec(Kind.CYCLE, n=5), FamilySpec(Kind.PATH, n=13), FamilySpec(Kind.WHEEL, n=4)]
    checks = check_formula(specs)
    assert [c.status for c in checks] == [Status.CONFIRMED] * 3
    assert checks[1].evidence["method"] == "branch-and-bound"


def test_formula_check_skips_beyond_max_order():
    (c,) = check_formula([FamilySpec(Kind.CYCLE, n=20)], max_order=15)
    assert c.status is Status.SKIPPED_SCALE


def test_formula_check_rejects_unknown_values():
    with pytest.raises(ValueError):
        check_formula([FamilySpec(Kind.JOIN_CYCLES, m=5, n=7)])


def test_recheck_accepts_real_and_rejects_fabricated_counterexamples():
    g = path(3)
    real = {"graph6": write_graph6(g), "values": [1, 1, 1], "kind": "srdf-below-claim", "claimed": 4}
    fake = {"graph6": write_graph6(g), "values": [-1, -1, -1], "kind": "srdf-below-claim", "claimed": 4}
    assert recheck_counterexample(ClaimCheck("c", "P3", Status.REFUTED, {"counterexample": real}))
    assert not recheck_counterexample(ClaimCheck("c", "P3", Status.REFUTED, {"counterexample": fake}))
    above = {"graph6": write_graph6(cycle(4)), "values": [2, -1, 2, 1], "kind": "srdf-above-claim", "claimed": 1}
    assert recheck_counterexample(ClaimCheck("c", "C4", Status.REFUTED, {"counterexample": above}))
    assert not recheck_counterexample(ClaimCheck("c", "C4", Status.CONFIRMED, {}))


def test_small_construction_ranges_all_confirmed():
    ranges = ConstructionRanges(parity_max=6, residue_min=13, residue_max=17, wheel_max=20, fan_max=20,
                                friendship_max=10)
    checks = check_construction(ranges)
    assert summarize(checks)["refuted"] == 0
    ids = {c.claim_id for c in checks}
    assert ids == {"construction:join-weight4", "construction:join-22", "construction:join-23",
                   "construction:join-33", "construction:c3-join", "construction:wheel", "construction:fan",
                   "construction:friendship"}
    solved = [c for c in checks if "gamma" in c.evidence]
    assert len(solved) > 20 and all(c.evidence["gamma"] == c.evidence["claimed"] for c in solved)


def test_random_tree_is_a_tree():
    rng = random.Random(1)
    for order in range(1, 12):
        t = random_tree(rng, order)
        assert t.size == max(order - 1, 0)
        seen, stack = {0}, [0]
        while stack:
            for u in t.neighbors[stack.pop()]:
                if u not in seen:
                    seen.add(u)
                    stack.append(u)
        assert len(seen) == order


def test_structural_checks_small_config():
    cfg = StructuralConfig(seed=3, universal_instances=10, join_k1_instances=8, join_k1_zero_instances=2,
                           subadditive_pairs=6, join_cycles_max=4, large_join_budget=200)
    checks = check_structural(cfg)
    counts = summarize(checks)
    assert counts["refuted"] == 0
    zeros = [c for c in checks if c.claim_id == "structural:join-k1" and c.evidence["gamma"] == 0]
    assert len(zeros) >= 2 and all(c.evidence["gamma_join"] == 1 for c in zeros)
    assert {c.claim_id for c in checks if c.status is Status.SKIPPED_SCALE} == {
        "structural:cycle-sides-positive", "structural:large-join-exact"}


def test_large_join_bound_is_informational():
    c = large_join_lower_bound(13, 13, budget=300)
    assert c.status is Status.SKIPPED_SCALE
    assert c.evidence["proven_lower"] <= 2 <= c.evidence["incumbent_upper"]


def test_run_suite_is_sorted_and_deterministic():
    a = run_suite("negative-neighbour", lemma_orders=(5, 7, 8))
    b = run_suite("lemma36", lemma_orders=(5, 7, 8))
    assert [c.to_record() for c in a] == [c.to_record() for c in b]
    assert a == sorted(a, key=ClaimCheck.sort_key)
    with pytest.raises(ValueError):
        run_suite("everything")
