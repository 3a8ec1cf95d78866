"""Batch checks tying each closed-form value, bound and construction to computed evidence.

Every check yields :class:`ClaimCheck` records.  A ``refuted`` record always
carries a concrete counterexample that :func:`recheck_counterexample`
re-derives from scratch with the verifier.
"""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Callable, Iterable, Optional, Sequence

import numpy as np

from . import families as fam
from .graph import FamilySpec, Graph, Kind, complete, cycle, generate, join, join_cycles
from .graph6 import parse_graph6, write_graph6
from .labeling import Labeling, verify
from .solver import BudgetExhausted, SolveOptions, labeling_blocks, lower_bound_universal, solve_branch_and_bound, solve_exact

log = logging.getLogger(__name__)


class Status(str, Enum):
    CONFIRMED = "confirmed"
    REFUTED = "refuted"
    SKIPPED_SCALE = "skipped-scale"


@dataclass
class ClaimCheck:
    claim_id: str
    instance: str
    status: Status
    evidence: dict[str, Any] = field(default_factory=dict)
    params: tuple = ()

    def to_record(self) -> dict[str, Any]:
        return {
            "claim": self.claim_id,
            "instance": self.instance,
            "status": self.status.value,
            "evidence": self.evidence,
        }

    def sort_key(self) -> tuple:
        return (self.claim_id, self.params, self.instance)


def _counterexample(g: Graph, values: Sequence[int], kind: str, **extra: Any) -> dict[str, Any]:
    return {"graph6": write_graph6(g), "values": list(values), "kind": kind, **extra}


def recheck_counterexample(check: ClaimCheck) -> bool:
    """Re-derive a refutation from the stored counterexample alone."""
    cx = check.evidence.get("counterexample")
    if cx is None:
        return False
    g = parse_graph6(cx["graph6"])
    f = Labeling(cx["values"])
    report = verify(g, f)
    kind = cx["kind"]
    if kind == "srdf-below-claim":
        return report.valid and report.weight < cx["claimed"]
    if kind == "invalid-construction":
        return not report.valid or report.weight != cx["claimed"]
    if kind == "srdf-above-claim":
        # optimum certified by the solver; re-solve to confirm it exceeds the claim
        return report.valid and solve_exact(g).gamma > cx["claimed"]
    if kind == "nonnegative-closed-sums":
        sums = [report.per_vertex_closed_sums[v] for v in range(g.order)]
        return report.weight == 1 and min(sums) >= 0
    if kind == "bound-violation":
        gamma = solve_exact(g).gamma
        return report.valid and report.weight == gamma and not (cx["low"] <= gamma <= cx["high"])
    raise ValueError(f"unknown counterexample kind {kind!r}")


# ---------------------------------------------------------------------------
# closed-form values


FORMULA_CLAIMS = {
    Kind.CYCLE: "formula:cycle",
    Kind.PATH: "formula:path",
    Kind.COMPLETE: "formula:complete",
    Kind.EMPTY: "formula:empty",
    Kind.MATCHING: "formula:matching",
    Kind.WHEEL: "formula:wheel",
    Kind.FAN: "formula:fan",
    Kind.FRIENDSHIP: "formula:friendship",
    Kind.JOIN_CYCLES: "formula:join-cycles",
}


def _params(spec: FamilySpec) -> tuple:
    return tuple(v for v in (spec.m, spec.n) if v is not None)


def check_formula(specs: Iterable[FamilySpec], max_order: int = 15, opts: SolveOptions = SolveOptions()) -> list[ClaimCheck]:
    """Compare the exact solver with the closed-form value for each family instance."""
    out = []
    for spec in specs:
        g = generate(spec)
        claim = FORMULA_CLAIMS[spec.kind]
        expected = fam.gamma_formula(spec)
        if expected is None:
            raise ValueError(f"no closed-form value known for {spec}")
        if g.order > max_order:
            out.append(ClaimCheck(claim, str(spec), Status.SKIPPED_SCALE,
                                  {"order": g.order, "expected": expected, "max_order": max_order}, _params(spec)))
            continue
        result = solve_exact(g, opts)
        evidence = {
            "order": g.order,
            "expected": expected,
            "gamma": result.gamma,
            "method": result.method.value,
            "nodes": result.nodes_explored,
        }
        if result.gamma == expected:
            status = Status.CONFIRMED
        else:
            status = Status.REFUTED
            kind = "srdf-below-claim" if result.gamma < expected else "srdf-above-claim"
            evidence["counterexample"] = _counterexample(g, result.witness, kind, claimed=expected)
        out.append(ClaimCheck(claim, str(spec), status, evidence, _params(spec)))
    return out


def default_formula_specs() -> list[FamilySpec]:
    specs = [FamilySpec(Kind.CYCLE, n=n) for n in range(3, 14)]
    specs += [FamilySpec(Kind.PATH, n=n) for n in range(3, 14)]
    specs += [FamilySpec(Kind.COMPLETE, n=n) for n in range(1, 10)]
    specs += [FamilySpec(Kind.EMPTY, n=n) for n in range(1, 9)]
    specs += [FamilySpec(Kind.WHEEL, n=n) for n in range(3, 13)]
    specs += [FamilySpec(Kind.FAN, n=n) for n in range(1, 13)]
    specs += [FamilySpec(Kind.FRIENDSHIP, m=m) for m in range(2, 6)]
    specs += [FamilySpec(Kind.JOIN_CYCLES, m=3, n=n) for n in (3, 6, 9, 12)]
    return specs


# ---------------------------------------------------------------------------
# constructions


def _construction_check(
    claim: str, instance: str, params: tuple, build: Callable[[], fam.Construction], claimed: int,
    exact_max_order: int, opts: SolveOptions,
) -> ClaimCheck:
    try:
        c = build()
    except fam.ConstructionError as exc:
        return ClaimCheck(claim, instance, Status.REFUTED, {"error": str(exc)}, params)
    evidence: dict[str, Any] = {
        "order": c.graph.order,
        "weight": c.labeling.weight,
        "claimed": c.claimed_weight,
        "claim_kind": c.claim_kind.value,
        "source": c.source,
    }
    if c.claimed_weight != claimed or not verify(c.graph, c.labeling).valid:
        evidence["counterexample"] = _counterexample(c.graph, c.labeling, "invalid-construction", claimed=claimed)
        return ClaimCheck(claim, instance, Status.REFUTED, evidence, params)
    if c.claim_kind is fam.ClaimKind.EXACT and c.graph.order <= exact_max_order:
        gamma = solve_exact(c.graph, opts).gamma
        evidence["gamma"] = gamma
        if gamma != claimed:
            return ClaimCheck(claim, instance, Status.REFUTED, evidence, params)
    return ClaimCheck(claim, instance, Status.CONFIRMED, evidence, params)


@dataclass(frozen=True)
class ConstructionRanges:
    parity_max: int = 40
    residue_min: int = 13
    residue_max: int = 98
    wheel_max: int = 500
    fan_max: int = 500
    friendship_max: int = 200
    c3_join: tuple[int, ...] = (3, 6, 9, 12)


def check_construction(ranges: ConstructionRanges = ConstructionRanges(), exact_max_order: int = 13,
                       opts: SolveOptions = SolveOptions()) -> list[ClaimCheck]:
    """Verify every explicit labeling over the given parameter ranges.

    Instances small enough (``order <= exact_max_order``) with an exact claim
    are also re-solved; larger ones rest on verification alone.
    """
    checks = []

    def add(claim, instance, params, build, claimed):
        checks.append(_construction_check(claim, instance, params, build, claimed, exact_max_order, opts))

    for m in range(3, ranges.parity_max + 1):
        for n in range(3, ranges.parity_max + 1):
            add("construction:join-weight4", f"C{m}vC{n}", (m, n),
                lambda m=m, n=n: fam.construct_join_cycles_weight4(m, n), 4)
    lo, hi = ranges.residue_min, ranges.residue_max
    for m in range(lo, hi + 1):
        for n in range(lo, hi + 1):
            if m % 3 == 2 and n % 3 == 2:
                add("construction:join-22", f"C{m}vC{n}", (m, n), lambda m=m, n=n: fam.construct_join_cycles_22(m, n), 2)
            elif m % 3 == 2:
                add("construction:join-23", f"C{m}vC{n}", (m, n), lambda m=m, n=n: fam.construct_join_cycles_23(m, n), 3)
            elif n % 3 != 2:
                add("construction:join-33", f"C{m}vC{n}", (m, n), lambda m=m, n=n: fam.construct_join_cycles_33(m, n), 3)
    for n in ranges.c3_join:
        add("construction:c3-join", f"C3vC{n}", (n,), lambda n=n: fam.construct_c3_join_cycle(n), 1)
    for n in range(3, ranges.wheel_max + 1):
        add("construction:wheel", f"W{n}", (n,), lambda n=n: fam.construct_wheel(n), 2 if n == 4 else 1)
    for n in range(1, ranges.fan_max + 1):
        add("construction:fan", f"F{n}", (n,), lambda n=n: fam.construct_fan(n), 2 if n in (2, 4) else 1)
    for m in range(1, ranges.friendship_max + 1):
        add("construction:friendship", f"Fr{2 * m + 1}", (m,), lambda m=m: fam.construct_friendship(m), 2)
    return checks


# ---------------------------------------------------------------------------
# weight-1 labelings of a cycle


def scan_weight_one_cycle(n: int) -> tuple[int, int, Optional[list[int]]]:
    """Enumerate all labelings of ``C_n``; among those of weight 1 count the ones
    whose closed sums are all nonnegative.

    Returns ``(weight-1 count, nonnegative count, first nonnegative labeling)``.
    """
    total = 0
    nonneg = 0
    first = None
    for block in labeling_blocks(n):
        rows = block[block.sum(axis=1, dtype=np.int32) == 1].astype(np.int16)
        total += rows.shape[0]
        if not rows.shape[0]:
            continue
        sums = np.roll(rows, 1, axis=1) + rows + np.roll(rows, -1, axis=1)
        hits = np.flatnonzero(sums.min(axis=1) >= 0)
        nonneg += hits.size
        if first is None and hits.size:
            first = rows[hits[0]].tolist()
    return total, nonneg, first


def check_negative_neighbour(n: int, max_n: int = 16) -> ClaimCheck:
    """Every weight-1 labeling of ``C_n`` (n >= 13, n != 2 mod 3) has a negative closed sum.

    For ``n = 2 (mod 3)`` the hypothesis is needed: the check confirms that
    ``every_third(n)`` is a weight-1 labeling with no negative closed sum.
    Orders below 13 with ``n != 2 (mod 3)`` are reported as data under a
    separate claim id.
    """
    if n < 3:
        raise ValueError(f"cycle length must be >= 3, got {n}")
    if n % 3 == 2:
        claim = "negative-neighbour:hypothesis-needed"
    elif n >= 13:
        claim = "negative-neighbour"
    else:
        claim = "negative-neighbour:below-range"
    if n > max_n:
        return ClaimCheck(claim, f"C{n}", Status.SKIPPED_SCALE, {"labelings": 3**n, "max_n": max_n}, (n,))
    total, nonneg, first = scan_weight_one_cycle(n)
    evidence: dict[str, Any] = {"labelings": 3**n, "weight_one": total, "nonnegative": nonneg}
    g = cycle(n)
    if n % 3 == 2:
        pattern = fam.every_third(n)
        sums = fam.cycle_closed_sums(pattern)
        evidence["pattern"] = pattern
        evidence["pattern_closed_sums"] = sorted(set(sums))
        ok = sum(pattern) == 1 and min(sums) >= 0 and nonneg > 0
        status = Status.CONFIRMED if ok else Status.REFUTED
        if ok:
            evidence["counterexample_to_unrestricted"] = _counterexample(g, pattern, "nonnegative-closed-sums")
        return ClaimCheck(claim, f"C{n}", status, evidence, (n,))
    if nonneg == 0:
        return ClaimCheck(claim, f"C{n}", Status.CONFIRMED, evidence, (n,))
    evidence["counterexample"] = _counterexample(g, first, "nonnegative-closed-sums")
    return ClaimCheck(claim, f"C{n}", Status.REFUTED, evidence, (n,))


# ---------------------------------------------------------------------------
# structural bounds


def random_graph(rng: random.Random, order: int, p: float) -> Graph:
    return Graph.from_edges(order, [(i, j) for i in range(order) for j in range(i + 1, order) if rng.random() < p])


def random_tree(rng: random.Random, order: int) -> Graph:
    if order <= 2:
        return Graph.from_edges(order, [(0, 1)] if order == 2 else [])
    prufer = [rng.randrange(order) for _ in range(order - 2)]
    degree = [1] * order
    for v in prufer:
        degree[v] += 1
    edges = []
    for v in prufer:
        leaf = min(u for u in range(order) if degree[u] == 1)
        edges.append((leaf, v))
        degree[leaf] -= 1
        degree[v] -= 1
    u, w = (x for x in range(order) if degree[x] == 1)
    edges.append((u, w))
    return Graph.from_edges(order, edges)


def with_universal_vertex(rng: random.Random, order: int, p: float) -> Graph:
    base = random_graph(rng, order - 1, p)
    g = join(base, complete(1))
    perm = list(range(order))
    rng.shuffle(perm)
    return Graph.from_edges(order, [(perm[u], perm[v]) for u, v in g.edges()])


def _gamma(g: Graph, cache: dict[str, int]) -> int:
    key = write_graph6(g)
    if key not in cache:
        cache[key] = solve_exact(g).gamma
    return cache[key]


@dataclass(frozen=True)
class StructuralConfig:
    seed: int = 2024
    universal_instances: int = 100
    universal_max_order: int = 7
    join_k1_instances: int = 50
    join_k1_zero_instances: int = 5
    join_k1_max_order: int = 7
    subadditive_pairs: int = 50
    subadditive_max_order: int = 4
    join_cycles_max: int = 6
    large_join_budget: int = 100_000


def check_structural(config: StructuralConfig = StructuralConfig()) -> list[ClaimCheck]:
    """Universal-vertex bound, K_1 joins, join subadditivity and cycle-join bounds."""
    rng = random.Random(config.seed)
    cache: dict[str, int] = {}
    checks = []
    seed_note = {"seed": config.seed}

    # a universal vertex forces gamma >= 1
    for i in range(config.universal_instances):
        order = rng.randint(1, config.universal_max_order)
        g = with_universal_vertex(rng, order, rng.random())
        r = solve_exact(g)
        ev = {"graph6": write_graph6(g), "gamma": r.gamma, "bound": lower_bound_universal(g), **seed_note}
        if r.gamma >= 1:
            status = Status.CONFIRMED
        else:
            status = Status.REFUTED
            ev["counterexample"] = _counterexample(g, r.witness, "srdf-below-claim", claimed=1)
        checks.append(ClaimCheck("structural:universal-vertex", f"#{i}", status, ev, (i,)))

    # gamma(G v K_1) >= 1, and = 1 when gamma(G) = 0
    corpus: list[Graph] = []
    while len(corpus) < config.join_k1_zero_instances:
        t = random_tree(rng, 6)
        if _gamma(t, cache) == 0:
            corpus.append(t)
    while len(corpus) < config.join_k1_instances:
        corpus.append(random_graph(rng, rng.randint(1, config.join_k1_max_order), rng.random()))
    for i, g in enumerate(corpus):
        gamma_g = _gamma(g, cache)
        joined = join(g, complete(1))
        r = solve_exact(joined)
        ev = {"graph6": write_graph6(g), "gamma": gamma_g, "gamma_join": r.gamma, **seed_note}
        ok = r.gamma >= 1 and (gamma_g != 0 or r.gamma == 1)
        if not ok:
            if r.gamma < 1:
                ev["counterexample"] = _counterexample(joined, r.witness, "srdf-below-claim", claimed=1)
            else:
                ev["counterexample"] = _counterexample(joined, r.witness, "srdf-above-claim", claimed=1)
        checks.append(ClaimCheck("structural:join-k1", f"#{i}", Status.CONFIRMED if ok else Status.REFUTED, ev, (i,)))

    # gamma(G v H) <= gamma(G) + gamma(H) for gamma(G), gamma(H) >= 0
    done = 0
    while done < config.subadditive_pairs:
        g = random_graph(rng, rng.randint(1, config.subadditive_max_order), rng.random())
        h = random_graph(rng, rng.randint(1, config.subadditive_max_order), rng.random())
        gg, gh = _gamma(g, cache), _gamma(h, cache)
        if gg < 0 or gh < 0:
            continue
        joined = join(g, h)
        r = solve_exact(joined)
        ev = {"g": write_graph6(g), "h": write_graph6(h), "gamma_g": gg, "gamma_h": gh, "gamma_join": r.gamma, **seed_note}
        ok = r.gamma <= gg + gh
        if not ok:
            ev["counterexample"] = _counterexample(joined, r.witness, "srdf-above-claim", claimed=gg + gh)
        checks.append(ClaimCheck("structural:join-subadditive", f"#{done}", Status.CONFIRMED if ok else Status.REFUTED, ev, (done,)))
        done += 1

    # 1 <= gamma(C_m v C_n) <= 4, exactly, on small cycles
    side_data = []
    for m in range(3, config.join_cycles_max + 1):
        for n in range(m, config.join_cycles_max + 1):
            g = join_cycles(m, n)
            r = solve_exact(g)
            w = list(r.witness)
            side_data.append({"m": m, "n": n, "gamma": r.gamma, "side_sums": [sum(w[:m]), sum(w[m:])]})
            ok = 1 <= r.gamma <= 4
            ev = {"gamma": r.gamma}
            if not ok:
                ev["counterexample"] = _counterexample(g, w, "bound-violation", low=1, high=4)
            checks.append(ClaimCheck("structural:join-cycles-1-to-4", f"C{m}vC{n}", Status.CONFIRMED if ok else Status.REFUTED, ev, (m, n)))

    # positivity of both cycle sides, and the exact values for m, n >= 13: beyond desk scale
    checks.append(ClaimCheck(
        "structural:cycle-sides-positive", "m,n>=13", Status.SKIPPED_SCALE,
        {"reason": "quantifies over every SRDF of a graph with at least 26 vertices",
         "reduced_scale_optimal_witnesses": side_data},
        (13, 13),
    ))
    checks.append(large_join_lower_bound(13, 13, config.large_join_budget))
    return checks


def large_join_lower_bound(m: int, n: int, budget: int) -> ClaimCheck:
    """Budgeted branch and bound on ``C_m ∨ C_n``; reports proven bounds only."""
    g = join_cycles(m, n)
    spec = FamilySpec(Kind.JOIN_CYCLES, m=m, n=n)
    ev: dict[str, Any] = {"expected": fam.gamma_formula(spec), "node_budget": budget}
    try:
        r = solve_branch_and_bound(g, SolveOptions(node_budget=budget))
        ev.update(gamma=r.gamma, nodes=r.nodes_explored)
        ok = r.gamma == ev["expected"]
        return ClaimCheck("structural:large-join-exact", f"C{m}vC{n}", Status.CONFIRMED if ok else Status.REFUTED, ev, (m, n))
    except BudgetExhausted as exc:
        ev.update(proven_lower=exc.lower, incumbent_upper=exc.upper, nodes=exc.nodes)
        return ClaimCheck("structural:large-join-exact", f"C{m}vC{n}", Status.SKIPPED_SCALE, ev, (m, n))


# ---------------------------------------------------------------------------


SUITES = ("all", "formulas", "constructions", "negative-neighbour", "structural")
# older name for the negative-neighbour scan, kept so existing invocations still work
SUITE_ALIASES = {"lemma36": "negative-neighbour"}


def run_suite(name: str = "all", max_order: int = 15, seed: int = 2024,
              construction_ranges: ConstructionRanges = ConstructionRanges(),
              lemma_orders: Sequence[int] = (13, 14, 15, 16)) -> list[ClaimCheck]:
    name = SUITE_ALIASES.get(name, name)
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    checks: list[ClaimCheck] = []
    if name in ("all", "formulas"):
        log.info("formula checks")
        checks += check_formula(default_formula_specs(), max_order=max_order)
    if name in ("all", "constructions"):
        log.info("construction checks")
        checks += check_construction(construction_ranges, exact_max_order=min(max_order, 13))
    if name in ("all", "negative-neighbour"):
        for n in lemma_orders:
            log.info("negative-neighbour scan on C%d", n)
            checks.append(check_negative_neighbour(n))
    if name in ("all", "structural"):
        log.info("structural checks")
        checks += check_structural(StructuralConfig(seed=seed))
    return sorted(checks, key=ClaimCheck.sort_key)


def summarize(checks: Iterable[ClaimCheck]) -> dict[str, int]:
    counts = {s.value: 0 for s in Status}
    for c in checks:
        counts[c.status.value] += 1
    return counts
