"""Exact signed Roman domination numbers.

Two independent routes compute ``gamma_sR(G)``:

* ``Method.EXHAUSTIVE`` scores every labeling in ``{-1, 1, 2}^V`` with
  numpy, in lexicographic order over the values ``(-1, 1, 2)``.
* ``Method.BRANCH_AND_BOUND`` is a depth-first search over vertices sorted
  by degree (descending) trying the values ``2, 1, -1`` and pruning on
  weight bounds and on partially decided SRDF constraints.

``solve_exact`` picks the exhaustive route up to
``SolveOptions.exhaustive_threshold`` vertices.
"""

from __future__ import annotations

import itertools
import os
import threading
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Iterator, Optional

import numpy as np

from .graph import Graph
from .labeling import VALUES, Labeling, verify

NODE_BUDGET_ENV = "SRDF_NODE_BUDGET"

# digit d of the base-3 index maps to VALUE_TABLE[d]
VALUE_TABLE = np.array(VALUES, dtype=np.int8)

_BLOCK_DIGITS = 12


class Method(str, Enum):
    EXHAUSTIVE = "exhaustive"
    BRANCH_AND_BOUND = "branch-and-bound"


class BudgetExhausted(RuntimeError):
    """The node budget ran out before optimality was proven.

    ``lower`` is a proven lower bound on gamma; ``upper`` is the weight of the
    best SRDF found (``incumbent``), or ``None`` if none was found.
    """

    def __init__(self, lower: int, upper: Optional[int], incumbent: Optional[Labeling], nodes: int):
        self.lower = lower
        self.upper = upper
        self.incumbent = incumbent
        self.nodes = nodes
        super().__init__(
            f"node budget exhausted after {nodes} nodes; gamma in [{lower}, {upper if upper is not None else '?'}]"
        )


@dataclass(frozen=True)
class SolveOptions:
    exhaustive_threshold: int = 12
    node_budget: Optional[int] = None
    deterministic: bool = True
    workers: int = 4

    def __post_init__(self) -> None:
        if self.exhaustive_threshold < 1:
            raise ValueError("exhaustive_threshold must be >= 1")
        if self.node_budget is not None and self.node_budget < 1:
            raise ValueError("node_budget must be positive")

    @classmethod
    def from_env(cls, **overrides) -> SolveOptions:
        """Options with ``node_budget`` taken from ``$SRDF_NODE_BUDGET`` when set."""
        raw = os.environ.get(NODE_BUDGET_ENV)
        if raw and "node_budget" not in overrides:
            overrides["node_budget"] = int(raw)
        return cls(**overrides)


@dataclass
class SolveResult:
    gamma: int
    witness: Labeling
    nodes_explored: int
    method: Method
    elapsed: float = field(default=0.0, compare=False)


def lower_bound_universal(g: Graph) -> int:
    """1 when ``g`` has a universal vertex (its closed sum is the whole weight), else ``-order``."""
    if g.order >= 1 and g.has_universal_vertex():
        return 1
    return -g.order


# ---------------------------------------------------------------------------
# enumeration


def labeling_blocks(order: int, block_digits: int = _BLOCK_DIGITS) -> Iterator[np.ndarray]:
    """Yield every labeling of ``order`` vertices as int8 row blocks.

    Rows appear in lexicographic order over ``(-1, 1, 2)`` with vertex 0 most
    significant; each block holds at most ``3**block_digits`` rows.
    """
    tail = min(order, block_digits)
    head = order - tail
    idx = np.arange(3**tail, dtype=np.int64)
    powers = 3 ** np.arange(tail - 1, -1, -1, dtype=np.int64)
    tail_rows = VALUE_TABLE[(idx[:, None] // powers) % 3]
    if head == 0:
        yield tail_rows
        return
    for prefix in itertools.product(VALUES, repeat=head):
        block = np.empty((tail_rows.shape[0], order), dtype=np.int8)
        block[:, :head] = prefix
        block[:, head:] = tail_rows
        yield block


def enumerate_labelings(
    g: Graph,
    filter: Optional[Callable[[Labeling], bool]] = None,
    visitor: Optional[Callable[[Labeling], None]] = None,
) -> int:
    """Stream every labeling of ``g`` passing ``filter`` to ``visitor``.

    Labelings are produced lazily in lexicographic order over (-1, 1, 2);
    returns how many passed the filter.
    """
    count = 0
    for values in itertools.product(VALUES, repeat=g.order):
        f = Labeling(values)
        if filter is not None and not filter(f):
            continue
        count += 1
        if visitor is not None:
            visitor(f)
    return count


def _closed_matrix(g: Graph) -> tuple[np.ndarray, np.ndarray]:
    adj = np.zeros((g.order, g.order), dtype=np.int16)
    for u, v in g.edges():
        adj[u, v] = adj[v, u] = 1
    return adj, adj + np.eye(g.order, dtype=np.int16)


def block_validity(block: np.ndarray, adj: np.ndarray, closed: np.ndarray) -> np.ndarray:
    """Boolean mask of the rows of ``block`` that are SRDFs."""
    rows = block.astype(np.int16)
    sums = rows @ closed
    ok = (sums >= 1).all(axis=1)
    has_two = ((rows == 2).astype(np.int16) @ adj) > 0
    ok &= ~((rows == -1) & ~has_two).any(axis=1)
    return ok


# ---------------------------------------------------------------------------
# exhaustive


def solve_exhaustive(g: Graph) -> SolveResult:
    """Brute force over all ``3**order`` labelings."""
    if g.order < 1:
        raise ValueError("solve requires a graph with at least one vertex")
    start = time.perf_counter()
    adj, closed = _closed_matrix(g)
    best: Optional[int] = None
    witness = None
    seen = 0
    for block in labeling_blocks(g.order):
        seen += block.shape[0]
        ok = block_validity(block, adj, closed)
        if not ok.any():
            continue
        weights = block.sum(axis=1, dtype=np.int32)
        weights = np.where(ok, weights, np.iinfo(np.int32).max)
        i = int(np.argmin(weights))
        if best is None or weights[i] < best:
            best = int(weights[i])
            witness = Labeling(block[i].tolist())
    assert witness is not None  # all-ones is always an SRDF
    return SolveResult(best, witness, seen, Method.EXHAUSTIVE, time.perf_counter() - start)


# ---------------------------------------------------------------------------
# branch and bound


class _Abort(Exception):
    def __init__(self, frontier: int) -> None:
        self.frontier = frontier


class _Incumbent:
    """Best SRDF found so far; shared between workers in parallel mode."""

    def __init__(self, order: int, lower: int, budget: Optional[int]) -> None:
        self.weight = order + 1
        self.values: Optional[tuple[int, ...]] = None
        self.lower = lower
        self.budget = budget
        self.nodes = 0
        self.lock = threading.Lock()

    def offer(self, weight: int, values: list[int]) -> None:
        with self.lock:
            if weight < self.weight:
                self.weight = weight
                self.values = tuple(values)

    @property
    def closed(self) -> bool:
        return self.weight <= self.lower


class _Search:
    VALUE_ORDER = (2, 1, -1)

    def __init__(self, g: Graph, order: list[int], inc: _Incumbent) -> None:
        n = g.order
        self.n = n
        self.order = order
        self.inc = inc
        self.open = [tuple(sorted(g.neighbors[v])) for v in range(n)]
        self.closed = [tuple(sorted(g.neighbors[v] | {v})) for v in range(n)]
        deg = [len(x) for x in self.open]
        self.deg = deg
        self.dmax1 = max(deg) + 1
        self.val = [0] * n
        self.csum = [0] * n
        self.cfree = [d + 1 for d in deg]
        self.ofree = list(deg)
        self.twos = [0] * n
        self.weight = 0
        self.frac = self._initial_frac()

    # Fractional packing bound with y_v = 1/(Delta+1):
    #   (Delta+1) w >= sum_v max(1, csum_v - cfree_v) + sum_u (Delta - deg_u) * lo_u
    # where lo_u is the assigned value of u or -1.
    def _initial_frac(self) -> int:
        s = sum(max(1, -c) for c in self.cfree)
        t = -sum(self.dmax1 - 1 - d for d in self.deg)
        return s + t

    def bound(self, depth: int) -> int:
        simple = self.weight - (self.n - depth)
        frac = -((-self.frac) // self.dmax1)
        return simple if simple > frac else frac

    def assign(self, x: int, a: int) -> bool:
        """Assign ``x := a``; return False if some constraint is already violated."""
        csum, cfree, val = self.csum, self.cfree, self.val
        val[x] = a
        self.weight += a
        self.frac += (self.dmax1 - 1 - self.deg[x]) * (a + 1)
        ok = True
        for w in self.closed[x]:
            old = csum[w] - cfree[w]
            csum[w] += a
            cfree[w] -= 1
            new = old + a + 1
            self.frac += (new if new > 1 else 1) - (old if old > 1 else 1)
            if csum[w] + 2 * cfree[w] < 1:
                ok = False
        ofree, twos = self.ofree, self.twos
        for w in self.open[x]:
            ofree[w] -= 1
            if a == 2:
                twos[w] += 1
        if ok:
            for w in self.closed[x]:
                if val[w] == -1 and twos[w] == 0 and ofree[w] == 0:
                    ok = False
                    break
        return ok

    def unassign(self, x: int, a: int) -> None:
        csum, cfree = self.csum, self.cfree
        for w in self.closed[x]:
            new = csum[w] - cfree[w]
            csum[w] -= a
            cfree[w] += 1
            old = new - a - 1
            self.frac -= (new if new > 1 else 1) - (old if old > 1 else 1)
        for w in self.open[x]:
            self.ofree[w] += 1
            if a == 2:
                self.twos[w] -= 1
        self.frac -= (self.dmax1 - 1 - self.deg[x]) * (a + 1)
        self.weight -= a
        self.val[x] = 0

    def run(self, depth: int) -> None:
        inc = self.inc
        inc.nodes += 1
        if inc.budget is not None and inc.nodes > inc.budget:
            raise _Abort(self.bound(depth))
        if depth == self.n:
            inc.offer(self.weight, self.val)
            return
        x = self.order[depth]
        values = self.VALUE_ORDER
        for k, a in enumerate(values):
            if inc.closed:
                return
            feasible = self.assign(x, a)
            try:
                if feasible and self.bound(depth + 1) < inc.weight:
                    self.run(depth + 1)
            except _Abort as abort:
                self.unassign(x, a)
                frontier = abort.frontier
                for b in values[k + 1:]:
                    frontier = min(frontier, self._child_bound(x, b, depth))
                raise _Abort(frontier) from None
            self.unassign(x, a)

    def _child_bound(self, x: int, a: int, depth: int) -> int:
        feasible = self.assign(x, a)
        try:
            return self.bound(depth + 1) if feasible else self.n + 1
        finally:
            self.unassign(x, a)


def branch_order(g: Graph) -> list[int]:
    return sorted(range(g.order), key=lambda v: (-len(g.neighbors[v]), v))


def solve_branch_and_bound(g: Graph, opts: SolveOptions = SolveOptions()) -> SolveResult:
    if g.order < 1:
        raise ValueError("solve requires a graph with at least one vertex")
    start = time.perf_counter()
    order = branch_order(g)
    seed = lower_bound_universal(g)
    inc = _Incumbent(g.order, seed, opts.node_budget)
    root = _Search(g, order, inc)
    inc.lower = max(seed, root.bound(0))

    try:
        if opts.deterministic or g.order < 3:
            root.run(0)
        else:
            _run_parallel(g, order, inc, opts.workers)
    except _Abort as abort:
        upper = inc.weight if inc.values is not None else None
        lower = max(inc.lower, min(abort.frontier, inc.weight))
        raise BudgetExhausted(
            lower, upper, Labeling(inc.values) if inc.values else None, inc.nodes
        ) from None

    assert inc.values is not None
    return SolveResult(
        inc.weight, Labeling(inc.values), inc.nodes, Method.BRANCH_AND_BOUND,
        time.perf_counter() - start,
    )


def _run_parallel(g: Graph, order: list[int], inc: _Incumbent, workers: int) -> None:
    """Explore the subtrees under the first two branch vertices concurrently."""
    first, second = order[0], order[1]
    prefixes = list(itertools.product(_Search.VALUE_ORDER, repeat=2))
    frontier: list[int] = []

    def work(prefix: tuple[int, int]) -> None:
        s = _Search(g, order, inc)
        if not s.assign(first, prefix[0]) or not s.assign(second, prefix[1]):
            return
        if s.bound(2) >= inc.weight:
            return
        try:
            s.run(2)
        except _Abort as abort:
            with inc.lock:
                frontier.append(abort.frontier)

    with ThreadPoolExecutor(max_workers=workers) as pool:
        list(pool.map(work, prefixes))
    if frontier:
        raise _Abort(min(frontier))


# ---------------------------------------------------------------------------


def solve_exact(g: Graph, opts: SolveOptions = SolveOptions()) -> SolveResult:
    """Exact ``gamma_sR(g)`` with an optimal witness labeling."""
    if g.order <= opts.exhaustive_threshold:
        result = solve_exhaustive(g)
    else:
        result = solve_branch_and_bound(g, opts)
    report = verify(g, result.witness)
    if not report.valid or report.weight != result.gamma:
        raise AssertionError(f"solver produced an invalid witness for {g!r}")
    return result
