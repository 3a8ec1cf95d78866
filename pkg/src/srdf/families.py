"""Explicit SRDF constructions for cycle joins, wheels, fans and friendship graphs.

Cycle patterns are written with 1-based positions ``1..L`` (position ``i`` is
vertex ``i - 1`` of the cycle).  Every constructor runs the verifier before
returning; a labeling that fails is a :class:`ConstructionError`, never a
silent result.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Callable, Optional, Sequence

from .graph import FamilySpec, Graph, Kind, fan, friendship, generate, join_cycles, wheel
from .labeling import Labeling, verify


class ClaimKind(str, Enum):
    EXACT = "exact"
    UPPER_BOUND = "upper-bound"


class ConstructionError(ValueError):
    """Bad parameters, or a construction that fails verification."""


@dataclass(frozen=True)
class Construction:
    graph: Graph
    labeling: Labeling
    claimed_weight: int
    claim_kind: ClaimKind
    source: str
    spec: Optional[FamilySpec] = None


def _gate(
    graph: Graph,
    values: Sequence[int],
    claimed: int,
    kind: ClaimKind,
    source: str,
    spec: Optional[FamilySpec] = None,
) -> Construction:
    f = Labeling(values)
    report = verify(graph, f)
    if not report.valid:
        raise ConstructionError(
            f"{source} labeling on {graph!r} is not an SRDF: " + "; ".join(report.violations()[:5])
        )
    if report.weight != claimed:
        raise ConstructionError(f"{source} labeling on {graph!r} has weight {report.weight}, expected {claimed}")
    return Construction(graph, f, claimed, kind, source, spec)


def _positions(length: int, rule: Callable[[int], int]) -> list[int]:
    return [rule(i) for i in range(1, length + 1)]


# ---------------------------------------------------------------------------
# single-cycle patterns


def every_third(length: int) -> list[int]:
    """2 at positions = 1 (mod 3), -1 elsewhere."""
    return _positions(length, lambda i: 2 if i % 3 == 1 else -1)


def odd_cycle_pattern(length: int) -> list[int]:
    """2 at position 1, -1 at even positions, 1 at odd positions >= 3; sums to 2 for odd length."""
    return _positions(length, lambda i: 2 if i == 1 else (-1 if i % 2 == 0 else 1))


def even_cycle_pattern(length: int) -> list[int]:
    """2 at positions 1 and 3, -1 at even positions, 1 at odd positions >= 5; sums to 2 for even length."""
    return _positions(length, lambda i: 2 if i in (1, 3) else (-1 if i % 2 == 0 else 1))


def parity_pattern(length: int) -> list[int]:
    return odd_cycle_pattern(length) if length % 2 else even_cycle_pattern(length)


def every_third_last_one(length: int) -> list[int]:
    """``every_third`` with position L relabelled 1.

    Sums to 2 when L = 0 (mod 3) and to 1 when L = 1 (mod 3).
    """
    vals = every_third(length)
    vals[-1] = 1
    return vals


def every_third_tail_ones(length: int) -> list[int]:
    """For L = 0 (mod 3): ``every_third`` with positions L-2 and L-1 relabelled 1; sums to 1."""
    vals = every_third(length)
    vals[length - 3] = vals[length - 2] = 1
    return vals


def weight_two_side(length: int) -> list[int]:
    """Sum-2 pattern for L != 2 (mod 3) with every cycle-closed sum >= 0."""
    return every_third_last_one(length) if length % 3 == 0 else every_third(length)


def weight_one_side(length: int) -> list[int]:
    """Sum-1 pattern for L != 2 (mod 3) with every cycle-open sum >= -1."""
    return every_third_tail_ones(length) if length % 3 == 0 else every_third_last_one(length)


def cycle_closed_sums(values: Sequence[int]) -> list[int]:
    """Closed-neighbourhood sums of a labeling taken on the cycle alone."""
    n = len(values)
    return [values[i - 1] + values[i] + values[(i + 1) % n] for i in range(n)]


def cycle_open_sums(values: Sequence[int]) -> list[int]:
    n = len(values)
    return [values[i - 1] + values[(i + 1) % n] for i in range(n)]


# ---------------------------------------------------------------------------
# joins of cycles


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise ConstructionError(message)


def _join_construction(
    m: int, n: int, left: list[int], right: list[int], claimed: int,
    kind: ClaimKind, source: str, sides: tuple[int, int] | None = None,
) -> Construction:
    if sides is not None:
        got = (sum(left), sum(right))
        if got != sides:
            raise ConstructionError(f"{source}: side sums {got}, expected {sides}")
    spec = FamilySpec(Kind.JOIN_CYCLES, n=n, m=m)
    return _gate(join_cycles(m, n), left + right, claimed, kind, source, spec)


def construct_c3_join_cycle(n: int) -> Construction:
    """``C_3 ∨ C_n`` for ``n = 0 (mod 3)``: weight 1, which is optimal."""
    _require(n >= 3 and n % 3 == 0, f"C3 join construction needs n >= 3 with n = 0 (mod 3), got n={n}")
    return _join_construction(3, n, [1, 1, -1], every_third(n), 1, ClaimKind.EXACT, "c3-join", (1, 0))


def construct_join_cycles_weight4(m: int, n: int) -> Construction:
    """Weight-4 SRDF on any ``C_m ∨ C_n`` (upper bound)."""
    _require(m >= 3 and n >= 3, f"cycle lengths must be >= 3, got m={m}, n={n}")
    return _join_construction(
        m, n, parity_pattern(m), parity_pattern(n), 4, ClaimKind.UPPER_BOUND, "join-parity", (2, 2)
    )


def _require_large(m: int, n: int) -> None:
    _require(m >= 13 and n >= 13, f"construction needs m, n >= 13, got m={m}, n={n}")


def construct_join_cycles_22(m: int, n: int) -> Construction:
    """``m = n = 2 (mod 3)``, both at least 13: weight 2."""
    _require_large(m, n)
    _require(m % 3 == 2 and n % 3 == 2, f"needs m = n = 2 (mod 3), got m={m}, n={n}")
    return _join_construction(m, n, every_third(m), every_third(n), 2, ClaimKind.EXACT, "join-22", (1, 1))


def construct_join_cycles_23(m: int, n: int) -> Construction:
    """``m = 2 (mod 3)``, ``n != 2 (mod 3)``, both at least 13: weight 3."""
    _require_large(m, n)
    _require(m % 3 == 2 and n % 3 != 2, f"needs m = 2 and n != 2 (mod 3), got m={m}, n={n}")
    return _join_construction(m, n, every_third(m), weight_two_side(n), 3, ClaimKind.EXACT, "join-23", (1, 2))


def construct_join_cycles_33(m: int, n: int) -> Construction:
    """``m, n != 2 (mod 3)``, both at least 13: weight 3."""
    _require_large(m, n)
    _require(m % 3 != 2 and n % 3 != 2, f"needs m, n != 2 (mod 3), got m={m}, n={n}")
    return _join_construction(m, n, weight_one_side(m), weight_two_side(n), 3, ClaimKind.EXACT, "join-33", (1, 2))


def construct_join_cycles(m: int, n: int) -> Construction:
    """Best available construction for ``C_m ∨ C_n``; the sides are mirrored where needed."""
    if m == 3 and n % 3 == 0:
        return construct_c3_join_cycle(n)
    if n == 3 and m % 3 == 0:
        c = construct_c3_join_cycle(m)
        values = list(c.labeling)
        return _join_construction(m, n, values[3:], values[:3], 1, ClaimKind.EXACT, "c3-join", (0, 1))
    if m >= 13 and n >= 13:
        if m % 3 == 2 and n % 3 == 2:
            return construct_join_cycles_22(m, n)
        if m % 3 == 2:
            return construct_join_cycles_23(m, n)
        if n % 3 == 2:
            c = construct_join_cycles_23(n, m)
            values = list(c.labeling)
            return _join_construction(m, n, values[n:], values[:n], 3, ClaimKind.EXACT, "join-23", (2, 1))
        return construct_join_cycles_33(m, n)
    return construct_join_cycles_weight4(m, n)


# ---------------------------------------------------------------------------
# wheels, fans, friendship graphs


def wheel_equation(n: int) -> tuple[str, int, list[int]]:
    """(tag, hub value, rim values v_1..v_n) of the weight-1 wheel labeling for ``n != 4``."""
    if n % 2 == 1:
        return "odd", 2, _positions(n, lambda i: -1 if i % 2 == 1 else 1)
    if n % 3 == 0:
        return "mod3-0", 1, _positions(n, lambda i: 2 if i % 3 == 0 else -1)
    if n % 3 == 1:
        def rule3(i: int) -> int:
            if i <= n - 7 and i % 3 == 0:
                return 2
            return 1 if i in (n - 4, n - 1, n) else -1
        return "mod3-1", 2, _positions(n, rule3)

    def rule4(i: int) -> int:
        if i <= n - 5 and i % 3 == 0:
            return 2
        return 1 if i in (n - 2, n) else -1
    return "mod3-2", 2, _positions(n, rule4)


def construct_wheel(n: int) -> Construction:
    _require(n >= 3, f"wheel needs n >= 3, got n={n}")
    spec = FamilySpec(Kind.WHEEL, n=n)
    if n == 4:
        return _gate(wheel(4), [2, 1, -1, 1, -1], 2, ClaimKind.EXACT, "wheel/w4", spec)
    tag, hub, rim = wheel_equation(n)
    return _gate(wheel(n), [hub] + rim, 1, ClaimKind.EXACT, f"wheel/{tag}", spec)


# graphs at most this large may fall back to the exact solver
FAN_SOLVER_FALLBACK_ORDER = 16


def construct_fan(n: int) -> Construction:
    """Fan labelings: the figure labelings for ``n`` in {2, 4}, otherwise a wheel equation.

    On even ``n`` the wheel pattern leaves the path endpoint ``v_1`` with a
    closed sum of at most 0, so the rim pattern is read starting from its
    second position (a rotation of a valid wheel labeling).
    """
    _require(n >= 1, f"fan needs n >= 1, got n={n}")
    g = fan(n)
    spec = FamilySpec(Kind.FAN, n=n)
    if n == 1:
        return _gate(g, [2, -1], 1, ClaimKind.EXACT, "fan/k2", spec)
    if n == 2:
        return _gate(g, [2, -1, 1], 2, ClaimKind.EXACT, "fan/n2", spec)
    if n == 4:
        return _gate(g, [2, -1, 1, -1, 1], 2, ClaimKind.EXACT, "fan/n4", spec)
    tag, hub, rim = wheel_equation(n)
    for shift in (0, 1):
        values = [hub] + rim[shift:] + rim[:shift]
        if verify(g, values).valid:
            source = f"fan/{tag}" + (f"+shift{shift}" if shift else "")
            return _gate(g, values, 1, ClaimKind.EXACT, source, spec)
    if g.order <= FAN_SOLVER_FALLBACK_ORDER:
        from .solver import solve_exact

        result = solve_exact(g)
        return _gate(g, list(result.witness), 1, ClaimKind.EXACT, "fan/solver", spec)
    raise ConstructionError(f"no weight-1 fan labeling found for n={n}")


def construct_friendship(m: int) -> Construction:
    """Hub 2, one endpoint of each triangle edge 1, the other -1: weight 2."""
    _require(m >= 1, f"friendship graph needs m >= 1, got m={m}")
    values = [2] + [1, -1] * m
    return _gate(friendship(m), values, 2, ClaimKind.EXACT, "friendship", FamilySpec(Kind.FRIENDSHIP, m=m))


def construct(spec: FamilySpec) -> Construction:
    """Construction for any family with a known labeling."""
    k = spec.kind
    if k is Kind.WHEEL:
        return construct_wheel(spec.n)
    if k is Kind.FAN:
        return construct_fan(spec.n)
    if k is Kind.FRIENDSHIP:
        return construct_friendship(spec.m)
    if k is Kind.JOIN_CYCLES:
        return construct_join_cycles(spec.m, spec.n)
    raise ConstructionError(f"no explicit construction for family {spec.kind.value}")


# ---------------------------------------------------------------------------


def gamma_formula(spec: FamilySpec) -> Optional[int]:
    """Closed-form ``gamma_sR`` for the families with known values; ``None`` if unknown."""
    k, n, m = spec.kind, spec.n, spec.m
    if k is Kind.CYCLE:
        return -((-2 * n) // 3)
    if k is Kind.PATH:
        # P_1 is K_1, which needs f(v) >= 1
        return 1 if n == 1 else (2 * n) // 3
    if k is Kind.COMPLETE:
        if n == 0:
            return 0
        return 2 if n == 3 else 1
    if k is Kind.EMPTY:
        return n
    if k is Kind.MATCHING:
        return m
    if k is Kind.WHEEL:
        return 2 if n == 4 else 1
    if k is Kind.FAN:
        return 2 if n in (2, 4) else 1
    if k is Kind.FRIENDSHIP:
        return 2
    # join of cycles
    if (m == 3 and n % 3 == 0) or (n == 3 and m % 3 == 0):
        return 1
    if m >= 13 and n >= 13:
        return 2 if (m % 3 == 2 and n % 3 == 2) else 3
    return None


def graph_for(spec: FamilySpec) -> Graph:
    return generate(spec)
