"""Labelings ``f: V -> {-1, 1, 2}`` and the signed Roman domination verifier."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .graph import Graph

VALUES = (-1, 1, 2)


class LabelingError(ValueError):
    """Raised for illegal label values or a labeling/graph size mismatch."""


@dataclass(frozen=True)
class Labeling:
    """Per-vertex values, each one of -1, 1 or 2."""

    values: tuple[int, ...]

    def __init__(self, values: Iterable[int]) -> None:
        vals = tuple(int(v) for v in values)
        bad = [i for i, v in enumerate(vals) if v not in VALUES]
        if bad:
            raise LabelingError(
                f"illegal value {vals[bad[0]]} at vertex {bad[0]}; labels must be -1, 1 or 2"
            )
        object.__setattr__(self, "values", vals)

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, v: int) -> int:
        return self.values[v]

    def __iter__(self):
        return iter(self.values)

    def part(self, value: int) -> frozenset[int]:
        """The class ``V_value`` of the induced partition."""
        return frozenset(i for i, x in enumerate(self.values) if x == value)

    @property
    def weight(self) -> int:
        return sum(self.values)

    def sum_over(self, vertices: Iterable[int]) -> int:
        return sum(self.values[v] for v in vertices)

    def __str__(self) -> str:
        return ",".join(str(v) for v in self.values)

    @classmethod
    def parse(cls, text: str) -> Labeling:
        text = text.strip()
        if not text:
            return cls(())
        try:
            return cls(int(tok) for tok in text.split(","))
        except ValueError as exc:
            if isinstance(exc, LabelingError):
                raise
            raise LabelingError(f"cannot parse labels {text!r}: {exc}") from None

    @classmethod
    def constant(cls, order: int, value: int = 1) -> Labeling:
        return cls((value,) * order)


def as_labeling(f: Labeling | Sequence[int]) -> Labeling:
    return f if isinstance(f, Labeling) else Labeling(f)


@dataclass(frozen=True)
class VerificationReport:
    valid: bool
    weight: int
    condition_a_failures: list[int] = field(default_factory=list)
    condition_b_failures: list[int] = field(default_factory=list)
    per_vertex_closed_sums: list[int] = field(default_factory=list)

    def violations(self) -> list[str]:
        out = [
            f"condition (a) at vertex {v}: closed-neighbourhood sum {self.per_vertex_closed_sums[v]} < 1"
            for v in self.condition_a_failures
        ]
        out += [f"condition (b) at vertex {v}: labelled -1 with no neighbour labelled 2" for v in self.condition_b_failures]
        return out


def weight(f: Labeling | Sequence[int]) -> int:
    return sum(as_labeling(f).values)


def _check_length(g: Graph, f: Labeling) -> None:
    if len(f) != g.order:
        raise LabelingError(f"labeling has {len(f)} values but graph has order {g.order}")


def closed_sum(g: Graph, f: Labeling | Sequence[int], v: int) -> int:
    """``f(N[v])``."""
    f = as_labeling(f)
    _check_length(g, f)
    return f.sum_over(g.closed_neighborhood(v))


def verify(g: Graph, f: Labeling | Sequence[int]) -> VerificationReport:
    """Check both SRDF conditions at every vertex and report every violation."""
    f = as_labeling(f)
    _check_length(g, f)
    vals = f.values
    get = vals.__getitem__
    sums = []
    fail_a = []
    fail_b = []
    for v, nbrs in enumerate(g.neighbors):
        s = vals[v] + sum(map(get, nbrs))
        sums.append(s)
        if s < 1:
            fail_a.append(v)
        if vals[v] == -1 and 2 not in map(get, nbrs):
            fail_b.append(v)
    return VerificationReport(
        valid=not fail_a and not fail_b,
        weight=sum(vals),
        condition_a_failures=fail_a,
        condition_b_failures=fail_b,
        per_vertex_closed_sums=sums,
    )


def is_srdf(g: Graph, f: Labeling | Sequence[int]) -> bool:
    return verify(g, f).valid
