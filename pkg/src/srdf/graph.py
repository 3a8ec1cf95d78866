"""Immutable simple graphs, the families used throughout the package, and the join."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Iterator


class GraphError(ValueError):
    """Raised for malformed graphs or out-of-range family parameters."""


@dataclass(frozen=True)
class Graph:
    """A simple undirected graph on vertices ``0 .. order-1``.

    ``neighbors[v]`` is the open neighbourhood of ``v``.  Instances are
    validated on construction and never mutated afterwards.
    """

    order: int
    neighbors: tuple[frozenset[int], ...]
    name: str = field(default="", compare=False)

    def __post_init__(self) -> None:
        if self.order < 0:
            raise GraphError(f"order must be nonnegative, got {self.order}")
        if len(self.neighbors) != self.order:
            raise GraphError(
                f"expected {self.order} neighbour sets, got {len(self.neighbors)}"
            )
        for v, nbrs in enumerate(self.neighbors):
            if v in nbrs:
                raise GraphError(f"self-loop at vertex {v}")
            for u in nbrs:
                if not 0 <= u < self.order:
                    raise GraphError(f"neighbour {u} of vertex {v} out of range")
                if v not in self.neighbors[u]:
                    raise GraphError(f"edge {v}-{u} is not symmetric")

    @classmethod
    def _trusted(cls, order: int, neighbors: tuple[frozenset[int], ...], name: str = "") -> Graph:
        # for builders whose output is symmetric and loop-free by construction
        g = object.__new__(cls)
        object.__setattr__(g, "order", order)
        object.__setattr__(g, "neighbors", neighbors)
        object.__setattr__(g, "name", name)
        return g

    @classmethod
    def from_edges(cls, order: int, edges: Iterable[tuple[int, int]], name: str = "") -> Graph:
        adj: list[set[int]] = [set() for _ in range(order)]
        for u, v in edges:
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if not (0 <= u < order and 0 <= v < order):
                raise GraphError(f"edge ({u}, {v}) out of range for order {order}")
            adj[u].add(v)
            adj[v].add(u)
        return cls._trusted(order, tuple(frozenset(s) for s in adj), name)

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.order):
            for v in sorted(self.neighbors[u]):
                if u < v:
                    yield (u, v)

    @property
    def size(self) -> int:
        return sum(len(n) for n in self.neighbors) // 2

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return len(self.neighbors[v])

    def degrees(self) -> list[int]:
        return [len(n) for n in self.neighbors]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.neighbors[u]

    def closed_neighborhood(self, v: int) -> frozenset[int]:
        self._check_vertex(v)
        return self.neighbors[v] | {v}

    def max_degree(self) -> int:
        if self.order == 0:
            raise GraphError("maximum degree of the empty (order 0) graph is undefined")
        return max(len(n) for n in self.neighbors)

    def has_universal_vertex(self) -> bool:
        return self.max_degree() == self.order - 1

    def universal_vertices(self) -> list[int]:
        return [v for v in range(self.order) if len(self.neighbors[v]) == self.order - 1]

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.order:
            raise IndexError(f"vertex {v} out of range for order {self.order}")

    def __repr__(self) -> str:
        label = f" {self.name!r}" if self.name else ""
        return f"<Graph{label} order={self.order} size={self.size}>"


def closed_neighborhood(g: Graph, v: int) -> frozenset[int]:
    return g.closed_neighborhood(v)


def max_degree(g: Graph) -> int:
    return g.max_degree()


def has_universal_vertex(g: Graph) -> bool:
    return g.has_universal_vertex()


# ---------------------------------------------------------------------------
# families


class Kind(str, Enum):
    PATH = "path"
    CYCLE = "cycle"
    COMPLETE = "complete"
    EMPTY = "empty"
    MATCHING = "matching"
    WHEEL = "wheel"
    FAN = "fan"
    FRIENDSHIP = "friendship"
    JOIN_CYCLES = "join-cycles"


# kind -> (parameter names, minimum values)
_PARAMS: dict[Kind, tuple[tuple[str, int], ...]] = {
    Kind.PATH: (("n", 1),),
    Kind.CYCLE: (("n", 3),),
    Kind.COMPLETE: (("n", 0),),
    Kind.EMPTY: (("n", 0),),
    Kind.MATCHING: (("m", 0),),
    Kind.WHEEL: (("n", 3),),
    Kind.FAN: (("n", 1),),
    Kind.FRIENDSHIP: (("m", 1),),
    Kind.JOIN_CYCLES: (("m", 3), ("n", 3)),
}


@dataclass(frozen=True)
class FamilySpec:
    """A named graph family together with its integer parameters.

    Single-parameter kinds use ``n`` except matching copies and friendship
    graphs, which are parameterised by the number of edges ``m``.
    """

    kind: Kind
    n: int | None = None
    m: int | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "kind", Kind(self.kind))
        for pname, lo in _PARAMS[self.kind]:
            value = getattr(self, pname)
            if value is None:
                raise GraphError(f"{self.kind.value} requires parameter {pname}")
            if value < lo:
                raise GraphError(f"{self.kind.value} requires {pname} >= {lo}, got {pname}={value}")

    @classmethod
    def parse(cls, kind: str, n: int | None = None, m: int | None = None) -> FamilySpec:
        try:
            k = Kind(kind.lower())
        except ValueError:
            raise GraphError(f"unknown family {kind!r}; choose from {', '.join(k.value for k in Kind)}") from None
        return cls(k, n, m)

    def descriptor(self) -> str:
        args = ",".join(f"{p}={getattr(self, p)}" for p, _ in _PARAMS[self.kind])
        return f"{self.kind.value}({args})"

    def __str__(self) -> str:
        return self.descriptor()


def path(n: int) -> Graph:
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)), f"P{n}")


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError(f"cycle requires n >= 3, got n={n}")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)), f"C{n}")


def complete(n: int) -> Graph:
    return Graph.from_edges(n, ((i, j) for i in range(n) for j in range(i + 1, n)), f"K{n}")


def empty(n: int) -> Graph:
    return Graph._trusted(n, tuple(frozenset() for _ in range(n)), f"E{n}")


def matching(m: int) -> Graph:
    return Graph.from_edges(2 * m, ((2 * i, 2 * i + 1) for i in range(m)), f"{m}K2")


def join(g: Graph, h: Graph) -> Graph:
    """Return ``g ∨ h``: ``g`` keeps indices ``0..|g|-1``, ``h`` is shifted up by ``|g|``."""
    k = g.order
    adj = [set(nbrs) | set(range(k, k + h.order)) for nbrs in g.neighbors]
    adj += [{u + k for u in nbrs} | set(range(k)) for nbrs in h.neighbors]
    name = f"{g.name}v{h.name}" if g.name and h.name else ""
    return Graph._trusted(k + h.order, tuple(frozenset(s) for s in adj), name)


def wheel(n: int) -> Graph:
    if n < 3:
        raise GraphError(f"wheel requires n >= 3, got n={n}")
    return _named(join(complete(1), cycle(n)), f"W{n}")


def fan(n: int) -> Graph:
    if n < 1:
        raise GraphError(f"fan requires n >= 1, got n={n}")
    return _named(join(complete(1), path(n)), f"F{n}")


def friendship(m: int) -> Graph:
    if m < 1:
        raise GraphError(f"friendship requires m >= 1, got m={m}")
    return _named(join(complete(1), matching(m)), f"Fr{2 * m + 1}")


def join_cycles(m: int, n: int) -> Graph:
    return _named(join(cycle(m), cycle(n)), f"C{m}vC{n}")


def _named(g: Graph, name: str) -> Graph:
    return Graph._trusted(g.order, g.neighbors, name)


def generate(spec: FamilySpec) -> Graph:
    """Build the graph described by ``spec``; hubs sit at index 0."""
    k = spec.kind
    if k is Kind.PATH:
        return path(spec.n)
    if k is Kind.CYCLE:
        return cycle(spec.n)
    if k is Kind.COMPLETE:
        return complete(spec.n)
    if k is Kind.EMPTY:
        return empty(spec.n)
    if k is Kind.MATCHING:
        return matching(spec.m)
    if k is Kind.WHEEL:
        return wheel(spec.n)
    if k is Kind.FAN:
        return fan(spec.n)
    if k is Kind.FRIENDSHIP:
        return friendship(spec.m)
    return join_cycles(spec.m, spec.n)
