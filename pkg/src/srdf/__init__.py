"""Signed Roman dominating functions: exact solving, verification and explicit constructions."""

from .graph import (
    FamilySpec,
    Graph,
    GraphError,
    Kind,
    closed_neighborhood,
    complete,
    cycle,
    empty,
    fan,
    friendship,
    generate,
    has_universal_vertex,
    join,
    join_cycles,
    matching,
    max_degree,
    path,
    wheel,
)
from .labeling import Labeling, LabelingError, VerificationReport, closed_sum, verify, weight
from .solver import (
    BudgetExhausted,
    Method,
    SolveOptions,
    SolveResult,
    enumerate_labelings,
    lower_bound_universal,
    solve_branch_and_bound,
    solve_exact,
    solve_exhaustive,
)
from .families import ClaimKind, Construction, ConstructionError, construct, gamma_formula
from .graph6 import Graph6Error, parse_graph6, write_graph6

__version__ = "0.1.0"
