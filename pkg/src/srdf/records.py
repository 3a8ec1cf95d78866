"""Line-oriented JSON records for labelings, verification reports and claim checks."""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Any, Optional

from .graph import Graph
from .graph6 import parse_graph6, write_graph6
from .labeling import Labeling, VerificationReport, verify


def dumps(record: dict[str, Any]) -> str:
    """One record per line; separators fixed so output is byte-stable."""
    return json.dumps(record, separators=(",", ":"), ensure_ascii=True)


@dataclass(frozen=True)
class LabelingRecord:
    graph_id: str
    values: tuple[int, ...]
    weight: int
    valid: bool
    source: str
    gamma: Optional[int] = None
    family: Optional[str] = None

    @classmethod
    def build(cls, g: Graph, f: Labeling, source: str, gamma: Optional[int] = None,
              family: Optional[str] = None) -> LabelingRecord:
        report = verify(g, f)
        return cls(write_graph6(g), tuple(f), report.weight, report.valid, source, gamma, family)

    def to_dict(self) -> dict[str, Any]:
        return {
            "type": "labeling",
            "graph_id": self.graph_id,
            "family": self.family,
            "values": ",".join(str(v) for v in self.values),
            "weight": self.weight,
            "valid": self.valid,
            "gamma": self.gamma,
            "source": self.source,
        }

    def to_line(self) -> str:
        return dumps(self.to_dict())

    @classmethod
    def from_dict(cls, d: dict[str, Any]) -> LabelingRecord:
        return cls(
            d["graph_id"], tuple(Labeling.parse(d["values"])), int(d["weight"]), bool(d["valid"]),
            d.get("source", ""), d.get("gamma"), d.get("family"),
        )

    @classmethod
    def from_line(cls, line: str) -> LabelingRecord:
        return cls.from_dict(json.loads(line))

    def recheck(self) -> bool:
        """True when weight and validity re-derive from the graph and values."""
        report = verify(parse_graph6(self.graph_id), Labeling(self.values))
        return report.weight == self.weight and report.valid == self.valid


def report_record(graph_id: str, report: VerificationReport) -> dict[str, Any]:
    return {
        "type": "verification",
        "graph_id": graph_id,
        "valid": report.valid,
        "weight": report.weight,
        "condition_a_failures": report.condition_a_failures,
        "condition_b_failures": report.condition_b_failures,
        "closed_sums": report.per_vertex_closed_sums,
    }
