"""
Text reports for the command line

The trace layout reproduces the worked example's tables: one header line per
round, the level sets of both digraphs and one "I_x=(...) O_x=(...)" line per
vertex in ascending id order. Vertex id i is labeled <prefix><i+1>.
"""
import logging
from typing import List, Optional

from .graph_core import Graph, degree_vector
from .iso_heuristic import FailureKind, PairCheck, RemovalTrace, Verdict, replay_rounds, surviving_graphs
from .models import BenchReport
from .positioning import AuxiliaryDigraph, build_auxiliary_digraph

logger = logging.getLogger(__name__)

INDENT = "  "


def vertex_label(prefix: str, v: int) -> str:
    return f"{prefix}{v + 1}"


def render_levels(digraph: AuxiliaryDigraph, prefix: str) -> str:
    parts = []
    for k, members in enumerate(digraph.decomposition.levels):
        labels = ",".join(vertex_label(prefix, v) for v in sorted(members))
        parts.append(f"{k}={{{labels}}}")
    return " ".join(parts)


def render_characteristics(digraph: AuxiliaryDigraph, prefix: str) -> List[str]:
    return [
        digraph.characteristics[v].render(vertex_label(prefix, v))
        for v in sorted(digraph.characteristics)
    ]


def _digraph_block(name: str, digraph: AuxiliaryDigraph, prefix: str) -> List[str]:
    lines = [f"{INDENT}{name} levels: {render_levels(digraph, prefix)}",
             f"{INDENT}{name} characteristics:"]
    lines.extend(f"{INDENT * 2}{row}" for row in render_characteristics(digraph, prefix))
    return lines


def render_trace(g: Graph, h: Graph, verdict: Verdict, trace: RemovalTrace,
                 g_prefix: str = "v", h_prefix: str = "u") -> str:
    lines = [f"verdict: {verdict.describe()}"]
    stage = verdict.failure_stage

    if stage is not None and stage.kind is FailureKind.PRECHECK:
        lines.append(f"precheck: n={g.order}/{h.order} m={g.edge_count}/{h.edge_count}")
        lines.append(f"{INDENT}D_G={degree_vector(g)}")
        lines.append(f"{INDENT}D_H={degree_vector(h)}")
        return "\n".join(lines) + "\n"

    for round_no, q, s, (v, u) in replay_rounds(g, h, trace):
        lines.append(f"round {round_no}: pivot {vertex_label(g_prefix, v)} matched {vertex_label(h_prefix, u)}")
        lines.extend(_digraph_block("G", build_auxiliary_digraph(q, v), g_prefix))
        lines.extend(_digraph_block("H", build_auxiliary_digraph(s, u), h_prefix))
    q, _ = surviving_graphs(g, h, trace)

    if stage is not None and stage.kind is FailureKind.UNMATCHED:
        lines.append(f"round {stage.round}: pivot {vertex_label(g_prefix, stage.pivot)} unmatched")
        lines.extend(_digraph_block("G", build_auxiliary_digraph(q, stage.pivot), g_prefix))
    elif stage is not None and stage.kind is FailureKind.DISCONNECTED_INTERMEDIATE:
        lines.append(f"round {stage.round}: intermediate {stage.graph} is disconnected")
    return "\n".join(lines) + "\n"


def render_mapping(check: PairCheck, g_prefix: str = "v", h_prefix: str = "u") -> Optional[str]:
    if check.mapping is None:
        return None
    pairs = " ".join(
        f"{vertex_label(g_prefix, v)}->{vertex_label(h_prefix, u)}"
        for v, u in sorted(check.mapping.pairs.items())
    )
    status = "verified" if check.mapping_verified else "not-verified"
    return f"candidate_mapping: {status} {pairs}"


def render_bench(report: BenchReport) -> str:
    lines = [f"n={pt.n} median_s={pt.median_seconds:.6f} reps={pt.reps}" for pt in report.points]
    lines.append("slope=undefined" if report.slope is None else f"slope={report.slope:.3f}")
    return "\n".join(lines) + "\n"
