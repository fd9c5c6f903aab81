"""Rendering of pipeline traces: human-readable text and machine JSON.

Text tables print two decimals to stay comparable with the worked example's
published tables; the machine format carries every endpoint and height at
full precision and round-trips bit-exactly through ``trace_from_json``.
"""

from __future__ import annotations

import json

from .errors import ProblemSyntaxError
from .fuzzy import IT2TrFN, make
from .pipeline import CriterionSpec
from .problem import PipelineParams, PipelineTrace

FORMATS = ("text", "machine")


def _fuzzy_text(v: IT2TrFN) -> str:
    u, lo = v.upper, v.lower
    return (
        f"[({u.a1:.2f}, {u.a2:.2f}, {u.a3:.2f}, {u.a4:.2f}; {u.h:.2f}), "
        f"({lo.a1:.2f}, {lo.a2:.2f}, {lo.a3:.2f}, {lo.a4:.2f}; {lo.h:.2f})]"
    )


def _fuzzy_vector_lines(names, values, indent="  "):
    width = max(len(n) for n in names)
    return [f"{indent}{n:<{width}}  {_fuzzy_text(v)}" for n, v in zip(names, values)]


def _fuzzy_matrix_lines(trace, matrix):
    lines = []
    for j, spec in enumerate(trace.criteria):
        lines.append(f"  {spec.name}:")
        column = [row[j] for row in matrix]
        lines.extend(_fuzzy_vector_lines(trace.alternatives, column, indent="    "))
    return lines


def _crisp_matrix_lines(trace, matrix, fmt="{:8.2f}"):
    width = max(len(n) for n in trace.alternatives)
    header = " " * (width + 2) + "".join(f"{s.name:>8}" for s in trace.criteria)
    lines = [header]
    for name, row in zip(trace.alternatives, matrix):
        lines.append(f"  {name:<{width}}" + "".join(fmt.format(x) for x in row))
    return lines


def _scores_lines(trace):
    lines = []
    for rank, idx in enumerate(trace.order, start=1):
        lines.append(f"  {rank}. {trace.alternatives[idx]}  S = {trace.scores[idx]:.2f}")
    lines.append("  ranking: " + " > ".join(trace.ranking()))
    return lines


def _section_lines(trace: PipelineTrace, table: str) -> list[str]:
    if table == "weights":
        names = [s.name for s in trace.criteria]
        return _fuzzy_vector_lines(names, trace.aggregated_weights)
    if table == "ratings":
        return _fuzzy_matrix_lines(trace, trace.aggregated_ratings)
    if table == "normalized":
        return _fuzzy_matrix_lines(trace, trace.normalized)
    if table == "weighted":
        return _fuzzy_matrix_lines(trace, trace.weighted)
    if table == "baa":
        names = [s.name for s in trace.criteria]
        return _fuzzy_vector_lines(names, trace.baa)
    if table == "q":
        return _crisp_matrix_lines(trace, trace.q)
    if table == "g":
        return ["  " + "".join(f"{s.name:>8}" for s in trace.criteria),
                "  " + "".join(f"{x:8.2f}" for x in trace.g)]
    if table == "delta":
        return _crisp_matrix_lines(trace, trace.delta)
    if table == "classification":
        return _crisp_matrix_lines(trace, trace.classification, fmt="{:>8}")
    if table == "scores":
        return _scores_lines(trace)
    raise ProblemSyntaxError(f"unknown table {table!r}; choose from {', '.join(TABLES)}")


SECTION_HEADERS = {
    "weights": "Aggregated weights (cf. Table 4)",
    "ratings": "Aggregated decision matrix (cf. Table 6)",
    "normalized": "Normalized decision matrix",
    "weighted": "Weighted decision matrix (cf. Table 7)",
    "baa": "Border approximation areas (cf. Table 8)",
    "q": "Rank-based distance matrix Q (cf. Table 9)",
    "g": "Rank-based BAA distances G (cf. Table 10)",
    "delta": "Differences Q - G (cf. Table 11)",
    "classification": "Approximation-area classification",
    "scores": "Scores and ranking (cf. Table 11)",
}

TABLES = tuple(SECTION_HEADERS)


def render_section(trace: PipelineTrace, table: str) -> str:
    lines = [f"== {SECTION_HEADERS[table]} =="]
    lines.extend(_section_lines(trace, table))
    return "\n".join(lines) + "\n"


def render_text(trace: PipelineTrace) -> str:
    parts = [f"Problem: {trace.name}",
             f"params: lambda={trace.params.lam:g} r={trace.params.r:g} "
             f"s={trace.params.s:g} baa={trace.params.baa_operator}", ""]
    for table in TABLES:
        parts.append(render_section(trace, table))
    return "\n".join(parts)


def _fuzzy_lists(v: IT2TrFN) -> dict:
    return {
        "upper": [v.upper.a1, v.upper.a2, v.upper.a3, v.upper.a4, v.upper.h],
        "lower": [v.lower.a1, v.lower.a2, v.lower.a3, v.lower.a4, v.lower.h],
    }


def render_machine(trace: PipelineTrace) -> str:
    doc = {
        "name": trace.name,
        "alternatives": trace.alternatives,
        "criteria": [{"name": s.name, "sense": s.sense} for s in trace.criteria],
        "params": {
            "lambda": trace.params.lam,
            "r": trace.params.r,
            "s": trace.params.s,
            "baa": trace.params.baa_operator,
        },
        "aggregated_weights": [_fuzzy_lists(v) for v in trace.aggregated_weights],
        "aggregated_ratings": [[_fuzzy_lists(v) for v in row] for row in trace.aggregated_ratings],
        "normalized": [[_fuzzy_lists(v) for v in row] for row in trace.normalized],
        "weighted": [[_fuzzy_lists(v) for v in row] for row in trace.weighted],
        "baa": [_fuzzy_lists(v) for v in trace.baa],
        "q": trace.q,
        "g": trace.g,
        "delta": trace.delta,
        "classification": trace.classification,
        "scores": trace.scores,
        "order": trace.order,
        "ranking": trace.ranking(),
    }
    return json.dumps(doc, indent=2) + "\n"


def render(trace: PipelineTrace, fmt: str = "text") -> str:
    if fmt == "machine":
        return render_machine(trace)
    if fmt == "text":
        return render_text(trace)
    raise ProblemSyntaxError(f"unknown format {fmt!r}; choose from {FORMATS}")


def render_section_machine(trace: PipelineTrace, table: str) -> str:
    """JSON for a single table of the trace, keyed by its name."""
    doc = json.loads(render_machine(trace))
    key = {"weights": "aggregated_weights", "ratings": "aggregated_ratings"}.get(table, table)
    if table == "scores":
        return json.dumps({"scores": doc["scores"], "order": doc["order"],
                           "ranking": doc["ranking"]}, indent=2) + "\n"
    return json.dumps({key: doc[key]}, indent=2) + "\n"


def _fuzzy_from_lists(node) -> IT2TrFN:
    return make(node["upper"], node["lower"])


def trace_from_json(text: str) -> PipelineTrace:
    """Rebuild a trace from ``render_machine`` output (bit-exact floats)."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ProblemSyntaxError(f"not a valid machine trace: {exc}") from exc
    try:
        return PipelineTrace(
            name=doc["name"],
            alternatives=doc["alternatives"],
            criteria=[CriterionSpec(c["name"], c["sense"]) for c in doc["criteria"]],
            params=PipelineParams(
                lam=doc["params"]["lambda"],
                r=doc["params"]["r"],
                s=doc["params"]["s"],
                baa_operator=doc["params"]["baa"],
            ),
            aggregated_weights=[_fuzzy_from_lists(v) for v in doc["aggregated_weights"]],
            aggregated_ratings=[[_fuzzy_from_lists(v) for v in row] for row in doc["aggregated_ratings"]],
            normalized=[[_fuzzy_from_lists(v) for v in row] for row in doc["normalized"]],
            weighted=[[_fuzzy_from_lists(v) for v in row] for row in doc["weighted"]],
            baa=[_fuzzy_from_lists(v) for v in doc["baa"]],
            q=doc["q"],
            g=doc["g"],
            delta=doc["delta"],
            classification=doc["classification"],
            scores=doc["scores"],
            order=doc["order"],
        )
    except KeyError as exc:
        raise ProblemSyntaxError(f"machine trace is missing key {exc}") from exc
