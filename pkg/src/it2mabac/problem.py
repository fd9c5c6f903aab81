"""Problem documents and pipeline orchestration.

A decision problem is a single YAML document naming alternatives, criteria
(with their senses), experts, the two linguistic scales, per-expert weight
vectors and rating matrices, and optional tuning parameters. Ratings and
weights may be linguistic terms or inline values written as two 5-tuples
(four endpoints and a height per trapezoid).

``run`` executes the seven pipeline steps on a parsed problem and returns a
trace holding every intermediate matrix.
"""

from __future__ import annotations

import importlib.resources
from contextlib import contextmanager
from dataclasses import dataclass, field
from pathlib import Path

import yaml

from .aggregation import (
    BonferroniParams,
    ExpertRatingSet,
    ExpertWeightSet,
    average_ratings,
    average_weights,
)
from .errors import (
    DimensionMismatch,
    InvalidParams,
    MabacError,
    ProblemSyntaxError,
)
from .fuzzy import IT2TrFN, make
from .linguistic import (
    LinguisticScale,
    builtin_rating_scale,
    builtin_weight_scale,
    resolve,
)
from .pipeline import (
    BAA_OPERATORS,
    CriterionSpec,
    Matrix,
    baa,
    classify_and_score,
    crisp_matrices,
    normalize,
    weight,
)
from .ranking import RankParams


@dataclass(frozen=True)
class PipelineParams:
    """Tuning knobs: rank attitude, Bonferroni exponents, BAA operator."""

    lam: float = 0.5
    r: float = 1.0
    s: float = 1.0
    baa_operator: str = "bonferroni"

    def __post_init__(self) -> None:
        RankParams(self.lam)
        BonferroniParams(self.r, self.s)
        if self.baa_operator not in BAA_OPERATORS:
            raise InvalidParams(
                f"baa operator must be one of {BAA_OPERATORS}, got {self.baa_operator!r}"
            )

    def rank_params(self) -> RankParams:
        return RankParams(self.lam)

    def bonferroni_params(self) -> BonferroniParams:
        return BonferroniParams(self.r, self.s)


@dataclass
class DecisionProblem:
    """A fully resolved group decision problem."""

    alternatives: list[str]
    criteria: list[CriterionSpec]
    experts: list[str]
    weight_scale: LinguisticScale
    rating_scale: LinguisticScale
    expert_weights: dict[str, list[IT2TrFN]]
    expert_ratings: dict[str, list[list[IT2TrFN]]]
    params: PipelineParams = field(default_factory=PipelineParams)
    name: str = "unnamed"


@dataclass
class PipelineTrace:
    """Every intermediate of one pipeline execution."""

    name: str
    alternatives: list[str]
    criteria: list[CriterionSpec]
    params: PipelineParams
    aggregated_weights: list[IT2TrFN]
    aggregated_ratings: Matrix
    normalized: Matrix
    weighted: Matrix
    baa: list[IT2TrFN]
    q: list[list[float]]
    g: list[float]
    delta: list[list[float]]
    classification: list[list[str]]
    scores: list[float]
    order: list[int]

    def ranking(self) -> list[str]:
        return [self.alternatives[i] for i in self.order]


@contextmanager
def _stage(label: str):
    """Prefix any package error escaping a pipeline stage with its label."""
    try:
        yield
    except MabacError as exc:
        raise type(exc)(f"{label}: {exc}") from exc


def run(problem: DecisionProblem, params: PipelineParams | None = None) -> PipelineTrace:
    """Execute steps 1-7 on ``problem`` and collect the full trace."""
    p = params if params is not None else problem.params
    with _stage("step 1 (average weights)"):
        ws = ExpertWeightSet(
            experts=list(problem.experts),
            weights=[problem.expert_weights[e] for e in problem.experts],
        )
        weights_bar = average_weights(ws)
    with _stage("step 2 (average decision matrix)"):
        rs = ExpertRatingSet(
            experts=list(problem.experts),
            ratings=[problem.expert_ratings[e] for e in problem.experts],
        )
        ratings_bar = average_ratings(rs)
    with _stage("step 3 (normalization)"):
        normalized = normalize(ratings_bar, problem.criteria)
    with _stage("step 4 (weighting)"):
        weighted = weight(normalized, weights_bar)
    with _stage("step 5 (border approximation area)"):
        baa_vector = baa(weighted, p.bonferroni_params(), p.baa_operator)
    with _stage("step 6 (distance matrices)"):
        cm = crisp_matrices(weighted, baa_vector, p.rank_params())
    with _stage("step 7 (classification and ranking)"):
        result = classify_and_score(cm)
    return PipelineTrace(
        name=problem.name,
        alternatives=list(problem.alternatives),
        criteria=list(problem.criteria),
        params=p,
        aggregated_weights=weights_bar,
        aggregated_ratings=ratings_bar,
        normalized=normalized,
        weighted=weighted,
        baa=baa_vector,
        q=cm.q,
        g=cm.g,
        delta=cm.delta,
        classification=result.classification,
        scores=result.scores,
        order=result.order,
    )


# --------------------------------------------------------------------------
# parsing

_TOP_LEVEL_KEYS = {
    "name",
    "alternatives",
    "criteria",
    "experts",
    "weight_scale",
    "rating_scale",
    "weights",
    "ratings",
    "params",
}

_PARAM_KEYS = {"lambda", "r", "s", "baa"}


def _require_name_list(node, key: str) -> list[str]:
    if not isinstance(node, list) or not node:
        raise ProblemSyntaxError(f"{key!r} must be a non-empty list of names")
    names = []
    for item in node:
        if not isinstance(item, str) or not item:
            raise ProblemSyntaxError(f"{key!r} entries must be non-empty strings, got {item!r}")
        names.append(item)
    if len(set(names)) != len(names):
        raise ProblemSyntaxError(f"{key!r} entries must be unique, got {names}")
    return names


def _parse_criteria(node) -> list[CriterionSpec]:
    if not isinstance(node, list) or not node:
        raise ProblemSyntaxError("'criteria' must be a non-empty list")
    specs = []
    for i, item in enumerate(node):
        if isinstance(item, str):
            specs.append(CriterionSpec(item))
        elif isinstance(item, dict) and set(item) <= {"name", "sense"} and "name" in item:
            specs.append(CriterionSpec(item["name"], item.get("sense", "benefit")))
        else:
            raise ProblemSyntaxError(
                f"criteria[{i}]: expected a name or a {{name, sense}} mapping, got {item!r}"
            )
    names = [s.name for s in specs]
    if len(set(names)) != len(names):
        raise ProblemSyntaxError(f"criterion names must be unique, got {names}")
    return specs


def parse_scale(node, default_name: str = "custom") -> LinguisticScale:
    """Parse an inline scale: {name: ..., terms: {TERM: [upper5, lower5]}}."""
    if not isinstance(node, dict) or "terms" not in node:
        raise ProblemSyntaxError("a scale must be a mapping with a 'terms' entry")
    terms = node["terms"]
    if not isinstance(terms, dict) or not terms:
        raise ProblemSyntaxError("'terms' must be a non-empty mapping of term -> two 5-tuples")
    entries: dict[str, IT2TrFN] = {}
    for term, value in terms.items():
        with _stage(f"scale term {term!r}"):
            entries[str(term)] = _parse_inline_value(value)
    return LinguisticScale(str(node.get("name", default_name)), entries)


def _parse_inline_value(node) -> IT2TrFN:
    if (
        not isinstance(node, list)
        or len(node) != 2
        or not all(isinstance(part, list) for part in node)
    ):
        raise ProblemSyntaxError(
            f"an inline value must be two 5-tuples [[a1,a2,a3,a4,h],[a1,a2,a3,a4,h]], got {node!r}"
        )
    return make(node[0], node[1])


def _load_scale(node, role: str, base_dir: Path | None) -> LinguisticScale:
    if node is None or node == "builtin":
        return builtin_weight_scale() if role == "weight_scale" else builtin_rating_scale()
    if isinstance(node, dict):
        with _stage(role):
            return parse_scale(node, default_name=role)
    if isinstance(node, str):
        path = Path(node)
        if base_dir is not None and not path.is_absolute():
            path = base_dir / path
        try:
            text = path.read_text()
        except OSError as exc:
            raise ProblemSyntaxError(f"{role}: cannot read scale file {str(path)!r}: {exc}") from exc
        try:
            doc = yaml.safe_load(text)
        except yaml.YAMLError as exc:
            raise ProblemSyntaxError(f"{role}: scale file {str(path)!r}: {exc}") from exc
        with _stage(f"{role} ({path.name})"):
            return parse_scale(doc, default_name=path.stem)
    raise ProblemSyntaxError(
        f"{role}: expected 'builtin', an inline scale mapping, or a file path, got {node!r}"
    )


def _resolve_entry(node, scale: LinguisticScale, where: str) -> IT2TrFN:
    with _stage(where):
        if isinstance(node, str):
            return resolve(scale, node)
        return _parse_inline_value(node)


def parse_problem(text: str, base_dir: str | Path | None = None) -> DecisionProblem:
    """Parse and fully validate a problem document.

    ``base_dir`` anchors relative scale-file paths (the CLI passes the
    directory of the problem file).
    """
    try:
        doc = yaml.safe_load(text)
    except yaml.YAMLError as exc:
        raise ProblemSyntaxError(f"not a valid problem document: {exc}") from exc
    if not isinstance(doc, dict):
        raise ProblemSyntaxError("the problem document must be a mapping at the top level")
    unknown = set(doc) - _TOP_LEVEL_KEYS
    if unknown:
        raise ProblemSyntaxError(
            f"unknown top-level keys {sorted(unknown)}; expected a subset of {sorted(_TOP_LEVEL_KEYS)}"
        )
    missing = {"alternatives", "criteria", "experts", "weights", "ratings"} - set(doc)
    if missing:
        raise ProblemSyntaxError(f"missing required keys: {sorted(missing)}")

    base = Path(base_dir) if base_dir is not None else None
    alternatives = _require_name_list(doc["alternatives"], "alternatives")
    criteria = _parse_criteria(doc["criteria"])
    experts = _require_name_list(doc["experts"], "experts")
    weight_scale = _load_scale(doc.get("weight_scale"), "weight_scale", base)
    rating_scale = _load_scale(doc.get("rating_scale"), "rating_scale", base)
    params = _parse_params(doc.get("params"))

    p, q = len(alternatives), len(criteria)
    expert_weights = _parse_weights(doc["weights"], experts, q, weight_scale)
    expert_ratings = _parse_ratings(doc["ratings"], experts, alternatives, q, rating_scale)

    return DecisionProblem(
        alternatives=alternatives,
        criteria=criteria,
        experts=experts,
        weight_scale=weight_scale,
        rating_scale=rating_scale,
        expert_weights=expert_weights,
        expert_ratings=expert_ratings,
        params=params,
        name=str(doc.get("name", "unnamed")),
    )


def _parse_params(node) -> PipelineParams:
    if node is None:
        return PipelineParams()
    if not isinstance(node, dict):
        raise ProblemSyntaxError(f"'params' must be a mapping, got {node!r}")
    unknown = set(node) - _PARAM_KEYS
    if unknown:
        raise ProblemSyntaxError(
            f"unknown params {sorted(unknown)}; expected a subset of {sorted(_PARAM_KEYS)}"
        )
    for key in ("lambda", "r", "s"):
        if key in node and not isinstance(node[key], (int, float)):
            raise InvalidParams(f"param {key!r} must be a number, got {node[key]!r}")
    return PipelineParams(
        lam=float(node.get("lambda", 0.5)),
        r=float(node.get("r", 1.0)),
        s=float(node.get("s", 1.0)),
        baa_operator=str(node.get("baa", "bonferroni")),
    )


def _parse_weights(node, experts, q, scale) -> dict[str, list[IT2TrFN]]:
    if not isinstance(node, dict):
        raise ProblemSyntaxError("'weights' must map each expert to a list of entries")
    _check_expert_keys(node, experts, "weights")
    out: dict[str, list[IT2TrFN]] = {}
    for expert in experts:
        row = node[expert]
        if not isinstance(row, list) or len(row) != q:
            got = len(row) if isinstance(row, list) else f"a {type(row).__name__}"
            raise DimensionMismatch(
                f"weights[{expert}]: expected {q} entries (one per criterion), got {got}"
            )
        out[expert] = [
            _resolve_entry(entry, scale, f"weights[{expert}][{j}]") for j, entry in enumerate(row)
        ]
    return out


def _parse_ratings(node, experts, alternatives, q, scale) -> dict[str, list[list[IT2TrFN]]]:
    if not isinstance(node, dict):
        raise ProblemSyntaxError("'ratings' must map each expert to a matrix of entries")
    _check_expert_keys(node, experts, "ratings")
    p = len(alternatives)
    out: dict[str, list[list[IT2TrFN]]] = {}
    for expert in experts:
        matrix = node[expert]
        if not isinstance(matrix, list) or len(matrix) != p:
            got = len(matrix) if isinstance(matrix, list) else f"a {type(matrix).__name__}"
            raise DimensionMismatch(
                f"ratings[{expert}]: expected {p} rows (one per alternative), got {got}"
            )
        rows = []
        for i, row in enumerate(matrix):
            if not isinstance(row, list) or len(row) != q:
                got = len(row) if isinstance(row, list) else f"a {type(row).__name__}"
                raise DimensionMismatch(
                    f"ratings[{expert}] row {i} ({alternatives[i]!r}): "
                    f"expected {q} entries, got {got}"
                )
            rows.append(
                [
                    _resolve_entry(entry, scale, f"ratings[{expert}][{alternatives[i]}][{j}]")
                    for j, entry in enumerate(row)
                ]
            )
        out[expert] = rows
    return out


def _check_expert_keys(node: dict, experts: list[str], key: str) -> None:
    missing = set(experts) - set(node)
    extra = set(node) - set(experts)
    if missing:
        raise DimensionMismatch(f"{key!r} is missing experts {sorted(missing)}")
    if extra:
        raise DimensionMismatch(f"{key!r} names unknown experts {sorted(extra)}")


def example_problem_text() -> str:
    """The bundled candidate-selection example problem document."""
    resource = importlib.resources.files("it2mabac").joinpath("data/system-analyst.problem")
    return resource.read_text()


def load_example_problem() -> DecisionProblem:
    """Parse and return the bundled candidate-selection example."""
    return parse_problem(example_problem_text())
