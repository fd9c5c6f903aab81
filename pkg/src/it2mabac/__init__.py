"""MABAC group decision making over interval type-2 trapezoidal fuzzy numbers."""

from .aggregation import (
    BonferroniParams,
    ExpertRatingSet,
    ExpertWeightSet,
    average_ratings,
    average_weights,
    geometric_mean,
    tit2fgbm,
)
from .fuzzy import (
    CRISP_ONE,
    CRISP_ZERO,
    EPS,
    GeneralizedTrapezoid,
    IT2TrFN,
    add,
    crisp,
    fou_containment_warnings,
    lmf_at,
    make,
    mean,
    mul,
    scale,
    umf_at,
)
from .linguistic import (
    LinguisticScale,
    builtin_rating_scale,
    builtin_weight_scale,
    monotonicity_warnings,
    resolve,
)
from .pipeline import (
    BAA,
    CLASSIFICATION_TOLERANCE,
    LAA,
    UAA,
    CriterionSpec,
    CrispMatrices,
    RankingResult,
    baa,
    classify_and_score,
    column_range,
    crisp_matrices,
    normalize,
    weight,
)
from .problem import (
    DecisionProblem,
    PipelineParams,
    PipelineTrace,
    example_problem_text,
    load_example_problem,
    parse_problem,
    parse_scale,
    run,
)
from .ranking import RankParams, distance, rank_to_one
from .render import (
    render,
    render_machine,
    render_section,
    render_text,
    trace_from_json,
)
from . import errors

__version__ = "0.1.0"

__all__ = [
    "BAA",
    "BonferroniParams",
    "CLASSIFICATION_TOLERANCE",
    "CRISP_ONE",
    "CRISP_ZERO",
    "CriterionSpec",
    "CrispMatrices",
    "DecisionProblem",
    "EPS",
    "ExpertRatingSet",
    "ExpertWeightSet",
    "GeneralizedTrapezoid",
    "IT2TrFN",
    "LAA",
    "LinguisticScale",
    "PipelineParams",
    "PipelineTrace",
    "RankParams",
    "RankingResult",
    "UAA",
    "add",
    "average_ratings",
    "average_weights",
    "baa",
    "builtin_rating_scale",
    "builtin_weight_scale",
    "classify_and_score",
    "column_range",
    "crisp",
    "crisp_matrices",
    "distance",
    "errors",
    "example_problem_text",
    "fou_containment_warnings",
    "geometric_mean",
    "lmf_at",
    "load_example_problem",
    "make",
    "mean",
    "monotonicity_warnings",
    "mul",
    "normalize",
    "parse_problem",
    "parse_scale",
    "rank_to_one",
    "render",
    "render_machine",
    "render_section",
    "render_text",
    "resolve",
    "run",
    "scale",
    "tit2fgbm",
    "trace_from_json",
    "umf_at",
    "weight",
]
