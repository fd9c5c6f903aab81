"""MABAC stages: normalization, weighting, border area, and ranking.

All stage functions are pure transformations of fuzzy matrices (lists of
rows, one row per alternative). Reference points for normalization come from
the upper trapezoids only; lower endpoints are scaled against the same range,
which may push them slightly outside [0, 1]. That is intentional and the
downstream stages do not clip.
"""

from __future__ import annotations

from dataclasses import dataclass

from .aggregation import BonferroniParams, geometric_mean, tit2fgbm
from .errors import DegenerateRange, DimensionMismatch, InvalidParams, TooFewValues
from .fuzzy import CRISP_ONE, EPS, GeneralizedTrapezoid, IT2TrFN, add, mul
from .ranking import RankParams, rank_to_one

#: Classification labels: upper, border, and lower approximation areas.
UAA = "UAA"
BAA = "BAA"
LAA = "LAA"

#: |q_ij - g_j| below this counts as sitting on the border area itself.
CLASSIFICATION_TOLERANCE = 1e-9

BAA_OPERATORS = ("bonferroni", "geomean")

Matrix = list[list[IT2TrFN]]


@dataclass(frozen=True)
class CriterionSpec:
    """A named criterion with its optimization sense."""

    name: str
    sense: str = "benefit"

    def __post_init__(self) -> None:
        if self.sense not in ("benefit", "cost"):
            raise InvalidParams(
                f"criterion {self.name!r}: sense must be 'benefit' or 'cost', got {self.sense!r}"
            )


@dataclass
class CrispMatrices:
    """Crisp distance matrix Q, BAA distances G, and their difference."""

    q: list[list[float]]
    g: list[float]
    delta: list[list[float]]


@dataclass
class RankingResult:
    """Per-cell area classification, per-alternative scores, and the order."""

    classification: list[list[str]]
    scores: list[float]
    order: list[int]


def column_range(matrix: Matrix, j: int, name: str | None = None) -> tuple[float, float]:
    """Reference endpoints of column ``j``: (min upper a1, max upper a4)."""
    a_minus = min(row[j].upper.a1 for row in matrix)
    a_plus = max(row[j].upper.a4 for row in matrix)
    if a_plus - a_minus <= EPS:
        label = name if name is not None else f"column {j}"
        raise DegenerateRange(
            f"criterion {label}: all upper endpoints coincide at {a_plus:g}, "
            "nothing to scale against"
        )
    return a_minus, a_plus


def _shift_scale(t: GeneralizedTrapezoid, a_minus: float, rng: float) -> GeneralizedTrapezoid:
    e = t.endpoints
    return GeneralizedTrapezoid(*((x - a_minus) / rng for x in e), t.h)


def _reflect_scale(t: GeneralizedTrapezoid, a_plus: float, rng: float) -> GeneralizedTrapezoid:
    e = t.endpoints
    # Reversed differences: the largest endpoint maps to the smallest result.
    return GeneralizedTrapezoid(*((a_plus - x) / rng for x in reversed(e)), t.h)


def normalize(matrix: Matrix, specs: list[CriterionSpec]) -> Matrix:
    """Scale every column into the unit range, respecting its sense."""
    if any(len(row) != len(specs) for row in matrix):
        widths = sorted({len(row) for row in matrix})
        raise DimensionMismatch(
            f"matrix rows have widths {widths}, expected {len(specs)} criteria"
        )
    result: Matrix = [[] for _ in matrix]
    for j, spec in enumerate(specs):
        a_minus, a_plus = column_range(matrix, j, spec.name)
        rng = a_plus - a_minus
        for i, row in enumerate(matrix):
            v = row[j]
            if spec.sense == "benefit":
                entry = IT2TrFN(
                    _shift_scale(v.upper, a_minus, rng), _shift_scale(v.lower, a_minus, rng)
                )
            else:
                entry = IT2TrFN(
                    _reflect_scale(v.upper, a_plus, rng), _reflect_scale(v.lower, a_plus, rng)
                )
            result[i].append(entry)
    return result


def weight(normalized: Matrix, weights: list[IT2TrFN]) -> Matrix:
    """Weighted matrix: v_ij = w_j * (n_ij + 1)."""
    if any(len(row) != len(weights) for row in normalized):
        widths = sorted({len(row) for row in normalized})
        raise DimensionMismatch(
            f"matrix rows have widths {widths}, expected {len(weights)} weights"
        )
    return [
        [mul(weights[j], add(entry, CRISP_ONE)) for j, entry in enumerate(row)]
        for row in normalized
    ]


def baa(
    weighted: Matrix,
    params: BonferroniParams = BonferroniParams(),
    operator: str = "bonferroni",
) -> list[IT2TrFN]:
    """Border approximation area per criterion, aggregated down each column."""
    if operator not in BAA_OPERATORS:
        raise InvalidParams(f"unknown BAA operator {operator!r}; choose from {BAA_OPERATORS}")
    if len(weighted) < 2:
        raise TooFewValues(
            f"the border approximation area needs at least two alternatives, got {len(weighted)}"
        )
    q = len(weighted[0])
    columns = [[row[j] for row in weighted] for j in range(q)]
    if operator == "geomean":
        return [geometric_mean(col) for col in columns]
    return [tit2fgbm(col, params) for col in columns]


def crisp_matrices(
    weighted: Matrix, baa_vector: list[IT2TrFN], params: RankParams = RankParams()
) -> CrispMatrices:
    """Crisp distances of every weighted entry and of the BAA vector."""
    if any(len(row) != len(baa_vector) for row in weighted):
        widths = sorted({len(row) for row in weighted})
        raise DimensionMismatch(
            f"matrix rows have widths {widths}, expected {len(baa_vector)} BAA entries"
        )
    q_matrix = [[abs(rank_to_one(entry, params)) for entry in row] for row in weighted]
    g_vector = [abs(rank_to_one(g, params)) for g in baa_vector]
    delta = [[qij - gj for qij, gj in zip(row, g_vector)] for row in q_matrix]
    return CrispMatrices(q=q_matrix, g=g_vector, delta=delta)


def classify_and_score(cm: CrispMatrices) -> RankingResult:
    """Classify each cell by the sign of delta and rank by row sums."""
    classification = []
    for row in cm.delta:
        labels = []
        for d in row:
            if abs(d) < CLASSIFICATION_TOLERANCE:
                labels.append(BAA)
            elif d > 0:
                labels.append(UAA)
            else:
                labels.append(LAA)
        classification.append(labels)
    scores = [sum(row) for row in cm.delta]
    # sorted() is stable, so ties keep the declaration order of alternatives.
    order = sorted(range(len(scores)), key=lambda i: -scores[i])
    return RankingResult(classification=classification, scores=scores, order=order)
