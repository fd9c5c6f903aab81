"""Interval type-2 trapezoidal fuzzy numbers and their arithmetic.

A value is a pair of generalized trapezoids: the upper and lower membership
functions, each written (a1, a2, a3, a4; h). Instances are immutable and all
operations are pure functions, so values can be shared across threads freely.

Arithmetic follows the usual convention for this number type: addition and
multiplication act endpoint-wise on both trapezoids and combine heights with
min; scalar multiplication leaves heights untouched. Multiplication is only
defined on the non-negative cone, which is the only region the decision
pipeline ever visits.
"""

from __future__ import annotations

import operator
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import (
    EmptyInput,
    EndpointOrderViolation,
    HeightOrderViolation,
    HeightOutOfRange,
    NegativeOperand,
    NegativeScalar,
)

#: Absolute tolerance used by validity and classification checks.
EPS = 1e-9


@dataclass(frozen=True)
class GeneralizedTrapezoid:
    """One trapezoidal membership function (a1, a2, a3, a4; h)."""

    a1: float
    a2: float
    a3: float
    a4: float
    h: float

    def __post_init__(self) -> None:
        for lo, hi in (("a1", "a2"), ("a2", "a3"), ("a3", "a4")):
            if getattr(self, lo) > getattr(self, hi) + EPS:
                raise EndpointOrderViolation(
                    f"{lo}={getattr(self, lo)!r} exceeds {hi}={getattr(self, hi)!r}; "
                    "endpoints must satisfy a1 <= a2 <= a3 <= a4"
                )
        if not 0.0 < self.h <= 1.0:
            raise HeightOutOfRange(f"height h={self.h!r} must lie in (0, 1]")

    @property
    def endpoints(self) -> tuple[float, float, float, float]:
        return (self.a1, self.a2, self.a3, self.a4)

    def membership(self, x: float) -> float:
        """Piecewise-linear membership value at ``x``; 0 outside [a1, a4]."""
        if self.a2 <= x <= self.a3:
            return self.h
        if self.a1 <= x < self.a2:
            return (x - self.a1) * self.h / (self.a2 - self.a1)
        if self.a3 < x <= self.a4:
            return (self.a4 - x) * self.h / (self.a4 - self.a3)
        return 0.0


@dataclass(frozen=True)
class IT2TrFN:
    """An interval type-2 trapezoidal fuzzy number ``[upper, lower]``."""

    upper: GeneralizedTrapezoid
    lower: GeneralizedTrapezoid

    def __post_init__(self) -> None:
        if self.lower.h > self.upper.h + EPS:
            raise HeightOrderViolation(
                f"lower height {self.lower.h!r} exceeds upper height {self.upper.h!r}"
            )


TrapezoidLike = GeneralizedTrapezoid | Sequence[float]


def _as_trapezoid(value: TrapezoidLike, which: str) -> GeneralizedTrapezoid:
    if isinstance(value, GeneralizedTrapezoid):
        return value
    items = list(value)
    if len(items) != 5:
        raise EndpointOrderViolation(
            f"{which} trapezoid needs exactly five numbers (a1, a2, a3, a4, h), got {len(items)}"
        )
    try:
        return GeneralizedTrapezoid(*(float(x) for x in items))
    except (EndpointOrderViolation, HeightOutOfRange) as exc:
        raise type(exc)(f"{which} trapezoid: {exc}") from exc


def make(upper: TrapezoidLike, lower: TrapezoidLike, *, check_fou: bool = False) -> IT2TrFN:
    """Build a validated IT2TrFN from two trapezoids or two 5-sequences.

    With ``check_fou`` the footprint-of-uncertainty containment (lower
    membership never above the upper one) is enforced as well; by default it
    is only available as a lint, see :func:`fou_containment_warnings`.
    """
    value = IT2TrFN(_as_trapezoid(upper, "upper"), _as_trapezoid(lower, "lower"))
    if check_fou:
        problems = fou_containment_warnings(value)
        if problems:
            raise EndpointOrderViolation(
                "lower membership function escapes the upper one: " + "; ".join(problems)
            )
    return value


def fou_containment_warnings(value: IT2TrFN) -> list[str]:
    """Report points where the lower membership exceeds the upper one.

    Both membership functions are piecewise linear, so checking their joint
    breakpoints is sufficient. An empty list means the lower trapezoid lies
    inside the footprint of the upper one.
    """
    warnings = []
    breakpoints = sorted(set(value.upper.endpoints) | set(value.lower.endpoints))
    for x in breakpoints:
        below, above = value.lower.membership(x), value.upper.membership(x)
        if below > above + EPS:
            warnings.append(f"at x={x:g}: lower membership {below:.6g} > upper {above:.6g}")
    return warnings


def umf_at(value: IT2TrFN, x: float) -> float:
    """Upper membership function of ``value`` evaluated at ``x``."""
    return value.upper.membership(x)


def lmf_at(value: IT2TrFN, x: float) -> float:
    """Lower membership function of ``value`` evaluated at ``x``."""
    return value.lower.membership(x)


def _combine(a: GeneralizedTrapezoid, b: GeneralizedTrapezoid, op) -> GeneralizedTrapezoid:
    return GeneralizedTrapezoid(
        op(a.a1, b.a1), op(a.a2, b.a2), op(a.a3, b.a3), op(a.a4, b.a4), min(a.h, b.h)
    )


def add(a: IT2TrFN, b: IT2TrFN) -> IT2TrFN:
    """Endpoint-wise sum on both trapezoids; heights combine with min."""
    return IT2TrFN(
        _combine(a.upper, b.upper, operator.add), _combine(a.lower, b.lower, operator.add)
    )


def scale(a: IT2TrFN, k: float) -> IT2TrFN:
    """Multiply all eight endpoints by ``k >= 0``; heights are unchanged."""
    if k < 0:
        raise NegativeScalar(f"scale factor must be non-negative, got {k!r}")

    def stretch(t: GeneralizedTrapezoid) -> GeneralizedTrapezoid:
        return GeneralizedTrapezoid(t.a1 * k, t.a2 * k, t.a3 * k, t.a4 * k, t.h)

    return IT2TrFN(stretch(a.upper), stretch(a.lower))


def _require_nonnegative(value: IT2TrFN, context: str) -> None:
    # a1 is the smallest endpoint of a valid trapezoid, so checking it suffices.
    if value.upper.a1 < -EPS or value.lower.a1 < -EPS:
        raise NegativeOperand(
            f"{context} is only defined for non-negative values, "
            f"got endpoints down to {min(value.upper.a1, value.lower.a1)!r}"
        )


def mul(a: IT2TrFN, b: IT2TrFN) -> IT2TrFN:
    """Endpoint-wise product on the non-negative cone; heights combine with min."""
    _require_nonnegative(a, "multiplication")
    _require_nonnegative(b, "multiplication")
    return IT2TrFN(
        _combine(a.upper, b.upper, operator.mul), _combine(a.lower, b.lower, operator.mul)
    )


def crisp(c: float) -> IT2TrFN:
    """The crisp constant ``c`` embedded as a degenerate IT2TrFN."""
    point = GeneralizedTrapezoid(c, c, c, c, 1.0)
    return IT2TrFN(point, point)


#: The crisp unit, the reference point of the rank-based distance.
CRISP_ONE = crisp(1.0)

#: The additive identity.
CRISP_ZERO = crisp(0.0)


def mean(values: Iterable[IT2TrFN]) -> IT2TrFN:
    """Component-wise average of one or more values (sum scaled by 1/k)."""
    items = list(values)
    if not items:
        raise EmptyInput("cannot average zero values")
    total = items[0]
    for v in items[1:]:
        total = add(total, v)
    return scale(total, 1.0 / len(items))
