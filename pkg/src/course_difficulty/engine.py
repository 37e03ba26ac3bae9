"""Difficulty computation: rubric-sum path, grade-history path, and combination.

The rubric path sums each mapped criterion's complexity rubric and
normalizes onto the 0-5 index scale: ``di = 5 * raw_total / (21 * count)``.
The grade path converts class performance to the same scale
(``di = 5 - average/100 * 5`` for percent records) and averages one value
per student generation. Everything is exact rational arithmetic; callers
round at reporting time.
"""

from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction

from .errors import (
    InsufficientDataError,
    InvalidGradeError,
    UnresolvedCriterionError,
    ValidationError,
)
from .rounding import Numeric, to_fraction
from .taxonomy import CriterionCatalog, criterion_rubric, max_rubric

DI_SCALE = 5


@dataclass(frozen=True)
class Course:
    """A course code plus the criterion ids it maps to.

    ``cell_overrides`` pins individual criterion rubrics to given point
    values; the reference curriculum uses it to reproduce source data whose
    printed cells deviate from the canonical catalog.
    """

    code: str
    criteria: tuple[str, ...]
    title: str | None = None
    cell_overrides: Mapping[str, int] = field(default_factory=dict)

    def __post_init__(self):
        if not self.code:
            raise ValidationError("course code must be non-empty")
        if not self.criteria:
            raise ValidationError(f"course {self.code!r} maps to no criteria")
        object.__setattr__(self, "criteria", tuple(self.criteria))
        if len(set(self.criteria)) != len(self.criteria):
            raise ValidationError(f"course {self.code!r} lists a criterion more than once")
        overrides = dict(self.cell_overrides)
        for cid, points in overrides.items():
            if cid not in self.criteria:
                raise ValidationError(
                    f"course {self.code!r} overrides {cid!r} which is not among its criteria"
                )
            if not 1 <= points <= max_rubric():
                raise ValidationError(
                    f"course {self.code!r} override {cid!r}={points} outside 1..{max_rubric()}"
                )
        object.__setattr__(self, "cell_overrides", overrides)

    def without_overrides(self) -> "Course":
        if not self.cell_overrides:
            return self
        return Course(code=self.code, criteria=self.criteria, title=self.title)


@dataclass(frozen=True)
class BloomDifficulty:
    """Rubric-path result for one course."""

    course_code: str
    raw_total: int
    criteria_count: int
    max_total: int
    di: Fraction


class GradeKind(Enum):
    PERCENT = "percent"
    DI = "di"


@dataclass(frozen=True)
class GenerationRecord:
    """Class performance of one student generation, tagged with its scale."""

    label: str
    kind: GradeKind
    value: Fraction

    def __post_init__(self):
        if not self.label:
            raise ValidationError("generation label must be non-empty")
        object.__setattr__(self, "value", to_fraction(self.value))
        if self.kind is GradeKind.PERCENT and not 0 <= self.value <= 100:
            raise InvalidGradeError(
                f"generation {self.label!r}: percent value {self.value} outside [0, 100]"
            )
        if self.kind is GradeKind.DI and not 0 <= self.value <= DI_SCALE:
            raise InvalidGradeError(
                f"generation {self.label!r}: difficulty value {self.value} outside [0, {DI_SCALE}]"
            )

    def di(self) -> Fraction:
        """The record on the 0-5 difficulty scale (percent records convert)."""
        if self.kind is GradeKind.PERCENT:
            return class_average_to_di(self.value)
        return self.value


@dataclass(frozen=True)
class GradeHistory:
    course_code: str
    generations: tuple[GenerationRecord, ...]

    def __post_init__(self):
        object.__setattr__(self, "generations", tuple(self.generations))
        if not self.generations:
            raise InsufficientDataError(f"course {self.course_code!r} has no generation records")
        labels = [g.label for g in self.generations]
        if len(set(labels)) != len(labels):
            raise ValidationError(f"course {self.course_code!r} repeats a generation label")


class CombinePolicy(Enum):
    BLOOM_PRIMARY = "bloom_primary"
    MEAN_OF_BOTH = "mean_of_both"


@dataclass(frozen=True)
class FinalDifficulty:
    course_code: str
    bloom_di: Fraction
    grade_di: Fraction
    final_di: Fraction
    policy: CombinePolicy


def course_raw_total(course: Course, catalog: CriterionCatalog) -> int:
    """Sum of rubric points over the course's criteria (overrides win per cell)."""
    for cid in course.criteria:
        if cid not in catalog:
            raise UnresolvedCriterionError(cid, course.code)
    return sum(
        course.cell_overrides.get(cid, criterion_rubric(catalog[cid]))
        for cid in course.criteria
    )


def bloom_difficulty(course: Course, catalog: CriterionCatalog) -> BloomDifficulty:
    """Normalize the raw rubric total onto the 0-5 difficulty index scale."""
    raw = course_raw_total(course, catalog)
    count = len(course.criteria)
    max_total = count * max_rubric()
    return BloomDifficulty(
        course_code=course.code,
        raw_total=raw,
        criteria_count=count,
        max_total=max_total,
        di=Fraction(DI_SCALE * raw, max_total),
    )


def class_average_to_di(average: Numeric) -> Fraction:
    """Map a 0-100 class average onto the inverted 0-5 difficulty scale."""
    value = to_fraction(average)
    if not 0 <= value <= 100:
        raise InvalidGradeError(f"class average {value} outside [0, 100]")
    return DI_SCALE - (value / 100) * DI_SCALE


def grade_difficulty(history: GradeHistory) -> Fraction:
    """Arithmetic mean of the per-generation difficulty values."""
    if not history.generations:
        raise InsufficientDataError(f"course {history.course_code!r} has no generation records")
    values = [record.di() for record in history.generations]
    return sum(values, Fraction(0)) / len(values)


def final_difficulty(
    bloom_di: Numeric,
    grade_di: Numeric,
    policy: CombinePolicy = CombinePolicy.BLOOM_PRIMARY,
    course_code: str = "",
) -> FinalDifficulty:
    """Combine the two estimates under the chosen policy.

    The default keeps the rubric-based value as the course's difficulty and
    treats grades purely as validation data; ``MEAN_OF_BOTH`` averages them.
    """
    bloom = to_fraction(bloom_di)
    grade = to_fraction(grade_di)
    for name, value in (("bloom_di", bloom), ("grade_di", grade)):
        if not 0 <= value <= DI_SCALE:
            raise ValidationError(f"{name} {value} outside [0, {DI_SCALE}]")
    if policy is CombinePolicy.MEAN_OF_BOTH:
        final = (bloom + grade) / 2
    else:
        final = bloom
    return FinalDifficulty(
        course_code=course_code,
        bloom_di=bloom,
        grade_di=grade,
        final_di=final,
        policy=policy,
    )
