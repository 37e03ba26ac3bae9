"""Exception taxonomy shared across the package.

Two families matter for the CLI exit-code contract: structural problems
reading a file (``DataFormatError``, exit code 2) and domain rule
violations in otherwise well-formed data (``ValidationError`` and its
subclasses, exit code 1).
"""

from __future__ import annotations


class CourseDifficultyError(Exception):
    """Base class for all errors raised by this package."""

    exit_code = 1


class DataFormatError(CourseDifficultyError):
    """A file is missing, unreadable, or structurally malformed.

    Carries the offending path and, when known, a record locator so
    diagnostics always point at the failing input.
    """

    exit_code = 2

    def __init__(self, message: str, *, path: str | None = None, line: int | None = None):
        self.path = path
        self.line = line
        prefix = ""
        if path is not None:
            prefix = f"{path}: " if line is None else f"{path}:{line}: "
        super().__init__(prefix + message)


class ValidationError(CourseDifficultyError):
    """Well-formed data that violates a domain rule (exit code 1)."""


class InvalidCriterionError(ValidationError):
    """A criterion has no mapped complexity levels (malformed catalog data)."""


class UnresolvedCriterionError(ValidationError):
    """A course references a criterion id missing from the active catalog."""

    def __init__(self, criterion_id: str, course_code: str | None = None):
        self.criterion_id = criterion_id
        self.course_code = course_code
        where = f" (course {course_code})" if course_code else ""
        super().__init__(f"unknown criterion id {criterion_id!r}{where}")


class InvalidGradeError(ValidationError):
    """A grade value lies outside the range allowed by its kind."""


class InsufficientDataError(ValidationError):
    """An aggregation was asked to run over an empty collection."""


class NoActionWordsError(ValidationError):
    """An outcome statement matched no lexicon verbs; manual review needed."""
