from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from course_difficulty.errors import InsufficientDataError, ValidationError
from course_difficulty.rounding import format_fixed
from course_difficulty.validation import compare, summarize

# Frozen reference rows: (course, actual, estimated).
REFERENCE_ROWS = [
    ("C1", "4.0", "3.8"),
    ("C2", "4.0", "3.8"),
    ("C3", "4.1", "4.4"),
    ("C4", "4.2", "4.4"),
    ("C5", "4.0", "3.8"),
    ("C6", "4.1", "3.8"),
    ("C7", "3.6", "3.8"),
    ("C8", "3.6", "3.6"),
    ("C9", "2.4", "2.3"),
    ("C10", "4.1", "3.8"),
    ("C11", "1.4", "1.1"),
]

DI_VALUES = st.fractions(min_value=0, max_value=5, max_denominator=100)


def _reference_comparisons():
    return [compare(actual, estimated, code) for code, actual, estimated in REFERENCE_ROWS]


class TestCompare:
    def test_errors_populated(self):
        result = compare("4.0", "3.8", "C1")
        assert result.abs_error == Fraction("0.2")
        assert result.squared_error == Fraction("0.04")

    def test_exact_agreement(self):
        result = compare("3.6", "3.6", "C8")
        assert result.abs_error == 0
        assert result.squared_error == 0

    @given(DI_VALUES)
    def test_identity_case(self, value):
        assert compare(value, value).abs_error == 0

    @given(DI_VALUES, DI_VALUES)
    def test_abs_error_symmetric(self, a, b):
        assert compare(a, b).abs_error == compare(b, a).abs_error

    def test_rejects_out_of_scale(self):
        with pytest.raises(ValidationError):
            compare("5.5", "1.0")


class TestSummarize:
    def test_reference_rows_reproduce_average_row(self):
        report = summarize(_reference_comparisons())
        assert format_fixed(report.mean_actual) == "3.6"
        assert format_fixed(report.mean_estimated) == "3.5"
        assert format_fixed(report.mean_abs_error) == "0.2"

    def test_accuracy_at_tolerance_0_3_is_total(self):
        # every reference error is <= 0.3, including the three exactly at 0.3
        report = summarize(_reference_comparisons(), Fraction(3, 10))
        assert report.accuracy == 1

    def test_boundary_error_counts_as_correct(self):
        report = summarize([compare("4.1", "4.4")], Fraction(3, 10))
        assert report.accuracy == 1

    def test_single_agreeing_comparison(self):
        report = summarize([compare("2.0", "2.0")], Fraction(1, 100))
        assert report.accuracy == 1

    def test_empty_list_rejected(self):
        with pytest.raises(InsufficientDataError):
            summarize([])

    def test_nonpositive_tolerance_rejected(self):
        with pytest.raises(ValidationError):
            summarize([compare("1.0", "1.0")], 0)

    def test_mean_abs_error_zero_iff_all_agree(self):
        agreeing = summarize([compare("1.0", "1.0"), compare("2.0", "2.0")])
        assert agreeing.mean_abs_error == 0
        diverging = summarize([compare("1.0", "1.0"), compare("2.0", "2.1")])
        assert diverging.mean_abs_error > 0

    @given(st.lists(st.tuples(DI_VALUES, DI_VALUES), min_size=1, max_size=10))
    def test_error_means_bounded_by_max_error(self, pairs):
        comparisons = [compare(a, b) for a, b in pairs]
        report = summarize(comparisons)
        worst = max(c.abs_error for c in comparisons)
        assert report.mean_abs_error <= worst
        assert report.mean_squared_error <= worst * worst

    @given(
        st.lists(st.tuples(DI_VALUES, DI_VALUES), min_size=1, max_size=10),
        st.fractions(min_value=Fraction(1, 100), max_value=5, max_denominator=100),
        st.fractions(min_value=0, max_value=5, max_denominator=100),
    )
    def test_accuracy_monotone_in_tolerance(self, pairs, tolerance, bump):
        comparisons = [compare(a, b) for a, b in pairs]
        looser = summarize(comparisons, tolerance + bump)
        tighter = summarize(comparisons, tolerance)
        assert looser.accuracy >= tighter.accuracy
