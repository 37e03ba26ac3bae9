"""Command-line interface.

Subcommands: ``estimate`` (rubric-path difficulty per course), ``grades``
(grade-history difficulty), ``validate`` (compare the two and report error
metrics), ``map-outcomes`` (tag outcome statements with complexity levels),
and ``fixtures`` (write the bundled reference dataset to a directory).

Exit codes: 0 success, 1 domain/validation failure, 2 I/O or parse failure.
Output is rendered fully before anything is written, so a failing run never
leaves partial output on the primary stream; identical inputs and flags
produce byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import data_io
from .engine import (
    CombinePolicy,
    Course,
    GradeHistory,
    bloom_difficulty,
    final_difficulty,
    grade_difficulty,
)
from .errors import CourseDifficultyError
from .mapper import map_outcome
from .rounding import format_fixed, round_half_away
from .taxonomy import CriterionCatalog
from .validation import compare, summarize

MODE_CANONICAL = "canonical"
MODE_AS_PRINTED = "as-printed"

_POLICIES = {
    "bloom-primary": CombinePolicy.BLOOM_PRIMARY,
    "mean-of-both": CombinePolicy.MEAN_OF_BOTH,
}


def _positive_fraction(text: str) -> Fraction:
    try:
        value = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if value <= 0:
        raise argparse.ArgumentTypeError(f"must be positive: {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="course-difficulty",
        description="Estimate course difficulty from outcome rubrics and validate it against grade history.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_output_flags(p: argparse.ArgumentParser) -> None:
        p.add_argument("--format", choices=("table", "csv", "json"), default="table")
        p.add_argument("--output", type=Path, default=None, help="write here instead of stdout")

    p_est = sub.add_parser("estimate", help="rubric-based difficulty index per course")
    p_est.add_argument("--catalog", type=Path, required=True)
    p_est.add_argument("--curriculum", type=Path, required=True)
    p_est.add_argument(
        "--mode",
        choices=(MODE_CANONICAL, MODE_AS_PRINTED),
        default=MODE_CANONICAL,
        help="canonical computes every cell from the catalog; as-printed applies per-cell overrides",
    )
    add_output_flags(p_est)

    p_gr = sub.add_parser("grades", help="grade-history difficulty index per course")
    p_gr.add_argument("--grades", type=Path, required=True)
    add_output_flags(p_gr)

    p_val = sub.add_parser("validate", help="compare estimated and grade-derived difficulty")
    p_val.add_argument("--catalog", type=Path, required=True)
    p_val.add_argument("--curriculum", type=Path, required=True)
    p_val.add_argument("--grades", type=Path, required=True)
    p_val.add_argument("--mode", choices=(MODE_CANONICAL, MODE_AS_PRINTED), default=MODE_CANONICAL)
    p_val.add_argument("--policy", choices=tuple(_POLICIES), default="bloom-primary")
    p_val.add_argument("--tolerance", type=_positive_fraction, default=Fraction(1, 2))
    p_val.add_argument(
        "--full-precision",
        action="store_true",
        help="compare unrounded values instead of the default 1-decimal grid",
    )
    p_val.add_argument("--plot-data", type=Path, default=None, help="also write actual-vs-estimated plot CSV")
    p_val.add_argument("--strict", action="store_true", help="fail when a course has no grade history")
    add_output_flags(p_val)

    p_map = sub.add_parser("map-outcomes", help="tag outcome statements with complexity levels")
    p_map.add_argument("--statements", type=Path, required=True)
    p_map.add_argument("--lexicon", type=Path, default=None, help="defaults to the shipped verb list")
    p_map.add_argument("--suffix-rule", action="store_true", help="also match plural/gerund verb forms")
    add_output_flags(p_map)

    p_fix = sub.add_parser("fixtures", help="write the bundled reference dataset files")
    p_fix.add_argument("dest", type=Path)

    return parser


def _emit(text: str, output: Path | None) -> None:
    if output is None:
        sys.stdout.write(text)
    else:
        output.write_text(text, encoding="utf-8", newline="")


def _warn(message: str) -> None:
    print(f"warning: {message}", file=sys.stderr)


def _table(headers: tuple[str, ...], rows: list[tuple[str, ...]]) -> str:
    widths = [len(h) for h in headers]
    for row in rows:
        for i, cell in enumerate(row):
            widths[i] = max(widths[i], len(cell))
    lines = [
        "  ".join(h.ljust(widths[i]) for i, h in enumerate(headers)).rstrip(),
        "  ".join("-" * w for w in widths),
    ]
    for row in rows:
        lines.append("  ".join(cell.ljust(widths[i]) for i, cell in enumerate(row)).rstrip())
    return "\n".join(lines) + "\n"


def _apply_mode(course: Course, mode: str) -> Course:
    return course.without_overrides() if mode == MODE_CANONICAL else course


# ---------------------------------------------------------------------------
# estimate
# ---------------------------------------------------------------------------

def cmd_estimate(args: argparse.Namespace) -> int:
    catalog = data_io.load_catalog(args.catalog)
    courses = data_io.load_curriculum(args.curriculum, catalog)
    results = [bloom_difficulty(_apply_mode(c, args.mode), catalog) for c in courses]

    if args.format == "json":
        payload = {
            "mode": args.mode,
            "courses": [
                {
                    "course_code": r.course_code,
                    "raw_total": r.raw_total,
                    "criteria_count": r.criteria_count,
                    "max_total": r.max_total,
                    "difficulty_index": float(round_half_away(r.di)),
                }
                for r in results
            ],
        }
        _emit(json.dumps(payload, indent=2) + "\n", args.output)
        return 0

    rows = [
        (r.course_code, str(r.raw_total), str(r.criteria_count), str(r.max_total), format_fixed(r.di), args.mode)
        for r in results
    ]
    headers = ("course_code", "raw_total", "criteria_count", "max_total", "difficulty_index", "mode")
    if args.format == "csv":
        _emit(data_io.csv_text(headers, rows), args.output)
    else:
        _emit(_table(headers, rows), args.output)
    return 0


# ---------------------------------------------------------------------------
# grades
# ---------------------------------------------------------------------------

def cmd_grades(args: argparse.Namespace) -> int:
    grades = data_io.load_grades(args.grades)
    max_generations = max((len(h.generations) for h in grades.values()), default=0)

    if args.format == "json":
        payload = {
            "courses": [
                {
                    "course_code": history.course_code,
                    "generation_count": len(history.generations),
                    "generations": [
                        {
                            "label": g.label,
                            "kind": g.kind.value,
                            "value": float(g.value),
                            "di": float(g.di()),
                        }
                        for g in history.generations
                    ],
                    "grade_di": float(round_half_away(grade_difficulty(history))),
                }
                for history in grades.values()
            ]
        }
        _emit(json.dumps(payload, indent=2) + "\n", args.output)
        return 0

    headers = (
        ("course_code",)
        + tuple(f"generation_{i + 1}" for i in range(max_generations))
        + ("generation_count", "grade_di")
    )
    rows = []
    for history in grades.values():
        cells = [format_fixed(g.di()) for g in history.generations]
        cells += [""] * (max_generations - len(cells))
        rows.append(
            (history.course_code, *cells, str(len(history.generations)),
             format_fixed(grade_difficulty(history)))
        )
    if args.format == "csv":
        _emit(data_io.csv_text(headers, rows), args.output)
    else:
        _emit(_table(headers, rows), args.output)
    return 0


# ---------------------------------------------------------------------------
# validate
# ---------------------------------------------------------------------------

def _course_dis(course: Course, catalog: CriterionCatalog, history: GradeHistory, full_precision: bool):
    estimated = bloom_difficulty(course, catalog).di
    actual = grade_difficulty(history)
    if not full_precision:
        estimated = round_half_away(estimated)
        actual = round_half_away(actual)
    return actual, estimated


def cmd_validate(args: argparse.Namespace) -> int:
    bundle = data_io.load_bundle(args.catalog, args.curriculum, args.grades)
    policy = _POLICIES[args.policy]

    missing = bundle.courses_without_grades()
    if missing and args.strict:
        print(
            f"error: no grade history for course(s): {', '.join(missing)}",
            file=sys.stderr,
        )
        return 1
    for code in missing:
        _warn(f"no grade history for course {code}; excluded from validation")
    for code in bundle.unmatched_grade_codes():
        _warn(f"grade history for unknown course {code}; not validated")

    comparisons = []
    finals = {}
    for course in bundle.courses:
        if course.code in missing:
            continue
        effective = _apply_mode(course, args.mode)
        actual, estimated = _course_dis(
            effective, bundle.catalog, bundle.grades[course.code], args.full_precision
        )
        comparisons.append(compare(actual, estimated, course.code))
        finals[course.code] = final_difficulty(estimated, actual, policy, course.code)
    report = summarize(comparisons, args.tolerance)

    if args.plot_data is not None:
        data_io.write_plot_data(report, args.plot_data)

    if args.format == "csv":
        _emit(data_io.render_report_csv(report), args.output)
    elif args.format == "json":
        payload = {
            "mode": args.mode,
            "policy": policy.value,
            "comparison_precision": "full" if args.full_precision else "rounded",
            "tolerance": float(report.tolerance),
            "accuracy": float(report.accuracy),
            "courses_within_tolerance": sum(
                1 for c in report.comparisons if c.abs_error <= report.tolerance
            ),
            "course_count": len(report.comparisons),
            "mean_actual": float(format_fixed(report.mean_actual)),
            "mean_estimated": float(format_fixed(report.mean_estimated)),
            "mean_abs_error": float(format_fixed(report.mean_abs_error)),
            "mean_squared_error": float(report.mean_squared_error),
            "courses": [
                {
                    "course_code": c.course_code,
                    "actual_di": float(c.actual_di),
                    "estimated_di": float(c.estimated_di),
                    "abs_error": float(c.abs_error),
                    "squared_error": float(c.squared_error),
                    "final_di": float(finals[c.course_code].final_di),
                }
                for c in report.comparisons
            ],
            "excluded_courses": list(missing),
            "unmatched_grades": list(bundle.unmatched_grade_codes()),
            "inputs": [
                {"role": role, "path": path, "sha256": digest}
                for role, path, digest in bundle.provenance
            ],
        }
        _emit(json.dumps(payload, indent=2) + "\n", args.output)
    else:
        headers = ("course_code", "actual_di", "estimated_di", "abs_error", "final_di")
        rows = [
            (
                c.course_code,
                format_fixed(c.actual_di),
                format_fixed(c.estimated_di),
                format_fixed(c.abs_error),
                format_fixed(finals[c.course_code].final_di),
            )
            for c in report.comparisons
        ]
        rows.append(
            (
                data_io.AVERAGE_LABEL,
                format_fixed(report.mean_actual),
                format_fixed(report.mean_estimated),
                format_fixed(report.mean_abs_error),
                "",
            )
        )
        summary = (
            f"mode: {args.mode}  policy: {policy.value}\n"
            f"accuracy: {float(report.accuracy):.3f} at tolerance {format_fixed(report.tolerance)}"
            f" ({sum(1 for c in report.comparisons if c.abs_error <= report.tolerance)}"
            f"/{len(report.comparisons)} courses)\n"
        )
        _emit(_table(headers, rows) + summary, args.output)
    return 0


# ---------------------------------------------------------------------------
# map-outcomes
# ---------------------------------------------------------------------------

def cmd_map_outcomes(args: argparse.Namespace) -> int:
    statements = data_io.load_statements(args.statements)
    if args.lexicon is not None:
        lexicon = data_io.load_lexicon(args.lexicon)
    else:
        lexicon = data_io.default_lexicon()

    entries = []
    for statement in statements:
        result = map_outcome(statement, lexicon, suffix_rule=args.suffix_rule)
        draft_rubric = None
        if result.levels:
            draft_rubric = sum(level.weight for level in result.levels)
        entries.append((statement, result, draft_rubric))

    if args.format == "json":
        payload = {
            "suffix_rule": args.suffix_rule,
            "statements": [
                {
                    "criterion_id": stmt.criterion_id,
                    "levels": [lvl.label for lvl in sorted(res.levels, key=lambda l: l.weight)],
                    "matched": [
                        {"verb": verb, "level": lvl.label} for verb, lvl in res.matched
                    ],
                    "ambiguous_verbs": list(res.ambiguous_verbs),
                    "unmatched_tokens": res.unmatched_tokens_count,
                    "draft_rubric": rubric,
                    "status": "ok" if res.levels else "needs-review",
                }
                for stmt, res, rubric in entries
            ],
        }
        _emit(json.dumps(payload, indent=2) + "\n", args.output)
        return 0

    headers = ("criterion_id", "levels", "matched", "draft_rubric", "unmatched_tokens", "ambiguous", "status")
    rows = [
        (
            stmt.criterion_id,
            "|".join(lvl.label for lvl in sorted(res.levels, key=lambda l: l.weight)),
            "|".join(f"{verb}:{lvl.label}" for verb, lvl in res.matched),
            "" if rubric is None else str(rubric),
            str(res.unmatched_tokens_count),
            "|".join(res.ambiguous_verbs),
            "ok" if res.levels else "needs-review",
        )
        for stmt, res, rubric in entries
    ]
    if args.format == "csv":
        _emit(data_io.csv_text(headers, rows), args.output)
    else:
        _emit(_table(headers, rows), args.output)
    return 0


# ---------------------------------------------------------------------------
# fixtures
# ---------------------------------------------------------------------------

def cmd_fixtures(args: argparse.Namespace) -> int:
    written = data_io.copy_fixtures(args.dest)
    sys.stdout.write("".join(f"{path}\n" for path in written))
    return 0


_COMMANDS = {
    "estimate": cmd_estimate,
    "grades": cmd_grades,
    "validate": cmd_validate,
    "map-outcomes": cmd_map_outcomes,
    "fixtures": cmd_fixtures,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except CourseDifficultyError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
