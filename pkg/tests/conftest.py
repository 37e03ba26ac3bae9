from pathlib import Path

import pytest

from course_difficulty import data_io
from course_difficulty.taxonomy import canonical_catalog


@pytest.fixture(scope="session")
def catalog():
    return canonical_catalog()


@pytest.fixture(scope="session")
def fixture_dir(tmp_path_factory) -> Path:
    """The shipped fixture files, copied out so loaders see plain paths."""
    dest = tmp_path_factory.mktemp("fixtures")
    data_io.copy_fixtures(dest)
    return dest


@pytest.fixture(scope="session")
def asprinted_courses(catalog, fixture_dir):
    return data_io.load_curriculum(fixture_dir / "table2_asprinted.csv", catalog)


@pytest.fixture(scope="session")
def grade_histories(fixture_dir):
    return data_io.load_grades(fixture_dir / "table3_grades.csv")


@pytest.fixture(scope="session")
def default_lexicon():
    return data_io.default_lexicon()
