import pytest

from maxpicard.verify import CHECKS, verify_paper


def test_full_run_passes():
    results = verify_paper()
    assert [r.name for r in results] == [name for name, *_ in CHECKS]
    assert all(r.passed for r in results), [(r.name, r.detail) for r in results if not r.passed]


def test_corrupted_census_names_the_failure():
    results = verify_paper(["fixed_cases"], expected={"m13_census": {"E7": 2, "A1": 3, "A5": 2}})
    (r,) = results
    assert not r.passed and r.name == "fixed_cases" and "M13" in r.detail


def test_corrupted_precover_names_the_failure():
    bad = {"P1": ("A3", "l5")}
    (r,) = verify_paper(["coordinate_oracle"], expected={"family_a_precover": bad})
    assert not r.passed and "family-a" in r.detail


def test_group_filter():
    results = verify_paper(["geography"])
    assert results and {r.group for r in results} == {"geography"}


def test_unknown_filter():
    with pytest.raises(ValueError):
        verify_paper(["no_such_check"])
