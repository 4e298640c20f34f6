import pytest

from sloccinv import run_selftest


def test_three_qubit_suite_full():
    report = run_selftest(3, trials=1000, seed=42)
    assert report.passed, report.as_dict()
    names = {r.name for r in report.results}
    assert names == {
        "similarity_law",
        "charpoly_invariance",
        "closed_form_2x2",
        "tangle_relation",
    }


def test_four_qubit_suite_full():
    report = run_selftest(4, trials=1000, seed=42)
    assert report.passed, report.as_dict()
    names = {r.name for r in report.results}
    assert {"scalar_fmatrix", "degree2_charpoly", "quartic_a1", "quartic_a0"} <= names
    assert report.notes  # the degree-6 normalization note is always present


def test_selftest_reproducible():
    a = run_selftest(4, trials=50, seed=7).as_dict()
    b = run_selftest(4, trials=50, seed=7).as_dict()
    assert a == b


def test_selftest_validation():
    with pytest.raises(ValueError):
        run_selftest(5, trials=10, seed=1)
    with pytest.raises(ValueError):
        run_selftest(3, trials=0, seed=1)


def test_tol_override_can_fail():
    report = run_selftest(3, trials=10, seed=1, tol_override=1e-30)
    assert not report.passed
