"""Suite registry sanity: builders, dispatch, parallel determinism."""

import pytest

from mldeg.checks import build_suite, run_suite, run_task, suite_names, task_label


def test_suite_names():
    names = suite_names()
    assert "worked" in names
    assert "all" in names
    assert len(names) == len(set(names))


def test_unknown_suite():
    with pytest.raises(ValueError):
        build_suite("no-such-suite")


def test_task_labels():
    assert task_label(("psi_paths", (0, 3))) == "psi_paths {0,3}"
    assert task_label(("nrs_sym_line", 4, 2)) == "nrs_sym_line 4 2"
    assert task_label(("conormal_line",)) == "conormal_line"


def test_run_task_pass_and_fail():
    ok = run_task(("phi_anchor", 3, 2, 2))
    assert ok["ok"] and ok["detail"] == ""
    bad = run_task(("phi_anchor", 3, 2, 999))
    assert not bad["ok"]
    assert "999" in bad["detail"]


def test_worked_and_conics_pass():
    for name in ("worked", "conics"):
        results, failures = run_suite(name)
        assert results and not failures


def test_small_sweeps_pass():
    results, failures = run_suite("nrs-sym", nmax=4)
    assert len(results) == 6 and not failures
    results, failures = run_suite("pataki", nmax=3)
    assert not failures
    results, failures = run_suite("fundamental", nmax=4)
    assert not failures


def test_caps_shrink_suites():
    full = build_suite("duality")
    small = build_suite("duality", nmax=3)
    assert len(small) < len(full)
    assert all(t[1] <= 3 for t in small)


def test_parallel_matches_serial():
    serial, _ = run_suite("duality", nmax=4, jobs=1)
    parallel, _ = run_suite("duality", nmax=4, jobs=3)
    assert serial == parallel


def test_failure_surfaces_counterexample():
    results, failures = run_suite("worked")
    assert not failures
    # A deliberately wrong expectation must come back with a dump.
    res = run_task(("psi_paths", (0, 2), 4))
    assert not res["ok"]
    assert "{0,2}" in res["detail"]
