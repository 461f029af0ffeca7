import pytest

from gdinv.ensembles import make_rng
from gdinv.suites import (
    SUITE_NAMES,
    characterization_trial,
    decomposition_trial,
    drazin_by_linear_system,
    worked_example_checks,
    run_suite,
    run_trial,
)
from gdinv.fixtures import A1, A1_DRAZIN
from gdinv.matrix import Matrix


@pytest.mark.parametrize("suite", [s for s in SUITE_NAMES if s != "paper-examples"])
def test_suites_pass_small(suite):
    summary = run_suite(suite, 12, [2, 3, 4], seed=5)
    assert summary.failures == 0, summary.to_dict()


def test_summary_independent_of_jobs():
    one = run_suite("decomposition-formulas", 16, [3, 4], seed=8, jobs=1)
    two = run_suite("decomposition-formulas", 16, [3, 4], seed=8, jobs=2)
    assert one == two


def test_replay_matches_run():
    assert run_trial("orders", 3, 4, [3]) == run_trial("orders", 3, 4, [3])


def test_worked_examples_report_the_printed_1gd_entry():
    checks = worked_example_checks()
    failed = [k for k, ok in checks.items() if not ok]
    assert failed == ["ex2.1gd"]
    summary = run_suite("paper-examples", 1, [4], seed=0)
    assert summary.failures == 1 and summary.failed_clauses == {"ex2.1gd": 1}
    assert summary.to_dict()["firstFailureTrial"] == 0


def test_characterization_trial_covers_complex():
    assert characterization_trial(make_rng(1), 3, 1, 2, complex_entries=True) == []


@pytest.mark.parametrize("mode", ["random", "zero", "absorbed"])
def test_decomposition_modes(mode):
    for t in range(5):
        assert decomposition_trial(make_rng(t), 4, 1, 2, mode) == []


def test_drazin_linear_system():
    assert drazin_by_linear_system(A1) == A1_DRAZIN
    N = Matrix([[0, 1], [0, 0]])
    assert drazin_by_linear_system(N) == Matrix.zeros(2, 2)


def test_unknown_suite():
    with pytest.raises(KeyError):
        run_suite("nope", 1, [2], 0)
