import pytest

from database import ResultsStore, init_store, save_report
from spectral import QZero


@pytest.fixture
def store(store_url):
    init_store(store_url)
    store = ResultsStore()
    yield store
    store.close()


def report(command, passed, residual, **extra):
    return {'command': command, 'algebra': 'A2', 'node': 1, 'M': 1.0, 'E': 0.5 + 0.1j, 'tol': 1e-10,
            'max_residual': residual, 'passed': passed, 'exit_code': 0 if passed else 1, **extra}


def test_add_run_and_statistics(store):
    first = store.add_run(report('psicheck', True, 2e-9, payload={'residuals': [1e-9, 2e-9]}))
    store.add_run(report('psicheck', False, 3e-5))
    store.add_run(report('bethe', True, 1e-7))
    assert first is not None

    stats = store.statistics()
    assert stats['total'] == 3
    assert stats['passed'] == 2
    assert stats['pass_rate'] == pytest.approx(2 / 3)
    assert stats['by_command'] == {'psicheck': 2, 'bethe': 1}
    assert stats['worst_residual'] == pytest.approx(3e-5)

    failed = store.failed_runs()
    assert [run.max_residual for run in failed] == [pytest.approx(3e-5)]
    assert len(store.runs_by_command('psicheck')) == 2
    assert store.recent_runs(limit=1)[0].command == 'bethe'
    assert store.recent_runs()[-1].E_im == pytest.approx(0.1)


def test_zeros_are_attached_to_runs(store):
    run_id = store.add_run(report('bethe', True, 1e-6))
    zeros = [QZero(E=7.0 + 0j, value=1e-12, refined=True, iterations=5, scale=1.0),
             QZero(E=3.0 + 0j, value=2e-12, refined=True, iterations=4, scale=1.0)]
    assert store.add_zeros(run_id, 1, zeros, [1e-6 + 1e-7j])
    records = store.zeros_for_run(run_id)
    assert [r.E_re for r in records] == [3.0, 7.0]
    assert records[1].bethe_residual == pytest.approx(abs(1e-6 + 1e-7j))
    assert records[0].bethe_residual is None
    assert store.statistics()['zeros'] == 2


def test_broken_report_rolls_back(store):
    assert store.add_run({'algebra': 'A2'}) is None
    assert store.add_run(report('masses', True, 0.0)) is not None
    assert store.statistics()['total'] == 1


def test_save_report(store_url):
    init_store(store_url)
    zero = QZero(E=3.0 + 0j, value=0j, refined=True, iterations=3, scale=1.0)
    run_id = save_report(report('bethe', True, 1e-8), zeros=[zero], residuals=[2e-8])
    store = ResultsStore()
    assert [r.E_re for r in store.zeros_for_run(run_id)] == [3.0]
    store.close()
