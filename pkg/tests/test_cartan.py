import logging

import numpy as np
import pytest

from cartan import (
    AlgebraKind, Phases, cartan_data, closed_form_masses, coxeter_check, dual_coxeter, incidence_matrix, pf_vector,
    pf_from_incidence,
)
from core.errors import DomainError

E6_TABLE = [1.0, np.sin(np.pi / 6) / np.sin(np.pi / 12), np.sin(np.pi / 4) / np.sin(np.pi / 12), np.sqrt(2.0),
            np.sin(np.pi / 6) / np.sin(np.pi / 12), 1.0]


def test_parse_names():
    assert AlgebraKind.parse('A3') == AlgebraKind('A', 3)
    assert AlgebraKind.parse('d_4') == AlgebraKind('D', 4)
    assert AlgebraKind.parse(' E8 ').name == 'E8'


@pytest.mark.parametrize('text', ['B3', 'A0', 'D2', 'E9', 'A', '4A'])
def test_parse_rejects(text):
    with pytest.raises(DomainError):
        AlgebraKind.parse(text)


def test_cartan_matrix_of_chains():
    data = cartan_data('A3')
    np.testing.assert_array_equal(data.C, [[2, -1, 0], [-1, 2, -1], [0, -1, 2]])
    assert data.neighbours(2) == [1, 3]
    assert data.parity == (0, 1, 0)


def test_d_and_e_branch_nodes():
    d5 = incidence_matrix(AlgebraKind('D', 5))
    assert d5[2, 3] == 1 and d5[2, 4] == 1 and d5[3, 4] == 0
    e6 = cartan_data('E6')
    assert e6.neighbours(3) == [2, 4, 5]
    e8 = cartan_data('E8')
    assert e8.neighbours(5) == [4, 6, 7]


@pytest.mark.parametrize('name, h', [('A1', 2), ('A4', 5), ('D4', 6), ('D7', 12), ('E6', 12), ('E7', 18), ('E8', 30)])
def test_dual_coxeter(name, h):
    assert dual_coxeter(AlgebraKind.parse(name)) == h


@pytest.mark.parametrize('name', [f'A{n}' for n in range(1, 9)] + [f'D{n}' for n in range(3, 9)] + ['E6', 'E7', 'E8'])
def test_masses_match_closed_forms(name):
    kind = AlgebraKind.parse(name)
    pf = pf_vector(cartan_data(kind))
    np.testing.assert_allclose(pf, closed_form_masses(kind), rtol=0, atol=1e-12)
    assert pf[0] == pytest.approx(1.0, abs=1e-15)


def test_e6_branch_node_is_sqrt2():
    np.testing.assert_allclose(pf_vector(cartan_data('E6')), E6_TABLE, atol=1e-12)


def test_d5_second_node():
    pf = pf_vector(cartan_data('D5'))
    assert pf[1] == pytest.approx(np.sin(2 * np.pi / 8) / np.sin(np.pi / 8), abs=1e-12)


@pytest.mark.parametrize('name', ['A2', 'D6', 'E7'])
def test_coxeter_identity(name):
    result = coxeter_check(cartan_data(name))
    assert result['residual'] < 1e-12
    assert result['eigenvalue'] == pytest.approx(result['expected'], abs=1e-14)


def test_phases_fractional_powers():
    ph = Phases(3, 1.0)
    assert ph.Omega_pow(0.5) == pytest.approx(np.exp(1j * np.pi / 2))
    assert ph.Omega_pow(0.5) ** 2 == pytest.approx(ph.Omega)
    assert ph.omega ** 6 == pytest.approx(1.0)
    assert ph.gamma == pytest.approx(np.exp(2j * np.pi / 3))
    with pytest.raises(DomainError):
        Phases(3, 0.0)


def test_cached_data_is_read_only():
    data = cartan_data('A3')
    with pytest.raises(ValueError):
        data.C[0, 0] = 5


def test_singular_rayleigh_step_keeps_power_iterate(monkeypatch, caplog):
    from cartan import masses

    def singular(*args, **kwargs):
        raise np.linalg.LinAlgError("singular matrix")

    monkeypatch.setattr(masses.np.linalg, 'solve', singular)
    with caplog.at_level(logging.DEBUG, logger='cartan.masses'):
        v = pf_from_incidence(incidence_matrix(AlgebraKind('A', 3)))
    np.testing.assert_allclose(v, [1.0, np.sqrt(2.0), 1.0], rtol=1e-8)
    assert 'Rayleigh step singular' in caplog.text
