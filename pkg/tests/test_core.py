import json

import numpy as np
import pytest

from connection import SolutionTrace
from core.errors import (
    AccuracyError, DegenerateConfigurationError, DomainError, IntegrationError, NonGenericError, OdeImError,
    RadiusError, UnsupportedRepresentationError, ConstructionError,
)
from core.serialization import SCHEMA_VERSION, decode_complex, encode, make_document, trace_frame, write_csv, write_json
from core.settings import Settings, load_settings


def test_exit_codes():
    codes = [cls.exit_code for cls in (
        DomainError, UnsupportedRepresentationError, ConstructionError, IntegrationError,
        NonGenericError, AccuracyError, RadiusError, DegenerateConfigurationError,
    )]
    assert codes == [2, 3, 4, 5, 6, 7, 8, 9]
    assert all(issubclass(cls, OdeImError) for cls in (DomainError, RadiusError))
    assert isinstance(DomainError("x"), ValueError)


def test_integration_error_reports_location():
    assert "at x =" in str(IntegrationError("stopped", location=1.5 + 0.5j))
    assert str(IntegrationError("stopped")) == "stopped"


def test_missing_config_gives_defaults(tmp_path):
    assert load_settings(tmp_path / 'absent.json') == Settings()


def test_config_overlay(tmp_path):
    path = tmp_path / 'lab.json'
    path.write_text(json.dumps({'solver': {'tol': 1e-12}, 'spectral': {'zero_window': [0, 10]}}))
    settings = load_settings(path)
    assert settings.solver.tol == 1e-12
    assert settings.spectral.zero_window == (0, 10)
    assert settings.airy == Settings().airy


@pytest.mark.parametrize('raw', [{'solver': {'tolerance': 1.0}}, {'plotting': {}}])
def test_config_rejects_unknown_keys(tmp_path, raw):
    path = tmp_path / 'lab.json'
    path.write_text(json.dumps(raw))
    with pytest.raises(DomainError):
        load_settings(path)


def test_encode_complex_and_numpy():
    doc = encode({'z': 1 + 2j, 'arr': np.array([1.0, 2.0]), 'n': np.int64(3), 'flag': np.bool_(True)})
    assert doc == {'z': {'re': 1.0, 'im': 2.0}, 'arr': [1.0, 2.0], 'n': 3, 'flag': True}
    assert decode_complex(doc['z']) == 1 + 2j
    json.dumps(doc)


def test_document_envelope(tmp_path):
    document = make_document('masses', {'algebra': 'E8', 'values': np.ones(2)})
    assert document['schema'] == SCHEMA_VERSION
    assert document['command'] == 'masses'
    out = tmp_path / 'out' / 'doc.json'
    write_json(document, out)
    assert json.loads(out.read_text())['algebra'] == 'E8'


def test_trace_frame():
    trace = SolutionTrace('V', 0.0, [(2.0 + 0j, np.array([1.0, 1j])), (1.0 + 0j, np.array([2.0, 0.5]))])
    frame = trace_frame(trace)
    assert list(frame.columns) == ['Re x', 'Im x', 'Re psi1', 'Im psi1', 'Re psi2', 'Im psi2']
    assert frame['Im psi2'].tolist() == [1.0, 0.0]
    assert write_csv(frame).splitlines()[0] == 'Re x,Im x,Re psi1,Im psi1,Re psi2,Im psi2'
