#!/usr/bin/env python3
"""
ODE/IM Lab Serialization
JSON documents with {"re", "im"} complex numbers and pandas CSV tables
"""
import json
from pathlib import Path

import numpy as np
import pandas as pd

SCHEMA_VERSION = 'odeim/1'


def encode(value):
    """Recursively convert numpy/complex values into JSON-ready objects"""
    if isinstance(value, dict):
        return {str(k): encode(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [encode(v) for v in value]
    if isinstance(value, np.ndarray):
        return [encode(v) for v in value.tolist()]
    if isinstance(value, (complex, np.complexfloating)):
        return {'re': float(value.real), 'im': float(value.imag)}
    if isinstance(value, (np.bool_, bool)):
        return bool(value)
    if isinstance(value, np.integer):
        return int(value)
    if isinstance(value, np.floating):
        return float(value)
    if isinstance(value, Path):
        return str(value)
    return value


def decode_complex(obj):
    """Inverse of encode for a single complex entry"""
    return complex(obj['re'], obj['im'])


def make_document(command, payload):
    """Wrap a payload in the versioned envelope"""
    document = {'schema': SCHEMA_VERSION, 'command': command}
    document.update(encode(payload))
    return document


def write_json(document, output=None):
    """Write a document to a path, or return the text when no path is given"""
    text = json.dumps(document, indent=2)
    if output is None:
        return text
    Path(output).parent.mkdir(parents=True, exist_ok=True)
    with open(output, 'w') as f:
        f.write(text)
    return text


def complex_columns(frame_data, name, values):
    """Split a complex column into Re/Im columns"""
    values = np.asarray(values, dtype=complex)
    frame_data[f'Re {name}'] = values.real
    frame_data[f'Im {name}'] = values.imag
    return frame_data


def write_csv(frame, output=None):
    """Write a DataFrame as CSV; return the text when no path is given"""
    if output is None:
        return frame.to_csv(index=False)
    Path(output).parent.mkdir(parents=True, exist_ok=True)
    frame.to_csv(output, index=False)
    return None


def trace_frame(trace):
    """CSV layout of a SolutionTrace: Re x, Im x, then Re/Im of each component"""
    xs = np.array([x for x, _ in trace.samples], dtype=complex)
    values = np.array([v for _, v in trace.samples], dtype=complex)
    data = {'Re x': xs.real, 'Im x': xs.imag}
    for c in range(values.shape[1] if values.ndim == 2 else 0):
        complex_columns(data, f'psi{c + 1}', values[:, c])
    return pd.DataFrame(data)
