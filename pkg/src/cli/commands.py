#!/usr/bin/env python3
"""
ODE/IM Lab Commands
One function per subcommand: validate, dispatch, collect a serialisable result
"""
import logging
from dataclasses import dataclass, field

import numpy as np
import pandas as pd

from cartan import AlgebraKind, cartan_data, closed_form_masses, coxeter_check, pf_vector
from connection import ConnectionParams, ell_matrix, psi_k, subdominant_solution
from core.errors import DomainError, NonGenericError, UnsupportedRepresentationError
from core.serialization import complex_columns, trace_frame
from database import ResultsStore, init_store
from gairy import airy_vector, compare_with_connection, contour_order
from psisystem import psi_system_residual, spin_node_consistency
from repkit import (
    fundamental_rep, maximal_eigenpair, normalized_family, twist_identity_residual, validate_rep,
)
from spectral import build_qtable, check_resonance, qq_residual, quasifatta_residuals, weyl_data

logger = logging.getLogger(__name__)

MASS_THRESHOLD = 1e-12
PSI_THRESHOLD = 1e-6
QQ_THRESHOLD = 1e-6
BETHE_THRESHOLD = 1e-4
AIRY_THRESHOLD = 1e-8
MAX_ELL_DRAWS = 10


@dataclass
class CommandResult:
    """What a command hands back to the front end"""
    command: str
    payload: dict
    frame: pd.DataFrame = None
    passed: bool = True
    max_residual: float = None
    lines: list = field(default_factory=list)
    zeros: list = field(default_factory=list)
    residuals: list = field(default_factory=list)


# -- argument parsing ---------------------------------------------------------

def parse_complex(text):
    """'1.5', '-2i', '0.3+0.1i' or '0.3+0.1j'"""
    cleaned = text.strip().replace(' ', '').replace('i', 'j')
    try:
        return complex(cleaned)
    except ValueError:
        raise DomainError(f"cannot parse complex number '{text}'")


def parse_ell(text, rank):
    if text is None:
        return tuple([0j] * rank)
    values = tuple(parse_complex(t) for t in text.split(','))
    if len(values) != rank:
        raise DomainError(f"--ell needs {rank} values, got {len(values)}")
    return values


def parse_grid(text):
    """'a:b:n' (linspace) or a comma-separated list"""
    if ':' in text:
        parts = text.split(':')
        if len(parts) != 3:
            raise DomainError(f"grid '{text}' is not of the form start:stop:count")
        start, stop, count = float(parts[0]), float(parts[1]), int(parts[2])
        if count < 1:
            raise DomainError("grid count must be positive")
        return list(np.linspace(start, stop, count))
    return [float(t) for t in text.split(',') if t.strip()]


def parse_complex_grid(text):
    if ':' in text:
        return [complex(v) for v in parse_grid(text)]
    return [parse_complex(t) for t in text.split(',') if t.strip()]


def parse_window(text):
    parts = text.split(':')
    if len(parts) != 2:
        raise DomainError(f"window '{text}' is not of the form lo:hi")
    lo, hi = float(parts[0]), float(parts[1])
    if hi < lo:
        raise DomainError(f"empty window {text}")
    return lo, hi


def _kind(args):
    return AlgebraKind.parse(args.algebra)


def _node(args, kind):
    node = getattr(args, 'node', None) or 1
    if not 1 <= node <= kind.rank:
        raise DomainError(f"node {node} outside 1..{kind.rank} for {kind}")
    return node


def random_generic_ell(kind, rng, attempts=MAX_ELL_DRAWS, settings=None):
    """Draw l from the unit polydisc until every fundamental rep is non-resonant"""
    family = normalized_family(kind, settings)
    for attempt in range(attempts):
        radius = np.sqrt(rng.uniform(size=kind.rank))
        angle = rng.uniform(0.0, 2.0 * np.pi, size=kind.rank)
        ell = tuple(complex(v) for v in radius * np.exp(1j * angle))
        try:
            for i in cartan_data(kind).nodes:
                check_resonance(np.linalg.eigvals(ell_matrix(family.reps[i], ell)))
                weyl_data(kind, i, ell, settings=settings)
            return ell
        except NonGenericError as e:
            logger.debug("draw %d rejected: %s", attempt + 1, e)
    raise NonGenericError(f"no generic l found in {attempts} draws", pair=None)


def _params(args, kind, settings, rng=None):
    if getattr(args, 'random_ell', False):
        ell = random_generic_ell(kind, rng or np.random.default_rng(args.seed), settings=settings)
    else:
        ell = parse_ell(getattr(args, 'ell', None), kind.rank)
    E = parse_complex(getattr(args, 'E', None) or '0')
    tol = args.tol if getattr(args, 'tol', None) is not None else settings.solver.tol
    return ConnectionParams(kind=kind, M=args.M, E=E, ell=ell, tol=tol)


def _run_info(kind, params, node=None):
    return {
        'algebra': kind.name, 'node': node, 'M': params.M, 'E': params.E, 'ell': list(params.ell), 'tol': params.tol,
    }


# -- commands -----------------------------------------------------------------

def cmd_masses(args, settings):
    """Perron-Frobenius masses against their closed forms"""
    kind = _kind(args)
    data = cartan_data(kind)
    pf = pf_vector(data)
    closed = closed_form_masses(kind)
    deviation = np.abs(pf - closed)
    cox = coxeter_check(data)
    rows = [
        {'node': i, 'mass': pf[i - 1], 'closed_form': closed[i - 1], 'deviation': deviation[i - 1]}
        for i in data.nodes
    ]
    max_dev = float(deviation.max())
    passed = max_dev < MASS_THRESHOLD and cox['residual'] < MASS_THRESHOLD
    lines = [f"node {r['node']}: {r['mass']:.15f}" for r in rows]
    return CommandResult(
        command='masses',
        payload={'algebra': kind.name, 'hvee': data.hvee, 'masses': rows, 'max_deviation': max_dev, 'coxeter': cox},
        frame=pd.DataFrame(rows), passed=passed, max_residual=max_dev, lines=lines,
    )


def cmd_repcheck(args, settings):
    """Chevalley and grading residuals, spectrum of Lambda and twist identity of V^(i)"""
    kind = _kind(args)
    node = _node(args, kind)
    rep = fundamental_rep(kind, node, settings)
    residuals = validate_rep(rep, settings.repkit.chevalley_threshold)
    spectrum = maximal_eigenpair(rep, settings=settings)
    if not spectrum.has_maximal:
        raise UnsupportedRepresentationError(f"{rep.label}: Lambda has no maximal eigenvalue")
    pair = spectrum.maximal
    twist = twist_identity_residual(rep, 0.5)
    worst = max(residuals['max'], twist)
    rows = [{'relation': key, 'residual': value} for key, value in residuals.items()]
    return CommandResult(
        command='repcheck',
        payload={
            'algebra': kind.name, 'node': node, 'label': rep.label, 'dim': rep.dim, 'residuals': residuals,
            'eigenvalues': list(spectrum.eigenvalues), 'maximal_eigenvalue': pair.value, 'psi': pair.psi,
            'gap': pair.gap, 'twist_residual': twist, 'notes': list(rep.notes),
        },
        frame=pd.DataFrame(rows), passed=worst < 1e-10, max_residual=worst,
        lines=[f"{rep.label}: dim {rep.dim}, lambda = {pair.value:.12f}, gap {pair.gap:.3e}"] + list(rep.notes),
    )


def cmd_solve(args, settings):
    """Subdominant solution Psi_k^(i) sampled on an x grid"""
    kind = _kind(args)
    node = _node(args, kind)
    params = _params(args, kind, settings)
    family = normalized_family(kind, settings)
    rep, pair = family.reps[node], family.eigen[node]
    xs = parse_grid(args.x)
    if args.k:
        trace = psi_k(rep, params, args.k, xs, eigenpair=pair, settings=settings)
    else:
        trace = subdominant_solution(rep, params, xs, eigenpair=pair, settings=settings)
    payload = {
        **_run_info(kind, params, node), 'k': args.k, 'label': trace.rep_label,
        'samples': [{'x': x, 'psi': v} for x, v in trace.samples], 'meta': trace.meta,
    }
    return CommandResult(command='solve', payload=payload, frame=trace_frame(trace),
                         lines=[f"{len(trace.samples)} samples of {trace.rep_label}"])


def cmd_psicheck(args, settings):
    """Psi-system residuals on the x grid for one node or all"""
    kind = _kind(args)
    params = _params(args, kind, settings)
    nodes = [_node(args, kind)] if args.node else list(cartan_data(kind).nodes)
    xs = parse_grid(args.x) if args.x else None
    reports = [psi_system_residual(kind, i, params, xs, settings) for i in nodes]
    worst = max(r.max_residual for r in reports)
    payload = {**_run_info(kind, params), 'reports': [r.to_dict() for r in reports], 'max_residual': worst}
    if kind.family == 'D' and not args.node:
        payload['spin_consistency'] = spin_node_consistency(kind, params, xs, settings)
        worst = max(worst, payload['spin_consistency'])
    rows = [{'node': r.node, 'x': x, 'residual': res} for r in reports for x, res in zip(r.x_grid, r.residuals)]
    lines = [f"node {r.node}: max residual {r.max_residual:.3e}" for r in reports]
    return CommandResult(command='psicheck', payload=payload, frame=pd.DataFrame(rows),
                         passed=worst < PSI_THRESHOLD, max_residual=worst, lines=lines)


def cmd_q(args, settings):
    """Q and Q~ sampled on an energy grid, optionally with QQ~ residuals"""
    kind = _kind(args)
    node = _node(args, kind)
    params = _params(args, kind, settings)
    Es = parse_complex_grid(args.grid)
    table = build_qtable(kind, node, params, Es, bethe=False, threads=args.threads, chamber=args.chamber,
                         settings=settings)
    payload = {**_run_info(kind, params, node), **table.to_dict()}
    passed, worst = True, None
    if args.qq:
        res = [abs(qq_residual(kind, node, params, E, args.chamber, relative=True, settings=settings)) for E in Es]
        worst = max(res, default=0.0)
        passed = worst < QQ_THRESHOLD
        payload['qq_residuals'] = res
    return CommandResult(command='q', payload=payload, frame=table.to_frame(), passed=passed, max_residual=worst,
                         lines=[f"{len(Es)} samples of Q^({node})"])


def cmd_bethe(args, settings):
    """Zeros of Q^(i) on a real window with Bethe and QQ~ residuals at each"""
    kind = _kind(args)
    node = _node(args, kind)
    params = _params(args, kind, settings)
    window = parse_window(args.window) if args.window else settings.spectral.zero_window
    certify = getattr(args, 'certify', False)
    table = build_qtable(kind, node, params, (), window=window, max_zeros=args.max_zeros, bethe=True,
                         threads=args.threads, chamber=args.chamber, grid_points=args.grid_points,
                         certify=certify, settings=settings)
    quasi = []
    for z in table.zeros:
        if z.refined:
            up_down = quasifatta_residuals(kind, node, params, z.E, args.chamber, settings=settings)
            quasi.append(max(abs(r) for r in up_down))
        else:
            quasi.append(None)
    residuals = [abs(r) for r in table.residuals if r is not None]
    worst = max(residuals, default=0.0)
    passed = bool(table.zeros) and all(z.refined for z in table.zeros) and worst < BETHE_THRESHOLD
    if table.certificate is not None:
        passed = passed and table.certificate.consistent
    payload = {**_run_info(kind, params, node), **table.to_dict(), 'window': list(window),
               'quasifatta': quasi, 'max_bethe': worst}
    rows = [{'E': z.E.real, 'abs_Q': z.abs_value, 'refined': z.refined,
             'bethe': abs(r) if r is not None else np.nan} for z, r in zip(table.zeros, table.residuals)]
    lines = [f"E* = {row['E']:.10f}  |bethe| = {row['bethe']:.2e}" for row in rows]
    if table.certificate is not None:
        lines.append(f"argument principle: {table.certificate.winding} zeros, {table.certificate.found} located")
    return CommandResult(command='bethe', payload=payload, frame=pd.DataFrame(rows), passed=passed,
                         max_residual=worst, lines=lines, zeros=table.zeros, residuals=table.residuals)


def cmd_airy(args, settings):
    """g-Airy components on an x grid, optionally checked against the ODE solver"""
    family = args.family.upper()
    n = args.n
    contour_order(family, n)
    xs = parse_grid(args.x)
    values = np.array([airy_vector(family, n, x, args.k, settings=settings) for x in xs])
    data = {'x': xs}
    for j in range(values.shape[1]):
        complex_columns(data, f'Psi{j + 1}', values[:, j])
    payload = {'family': family, 'n': n, 'k': args.k,
               'values': [{'x': x, 'psi': v} for x, v in zip(xs, values)]}
    passed, worst = True, None
    if args.compare:
        comparison = compare_with_connection(family, n, xs, args.k, args.tol, settings)
        worst = comparison['max_deviation']
        passed = worst < AIRY_THRESHOLD
        payload['comparison'] = comparison
    return CommandResult(command='airy', payload=payload, frame=pd.DataFrame(data), passed=passed,
                         max_residual=worst, lines=[f"{family}-Airy, n = {n}: {len(xs)} points"])


def cmd_store(args, settings):
    """Summary of the results store"""
    init_store(settings.store.url)
    store = ResultsStore()
    stats = store.statistics()
    recent = [
        {'id': r.id, 'timestamp': r.timestamp.isoformat(), 'command': r.command, 'algebra': r.algebra,
         'max_residual': r.max_residual, 'passed': r.passed}
        for r in store.recent_runs(args.limit)
    ]
    store.close()
    lines = [f"{cmd}: {count}" for cmd, count in stats['by_command'].items()]
    return CommandResult(command='store', payload={'statistics': stats, 'recent': recent},
                         frame=pd.DataFrame(recent), lines=lines)


COMMANDS = {
    'masses': cmd_masses,
    'repcheck': cmd_repcheck,
    'solve': cmd_solve,
    'psicheck': cmd_psicheck,
    'q': cmd_q,
    'bethe': cmd_bethe,
    'airy': cmd_airy,
    'store': cmd_store,
}
