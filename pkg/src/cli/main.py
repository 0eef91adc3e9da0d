#!/usr/bin/env python3
"""
ODE/IM Lab Command Line
Argument parsing, dispatch, output and exit codes
"""
import argparse
import logging
import sys

from core.console import banner, failure, info, setup_logging, success, warning
from core.errors import OdeImError
from core.serialization import make_document, write_csv, write_json
from core.settings import load_settings
from database import init_store, save_report
from .commands import COMMANDS

logger = logging.getLogger(__name__)

EXIT_THRESHOLD = 1


def _common(parser, ode=True):
    parser.add_argument('--algebra', type=str, required=True, help='A3, D4, E8, ...')
    parser.add_argument('--node', type=int, default=None, help='Dynkin node i (1-based)')
    if ode:
        parser.add_argument('--M', type=float, default=1.0, help='Potential exponent M')
        parser.add_argument('--E', type=str, default='0', help='Energy, e.g. 1.5 or 0.3+0.1i')
        parser.add_argument('--ell', type=str, default=None, help='Comma-separated l_1,...,l_n')
        parser.add_argument('--random-ell', action='store_true', help='Draw a generic l (see --seed)')
        parser.add_argument('--tol', type=float, default=None, help='ODE tolerance')


def build_parser():
    parser = argparse.ArgumentParser(prog='odeim', description='ODE/IM correspondence numerical laboratory')
    parser.add_argument('--output', type=str, default=None, help='Write JSON/CSV here instead of stdout')
    parser.add_argument('--format', choices=('json', 'csv'), default='json')
    parser.add_argument('--seed', type=int, default=0, help='Seed for randomised l')
    parser.add_argument('--threads', type=int, default=1, help='Parallelism over energy grids')
    parser.add_argument('--verbose', action='store_true')
    parser.add_argument('--record', action='store_true', help='Store the run in the results database')
    parser.add_argument('--config', type=str, default=None, help='Settings JSON (default config/lab_config.json)')
    sub = parser.add_subparsers(dest='command', required=True)

    p = sub.add_parser('masses', help='Perron-Frobenius masses')
    p.add_argument('--algebra', type=str, required=True)

    p = sub.add_parser('repcheck', help='Chevalley/grading residuals of V^(i)')
    _common(p, ode=False)

    p = sub.add_parser('solve', help='Subdominant solution on an x grid')
    _common(p)
    p.add_argument('--x', type=str, default='0.2:2:16', help='start:stop:count or a list')
    p.add_argument('--k', type=float, default=0.0, help='Rotation index of Psi_k')

    p = sub.add_parser('psicheck', help='Psi-system residuals')
    _common(p)
    p.add_argument('--x', type=str, default=None)

    p = sub.add_parser('q', help='Q and Q~ on an energy grid')
    _common(p)
    p.add_argument('--grid', type=str, default='0:10:11', help='start:stop:count or a list of complex E')
    p.add_argument('--chamber', type=str, default=None, help="'H' selects the grading chamber")
    p.add_argument('--qq', action='store_true', help='Also report QQ~-system residuals')

    p = sub.add_parser('bethe', help='Zeros of Q and Bethe residuals')
    _common(p)
    p.add_argument('--window', type=str, default=None, help='lo:hi (use --window=-30:0 for negative bounds)')
    p.add_argument('--max-zeros', type=int, default=None)
    p.add_argument('--grid-points', type=int, default=None)
    p.add_argument('--chamber', type=str, default=None)
    p.add_argument('--certify', action='store_true', help='Check the zero count by the argument principle')

    p = sub.add_parser('airy', help='Generalized Airy functions')
    p.add_argument('--family', choices=('A', 'D', 'a', 'd'), default='A')
    p.add_argument('--n', type=int, required=True, help='A: matrix size; D: rank')
    p.add_argument('--x', type=str, default='0.5:3:6')
    p.add_argument('--k', type=int, default=0)
    p.add_argument('--compare', action='store_true', help='Cross-validate against the ODE solver')
    p.add_argument('--tol', type=float, default=None)

    p = sub.add_parser('store', help='Results store statistics')
    p.add_argument('--limit', type=int, default=10)
    return parser


def emit(result, args):
    """Machine output on --output or stdout"""
    if args.format == 'csv':
        text = write_csv(result.frame, args.output)
    else:
        text = write_json(make_document(result.command, {
            **result.payload, 'passed': result.passed, 'max_residual': result.max_residual,
        }), args.output)
    if args.output is None and text:
        sys.stdout.write(text if text.endswith('\n') else text + '\n')


def record(result, exit_code, settings):
    """Store the run and its zeros"""
    init_store(settings.store.url)
    payload = result.payload
    report = {
        'command': result.command, 'algebra': payload.get('algebra'), 'node': payload.get('node'),
        'M': payload.get('M'), 'E': payload.get('E'), 'tol': payload.get('tol'),
        'max_residual': result.max_residual, 'passed': result.passed, 'exit_code': exit_code,
        'payload': payload,
    }
    run_id = save_report(report, result.zeros, result.residuals)
    if run_id is None:
        warning("run was not recorded")
    return run_id


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    setup_logging(args.verbose)

    try:
        settings = load_settings(args.config)
        banner(f"  ODE/IM LAB: {args.command}")
        result = COMMANDS[args.command](args, settings)
    except OdeImError as e:
        failure(f"{type(e).__name__}: {e}")
        return e.exit_code

    emit(result, args)
    for line in result.lines:
        info(f"   {line}")
    exit_code = 0 if result.passed else EXIT_THRESHOLD
    if result.max_residual is not None:
        message = f"max residual {result.max_residual:.3e}"
        if result.passed:
            success(message)
        else:
            failure(message + " above threshold")
    elif result.passed:
        success("done")
    if args.record and args.command != 'store':
        record(result, exit_code, settings)
    return exit_code


if __name__ == "__main__":
    sys.exit(main())
