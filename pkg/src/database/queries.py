#!/usr/bin/env python3
"""
ODE/IM Results Store Queries
Recording check runs and summarising them
"""
import json
import logging

from sqlalchemy import desc, func

from core.serialization import encode
from .models import CheckRun, ZeroRecord, get_session

logger = logging.getLogger(__name__)


class ResultsStore:
    """Session-owning interface to the results store"""

    def __init__(self):
        self.session = get_session()

    def add_run(self, report):
        """Add a run from a report dict; returns the new id or None on failure"""
        try:
            E = complex(report.get('E') or 0.0)
            payload = report.get('payload')
            run = CheckRun(
                command=report['command'],
                algebra=report.get('algebra'),
                node=report.get('node'),
                M=report.get('M'),
                E_re=E.real,
                E_im=E.imag,
                tol=report.get('tol'),
                max_residual=report.get('max_residual'),
                passed=bool(report.get('passed', False)),
                exit_code=report.get('exit_code', 0),
                payload=json.dumps(encode(payload)) if payload is not None else None,
            )
            self.session.add(run)
            self.session.commit()
            return run.id
        except Exception as e:
            self.session.rollback()
            logger.error("❌ Database error: %s", e)
            return None

    def add_zeros(self, run_id, node, zeros, residuals=()):
        """Attach QZero records (with optional Bethe residuals) to a run"""
        residuals = list(residuals) + [None] * (len(zeros) - len(residuals))
        try:
            for z, r in zip(zeros, residuals):
                self.session.add(ZeroRecord(
                    run_id=run_id, node=node, E_re=z.E.real, E_im=z.E.imag, q_abs=z.abs_value,
                    bethe_residual=abs(r) if r is not None else None, refined=z.refined,
                ))
            self.session.commit()
            return True
        except Exception as e:
            self.session.rollback()
            logger.error("❌ Zero record error: %s", e)
            return False

    def recent_runs(self, limit=20):
        return self.session.query(CheckRun).order_by(desc(CheckRun.timestamp), desc(CheckRun.id)).limit(limit).all()

    def runs_by_command(self, command, limit=50):
        return self.session.query(CheckRun).filter(CheckRun.command == command).order_by(
            desc(CheckRun.timestamp)).limit(limit).all()

    def failed_runs(self):
        return self.session.query(CheckRun).filter(CheckRun.passed.is_(False)).order_by(desc(CheckRun.timestamp)).all()

    def zeros_for_run(self, run_id):
        return self.session.query(ZeroRecord).filter(ZeroRecord.run_id == run_id).order_by(ZeroRecord.E_re).all()

    def statistics(self):
        """Counts per command, pass rate and worst residual"""
        total = self.session.query(func.count(CheckRun.id)).scalar() or 0
        passed = self.session.query(func.count(CheckRun.id)).filter(CheckRun.passed.is_(True)).scalar() or 0
        by_command = self.session.query(CheckRun.command, func.count(CheckRun.id)).group_by(CheckRun.command).all()
        worst = self.session.query(func.max(CheckRun.max_residual)).scalar()
        return {
            'total': total,
            'passed': passed,
            'pass_rate': passed / total if total else 0.0,
            'by_command': dict(by_command),
            'worst_residual': worst,
            'zeros': self.session.query(func.count(ZeroRecord.id)).scalar() or 0,
        }

    def close(self):
        self.session.close()


def save_report(report, zeros=None, residuals=()):
    """Quick function to store a report (and its zeros)"""
    store = ResultsStore()
    run_id = store.add_run(report)
    if run_id is not None and zeros:
        store.add_zeros(run_id, report.get('node'), zeros, residuals)
    store.close()
    return run_id
