#!/usr/bin/env python3
"""
ODE/IM Results Store Models
SQLAlchemy models for check runs and the zeros they certify
"""
import logging
from datetime import datetime

from sqlalchemy import Boolean, Column, DateTime, Float, ForeignKey, Integer, String, Text, create_engine
from sqlalchemy.orm import declarative_base, relationship, sessionmaker

from core.settings import DEFAULT_SETTINGS, BASE_DIR

logger = logging.getLogger(__name__)

Base = declarative_base()


class CheckRun(Base):
    """One CLI command execution and its verdict"""
    __tablename__ = 'check_runs'

    id = Column(Integer, primary_key=True, autoincrement=True)
    timestamp = Column(DateTime, nullable=False, index=True, default=datetime.now)
    command = Column(String(20), nullable=False, index=True)
    algebra = Column(String(10))
    node = Column(Integer)
    M = Column(Float)
    E_re = Column(Float)
    E_im = Column(Float)
    tol = Column(Float)

    max_residual = Column(Float)
    passed = Column(Boolean, default=False, index=True)
    exit_code = Column(Integer, default=0)
    payload = Column(Text)  # JSON document

    zeros = relationship('ZeroRecord', back_populates='run', cascade='all, delete-orphan')

    def __repr__(self):
        return f"<CheckRun {self.id}: {self.command} {self.algebra} @ {self.timestamp}>"


class ZeroRecord(Base):
    """A zero of Q^(i) found during a run"""
    __tablename__ = 'zero_records'

    id = Column(Integer, primary_key=True, autoincrement=True)
    run_id = Column(Integer, ForeignKey('check_runs.id'), nullable=False, index=True)
    node = Column(Integer, nullable=False)
    E_re = Column(Float, nullable=False)
    E_im = Column(Float, default=0.0)
    q_abs = Column(Float)
    bethe_residual = Column(Float)
    refined = Column(Boolean, default=True)

    run = relationship('CheckRun', back_populates='zeros')

    def __repr__(self):
        return f"<ZeroRecord {self.id}: node {self.node} E = {self.E_re:.6g}>"


_engine = None
Session = sessionmaker()


def init_store(url=None):
    """Bind the session factory to url (default: the configured SQLite file) and create all tables"""
    global _engine
    url = url or DEFAULT_SETTINGS.store.url
    if url.startswith('sqlite:///') and url != 'sqlite:///:memory:':
        (BASE_DIR / url[len('sqlite:///'):]).parent.mkdir(parents=True, exist_ok=True)
    _engine = create_engine(url, echo=False)
    Session.configure(bind=_engine)
    Base.metadata.create_all(_engine)
    logger.info("✅ Results store initialized: %s", url)
    return _engine


def get_session():
    """Get a new session, initialising the default store on first use"""
    if _engine is None:
        init_store()
    return Session()
