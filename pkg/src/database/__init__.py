from .models import init_store, get_session, CheckRun, ZeroRecord
from .queries import ResultsStore, save_report

__all__ = [
    'init_store', 'get_session',
    'CheckRun', 'ZeroRecord',
    'ResultsStore', 'save_report',
]
