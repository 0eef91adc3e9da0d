from .commands import (
    COMMANDS, CommandResult, cmd_masses, cmd_repcheck, cmd_solve, cmd_psicheck, cmd_q, cmd_bethe, cmd_airy,
    cmd_store, parse_complex, parse_ell, parse_grid, parse_window, random_generic_ell,
)
from .main import build_parser, main

__all__ = [
    'COMMANDS', 'CommandResult', 'cmd_masses', 'cmd_repcheck', 'cmd_solve', 'cmd_psicheck', 'cmd_q', 'cmd_bethe',
    'cmd_airy', 'cmd_store', 'parse_complex', 'parse_ell', 'parse_grid', 'parse_window', 'random_generic_ell',
    'build_parser', 'main',
]
