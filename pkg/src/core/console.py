#!/usr/bin/env python3
"""
ODE/IM Lab Console
Logging setup and colorama status lines for the command-line tools
"""
import logging
import sys

from colorama import Fore, Style, init

init(autoreset=True)


def setup_logging(verbose=False):
    """Configure root logging for a CLI run"""
    level = logging.DEBUG if verbose else logging.WARNING
    logging.basicConfig(
        level=level,
        format='%(asctime)s %(levelname)-7s %(name)s: %(message)s',
        stream=sys.stderr,
        force=True,
    )


def banner(title, stream=sys.stderr):
    print(f"{Fore.CYAN}{'=' * 60}", file=stream)
    print(f"{Fore.CYAN}{title}", file=stream)
    print(f"{Fore.CYAN}{'=' * 60}", file=stream)


def success(message, stream=sys.stderr):
    print(f"{Fore.GREEN}✅ {message}", file=stream)


def failure(message, stream=sys.stderr):
    print(f"{Fore.RED}❌ {message}", file=stream)


def warning(message, stream=sys.stderr):
    print(f"{Fore.YELLOW}⚠️  {message}", file=stream)


def info(message, stream=sys.stderr):
    print(f"{Style.BRIGHT}{message}", file=stream)
