#!/usr/bin/env python3
"""
ODE/IM Lab
Command-line entry point
"""
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / 'src'))

from cli.main import main

if __name__ == "__main__":
    sys.exit(main())
