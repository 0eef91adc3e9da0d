#!/usr/bin/env python3
"""
ODE/IM Results Viewer
Query and view the results store
"""
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / 'src'))

from colorama import Fore, Style, init

from core.settings import load_settings
from database import ResultsStore, init_store

init(autoreset=True)


def main():
    settings = load_settings()
    init_store(settings.store.url)
    store = ResultsStore()

    print(f"\n{Fore.CYAN}{'='*70}")
    print(f"{Fore.CYAN}  🗄️  ODE/IM RESULTS VIEWER")
    print(f"{Fore.CYAN}{'='*70}\n")

    stats = store.statistics()
    print(f"{Fore.GREEN}📊 Overall Statistics:")
    print(f"   Runs: {stats['total']:,}")
    print(f"   Passed: {stats['passed']:,} ({stats['pass_rate']:.0%})")
    print(f"   Zeros recorded: {stats['zeros']:,}")
    if stats['worst_residual'] is not None:
        print(f"   Worst residual: {stats['worst_residual']:.3e}\n")

    if stats['by_command']:
        print(f"   {Fore.CYAN}By Command:")
        for command, count in stats['by_command'].items():
            print(f"      {command}: {count}")

    print(f"\n{Fore.MAGENTA}🧪 Recent Runs (Last 10):")
    recent = store.recent_runs(limit=10)
    if recent:
        print(f"\n   {'Time':<12} {'Command':<10} {'Algebra':<8} {'Node':<6} {'Residual':<12} {'Result':<8}")
        print(f"   {'-'*60}")
        for run in recent:
            color = Fore.GREEN if run.passed else Fore.RED
            residual = f"{run.max_residual:.2e}" if run.max_residual is not None else 'N/A'
            verdict = 'PASS' if run.passed else 'FAIL'
            print(f"   {run.timestamp.strftime('%H:%M:%S'):<12} {run.command:<10} {run.algebra or '-':<8} "
                  f"{run.node or '-':<6} {residual:<12} {color}{verdict:<8}{Style.RESET_ALL}")
            for zero in store.zeros_for_run(run.id)[:5]:
                bethe = f"{zero.bethe_residual:.1e}" if zero.bethe_residual is not None else 'N/A'
                print(f"      E* = {zero.E_re:.8f}  |Q| = {zero.q_abs:.1e}  bethe = {bethe}")
    else:
        print(f"   {Fore.YELLOW}No runs found in the results store")

    store.close()
    print(f"\n{Fore.CYAN}{'='*70}\n")


if __name__ == "__main__":
    main()
