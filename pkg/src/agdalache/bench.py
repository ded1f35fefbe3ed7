"""Micro-benchmark CLI: alache-bench.

Scenarios:
  interrupt  - per-iteration latency of interrupting a long-sleeping
               future, alternating between the non-blocking fast path
               (al_future_try_put_interrupt) and the full-call baseline
               (ec_interrupt_full).  The fast path's median should not
               exceed the full path's.
  forkjoin   - fork/get round-trip latency for constant tasks.

Output is header-less CSV, one row per report:
  scenario,iterations,median_ns,p99_ns
"""

from __future__ import annotations

import argparse
import statistics
import sys
import time
from dataclasses import dataclass
from typing import Optional

from . import abi

# long enough that the sleep never finishes before the timed interrupt
_SLEEPER_DURATION_S = 3600


@dataclass(frozen=True)
class BenchReport:
    scenario: str
    iterations: int
    median_ns: int
    p99_ns: int

    def csv_row(self) -> str:
        return f"{self.scenario},{self.iterations},{self.median_ns},{self.p99_ns}"


def _report(scenario: str, samples_ns: list[int]) -> BenchReport:
    ordered = sorted(samples_ns)
    median = int(statistics.median(ordered))
    p99 = ordered[min(len(ordered) - 1, int(len(ordered) * 0.99))]
    return BenchReport(scenario, len(samples_ns), median, p99)


def bench_interrupt_latency(iterations: int) -> tuple[BenchReport, BenchReport]:
    """Time one interrupt call per fresh future on each path, alternating."""
    if iterations < 100:
        raise ValueError("interrupt benchmark needs at least 100 iterations")
    abi.al_init()
    app = abi.ec_init_app()
    fast: list[int] = []
    full: list[int] = []
    try:
        for i in range(iterations):
            fut = [0, 0]
            status = abi.ec_increase_async(app, _SLEEPER_DURATION_S, fut)
            assert status == abi.AL_OK
            if i % 2 == 0:
                start = time.perf_counter_ns()
                abi.al_future_try_put_interrupt(fut[0])
                fast.append(time.perf_counter_ns() - start)
                abi.al_future_get_int(fut)  # wait out the resolution
            else:
                start = time.perf_counter_ns()
                abi.ec_interrupt_full(fut)
                full.append(time.perf_counter_ns() - start)
            abi.al_handle_free(fut[1])
    finally:
        abi.al_handle_free(app)
    return _report("interrupt_fast", fast), _report("interrupt_full", full)


def bench_fork_join(iterations: int) -> BenchReport:
    """Fork constant-task futures and get each; report per-cycle latency."""
    if iterations < 1:
        raise ValueError("forkjoin benchmark needs at least 1 iteration")
    abi.al_init()
    app = abi.ec_init_app()
    samples: list[int] = []
    try:
        for _ in range(iterations):
            fut = [0, 0]
            start = time.perf_counter_ns()
            status = abi.ec_increase_async(app, 0, fut)
            assert status == abi.AL_OK
            status, _value = abi.al_future_get_int(fut)
            assert status == abi.AL_OK
            samples.append(time.perf_counter_ns() - start)
            abi.al_future_try_put_interrupt(fut[0])
            abi.al_handle_free(fut[1])
    finally:
        abi.al_handle_free(app)
    return _report("forkjoin", samples)


def _emit(reports: list[BenchReport], csv_path: Optional[str]) -> None:
    lines = "\n".join(r.csv_row() for r in reports) + "\n"
    if csv_path:
        with open(csv_path, "w") as f:
            f.write(lines)
    else:
        sys.stdout.write(lines)


def main(argv: Optional[list[str]] = None) -> int:
    parser = argparse.ArgumentParser(prog="alache-bench")
    sub = parser.add_subparsers(dest="scenario", required=True)
    for name in ("interrupt", "forkjoin"):
        p = sub.add_parser(name)
        p.add_argument("--iters", type=int, required=True)
        p.add_argument("--csv", default=None)
    args = parser.parse_args(argv)

    if args.scenario == "interrupt":
        if args.iters < 100:
            parser.error("--iters must be at least 100 for interrupt")
        reports = list(bench_interrupt_latency(args.iters))
    else:
        if args.iters < 1:
            parser.error("--iters must be at least 1 for forkjoin")
        reports = [bench_fork_join(args.iters)]
    _emit(reports, args.csv)
    return 0


if __name__ == "__main__":
    sys.exit(main())
