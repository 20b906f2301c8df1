"""Predicted versus measured cost of the per-type and per-frequency algorithms."""

from __future__ import annotations

import statistics
import time
from dataclasses import dataclass
from typing import Optional

from .cost import predict_a_prime, predict_c, predict_saving
from .errors import InvalidInput
from .estimators import zhang_linear, zhang_spectrum
from .spectrum import build_spectrum
from .zipf import ZipfGeneratorConfig, zipf_generate

__all__ = ["BenchRow", "BENCH_COLUMNS", "bench_table", "run_bench", "median_wall_ns"]

BENCH_COLUMNS = (
    "T", "V", "W",
    "predicted_a_prime", "predicted_c", "predicted_saving",
    "measured_a_prime", "measured_c", "iteration_ratio",
    "wall_ns_a_prime", "wall_ns_c", "speedup",
)


@dataclass(frozen=True)
class BenchRow:
    t_tokens: int
    v_types: int
    w_distinct: int
    predicted_a_prime: int
    predicted_c: int
    predicted_saving: int
    measured_a_prime: int
    measured_c: int
    wall_ns_a_prime: Optional[int] = None
    wall_ns_c: Optional[int] = None

    @property
    def iteration_ratio(self) -> float:
        return self.predicted_a_prime / self.predicted_c

    @property
    def speedup(self) -> Optional[float]:
        if self.wall_ns_a_prime is None or self.wall_ns_c is None:
            return None
        return self.wall_ns_a_prime / max(self.wall_ns_c, 1)

    def cells(self) -> list[str]:
        def opt(x):
            return "NA" if x is None else (str(x) if isinstance(x, int) else repr(x))

        return [
            str(self.t_tokens), str(self.v_types), str(self.w_distinct),
            str(self.predicted_a_prime), str(self.predicted_c), str(self.predicted_saving),
            str(self.measured_a_prime), str(self.measured_c), repr(self.iteration_ratio),
            opt(self.wall_ns_a_prime), opt(self.wall_ns_c), opt(self.speedup),
        ]


def median_wall_ns(fn, reps: int) -> int:
    """Median wall time of ``reps`` calls; the caller is expected to have warmed up."""
    times = []
    for _ in range(reps):
        start = time.perf_counter_ns()
        fn()
        times.append(time.perf_counter_ns() - start)
    return int(statistics.median(times))


def bench_table(table, *, reps: int = 5, wall: bool = True, backend: Optional[str] = None) -> BenchRow:
    if reps < 1:
        raise InvalidInput(f"reps must be >= 1, got {reps}")
    spec = build_spectrum(table)
    # the counted runs double as warm-up for the timed ones
    lin = zhang_linear(table, backend=backend)
    spc = zhang_spectrum(spec, backend=backend)
    wall_a = wall_c = None
    if wall:
        wall_a = median_wall_ns(lambda: zhang_linear(table, counters=False, backend=backend), reps)
        wall_c = median_wall_ns(lambda: zhang_spectrum(spec, counters=False, backend=backend), reps)
    return BenchRow(
        t_tokens=table.t_tokens,
        v_types=table.v_types,
        w_distinct=spec.w_distinct,
        predicted_a_prime=predict_a_prime(table.t_tokens, table.v_types),
        predicted_c=predict_c(spec),
        predicted_saving=predict_saving(spec),
        measured_a_prime=lin.counters.inner_iterations,
        measured_c=spc.counters.inner_iterations,
        wall_ns_a_prime=wall_a,
        wall_ns_c=wall_c,
    )


def run_bench(config: ZipfGeneratorConfig, *, reps: int = 5, wall: bool = True,
              backend: Optional[str] = None) -> BenchRow:
    """Generate one Zipfian sample and benchmark both algorithms on it."""
    return bench_table(zipf_generate(config), reps=reps, wall=wall, backend=backend)
