"""Compiled versus pure-Python kernels on Zipfian samples.

    python3 benchmarks/bench_backends.py [--tokens N ...] [--reps R] [--quick]

Prints one TSV row per (sample, algorithm): executed loop bodies, median wall
time per backend, nanoseconds per loop body and the compiled speedup. Both
backends must return the identical float; a mismatch aborts the run.
"""

import argparse
import statistics
import sys
import time

from fastent import kernels
from fastent.estimators import zhang_linear, zhang_spectrum
from fastent.spectrum import build_spectrum
from fastent.zipf import ZipfGeneratorConfig, zipf_generate


def timed(fn, reps):
    fn()  # warm-up
    times = []
    result = None
    for _ in range(reps):
        start = time.perf_counter_ns()
        result = fn()
        times.append(time.perf_counter_ns() - start)
    return result, int(statistics.median(times))


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--types", type=int, default=2000)
    parser.add_argument("--alpha", type=float, default=1.1)
    parser.add_argument("--tokens", type=int, action="append")
    parser.add_argument("--reps", type=int, default=3)
    parser.add_argument("--seed", type=int, default=2016)
    parser.add_argument("--quick", action="store_true", help="tiny sizes, for smoke testing")
    args = parser.parse_args(argv)
    if kernels.compiled is None:
        print("compiled backend not available; build it with: python3 setup.py build_ext --inplace",
              file=sys.stderr)
        return 1
    tokens = args.tokens or ([2000] if args.quick else [5_000, 20_000])
    types = 300 if args.quick else args.types
    reps = 1 if args.quick else args.reps

    print("T\tV\tW\talgorithm\texecuted\twall_ns_python\twall_ns_compiled\tns_per_iter_python"
          "\tns_per_iter_compiled\tspeedup")
    for t in tokens:
        table = zipf_generate(ZipfGeneratorConfig(types, args.alpha, t, args.seed))
        spec = build_spectrum(table)
        algos = (("a_prime", lambda b: zhang_linear(table, backend=b)),
                 ("c", lambda b: zhang_spectrum(spec, backend=b)))
        for name, run in algos:
            py, py_ns = timed(lambda: run("python"), reps)
            cc, cc_ns = timed(lambda: run("compiled"), reps)
            if py.value != cc.value:
                print(f"backend mismatch on T={t} {name}: {py.value!r} != {cc.value!r}", file=sys.stderr)
                return 2
            # executed work differs slightly: the early exit is checked per block in the compiled loop
            ex_py = py.counters.executed_iterations
            ex_cc = cc.counters.executed_iterations
            print(f"{t}\t{table.v_types}\t{spec.w_distinct}\t{name}\t{ex_cc}\t{py_ns}\t{cc_ns}"
                  f"\t{py_ns / max(ex_py, 1):.2f}\t{cc_ns / max(ex_cc, 1):.2f}\t{py_ns / max(cc_ns, 1):.1f}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
