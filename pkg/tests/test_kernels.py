import os
import random
import subprocess
import sys

import pytest

from fastent import _pykernels, kernels

compiled = pytest.mark.skipif(kernels.compiled is None, reason="compiled backend not built")


def _cases(seed, n=150):
    rng = random.Random(seed)
    for _ in range(n):
        t = rng.choice([rng.randint(1, 50), rng.randint(1, 5000)])
        m = rng.randint(1, 40)
        yield [rng.randint(1, t) for _ in range(m)], t


@compiled
@pytest.mark.parametrize("exact_exit", [True, False])
def test_backends_bit_identical(exact_exit):
    c = kernels.compiled
    for fs, t in _cases(1):
        pq, pe, pl = _pykernels.q_many(fs, t, exact_exit)
        cq, ce, cl = c.q_many(fs, t, exact_exit)
        assert pq == cq
        assert pe + pl == ce + cl == sum(t - f for f in fs)
        assert _pykernels.linear_sum(fs, t, exact_exit)[0] == c.linear_sum(fs, t, exact_exit)[0]
        f = fs[0]
        assert _pykernels.q_single(f, t, exact_exit) == c.q_single(f, t, exact_exit)


@compiled
def test_compiled_accepts_array_input():
    from array import array

    assert kernels.compiled.q_many(array("q", [1, 2]), 10)[0] == kernels.compiled.q_many([1, 2], 10)[0]


def test_q_many_empty():
    assert _pykernels.q_many([], 10) == ([], 0, 0)
    if kernels.compiled is not None:
        assert kernels.compiled.q_many([], 10) == ([], 0, 0)


def test_get_backends():
    assert kernels.get("python") is _pykernels
    assert kernels.get(None) is kernels.active
    assert kernels.get("auto") is kernels.active
    with pytest.raises(ValueError):
        kernels.get("fortran")


def test_pure_python_env_forces_fallback():
    code = "from fastent import kernels; print(kernels.BACKEND)"
    env = dict(os.environ, FASTENT_PURE_PYTHON="1")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"


def test_pure_python_compiled_request_fails():
    code = "from fastent import kernels\ntry:\n    kernels.get('compiled')\nexcept ImportError:\n    print('missing')"
    env = dict(os.environ, FASTENT_PURE_PYTHON="1")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "missing"


def test_early_exit_elides_something_on_long_series():
    q, executed, elided = _pykernels.q_single(2000, 100_000)
    assert elided > 0
    assert executed + elided == 100_000 - 2000
    assert q == _pykernels.q_single(2000, 100_000, exact_exit=False)[0]


@compiled
def test_backend_benchmark_script_runs():
    from pathlib import Path

    script = Path(__file__).resolve().parent.parent / "benchmarks" / "bench_backends.py"
    out = subprocess.run([sys.executable, str(script), "--quick"], capture_output=True, text=True, timeout=300)
    assert out.returncode == 0, out.stderr
    lines = out.stdout.splitlines()
    assert lines[0].startswith("T\tV\tW\talgorithm")
    assert len(lines) == 3
