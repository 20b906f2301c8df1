"""Entropy estimators over type frequency data.

All values are in nats unless converted with :func:`convert_unit`.

Zhang's estimator is available in three algorithmic forms that must agree:

``zhang_naive``
    Evaluates every product from scratch for every type, ``O(V T^2)``. Kept
    as a small-scale oracle.
``zhang_linear``
    One running product per type, ``T(V - 1) + V`` loop operations.
``zhang_spectrum``
    One running product per *occupied frequency*, ``W(T + 1) - sum f``
    operations. This is the default everywhere.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, replace
from itertools import islice
from typing import Optional, Union

from . import kernels
from .cost import InstrumentationCounters
from .errors import DegenerateCoverage, EmptyInput, InvalidFrequency
from .spectrum import (
    CompactSpectrum,
    FrequencySpectrum,
    TypeFrequencyTable,
    build_spectrum,
    expand,
)

__all__ = [
    "Unit",
    "Estimator",
    "EntropyEstimate",
    "plugin_entropy",
    "chao_shen_entropy",
    "q_naive",
    "q_linear",
    "zhang_naive",
    "zhang_linear",
    "zhang_spectrum",
    "convert_unit",
    "estimate",
]

LN2 = math.log(2.0)


class Unit(str, enum.Enum):
    NATS = "nats"
    BITS = "bits"


class Estimator(str, enum.Enum):
    PLUGIN = "plugin"
    CHAO_SHEN = "chao_shen"
    ZHANG_NAIVE = "zhang_naive"
    ZHANG_LINEAR = "zhang_linear"
    ZHANG_SPECTRUM = "zhang_spectrum"


@dataclass(frozen=True)
class EntropyEstimate:
    value: float
    unit: Unit
    estimator: Estimator
    counters: Optional[InstrumentationCounters] = None

    def __float__(self) -> float:
        return self.value


def _table(data) -> TypeFrequencyTable:
    if isinstance(data, TypeFrequencyTable):
        return data
    if isinstance(data, (FrequencySpectrum, CompactSpectrum)):
        return expand(data)
    return TypeFrequencyTable(data)


def _nonneg(x: float) -> float:
    # folds -0.0 into 0.0
    return x + 0.0


def plugin_entropy(table) -> EntropyEstimate:
    """Maximum-likelihood entropy ``-sum p ln p`` with ``p = f / T``.

    Biased downward on finite samples.
    """
    table = _table(table)
    t = table.t_tokens
    h = 0.0
    for f in table.freqs:
        p = f / t
        h -= p * math.log(p)
    return EntropyEstimate(_nonneg(h), Unit.NATS, Estimator.PLUGIN)


def chao_shen_entropy(table) -> EntropyEstimate:
    """Coverage-adjusted Horvitz-Thompson entropy estimate (Chao & Shen, 2003).

    Coverage is estimated by ``1 - n(1)/T``; relative frequencies are shrunk
    by that coverage and each term is divided by its inclusion probability
    ``1 - (1 - p)^T``.

    Raises:
        DegenerateCoverage: every type is a hapax, so coverage is zero.
    """
    table = _table(table)
    t = table.t_tokens
    singletons = sum(1 for f in table.freqs if f == 1)
    if singletons == t:
        raise DegenerateCoverage("all types are hapax legomena; coverage estimate is 0")
    coverage = 1.0 - singletons / t
    h = 0.0
    for f in table.freqs:
        pa = coverage * f / t
        h -= pa * math.log(pa) / (1.0 - (1.0 - pa) ** t)
    return EntropyEstimate(_nonneg(h), Unit.NATS, Estimator.CHAO_SHEN)


def _check_ft(f: int, t: int) -> None:
    if f < 1 or t < 1:
        raise InvalidFrequency(f"need 1 <= f <= t, got f={f}, t={t}")
    if f > t:
        raise InvalidFrequency(f"f={f} exceeds t={t}")


def q_naive(f: int, t: int) -> float:
    """Series ``Q(f)`` with every product recomputed from its first factor.

    ``O((t - f)^2)`` multiplications. Reference for :func:`q_linear` only.
    """
    _check_ft(f, t)
    c = 1 - f
    factors = [1.0 + c / (t - 1 - j) for j in range(t - f)]
    q = 0.0
    for v in range(1, t - f + 1):
        # fresh left-to-right product of the first v factors every time
        q += math.prod(islice(factors, v)) / v
    return q


def q_linear(f: int, t: int, *, exact_exit: bool = True, backend: Optional[str] = None) -> float:
    """Series ``Q(f)`` in a single pass, carrying the running product forward."""
    _check_ft(f, t)
    q, _, _ = kernels.get(backend).q_single(f, t, exact_exit)
    return q


def zhang_naive(table) -> EntropyEstimate:
    """Zhang's estimator evaluated type by type with :func:`q_naive`.

    Quadratic in ``T`` per type: meant for cross-checking on small inputs.
    Not instrumented (``counters`` is None).
    """
    table = _table(table)
    t = table.t_tokens
    k = 0.0
    for f in table.freqs:
        k += f * q_naive(f, t)
    return EntropyEstimate(_nonneg(k / t), Unit.NATS, Estimator.ZHANG_NAIVE)


def zhang_linear(table, *, counters: bool = True, exact_exit: bool = True,
                 backend: Optional[str] = None) -> EntropyEstimate:
    """Zhang's estimator with one running-product pass per type.

    Constant extra memory; ``T(V - 1) + V`` loop operations.
    """
    table = _table(table)
    t = table.t_tokens
    k, executed, elided = kernels.get(backend).linear_sum(table.freqs, t, exact_exit)
    c = None
    if counters:
        c = InstrumentationCounters(
            inner_iterations=table.v_types + executed + elided,
            q_invocations=table.v_types,
            elided_iterations=elided,
        )
    return EntropyEstimate(_nonneg(k / t), Unit.NATS, Estimator.ZHANG_LINEAR, c)


def zhang_spectrum(data: Union[FrequencySpectrum, CompactSpectrum, TypeFrequencyTable],
                   *, counters: bool = True, exact_exit: bool = True,
                   backend: Optional[str] = None) -> EntropyEstimate:
    """Zhang's estimator evaluated once per occupied frequency.

    Accepts a spectrum in either form, or a raw table (the spectrum is then
    built first, costing one operation per type, reported as
    ``spectrum_build_ops``).
    """
    build_ops = 0
    if isinstance(data, CompactSpectrum):
        rows, t = data.rows, data.t_tokens
    elif isinstance(data, FrequencySpectrum):
        rows, t = data.rows(), data.t_tokens
    else:
        table = data if isinstance(data, TypeFrequencyTable) else TypeFrequencyTable(data)
        spec = build_spectrum(table)
        build_ops = table.v_types
        rows, t = spec.rows(), spec.t_tokens
    if not rows:
        raise EmptyInput("spectrum is empty")
    qs, executed, elided = kernels.get(backend).q_many([f for f, _ in rows], t, exact_exit)
    k = 0.0
    for (f, n), q in zip(rows, qs):
        k += (n * f) * q
    c = None
    if counters:
        c = InstrumentationCounters(
            inner_iterations=len(rows) + executed + elided,
            q_invocations=len(rows),
            spectrum_build_ops=build_ops,
            elided_iterations=elided,
        )
    return EntropyEstimate(_nonneg(k / t), Unit.NATS, Estimator.ZHANG_SPECTRUM, c)


def convert_unit(estimate: EntropyEstimate, target) -> EntropyEstimate:
    target = Unit(target)
    if target is estimate.unit:
        return estimate
    if target is Unit.BITS:
        return replace(estimate, value=estimate.value / LN2, unit=Unit.BITS)
    return replace(estimate, value=estimate.value * LN2, unit=Unit.NATS)


_DISPATCH = {
    Estimator.PLUGIN: plugin_entropy,
    Estimator.CHAO_SHEN: chao_shen_entropy,
    Estimator.ZHANG_NAIVE: zhang_naive,
    Estimator.ZHANG_LINEAR: zhang_linear,
    Estimator.ZHANG_SPECTRUM: zhang_spectrum,
}


def estimate(data, estimator=Estimator.ZHANG_SPECTRUM, unit=Unit.NATS) -> EntropyEstimate:
    """Run ``estimator`` on ``data`` and return the result in ``unit``."""
    result = _DISPATCH[Estimator(estimator)](data)
    return convert_unit(result, unit)
