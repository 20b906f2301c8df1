"""Closed-form operation counts and the instrumentation that must match them.

One elementary operation is one execution of the running-product loop body
(multiply ``R``, add ``R/v`` to ``Q``), plus one set-up operation per
evaluation of ``Q``. Under that convention evaluating ``Q(f)`` for a text of
``T`` tokens costs exactly ``T - f + 1`` operations, and the totals are

* per type (A')              ``T(V - 1) + V``
* per occupied frequency (C) ``W(T + 1) - sum of occupied f``

Both are exact integers and are checked against measured counters with
integer equality.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional, Union

from .errors import CountersUnavailable, EmptyInput, InvalidInput
from .spectrum import CompactSpectrum, FrequencySpectrum, TypeFrequencyTable, as_spectrum

__all__ = [
    "Algorithm",
    "InstrumentationCounters",
    "CostPrediction",
    "predict_a_prime",
    "predict_a_prime_sum",
    "predict_c",
    "predict_c_sum",
    "predict_saving",
    "predict",
    "verify_counters",
]


class Algorithm(str, enum.Enum):
    A_PRIME = "a_prime"
    C = "c"


@dataclass(frozen=True)
class InstrumentationCounters:
    """Per-call work counters attached to an estimate.

    ``inner_iterations`` counts set-up plus loop bodies. Loop bodies skipped
    by the exact early exit are included (they provably leave the sum
    unchanged) and are also reported separately in ``elided_iterations``;
    with ``exact_exit=False`` nothing is skipped and ``elided_iterations``
    is 0.
    """

    inner_iterations: int = 0
    q_invocations: int = 0
    spectrum_build_ops: int = 0
    elided_iterations: int = 0

    @property
    def executed_iterations(self) -> int:
        return self.inner_iterations - self.elided_iterations


@dataclass(frozen=True)
class CostPrediction:
    algorithm: Algorithm
    predicted_iterations: int
    saving_vs_a_prime: Optional[int] = None


def predict_a_prime(t: int, v: int) -> int:
    """``T(V - 1) + V`` operations for the per-type algorithm."""
    if v < 1 or t < 1:
        raise InvalidInput(f"need 1 <= V <= T, got T={t}, V={v}")
    if v > t:
        raise InvalidInput(f"V={v} exceeds T={t}")
    return t * (v - 1) + v


def predict_a_prime_sum(table: TypeFrequencyTable) -> int:
    """Direct per-type sum ``sum_i (T - f_i + 1)``."""
    t = table.t_tokens
    return sum(t - f + 1 for f in table.freqs)


def _rows(spectrum):
    if isinstance(spectrum, CompactSpectrum):
        return spectrum.rows
    if isinstance(spectrum, FrequencySpectrum):
        return spectrum.rows()
    raise TypeError(f"expected a spectrum, got {type(spectrum).__name__}")


def predict_c(spectrum: Union[CompactSpectrum, FrequencySpectrum]) -> int:
    """``W(T + 1) - sum of occupied f`` operations for the spectrum algorithm."""
    rows = _rows(spectrum)
    if not rows:
        raise EmptyInput("spectrum is empty")
    t = spectrum.t_tokens
    return len(rows) * (t + 1) - sum(f for f, _ in rows)


def predict_c_sum(spectrum: Union[CompactSpectrum, FrequencySpectrum]) -> int:
    """Direct sum over occupied frequencies of ``T - f + 1``."""
    t = spectrum.t_tokens
    return sum(t - f + 1 for f, _ in _rows(spectrum))


def predict_saving(spectrum: Union[CompactSpectrum, FrequencySpectrum], v: Optional[int] = None) -> int:
    """Operations saved by the spectrum algorithm: ``(V - W)(T + 1) - T + sum f``.

    ``v`` defaults to the number of types in ``spectrum``.
    """
    rows = _rows(spectrum)
    if not rows:
        raise EmptyInput("spectrum is empty")
    if v is None:
        v = sum(n for _, n in rows)
    w = len(rows)
    if w > v:
        raise InvalidInput(f"W={w} exceeds V={v}")
    t = spectrum.t_tokens
    return (v - w) * (t + 1) - t + sum(f for f, _ in rows)


def predict(algorithm, data) -> CostPrediction:
    """Build a :class:`CostPrediction` for a table or spectrum."""
    algorithm = Algorithm(algorithm)
    spec = as_spectrum(data)
    if algorithm is Algorithm.A_PRIME:
        return CostPrediction(algorithm, predict_a_prime(spec.t_tokens, spec.v_types))
    return CostPrediction(algorithm, predict_c(spec), predict_saving(spec))


def verify_counters(estimate, prediction) -> bool:
    """True iff the measured iteration count equals the prediction exactly.

    ``prediction`` may be a :class:`CostPrediction` or a bare integer.
    """
    counters = getattr(estimate, "counters", None)
    if counters is None:
        raise CountersUnavailable(f"estimate from {estimate.estimator} carries no counters")
    expected = prediction.predicted_iterations if isinstance(prediction, CostPrediction) else int(prediction)
    return counters.inner_iterations == expected
