import pytest
from hypothesis import given
from hypothesis import strategies as st

from fastent.cost import (
    Algorithm,
    CostPrediction,
    InstrumentationCounters,
    predict,
    predict_a_prime,
    predict_a_prime_sum,
    predict_c,
    predict_c_sum,
    predict_saving,
    verify_counters,
)
from fastent.errors import CountersUnavailable, InvalidInput
from fastent.estimators import zhang_linear, zhang_naive, zhang_spectrum
from fastent.spectrum import TypeFrequencyTable, build_spectrum, compact

freq_lists = st.lists(st.integers(1, 200), min_size=1, max_size=50)


def test_small_values():
    spec = build_spectrum([2, 1, 1])
    assert predict_a_prime(4, 3) == 4 * 2 + 3 == 11
    assert predict_c(spec) == 2 * 5 - 3 == 7
    assert predict_saving(spec) == 4


def test_a_prime_guards():
    with pytest.raises(InvalidInput):
        predict_a_prime(3, 4)
    with pytest.raises(InvalidInput):
        predict_a_prime(0, 0)


def test_saving_guard():
    with pytest.raises(InvalidInput):
        predict_saving(build_spectrum([1, 2, 3]), v=2)


@given(freq_lists)
def test_closed_forms_equal_direct_sums(freqs):
    table = TypeFrequencyTable(freqs)
    spec = build_spectrum(table)
    assert predict_a_prime(table.t_tokens, table.v_types) == predict_a_prime_sum(table)
    assert predict_c(spec) == predict_c_sum(spec) == predict_c(compact(spec))
    assert predict_saving(spec) == predict_a_prime_sum(table) - predict_c_sum(spec)


@given(freq_lists)
def test_counters_match(freqs):
    table = TypeFrequencyTable(freqs)
    assert verify_counters(zhang_linear(table), predict(Algorithm.A_PRIME, table))
    assert verify_counters(zhang_spectrum(table), predict("c", table))
    est = zhang_spectrum(table)
    assert est.counters.executed_iterations + est.counters.elided_iterations == est.counters.inner_iterations


def test_predict_fields():
    p = predict("c", [3, 1, 1])
    assert isinstance(p, CostPrediction)
    assert p.saving_vs_a_prime == predict_saving(build_spectrum([3, 1, 1]))
    assert predict("a_prime", [3, 1, 1]).saving_vs_a_prime is None


def test_verify_counters_integer_and_mismatch():
    est = zhang_spectrum([2, 1, 1])
    assert verify_counters(est, 7)
    assert not verify_counters(est, 8)


def test_naive_counters_unavailable():
    with pytest.raises(CountersUnavailable):
        verify_counters(zhang_naive([2, 1]), 3)


def test_counters_defaults():
    c = InstrumentationCounters()
    assert (c.inner_iterations, c.q_invocations, c.spectrum_build_ops, c.elided_iterations) == (0, 0, 0, 0)
