import pytest
from hypothesis import given
from hypothesis import strategies as st

from fastent.errors import EmptyInput, InvalidFrequency
from fastent.spectrum import (
    CompactSpectrum,
    FrequencySpectrum,
    TypeFrequencyTable,
    as_spectrum,
    build_spectrum,
    compact,
    expand,
    stats,
)

freq_lists = st.lists(st.integers(1, 300), min_size=1, max_size=60)


def test_build_spectrum_small():
    spec = build_spectrum([3, 3, 2, 1, 1, 1])
    assert spec.rows() == ((1, 3), (2, 1), (3, 2))
    assert (spec.t_tokens, spec.v_types, spec.w_distinct, spec.f_max) == (11, 6, 3, 3)
    assert spec.dense() == [0, 3, 1, 2]


def test_zero_counts_dropped_and_sorted():
    spec = FrequencySpectrum({5: 1, 2: 0, 1: 2})
    assert spec.rows() == ((1, 2), (5, 1))
    assert spec.t_tokens == 7


@pytest.mark.parametrize("bad", [[0], [1, -2], [1.5], ["x"], [True]])
def test_table_rejects_bad_frequencies(bad):
    with pytest.raises(InvalidFrequency):
        TypeFrequencyTable(bad)


def test_empty_inputs():
    with pytest.raises(EmptyInput):
        TypeFrequencyTable([])
    with pytest.raises(EmptyInput):
        FrequencySpectrum({3: 0})
    with pytest.raises(EmptyInput):
        CompactSpectrum([])


def test_t_must_agree():
    with pytest.raises(InvalidFrequency):
        FrequencySpectrum({1: 2}, t_tokens=3)
    with pytest.raises(InvalidFrequency):
        CompactSpectrum([(1, 2)], t_tokens=5)


def test_compact_rows_strictly_increasing():
    with pytest.raises(InvalidFrequency):
        CompactSpectrum([(2, 1), (2, 1)])
    with pytest.raises(InvalidFrequency):
        CompactSpectrum([(3, 1), (1, 1)])
    with pytest.raises(InvalidFrequency):
        CompactSpectrum([(1, 0)])


def test_integral_floats_accepted():
    assert TypeFrequencyTable([2.0, 1]).freqs == (2, 1)


def test_stats_ratios():
    s = stats(build_spectrum([4, 1, 1, 1]))
    assert (s.t_tokens, s.v_types, s.w_distinct, s.f_max) == (7, 4, 2, 4)
    assert s.w_over_v == 0.5
    assert s.fmax_over_v == 1.0
    assert s.fmax_over_t == 4 / 7
    assert stats(TypeFrequencyTable([4, 1, 1, 1])) == s


def test_as_spectrum_accepts_every_view():
    spec = build_spectrum([2, 2, 1])
    assert as_spectrum(spec) is spec
    assert as_spectrum(compact(spec)) == spec
    assert as_spectrum(TypeFrequencyTable([1, 2, 2])) == spec
    assert as_spectrum([2, 1, 2]) == spec


def test_immutable():
    spec = build_spectrum([1, 2])
    with pytest.raises(TypeError):
        spec.counts[1] = 5
    with pytest.raises(AttributeError):
        spec.t_tokens = 9


@given(freq_lists)
def test_expand_inverts_build(freqs):
    spec = build_spectrum(freqs)
    table = expand(spec)
    assert sorted(table.freqs) == sorted(freqs)
    assert list(table.freqs) == sorted(table.freqs)
    assert build_spectrum(table) == spec
    assert expand(compact(spec)) == table


@given(freq_lists)
def test_spectrum_sums(freqs):
    spec = build_spectrum(freqs)
    assert spec.t_tokens == sum(freqs)
    assert spec.v_types == len(freqs)
    assert spec.w_distinct == len(set(freqs))
    assert spec.f_max == max(freqs)
    assert hash(spec) == hash(build_spectrum(list(reversed(freqs))))
