import math
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st
from scipy import stats as sps

from fastent.analysis import (
    TextStatsRecord,
    format_records,
    format_summary,
    kendall_counts,
    kendall_tau,
    make_record,
    summarize,
    trend_report,
)
from fastent.errors import EmptyInput, InsufficientData, InvalidMetric, UndefinedTau
from fastent.spectrum import stats

from conftest import brute_kendall


def test_perfect_and_reverse_order():
    assert kendall_tau([(1, 1), (2, 2), (3, 3)]).tau == 1.0
    assert kendall_tau([(1, 3), (2, 2), (3, 1)]).tau == -1.0


def test_tau_b_with_ties_small():
    # S = 1 with ties: x has one tied pair, y none
    pairs = [(1, 1), (1, 2), (2, 3)]
    counts = kendall_counts(pairs)
    assert counts == brute_kendall_counts(pairs)
    assert kendall_tau(pairs).tau == pytest.approx(2 / math.sqrt(2 * 3))


def brute_kendall_counts(pairs):
    s, n0, tx, ty = brute_kendall([p[0] for p in pairs], [p[1] for p in pairs])
    return (len(pairs), s, n0, tx, ty)


@given(st.lists(st.tuples(st.integers(0, 6), st.integers(0, 6)), min_size=0, max_size=80))
def test_counts_match_brute_force(pairs):
    assert tuple(kendall_counts(pairs)) == brute_kendall_counts(pairs)


def test_matches_scipy():
    rng = random.Random(12)
    for _ in range(60):
        n = rng.randint(3, 150)
        xs = [rng.randint(0, rng.choice([4, 30, 10**6])) for _ in range(n)]
        ys = [x + rng.gauss(0, 5) if rng.random() < 0.5 else rng.randint(0, 10) for x in xs]
        if len(set(xs)) < 2 or len(set(ys)) < 2:
            continue
        ours = kendall_tau(zip(xs, ys))
        ref = sps.kendalltau(xs, ys, method="asymptotic")
        assert ours.tau == pytest.approx(ref.statistic, abs=1e-12)
        assert ours.p_value == pytest.approx(ref.pvalue, rel=1e-9, abs=1e-300)


def test_p_value_strictly_positive():
    n = 2000
    assert 0 < kendall_tau([(i, i) for i in range(n)]).p_value < 1e-300


def test_tau_errors():
    with pytest.raises(InsufficientData):
        kendall_tau([(1, 2)])
    with pytest.raises(UndefinedTau):
        kendall_tau([(1, 2), (1, 3), (1, 4)])
    with pytest.raises(UndefinedTau):
        kendall_tau([(1, 2), (2, 2)])


def _records():
    return [make_record("b", [3, 1, 1]), make_record("a", [2, 2, 1, 1]), make_record("c", [5, 2, 1])]


def test_summary_values():
    table = summarize(_records())
    t = table["t"]
    # T = 5, 6, 8
    assert (t.n, t.min, t.max) == (3, 5, 8)
    assert t.mean == pytest.approx(19 / 3)
    assert t.sd == pytest.approx(math.sqrt(((5 - 19 / 3) ** 2 + (6 - 19 / 3) ** 2 + (8 - 19 / 3) ** 2) / 2))
    wv = table["w_over_v"]
    assert wv.min == 0.5 and wv.max == 1.0


def test_summary_single_record_sd_zero():
    table = summarize([make_record("x", [4, 2, 2])])
    for row in table.rows:
        assert row.sd == 0.0
        assert row.min == row.mean == row.max


def test_summary_empty():
    with pytest.raises(EmptyInput):
        summarize([])


@given(st.lists(st.lists(st.integers(1, 50), min_size=1, max_size=10), min_size=1, max_size=15))
def test_summary_mean_within_range(tables):
    table = summarize(make_record(str(i), t) for i, t in enumerate(tables))
    for row in table.rows:
        assert row.min <= row.mean <= row.max
        assert row.sd >= 0


def test_format_summary_rounding():
    text = format_summary(summarize(_records()))
    lines = text.splitlines()
    assert lines[0] == "metric\tn\tmin\tmean\tsd\tmax"
    assert lines[1].split("\t") == ["T", "3", "5.0", "6.3", "1.5", "8.0"]
    assert lines[2].startswith("W/V\t3\t0.5\t")


def test_format_records_sorted():
    lines = format_records(_records()).splitlines()
    assert [ln.split("\t")[0] for ln in lines[1:]] == ["a", "b", "c"]
    assert lines[1] == "a\t6\t4\t2\t2\t0.5\t0.5\t0.3333333333333333"


def test_trend_report_rows_match_stats():
    recs = _records()
    report = trend_report(recs, "v", "w")
    assert report.rows == (("a", 4, 2), ("b", 3, 2), ("c", 3, 3))
    assert report.tau == pytest.approx(-0.5)
    for tid, x, y in report.rows:
        s = next(r.stats for r in recs if r.text_id == tid)
        assert (x, y) == (s.v_types, s.w_distinct)
    assert report.scatter_tsv().splitlines()[0] == "text_id\tx\ty"


def test_trend_errors():
    with pytest.raises(InvalidMetric):
        trend_report(_records(), "v", "entropy")
    with pytest.raises(InsufficientData):
        trend_report(_records()[:1], "v", "w")
    with pytest.raises(InvalidMetric):
        _records()[0].metric("nope")


def test_record_wraps_stats():
    rec = TextStatsRecord("t", stats([1, 1, 2]))
    assert rec.metric("fmax_over_t") == 0.5
