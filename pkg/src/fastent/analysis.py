"""Cross-text statistics: per-text records, summary tables, Kendall tau trends."""

from __future__ import annotations

import math
import statistics
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

from .errors import EmptyInput, InsufficientData, InvalidMetric, UndefinedTau
from .spectrum import SpectrumStats, as_spectrum, stats

__all__ = [
    "METRICS",
    "TextStatsRecord",
    "MetricSummary",
    "SummaryTable",
    "KendallCounts",
    "KendallTau",
    "TrendReport",
    "make_record",
    "summarize",
    "kendall_counts",
    "kendall_tau",
    "trend_report",
    "format_records",
    "format_summary",
    "format_number",
]

# CLI/metric name -> SpectrumStats attribute
METRICS = {
    "t": "t_tokens",
    "v": "v_types",
    "w": "w_distinct",
    "fmax": "f_max",
    "w_over_v": "w_over_v",
    "fmax_over_v": "fmax_over_v",
    "fmax_over_t": "fmax_over_t",
}

SUMMARY_METRICS = ("t", "w_over_v", "fmax_over_v", "fmax_over_t")


@dataclass(frozen=True)
class TextStatsRecord:
    text_id: str
    stats: SpectrumStats

    def metric(self, name: str):
        try:
            return getattr(self.stats, METRICS[name])
        except KeyError:
            raise InvalidMetric(f"unknown metric {name!r}; choose from {', '.join(METRICS)}") from None


def make_record(text_id: str, data) -> TextStatsRecord:
    return TextStatsRecord(text_id, stats(as_spectrum(data)))


@dataclass(frozen=True)
class MetricSummary:
    metric: str
    n: int
    min: float
    mean: float
    sd: float
    max: float


@dataclass(frozen=True)
class SummaryTable:
    rows: tuple[MetricSummary, ...]

    def __getitem__(self, metric: str) -> MetricSummary:
        for row in self.rows:
            if row.metric == metric:
                return row
        raise KeyError(metric)


def _summarize_values(metric: str, values: Sequence[float]) -> MetricSummary:
    lo, hi = min(values), max(values)
    mean = statistics.fmean(values)
    # the rounded mean of near-equal values can stray one ulp outside the range
    mean = min(max(mean, lo), hi)
    sd = statistics.stdev(values) if len(values) > 1 else 0.0
    return MetricSummary(metric, len(values), lo, mean, sd, hi)


def summarize(records: Iterable[TextStatsRecord], metrics: Sequence[str] = SUMMARY_METRICS) -> SummaryTable:
    """Min, mean, sample standard deviation and max per metric.

    The standard deviation uses the ``n - 1`` denominator and is defined as 0
    for a single record.
    """
    records = list(records)
    if not records:
        raise EmptyInput("no records to summarize")
    return SummaryTable(tuple(_summarize_values(m, [r.metric(m) for r in records]) for m in metrics))


class KendallCounts(NamedTuple):
    """Integer pair counts behind tau-b.

    ``s`` is concordant minus discordant pairs, ``n0`` all pairs, ``ties_x``
    and ``ties_y`` pairs tied in x (resp. y), including pairs tied in both.
    """

    n: int
    s: int
    n0: int
    ties_x: int
    ties_y: int


class KendallTau(NamedTuple):
    tau: float
    p_value: float


def _tie_pairs(sorted_values: Sequence) -> int:
    total = 0
    run = 1
    for prev, cur in zip(sorted_values, sorted_values[1:]):
        if cur == prev:
            run += 1
        else:
            total += run * (run - 1) // 2
            run = 1
    return total + run * (run - 1) // 2


def _count_inversions(seq: list) -> int:
    """Strict inversions (i < j, seq[i] > seq[j]) by merge sort; sorts ``seq``."""
    n = len(seq)
    buf = seq[:]
    inversions = 0
    width = 1
    src, dst = seq, buf
    while width < n:
        for lo in range(0, n, 2 * width):
            mid = min(lo + width, n)
            hi = min(lo + 2 * width, n)
            i, j, k = lo, mid, lo
            while i < mid and j < hi:
                if src[j] < src[i]:
                    dst[k] = src[j]
                    inversions += mid - i
                    j += 1
                else:
                    dst[k] = src[i]
                    i += 1
                k += 1
            dst[k:hi] = src[i:mid] if i < mid else src[j:hi]
        src, dst = dst, src
        width *= 2
    if src is not seq:
        seq[:] = src
    return inversions


def kendall_counts(pairs: Iterable[tuple[float, float]]) -> KendallCounts:
    """Pair counts in ``O(n log n)`` (Knight's algorithm)."""
    pairs = sorted((float(x), float(y)) for x, y in pairs)
    n = len(pairs)
    n0 = n * (n - 1) // 2
    xs = [p[0] for p in pairs]
    ties_x = _tie_pairs(xs)
    ties_xy = _tie_pairs(pairs)
    ys = [p[1] for p in pairs]
    # pairs sorted by (x, y): an inversion in y is a discordant pair
    swaps = _count_inversions(ys)
    ties_y = _tie_pairs(ys)
    s = n0 - ties_x - ties_y + ties_xy - 2 * swaps
    return KendallCounts(n, s, n0, ties_x, ties_y)


def tau_from_counts(counts: KendallCounts) -> float:
    return counts.s / math.sqrt((counts.n0 - counts.ties_x) * (counts.n0 - counts.ties_y))


def _tie_groups(values: Sequence[float]) -> list[int]:
    sizes = []
    run = 1
    for prev, cur in zip(values, values[1:]):
        if cur == prev:
            run += 1
        else:
            sizes.append(run)
            run = 1
    sizes.append(run)
    return sizes


def _p_value(s: int, n: int, xs: Sequence[float], ys: Sequence[float]) -> float:
    # variance of S under independence with tie corrections (Kendall 1970)
    tx = _tie_groups(sorted(xs))
    ty = _tie_groups(sorted(ys))
    v0 = n * (n - 1) * (2 * n + 5)
    vt = sum(t * (t - 1) * (2 * t + 5) for t in tx)
    vu = sum(u * (u - 1) * (2 * u + 5) for u in ty)
    var = (v0 - vt - vu) / 18.0
    var += sum(t * (t - 1) for t in tx) * sum(u * (u - 1) for u in ty) / (2.0 * n * (n - 1))
    if n > 2:
        var += (sum(t * (t - 1) * (t - 2) for t in tx) * sum(u * (u - 1) * (u - 2) for u in ty)
                / (9.0 * n * (n - 1) * (n - 2)))
    if var <= 0:
        return 1.0
    z = abs(s) / math.sqrt(var)
    # the normal tail underflows for |z| > ~38; keep p strictly positive
    return min(1.0, max(math.erfc(z / math.sqrt(2.0)), math.ulp(0.0)))


def kendall_tau(pairs: Iterable[tuple[float, float]]) -> KendallTau:
    """Tie-corrected Kendall tau-b with a two-sided normal-approximation p-value.

    Raises:
        InsufficientData: fewer than two pairs.
        UndefinedTau: all x or all y values are equal.
    """
    pairs = [(float(x), float(y)) for x, y in pairs]
    if len(pairs) < 2:
        raise InsufficientData(f"kendall tau needs at least 2 pairs, got {len(pairs)}")
    counts = kendall_counts(pairs)
    if counts.ties_x == counts.n0 or counts.ties_y == counts.n0:
        raise UndefinedTau("tau is undefined when x or y is constant")
    tau = tau_from_counts(counts)
    p = _p_value(counts.s, counts.n, [x for x, _ in pairs], [y for _, y in pairs])
    return KendallTau(tau, p)


@dataclass(frozen=True)
class TrendReport:
    x_metric: str
    y_metric: str
    tau: float
    p_value: float
    rows: tuple[tuple[str, float, float], ...]

    def scatter_tsv(self) -> str:
        lines = ["text_id\tx\ty"]
        lines += [f"{tid}\t{format_number(x)}\t{format_number(y)}" for tid, x, y in self.rows]
        return "\n".join(lines) + "\n"


def trend_report(records: Iterable[TextStatsRecord], x_metric: str = "v", y_metric: str = "w") -> TrendReport:
    """Scatter rows (sorted by text id) plus Kendall tau of y against x."""
    for m in (x_metric, y_metric):
        if m not in METRICS:
            raise InvalidMetric(f"unknown metric {m!r}; choose from {', '.join(METRICS)}")
    records = sorted(records, key=lambda r: r.text_id)
    if len(records) < 2:
        raise InsufficientData(f"trend needs at least 2 texts, got {len(records)}")
    rows = tuple((r.text_id, r.metric(x_metric), r.metric(y_metric)) for r in records)
    result = kendall_tau([(x, y) for _, x, y in rows])
    return TrendReport(x_metric, y_metric, result.tau, result.p_value, rows)


def format_number(value) -> str:
    """Integers verbatim, floats as their shortest round-tripping repr."""
    if isinstance(value, int):
        return str(value)
    return repr(float(value))


def _round_sig(value: float, digits: int) -> str:
    if value == 0 or not math.isfinite(value):
        return repr(value)
    return f"{value:.{digits}g}"


def format_records(records: Iterable[TextStatsRecord]) -> str:
    header = "text_id\tT\tV\tW\tf_max\tW/V\tf_max/V\tf_max/T"
    lines = [header]
    for r in sorted(records, key=lambda r: r.text_id):
        s = r.stats
        lines.append("\t".join([r.text_id] + [format_number(x) for x in (
            s.t_tokens, s.v_types, s.w_distinct, s.f_max, s.w_over_v, s.fmax_over_v, s.fmax_over_t)]))
    return "\n".join(lines) + "\n"


_LABELS = {"t": "T", "w_over_v": "W/V", "fmax_over_v": "f_max/V", "fmax_over_t": "f_max/T",
           "v": "V", "w": "W", "fmax": "f_max"}


def format_summary(table: SummaryTable, rounded: bool = True) -> str:
    """Summary TSV (metric, n, min, mean, sd, max).

    With ``rounded``, token counts keep one decimal and ratios two
    significant digits; otherwise full precision is printed.
    """
    lines = ["metric\tn\tmin\tmean\tsd\tmax"]
    for row in table.rows:
        vals = (row.min, row.mean, row.sd, row.max)
        if not rounded:
            cells = [format_number(v) for v in vals]
        elif row.metric in ("t", "v", "w", "fmax"):
            cells = [f"{float(v):.1f}" for v in vals]
        else:
            cells = [_round_sig(float(v), 2) for v in vals]
        lines.append("\t".join([_LABELS.get(row.metric, row.metric), str(row.n)] + cells))
    return "\n".join(lines) + "\n"
