"""Type frequency tables and frequency spectra.

Three interchangeable views of the same sample:

* :class:`TypeFrequencyTable` -- one positive count per type, ``f_1 .. f_V``.
* :class:`FrequencySpectrum` -- ``n(f)``, the number of types seen exactly
  ``f`` times, stored sparsely (only occupied frequencies are kept).
* :class:`CompactSpectrum` -- the same content as a ``W x 2`` table of
  ``(f, n(f))`` rows, ascending in ``f``.

All objects are immutable; conversions never lose information.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Iterable, Mapping, Sequence, Union

from .errors import EmptyInput, InvalidFrequency

__all__ = [
    "TypeFrequencyTable",
    "FrequencySpectrum",
    "CompactSpectrum",
    "SpectrumStats",
    "build_spectrum",
    "compact",
    "expand",
    "stats",
    "as_spectrum",
]


def _check_count(value, what: str) -> int:
    if isinstance(value, bool):
        raise InvalidFrequency(f"{what} must be an integer, got {value!r}")
    if not isinstance(value, int):
        try:
            as_int = int(value)
        except (TypeError, ValueError):
            raise InvalidFrequency(f"{what} must be an integer, got {value!r}") from None
        if as_int != value:
            raise InvalidFrequency(f"{what} must be an integer, got {value!r}")
        value = as_int
    if value < 1:
        raise InvalidFrequency(f"{what} must be >= 1, got {value}")
    return value


@dataclass(frozen=True)
class TypeFrequencyTable:
    """Absolute frequency of every observed type.

    Zero counts are rejected rather than dropped: unseen types are not part
    of the input model.
    """

    freqs: tuple[int, ...]

    def __init__(self, freqs: Iterable[int]):
        checked = tuple(_check_count(f, "frequency") for f in freqs)
        if not checked:
            raise EmptyInput("frequency table is empty")
        object.__setattr__(self, "freqs", checked)

    @property
    def v_types(self) -> int:
        return len(self.freqs)

    @property
    def t_tokens(self) -> int:
        return sum(self.freqs)

    def __len__(self) -> int:
        return len(self.freqs)

    def __iter__(self):
        return iter(self.freqs)


@dataclass(frozen=True)
class FrequencySpectrum:
    """Sparse frequency spectrum ``f -> n(f)`` plus the token total ``T``.

    Keys with ``n(f) == 0`` are normalized away at construction, so the
    mapping holds exactly ``W`` entries. ``t_tokens`` may be omitted and is
    then derived as ``sum(f * n(f))``; when given it must agree.
    """

    counts: Mapping[int, int]
    t_tokens: int = field(default=0)

    def __init__(self, counts: Mapping[int, int], t_tokens: int | None = None):
        clean: dict[int, int] = {}
        for f, n in counts.items():
            f = _check_count(f, "frequency")
            if isinstance(n, bool) or int(n) != n or n < 0:
                raise InvalidFrequency(f"n({f}) must be a non-negative integer, got {n!r}")
            if n:
                clean[f] = int(n)
        if not clean:
            raise EmptyInput("frequency spectrum is empty")
        ordered = dict(sorted(clean.items()))
        total = sum(f * n for f, n in ordered.items())
        if t_tokens is None:
            t_tokens = total
        elif t_tokens != total:
            raise InvalidFrequency(f"T={t_tokens} disagrees with sum f*n(f)={total}")
        object.__setattr__(self, "counts", MappingProxyType(ordered))
        object.__setattr__(self, "t_tokens", int(t_tokens))

    def __eq__(self, other):
        if not isinstance(other, FrequencySpectrum):
            return NotImplemented
        return self.t_tokens == other.t_tokens and dict(self.counts) == dict(other.counts)

    def __hash__(self):
        return hash((self.t_tokens, tuple(self.counts.items())))

    @property
    def v_types(self) -> int:
        return sum(self.counts.values())

    @property
    def w_distinct(self) -> int:
        return len(self.counts)

    @property
    def f_max(self) -> int:
        return next(reversed(self.counts))

    def rows(self) -> tuple[tuple[int, int], ...]:
        """Occupied ``(f, n(f))`` pairs in ascending ``f``."""
        return tuple(self.counts.items())

    def dense(self) -> list[int]:
        """Dense ``n(0..f_max)`` array; index 0 is always 0.

        Costs ``f_max + 1`` slots, which can exceed ``V`` by a wide margin on
        long texts. Only use it where positional indexing is required.
        """
        out = [0] * (self.f_max + 1)
        for f, n in self.counts.items():
            out[f] = n
        return out


@dataclass(frozen=True)
class CompactSpectrum:
    """``W x 2`` spectrum: strictly increasing ``f`` with positive ``n(f)``."""

    rows: tuple[tuple[int, int], ...]
    t_tokens: int

    def __init__(self, rows: Iterable[Sequence[int]], t_tokens: int | None = None):
        checked = []
        prev = 0
        for row in rows:
            f, n = row
            f = _check_count(f, "frequency")
            n = _check_count(n, f"n({f})")
            if f <= prev:
                raise InvalidFrequency("compact spectrum rows must be strictly increasing in f")
            prev = f
            checked.append((f, n))
        if not checked:
            raise EmptyInput("compact spectrum is empty")
        total = sum(f * n for f, n in checked)
        if t_tokens is None:
            t_tokens = total
        elif t_tokens != total:
            raise InvalidFrequency(f"T={t_tokens} disagrees with sum f*n(f)={total}")
        object.__setattr__(self, "rows", tuple(checked))
        object.__setattr__(self, "t_tokens", int(t_tokens))

    @property
    def v_types(self) -> int:
        return sum(n for _, n in self.rows)

    @property
    def w_distinct(self) -> int:
        return len(self.rows)

    @property
    def f_max(self) -> int:
        return self.rows[-1][0]

    def to_spectrum(self) -> FrequencySpectrum:
        return FrequencySpectrum(dict(self.rows), self.t_tokens)


@dataclass(frozen=True)
class SpectrumStats:
    t_tokens: int
    v_types: int
    w_distinct: int
    f_max: int
    w_over_v: float
    fmax_over_v: float
    # f_max relative to both vocabulary size and text length
    fmax_over_t: float


AnySpectrum = Union[FrequencySpectrum, CompactSpectrum]


def build_spectrum(table: TypeFrequencyTable | Iterable[int]) -> FrequencySpectrum:
    """Count how many types occur at each frequency, in one pass over ``V``."""
    if not isinstance(table, TypeFrequencyTable):
        table = TypeFrequencyTable(table)
    return FrequencySpectrum(Counter(table.freqs), table.t_tokens)


def compact(spectrum: AnySpectrum) -> CompactSpectrum:
    if isinstance(spectrum, CompactSpectrum):
        return spectrum
    return CompactSpectrum(spectrum.rows(), spectrum.t_tokens)


def as_spectrum(obj) -> FrequencySpectrum:
    """Coerce a table, compact spectrum or spectrum to :class:`FrequencySpectrum`."""
    if isinstance(obj, FrequencySpectrum):
        return obj
    if isinstance(obj, CompactSpectrum):
        return obj.to_spectrum()
    return build_spectrum(obj)


def expand(spectrum: AnySpectrum) -> TypeFrequencyTable:
    """Rebuild a type table (ascending frequency order) from a spectrum."""
    rows = spectrum.rows if isinstance(spectrum, CompactSpectrum) else spectrum.rows()
    return TypeFrequencyTable(f for f, n in rows for _ in range(n))


def stats(spectrum: AnySpectrum | TypeFrequencyTable | Iterable[int]) -> SpectrumStats:
    """Scalar summary ``(T, V, W, f_max, W/V, f_max/V, f_max/T)``."""
    if not isinstance(spectrum, (FrequencySpectrum, CompactSpectrum)):
        spectrum = build_spectrum(spectrum)
    t = spectrum.t_tokens
    v = spectrum.v_types
    w = spectrum.w_distinct
    fmax = spectrum.f_max
    if v == 0:
        raise EmptyInput("spectrum is empty")
    return SpectrumStats(
        t_tokens=t,
        v_types=v,
        w_distinct=w,
        f_max=fmax,
        w_over_v=w / v,
        fmax_over_v=fmax / v,
        fmax_over_t=fmax / t,
    )
