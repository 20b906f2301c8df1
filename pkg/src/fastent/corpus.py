"""Tokenization, frequency lists and the two interchange file formats.

Frequency file (UTF-8, LF)::

    type<TAB>count

Spectrum file::

    #T=<tokens>
    f<TAB>n(f)        (ascending f, occupied frequencies only)

A character counts as alphanumeric when its Unicode general category is a
letter (L*), a number (N*) or a mark (M*); marks are included so combining
diacritics stay attached to their base letter.
"""

from __future__ import annotations

import enum
import os
import re
import unicodedata
from collections import Counter
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Iterator, Sequence

from .errors import EmptyInput, EncodingError, IoFailure, MalformedLine
from .spectrum import FrequencySpectrum, TypeFrequencyTable

__all__ = [
    "TokenizerMode",
    "TokenizerConfig",
    "FrequencyList",
    "tokenize",
    "count_types",
    "read_text",
    "read_frequency_file",
    "write_frequency_file",
    "read_spectrum_file",
    "write_spectrum_file",
    "format_frequency_list",
    "format_spectrum",
    "parse_frequency_lines",
    "parse_spectrum_lines",
    "list_input_files",
]


class TokenizerMode(str, enum.Enum):
    WHITESPACE = "whitespace"
    NONWORD = "nonword"


@dataclass(frozen=True)
class TokenizerConfig:
    mode: TokenizerMode = TokenizerMode.WHITESPACE
    case_fold: bool = False

    def __post_init__(self):
        object.__setattr__(self, "mode", TokenizerMode(self.mode))


class _WordCharMap(dict):
    """``str.translate`` table mapping every non-word character to a space."""

    def __missing__(self, code):
        value = code if _is_word_char(chr(code)) else " "
        self[code] = value
        return value


def _is_word_char(ch: str) -> bool:
    return unicodedata.category(ch)[0] in "LNM"


_NONWORD_TO_SPACE = _WordCharMap()


def _strip_nonword(token: str) -> str:
    start, end = 0, len(token)
    while start < end and not _is_word_char(token[start]):
        start += 1
    while end > start and not _is_word_char(token[end - 1]):
        end -= 1
    return token[start:end]


def tokenize(text: str, config: TokenizerConfig = TokenizerConfig()) -> list[str]:
    """Split ``text`` into word tokens.

    ``whitespace`` mode trusts existing whitespace delimitation and trims
    non-alphanumeric characters from both ends of every token (interior
    apostrophes and hyphens survive). ``nonword`` mode splits on every run
    of non-alphanumeric characters. Empty tokens are dropped in both modes.

    >>> tokenize("Don't stop. Don't!", TokenizerConfig("nonword"))
    ['Don', 't', 'stop', 'Don', 't']
    """
    try:
        text.encode("utf-8")
    except UnicodeEncodeError as exc:
        raise EncodingError(f"text is not valid Unicode: {exc}") from None
    if config.case_fold:
        text = text.casefold()
    if config.mode is TokenizerMode.NONWORD:
        return text.translate(_NONWORD_TO_SPACE).split()
    out = []
    for raw in text.split():
        tok = _strip_nonword(raw)
        if tok:
            out.append(tok)
    return out


@dataclass(frozen=True)
class FrequencyList:
    """``(type, count)`` pairs, count descending then type ascending."""

    entries: tuple[tuple[str, int], ...]

    def __init__(self, entries: Iterable[tuple[str, int]]):
        items = [(str(w), int(c)) for w, c in entries]
        seen = set()
        for w, c in items:
            if c < 1:
                raise ValueError(f"count for {w!r} must be >= 1, got {c}")
            if w in seen:
                raise ValueError(f"duplicate type {w!r}")
            seen.add(w)
        items.sort(key=lambda e: (-e[1], e[0]))
        object.__setattr__(self, "entries", tuple(items))

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[tuple[str, int]]:
        return iter(self.entries)

    @property
    def t_tokens(self) -> int:
        return sum(c for _, c in self.entries)

    def table(self) -> TypeFrequencyTable:
        if not self.entries:
            raise EmptyInput("frequency list is empty")
        return TypeFrequencyTable(c for _, c in self.entries)


def count_types(tokens: Iterable[str]) -> FrequencyList:
    return FrequencyList(Counter(tokens).items())


def read_text(path) -> str:
    """Read a UTF-8 file, mapping failures onto package errors."""
    try:
        data = Path(path).read_bytes()
    except OSError as exc:
        raise IoFailure(f"{path}: {exc.strerror or exc}") from None
    try:
        return data.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise EncodingError(f"{path}: not valid UTF-8 ({exc.reason} at byte {exc.start})") from None


def _write_text(path, text: str) -> None:
    try:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    except OSError as exc:
        raise IoFailure(f"{path}: {exc.strerror or exc}") from None


_INT = re.compile(r"[0-9]+")


def _positive(field: str, line_no: int, what: str, path) -> int:
    if not _INT.fullmatch(field):
        raise MalformedLine(line_no, f"{what} is not a positive integer: {field!r}", path)
    value = int(field)
    if value < 1:
        raise MalformedLine(line_no, f"{what} must be >= 1, got {value}", path)
    return value


def parse_frequency_lines(lines: Iterable[str], path=None) -> FrequencyList:
    """Parse ``type<TAB>count`` lines. Blank lines are ignored."""
    entries = {}
    for line_no, line in enumerate(lines, 1):
        line = line.rstrip("\n").rstrip("\r")
        if not line:
            continue
        word, sep, count = line.rpartition("\t")
        if not sep or not word:
            raise MalformedLine(line_no, "expected 'type<TAB>count'", path)
        if word in entries:
            raise MalformedLine(line_no, f"duplicate type {word!r}", path)
        entries[word] = _positive(count, line_no, "count", path)
    return FrequencyList(entries.items())


def format_frequency_list(freq: FrequencyList) -> str:
    for word, _ in freq.entries:
        if "\t" in word or "\n" in word or "\r" in word:
            raise ValueError(f"type {word!r} contains a tab or line break")
    return "".join(f"{w}\t{c}\n" for w, c in freq.entries)


def read_frequency_file(path) -> FrequencyList:
    return parse_frequency_lines(read_text(path).split("\n"), path)


def write_frequency_file(freq: FrequencyList, path) -> None:
    _write_text(path, format_frequency_list(freq))


def parse_spectrum_lines(lines: Sequence[str] | Iterable[str], path=None) -> FrequencySpectrum:
    """Parse a ``#T=`` header followed by ascending ``f<TAB>n(f)`` rows."""
    t_tokens = None
    header_line = 0
    counts: dict[int, int] = {}
    prev = 0
    for line_no, line in enumerate(lines, 1):
        line = line.rstrip("\n").rstrip("\r")
        if not line:
            continue
        if t_tokens is None:
            if not line.startswith("#T="):
                raise MalformedLine(line_no, "missing '#T=<tokens>' header", path)
            t_tokens = _positive(line[3:], line_no, "T", path)
            header_line = line_no
            continue
        f_field, sep, n_field = line.partition("\t")
        if not sep:
            raise MalformedLine(line_no, "expected 'f<TAB>n(f)'", path)
        f = _positive(f_field, line_no, "f", path)
        n = _positive(n_field, line_no, "n(f)", path)
        if f <= prev:
            raise MalformedLine(line_no, f"frequencies must be strictly ascending ({f} after {prev})", path)
        prev = f
        counts[f] = n
    if t_tokens is None:
        raise EmptyInput(f"{path or 'spectrum'}: no '#T=' header")
    if not counts:
        raise EmptyInput(f"{path or 'spectrum'}: no spectrum rows")
    total = sum(f * n for f, n in counts.items())
    if total != t_tokens:
        raise MalformedLine(header_line, f"header T={t_tokens} but rows sum to {total}", path)
    return FrequencySpectrum(counts, t_tokens)


def format_spectrum(spectrum) -> str:
    rows = spectrum.rows if not callable(spectrum.rows) else spectrum.rows()
    return f"#T={spectrum.t_tokens}\n" + "".join(f"{f}\t{n}\n" for f, n in rows)


def read_spectrum_file(path) -> FrequencySpectrum:
    return parse_spectrum_lines(read_text(path).split("\n"), path)


def write_spectrum_file(spectrum, path) -> None:
    _write_text(path, format_spectrum(spectrum))


def list_input_files(directory, recursive: bool = False) -> list[Path]:
    """Regular files under ``directory`` in sorted order (hidden files skipped)."""
    root = Path(directory)
    if not root.is_dir():
        raise IoFailure(f"{directory}: not a directory")
    walker = root.rglob("*") if recursive else root.iterdir()
    files = [p for p in walker if p.is_file() and not p.name.startswith(".")]
    return sorted(files, key=lambda p: os.fspath(p.relative_to(root)))
