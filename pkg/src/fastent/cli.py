"""``fastent`` command-line interface.

Output is TSV on stdout and one-line diagnostics on stderr. Exit codes:
0 success, 1 usage error, 2 data error, 3 I/O error.
"""

from __future__ import annotations

import argparse
import os
import re
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Optional, Sequence

from . import __version__
from .analysis import (
    METRICS,
    format_records,
    format_summary,
    make_record,
    summarize,
    trend_report,
)
from .bench import BENCH_COLUMNS, run_bench
from .cost import predict_a_prime, predict_c
from .corpus import (
    TokenizerConfig,
    count_types,
    format_frequency_list,
    format_spectrum,
    list_input_files,
    parse_frequency_lines,
    parse_spectrum_lines,
    read_text,
    tokenize,
)
from .errors import DataError, EmptyInput, EncodingError, FastentError, InvalidInput, IoFailure
from .estimators import (
    chao_shen_entropy,
    convert_unit,
    plugin_entropy,
    zhang_linear,
    zhang_naive,
    zhang_spectrum,
)
from .spectrum import FrequencySpectrum, build_spectrum, expand
from .zipf import ZipfGeneratorConfig, zipf_generate

EXIT_OK, EXIT_USAGE, EXIT_DATA, EXIT_IO = 0, 1, 2, 3
JOBS_ENV = "FASTENT_JOBS"
NAIVE_T_LIMIT = 5000

ESTIMATORS = ("zhang", "zhang-linear", "zhang-naive", "plugin", "chao-shen")
ESTIMATOR_LABELS = {
    "zhang": "zhang_spectrum",
    "zhang-linear": "zhang_linear",
    "zhang-naive": "zhang_naive",
    "plugin": "plugin",
    "chao-shen": "chao_shen",
}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


# --- input handling -------------------------------------------------------

_FREQ_LINE = re.compile(r"[^\t\n]+\t[0-9]+")


def detect_format(text: str) -> str:
    """``spectrum`` for a ``#T=`` header, ``freq`` if every line is ``type<TAB>count``, else ``text``."""
    lines = [ln.rstrip("\r") for ln in text.split("\n") if ln.strip()]
    if not lines:
        return "text"
    if lines[0].startswith("#T="):
        return "spectrum"
    if all(_FREQ_LINE.fullmatch(ln) for ln in lines):
        return "freq"
    return "text"


def _read_source(path: str) -> str:
    if path == "-":
        try:
            return sys.stdin.buffer.read().decode("utf-8")
        except UnicodeDecodeError as exc:
            raise EncodingError(f"<stdin>: not valid UTF-8 ({exc.reason} at byte {exc.start})") from None
    return read_text(path)


def load_spectrum(path: str, fmt: str, tok: TokenizerConfig) -> FrequencySpectrum:
    """Read any supported input and normalize it to a frequency spectrum."""
    text = _read_source(path)
    kind = detect_format(text) if fmt == "auto" else fmt
    label = "<stdin>" if path == "-" else path
    if kind == "spectrum":
        return parse_spectrum_lines(text.split("\n"), label)
    if kind == "freq":
        freq = parse_frequency_lines(text.split("\n"), label)
    else:
        freq = count_types(tokenize(text, tok))
    if len(freq) == 0:
        raise EmptyInput(f"{label}: no tokens")
    return build_spectrum(freq.table())


def _tok_config(args) -> TokenizerConfig:
    return TokenizerConfig(args.tokenize, args.case_fold)


def _jobs(args) -> int:
    if args.jobs is not None:
        return args.jobs
    raw = os.environ.get(JOBS_ENV, "")
    if not raw:
        return 1
    try:
        jobs = int(raw)
    except ValueError:
        raise UsageError(f"{JOBS_ENV} must be a positive integer, got {raw!r}") from None
    if jobs < 1:
        raise UsageError(f"{JOBS_ENV} must be a positive integer, got {raw!r}")
    return jobs


def _parallel_map(fn: Callable, items: Sequence, jobs: int) -> list:
    """``[fn(x) for x in items]``, concurrently; results keep input order.

    Exceptions are returned in place of results rather than raised.
    """
    def safe(x):
        try:
            return fn(x)
        except FastentError as exc:
            return exc

    if jobs <= 1 or len(items) <= 1:
        return [safe(x) for x in items]
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(safe, items))


@dataclass(frozen=True)
class _Input:
    text_id: str
    path: str


def _expand_inputs(paths: Sequence[str], recursive: bool = False) -> list[_Input]:
    inputs = []
    for p in paths:
        if p != "-" and Path(p).is_dir():
            root = Path(p)
            for f in list_input_files(root, recursive):
                inputs.append(_Input(f.relative_to(root).as_posix(), str(f)))
        elif p != "-" and not Path(p).exists():
            raise IoFailure(f"{p}: no such file or directory")
        else:
            inputs.append(_Input(p, p))
    inputs.sort(key=lambda i: i.text_id)
    return inputs


# --- output ---------------------------------------------------------------

def _num(x) -> str:
    return str(x) if isinstance(x, int) else repr(float(x))


def _emit(out, rows: list[list[str]], pretty: bool) -> None:
    if not pretty:
        out.write("".join("\t".join(r) + "\n" for r in rows))
        return
    widths = [max(len(r[i]) for r in rows if i < len(r)) for i in range(max(len(r) for r in rows))]
    for r in rows:
        out.write("  ".join(c.ljust(widths[i]) for i, c in enumerate(r)).rstrip() + "\n")


def _emit_tsv(out, text: str, pretty: bool) -> None:
    _emit(out, [ln.split("\t") for ln in text.rstrip("\n").split("\n")], pretty)


# --- subcommands ----------------------------------------------------------

def cmd_tokenize(args, out) -> int:
    text = _read_source(args.input)
    for token in tokenize(text, _tok_config(args)):
        out.write(token + "\n")
    return EXIT_OK


def cmd_freq(args, out) -> int:
    text = _read_source(args.input)
    freq = count_types(tokenize(text, _tok_config(args)))
    if len(freq) == 0:
        raise EmptyInput(f"{args.input}: no tokens")
    if args.spectrum:
        out.write(format_spectrum(build_spectrum(freq.table())))
    else:
        out.write(format_frequency_list(freq))
    return EXIT_OK


def _estimate_one(spec: FrequencySpectrum, name: str, backend: Optional[str]):
    table = expand(spec)
    predicted = None
    if name == "zhang":
        est = zhang_spectrum(spec, backend=backend)
        predicted = predict_c(spec)
    elif name == "zhang-linear":
        est = zhang_linear(table, backend=backend)
        predicted = predict_a_prime(spec.t_tokens, spec.v_types)
    elif name == "zhang-naive":
        est = zhang_naive(table)
    elif name == "plugin":
        est = plugin_entropy(table)
    else:
        est = chao_shen_entropy(table)
    return est, predicted


def cmd_estimate(args, out) -> int:
    if args.estimator == "zhang-naive" and not args.naive_oracle:
        raise UsageError("zhang-naive is quadratic in T; pass --naive-oracle to enable it")
    tok = _tok_config(args)
    inputs = _expand_inputs(args.inputs)
    if not inputs:
        raise EmptyInput("no input files")

    def work(inp: _Input):
        spec = load_spectrum(inp.path, args.input_format, tok)
        if args.estimator == "zhang-naive" and spec.t_tokens > NAIVE_T_LIMIT and not args.force:
            raise InvalidInput(
                f"{inp.text_id}: T={spec.t_tokens} exceeds the naive-oracle limit of {NAIVE_T_LIMIT}; use --force"
            )
        est, predicted = _estimate_one(spec, args.estimator, args.backend)
        return spec, convert_unit(est, args.unit), predicted

    results = _parallel_map(work, inputs, _jobs(args))
    header = ["input", "estimator", "value", "unit", "T", "V", "W", "f_max"]
    if args.counters:
        header += ["measured_iterations", "predicted_iterations", "match"]
    rows = [header]
    for inp, res in zip(inputs, results):
        if isinstance(res, Exception):
            raise res
        spec, est, predicted = res
        row = [inp.text_id, ESTIMATOR_LABELS[args.estimator], _num(est.value), est.unit.value,
               _num(spec.t_tokens), _num(spec.v_types), _num(spec.w_distinct), _num(spec.f_max)]
        if args.counters:
            if est.counters is None:
                row += ["NA", "NA", "NA"]
            else:
                measured = est.counters.inner_iterations
                row += [str(measured), str(predicted), "yes" if measured == predicted else "no"]
        rows.append(row)
    _emit(out, rows, args.pretty)
    return EXIT_OK


def _load_records(args, err):
    tok = _tok_config(args)
    inputs = _expand_inputs(args.inputs, args.recursive)
    if not inputs:
        raise EmptyInput("no input files")
    results = _parallel_map(lambda i: make_record(i.text_id, load_spectrum(i.path, args.input_format, tok)),
                            inputs, _jobs(args))
    records, failures = [], []
    for inp, res in zip(inputs, results):
        if isinstance(res, Exception):
            err.write(f"fastent: warning: skipping {inp.text_id}: {res}\n")
            failures.append(res)
        else:
            records.append(res)
    if not records:
        # every input failed: report the first failure's category
        raise failures[0]
    return records


def cmd_stats(args, out, err) -> int:
    records = _load_records(args, err)
    if not args.summary_only:
        _emit_tsv(out, format_records(records), args.pretty)
        out.write("\n")
    _emit_tsv(out, format_summary(summarize(records), rounded=not args.full_precision), args.pretty)
    return EXIT_OK


def cmd_trend(args, out, err) -> int:
    records = _load_records(args, err)
    report = trend_report(records, args.x, args.y)
    out.write(f"# x={report.x_metric}\ty={report.y_metric}\tn={len(report.rows)}"
              f"\ttau={report.tau!r}\tp_value={report.p_value!r}\n")
    _emit_tsv(out, report.scatter_tsv(), args.pretty)
    return EXIT_OK


def _zipf_config(args, t_tokens: int) -> ZipfGeneratorConfig:
    cfg = ZipfGeneratorConfig(args.types, args.alpha, t_tokens, args.seed)
    cfg.validate()
    return cfg


def cmd_bench(args, out) -> int:
    if args.reps < 1:
        raise InvalidInput(f"--reps must be >= 1, got {args.reps}")
    configs = [_zipf_config(args, t) for t in (args.tokens or [10**6])]
    rows = [list(BENCH_COLUMNS)]
    for cfg in configs:
        rows.append(run_bench(cfg, reps=args.reps, wall=not args.no_wall, backend=args.backend).cells())
    _emit(out, rows, args.pretty)
    return EXIT_OK


def cmd_generate(args, out) -> int:
    table = zipf_generate(_zipf_config(args, args.tokens))
    if args.spectrum:
        out.write(format_spectrum(build_spectrum(table)))
    else:
        width = len(str(args.types))
        # types are named by rank, zero-padded so sorting by name keeps rank order
        lines = [(f"r{rank:0{width}d}", f) for rank, f in enumerate(table.freqs, 1)]
        out.write("".join(f"{w}\t{f}\n" for w, f in sorted(lines, key=lambda e: (-e[1], e[0]))))
    return EXIT_OK


# --- parser ---------------------------------------------------------------

def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    return value


def _tokenizer_flags(p) -> None:
    p.add_argument("--tokenize", choices=("whitespace", "nonword"), default="whitespace",
                   help="token splitting for raw text (default: whitespace)")
    p.add_argument("--case-fold", action="store_true", help="case-fold text before counting")


def _input_flags(p, many: bool = True) -> None:
    p.add_argument("--input-format", choices=("auto", "text", "freq", "spectrum"), default="auto")
    p.add_argument("--jobs", type=_positive_int, default=None,
                   help=f"files processed concurrently (default: ${JOBS_ENV} or 1)")


def _generator_flags(p, multi_tokens: bool) -> None:
    p.add_argument("--types", type=_positive_int, default=50000, help="number of Zipf ranks")
    p.add_argument("--alpha", type=float, default=1.1, help="rank-frequency exponent")
    p.add_argument("--seed", type=int, default=2016)
    if multi_tokens:
        p.add_argument("--tokens", type=_positive_int, action="append",
                       help="sample length; repeat for several rows (default: 1000000)")
    else:
        p.add_argument("--tokens", type=_positive_int, default=10**6, help="sample length")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="fastent", description="Fast low-bias entropy estimation for type frequency data.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--backend", choices=("auto", "compiled", "python"), default="auto",
                        help="inner-loop implementation (default: compiled if available)")
    parser.add_argument("--pretty", action="store_true", help="align columns for reading")
    sub = parser.add_subparsers(dest="command", metavar="COMMAND", parser_class=_Parser)
    sub.required = True

    p = sub.add_parser("tokenize", help="print one token per line")
    p.add_argument("input", help="text file, or - for stdin")
    _tokenizer_flags(p)

    p = sub.add_parser("freq", help="write a frequency (or spectrum) file for a text")
    p.add_argument("input", help="text file, or - for stdin")
    p.add_argument("--spectrum", action="store_true", help="emit the frequency spectrum instead")
    _tokenizer_flags(p)

    p = sub.add_parser("estimate", help="entropy of each input")
    p.add_argument("inputs", nargs="+", help="text, frequency or spectrum files, directories, or -")
    p.add_argument("--estimator", choices=ESTIMATORS, default="zhang")
    p.add_argument("--unit", choices=("nats", "bits"), default="nats")
    p.add_argument("--counters", action="store_true", help="add measured and predicted iteration counts")
    p.add_argument("--naive-oracle", action="store_true", help="allow --estimator zhang-naive")
    p.add_argument("--force", action="store_true", help=f"lift the T <= {NAIVE_T_LIMIT} naive-oracle guard")
    _tokenizer_flags(p)
    _input_flags(p)

    for name, helptext in (("stats", "per-text statistics and a summary table"),
                           ("trend", "scatter of two metrics with Kendall's tau")):
        p = sub.add_parser(name, help=helptext)
        p.add_argument("inputs", nargs="+", help="directories and/or files")
        p.add_argument("--recursive", action="store_true", help="descend into subdirectories")
        _tokenizer_flags(p)
        _input_flags(p)
        if name == "stats":
            p.add_argument("--summary-only", action="store_true")
            p.add_argument("--full-precision", action="store_true", help="do not round the summary")
        else:
            p.add_argument("--x", choices=tuple(METRICS), default="v")
            p.add_argument("--y", choices=tuple(METRICS), default="w_over_v")

    p = sub.add_parser("bench", help="predicted and measured cost on Zipfian samples")
    _generator_flags(p, multi_tokens=True)
    p.add_argument("--reps", type=int, default=5, help="timed repetitions; the median is reported")
    p.add_argument("--no-wall", action="store_true", help="skip timing; wall columns read NA")

    p = sub.add_parser("generate", help="write a Zipfian sample as a frequency or spectrum file")
    _generator_flags(p, multi_tokens=False)
    p.add_argument("--spectrum", action="store_true")
    return parser


def main(argv: Optional[Sequence[str]] = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        if args.backend == "auto":
            args.backend = None
        elif args.backend == "compiled":
            from . import kernels

            try:
                kernels.get("compiled")
            except ImportError as exc:
                raise UsageError(str(exc)) from None
        if args.command in ("stats", "trend"):
            return {"stats": cmd_stats, "trend": cmd_trend}[args.command](args, out, err)
        handler = {"tokenize": cmd_tokenize, "freq": cmd_freq, "estimate": cmd_estimate,
                   "bench": cmd_bench, "generate": cmd_generate}[args.command]
        return handler(args, out)
    except UsageError as exc:
        err.write(f"fastent: usage error: {exc}\n")
        return EXIT_USAGE
    except IoFailure as exc:
        err.write(f"fastent: I/O error: {exc}\n")
        return EXIT_IO
    except DataError as exc:
        err.write(f"fastent: {type(exc).__name__}: {exc}\n")
        return EXIT_DATA
    except BrokenPipeError:
        return EXIT_OK
    except KeyboardInterrupt:
        return 130


if __name__ == "__main__":
    sys.exit(main())
