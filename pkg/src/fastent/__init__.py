"""Fast, low-bias entropy estimation for type frequency distributions."""

from .analysis import (
    KendallTau,
    SummaryTable,
    TextStatsRecord,
    TrendReport,
    kendall_tau,
    make_record,
    summarize,
    trend_report,
)
from .cost import (
    Algorithm,
    CostPrediction,
    InstrumentationCounters,
    predict,
    predict_a_prime,
    predict_c,
    predict_saving,
    verify_counters,
)
from .corpus import (
    FrequencyList,
    TokenizerConfig,
    TokenizerMode,
    count_types,
    read_frequency_file,
    read_spectrum_file,
    tokenize,
    write_frequency_file,
    write_spectrum_file,
)
from .errors import (
    FastentError,
    DataError,
    EmptyInput,
    InvalidFrequency,
    InvalidInput,
    DegenerateCoverage,
    CountersUnavailable,
    InsufficientData,
    UndefinedTau,
    InvalidMetric,
    EncodingError,
    MalformedLine,
    IoFailure,
)
from .estimators import (
    EntropyEstimate,
    Estimator,
    Unit,
    chao_shen_entropy,
    convert_unit,
    estimate,
    plugin_entropy,
    q_linear,
    q_naive,
    zhang_linear,
    zhang_naive,
    zhang_spectrum,
)
from .kernels import BACKEND
from .spectrum import (
    CompactSpectrum,
    FrequencySpectrum,
    SpectrumStats,
    TypeFrequencyTable,
    as_spectrum,
    build_spectrum,
    compact,
    expand,
    stats,
)
from .zipf import ZipfGeneratorConfig, zipf_generate

__version__ = "0.1.0"
