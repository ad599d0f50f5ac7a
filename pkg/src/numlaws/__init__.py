"""Number-corpus forensics: Benford, Zipf and discrete-Gamma conformity.

Extract integer populations from documents, test them along three
dimensions (first digit, value frequency, decimal length), score the
fits with four metrics, estimate usage boundaries, and emit anomaly
reports.
"""

from .corpus import (
    CorpusStats,
    DigitHistogram,
    LengthHistogram,
    NumberCorpus,
    RankFrequencyTable,
    corpus_stats,
    decimal_length,
    digit_histogram,
    first_digit,
    length_histogram,
    merge_corpora,
    rank_frequency,
)
from .cutoff import (
    BoundarySummary,
    CutoffEstimate,
    cutoff_report,
    estimate_cutoff_gamma,
    estimate_cutoff_zipf,
)
from .extract import ExtractionRules, extract_numbers, read_csv_corpus, read_text_corpus
from .fitting import (
    BenfordFitter,
    FitResult,
    GammaFitter,
    ZipfFitter,
    fit_benford,
    fit_gamma,
    fit_gamma_rate_zero,
    fit_zipf,
    fit_zipf_on_lengths,
    pooled_fit,
)
from .laws import (
    BenfordModel,
    GammaModel,
    ZipfModel,
    benford_pmf,
    discrete_normalize,
    gamma_density,
    model_from_dict,
    model_to_dict,
    zipf_value,
)
from .metrics import (
    FitVerdict,
    MetricScores,
    classify_fit,
    js_divergence,
    kl_divergence,
    mape,
    r_squared,
    score_fit,
)
from .pipeline import (
    AnalysisConfig,
    AnalysisReport,
    AnalysisSection,
    ComparisonSeries,
    TrendFinding,
    analyze_first_digit,
    analyze_frequency,
    analyze_length,
    build_report,
    curve_compare,
    report_to_json,
    trend_over_years,
    write_plot_bundles,
)
from .synth import (
    SyntheticHistogram,
    exact_histogram,
    sample_benford_digits,
    sample_gamma_lengths,
    sample_zipf_values,
)

__version__ = "0.1.0"

__all__ = [
    "AnalysisConfig",
    "AnalysisReport",
    "AnalysisSection",
    "BenfordFitter",
    "BenfordModel",
    "BoundarySummary",
    "ComparisonSeries",
    "CorpusStats",
    "CutoffEstimate",
    "DigitHistogram",
    "ExtractionRules",
    "FitResult",
    "FitVerdict",
    "GammaFitter",
    "GammaModel",
    "LengthHistogram",
    "MetricScores",
    "NumberCorpus",
    "RankFrequencyTable",
    "SyntheticHistogram",
    "TrendFinding",
    "ZipfFitter",
    "ZipfModel",
    "analyze_first_digit",
    "analyze_frequency",
    "analyze_length",
    "benford_pmf",
    "build_report",
    "classify_fit",
    "corpus_stats",
    "curve_compare",
    "cutoff_report",
    "decimal_length",
    "digit_histogram",
    "discrete_normalize",
    "estimate_cutoff_gamma",
    "estimate_cutoff_zipf",
    "exact_histogram",
    "extract_numbers",
    "first_digit",
    "fit_benford",
    "fit_gamma",
    "fit_gamma_rate_zero",
    "fit_zipf",
    "fit_zipf_on_lengths",
    "gamma_density",
    "js_divergence",
    "kl_divergence",
    "length_histogram",
    "mape",
    "merge_corpora",
    "model_from_dict",
    "model_to_dict",
    "pooled_fit",
    "r_squared",
    "rank_frequency",
    "read_csv_corpus",
    "read_text_corpus",
    "report_to_json",
    "sample_benford_digits",
    "sample_gamma_lengths",
    "sample_zipf_values",
    "score_fit",
    "trend_over_years",
    "write_plot_bundles",
    "zipf_value",
]
