"""Generator datasets and report statistics"""
from .dataset import (
    DATASET,
    NAIVE_SEARCH,
    GeneratorRecord,
    ingest_generators,
    parse_record,
    records_by_n,
    validate_record,
)

from .calculations import (
    calculate_good_fraction,
    calculate_skipped,
    count_escalations,
    count_outcomes,
    format_percentage,
    lambda_distribution,
    summarize_report,
    valuation_histogram,
)
