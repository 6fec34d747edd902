"""
Validation of sweep reports against reference values
"""
from .schema import Discrepancy, dump_report, load_report, save_report
from .sources import REFERENCE_SOURCES, VALIDATION_RULES
from .monitor import compare_report, covers_reference_range, run_monitor
