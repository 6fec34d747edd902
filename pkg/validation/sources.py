"""
Reference values a sweep report is checked against
"""
from config import SWEEP_REFERENCE

# Where each reference number comes from
REFERENCE_SOURCES = {
    "good_fraction": {
        "value": SWEEP_REFERENCE["good_fraction"],
        "source": "published sweep of E_n for n in [-5000, 5000] at p = 7",
        "notes": "fraction of rank-one curves whose generator is good",
    },
    "skipped": {
        "value": SWEEP_REFERENCE["skipped"],
        "source": "published sweep of E_n for n in [-5000, 5000] at p = 7",
        "notes": "curves without a computed generator, excluded from the fraction",
    },
}

# Checks applied by the monitor
VALIDATION_RULES = {
    "good_fraction": {"tolerance": SWEEP_REFERENCE["tolerance"]},
    "sanity_band": {"low": 0.5, "high": 1.0, "min_certified": 30},
    "restricted_level": {"expected": SWEEP_REFERENCE["prime"] - 1},
}
