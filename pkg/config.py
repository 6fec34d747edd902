"""
Configuration for the good-points toolkit
Runtime settings, frozen branch choices, class-number-one data and sweep reference values
"""
import os
from dotenv import load_dotenv

load_dotenv()


# Settings (set these in .env or as environment variables)
def get_setting(key_name: str, default: str = "") -> str:
    """Get a setting from the environment"""
    value = os.getenv(key_name, "")
    if value:
        return value
    return default


def get_int_setting(key_name: str, default: int) -> int:
    """Get an integer setting, falling back to default on junk"""
    try:
        return int(get_setting(key_name, str(default)))
    except ValueError:
        return default


DEFAULT_PRECISION = get_int_setting("GOODPOINTS_PRECISION", 24)
MAX_DOUBLINGS = get_int_setting("GOODPOINTS_MAX_DOUBLINGS", 4)
DEFAULT_PRIME = get_int_setting("GOODPOINTS_PRIME", 7)
DEFAULT_JOBS = get_int_setting("GOODPOINTS_JOBS", 1)
DEFAULT_HEIGHT = get_int_setting("GOODPOINTS_HEIGHT", 100)
GENERATOR_SEED = get_int_setting("GOODPOINTS_SEED", 20240607)
DATASET_PATH = get_setting("GOODPOINTS_DATASET")
LOG_LEVEL = get_setting("GOODPOINTS_LOG_LEVEL", "WARNING")

# Mazur: a rational torsion point has order at most 12
MAZUR_BOUND = 12

# Family E_n : y^2 = x^3 + a with a = FAMILY_BASE + FAMILY_STEP * n
FAMILY_BASE = -2
FAMILY_STEP = 7

# Branch choices for the 7-torsion of the family over Q_7.
# sqrt(-3) = 2 + 5*7 + 6*7^3 + ..., theta = 2a(1 + 3 sqrt(-3))/7 = 6 mod 7
LEMMA_BRANCHES = {
    "sqrt_minus_three_seed": 2,
    "theta_residue": 6,
    "cube_root_seed": 3,
    "y_seed": 2,
    "zeta3_residue": 4,
}

# Nine imaginary quadratic fields of class number one
CLASS_ONE_DISCRIMINANTS = (-1, -2, -3, -7, -11, -19, -43, -67, -163)

# j-invariants of the CM curves with j != 0, 1728 (D = -3 has j = 0, D = -1 has j = 1728)
CLASS_ONE_J_INVARIANTS = {
    -2: 20 ** 3,
    -7: -(15 ** 3),
    -11: -(32 ** 3),
    -19: -(96 ** 3),
    -43: -(960 ** 3),
    -67: -(5280 ** 3),
    -163: -(640320 ** 3),
}

# Minimal models y^2 + y = x^3 + a x + b of conductor D^2, written in short
# form y^2 = x^3 + 16a x + (64b + 16). Discriminant 4A^3 + 27B^2 = 2^8 |D|^3.
CLASS_ONE_MODELS = {
    -43: (-13760, 621264),
    -67: (-117920, 15585808),
    -163: (-34790720, 78984748304),
}

# Trace conventions for 4p = u^2 - Dv^2 on y^2 = x^3 + A c^2 x + B c^3:
#   count = p + 1 - sign * symbol(u) * (c/p) * u
# with symbol "mod_d" = (2u/|D|) and "mod_p" = (2/p)(u/p), u signed by u_rule.
# Resolved against enumeration on the first eight admissible split primes.
CLASS_ONE_CONVENTIONS = {
    -43: {"symbol": "mod_d", "u_rule": "positive", "sign": 1, "primes": (11, 13, 17, 23, 31, 41, 47, 53)},
    -67: {"symbol": "mod_d", "u_rule": "positive", "sign": 1, "primes": (17, 19, 23, 29, 37, 47, 59, 71)},
    -163: {"symbol": "mod_d", "u_rule": "positive", "sign": 1, "primes": (41, 43, 47, 53, 61, 71, 83, 97)},
}

# Search order used when resolving a convention
CONVENTION_SYMBOLS = ("mod_d", "mod_p")
CONVENTION_U_RULES = ("positive", "negative", "one_mod_four", "three_mod_four")
CONVENTION_SIGNS = (1, -1)

# Families y^2 = x^3 + A x + B + p t whose reduction has exactly p points
ANOMALOUS_FAMILIES = {
    "eisenstein-7": {"D": -3, "p": 7, "A": 0, "B": -2},
    "eisenstein-61": {"D": -3, "p": 61, "A": 0, "B": 2},
    "cm-11-223": {"D": -11, "p": 223, "A": -1056, "B": 13552},
    "cm-19-43": {"D": -19, "p": 43, "A": -152, "B": 722},
}

# Gaussian family y^2 = x^3 + (3 + 5n) x at p = 5, checked over F_25
GAUSSIAN_FAMILY = {"D": -1, "p": 5, "A": 3, "B": 0}

# Published sweep for the family at p = 7
SWEEP_REFERENCE = {
    "range": (-5000, 5000),
    "prime": 7,
    "good_fraction": 0.8668,
    "skipped": 176,
    "tolerance": 0.0005,
}

# Per-n sweep outcomes
OUTCOMES = ("Good", "NotGood", "NoGenerator", "SkippedBadReduction")
