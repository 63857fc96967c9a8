"""Factorial residue laboratory constants."""
import logging
import math

LOGGER = logging.getLogger(__package__)

MIN_PRIME = 3

DEFAULT_SEED = 0
DEFAULT_TRIALS = 1000
DEFAULT_EPSILON = 0.3
DEFAULT_SET_SAMPLES = 50

IDENTITY_TOLERANCE = 1e-6

SEARCH_BUDGET = 10**8
BRUTEFORCE_LIMIT = 10**9

FULL_SCAN_MAX_PRIME = 1000
LINE_SCAN_MAX_PRIME = 3000
CURVE_FREQUENCY_SAMPLES = 4096
CHARACTER_TABLE_VERIFY_MAX_PRIME = 1000
EXACT_MINIMAL_MAX_PRIME = 200

REPRESENTATION_FACTORS = 7
SEARCHED_FACTORS = REPRESENTATION_FACTORS - 1
J7_FACTORIAL_FACTORS = 3

X_RANGE_NUMERATOR = 3
X_RANGE_DENOMINATOR = 5

QUOTIENT_REGIME_MAX_FRACTION = 0.1
GROWTH_STABILITY_FACTOR = 5.0

DENSITY_CONJECTURE = 1.0 - math.exp(-1.0)
DENSITY_BAND = 0.05

KLURMAN_MUNSCH_CONSTANT = math.sqrt(3.0 / 2.0)
GARCIA_CONSTANT = math.sqrt(41.0 / 24.0)
FAREY_CONSTANT = 6.0 / math.pi**2

COVERING_EXPONENT = 11.0 / 12.0
COVERING_PRINTED_EXPONENT = 11.0 / 18.0

MIN_TREND_POINTS = 3

CSV_FLOAT_PRECISION = 12

RUZSA_MAX_SET_SIZE = 64
BRUTEFORCE_EXPERIMENT_LIMIT = 10**7
DEFAULT_CURVE_MAX_DEGREE = 4
J7_RANDOM_MAX_PRIME = 31
J7_RANDOM_MAX_N = 3
J7_RANDOM_MAX_SET = 6
