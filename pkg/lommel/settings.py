import os
import math

# Main settings file for the Lommel verification harness
# Everything in here is a default, lommel.config.Config can override all of it
PROJECT_ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))

### Series evaluation

SERIES_EPS = 1e-16
MAX_TERMS = 500
# Distance to an integer at which a series parameter counts as degenerate
INTEGER_EPS = 1e-9
# Nudge applied to near-degenerate orders inside integrands
NUDGE_FACTOR = 10

# Ascending series are trusted up to here; past it the error estimate widens
CERTIFIED_ARGUMENT = 50.0
# ...and past this nothing is evaluated at all
ARGUMENT_LIMIT = 200.0

# bessel_j2k switches from the ascending series to Miller's recurrence here
BESSEL_SERIES_LIMIT = 10.0
MILLER_EXTRA_ORDERS = 20

### Quadrature

QUAD_TOL_FINITE = 1e-10
QUAD_TOL_OSC = 1e-6
MAX_SEGMENTS = 120
MIN_SEGMENTS = 12
MAX_DEPTH = 50
MAX_PANELS = 4000

GAUSS_MIN_ORDER = 2
GAUSS_MAX_ORDER = 64
# Embedded pair used by the adaptive integrator and by each oscillatory segment
GAUSS_ORDER_LOW = 10
GAUSS_ORDER_HIGH = 20
SEGMENT_ORDER_LOW = 12
SEGMENT_ORDER_HIGH = 24

# Number of trailing segments used for sign detection, tail fits and decay checks
TAIL_WINDOW = 8
# BadFit when the fit residual is more than this fraction of the tail
TAIL_FIT_LIMIT = 0.2
# SpecMismatch when the measured decay is this far off the declared one
DECAY_SLACK = 1.0
# Integrands carrying several frequencies: segment lengths are searched over
# [1, BEAT_SPAN] times half the slowest period, and two of them at least
# BEAT_SEPARATION apart (relative) have to agree within BEAT_AGREEMENT times
# the tolerance
BEAT_SPAN = 3.0
BEAT_SPACING_STEPS = 81
BEAT_SEPARATION = 0.15
BEAT_AGREEMENT = 10.0

# Fixed rule for the vectorised Chebyshev route (panels grow with t)
CHEB_ROUTE_ORDER = 16

### Oracle

ORACLE_PANELS = 512

### Identities

# Default parameter grids, spelled the way the CLI range syntax spells them
DEFAULT_GRIDS = {
    'a': [0.5, 1.0, 2.0],
    'b': [0.5, 1.0, 2.0],
    'n': [0, 1, 2, 3, 4, 5],
    't': [0.5, 1.0, 2.0, 5.0],
    'x': [0.5, 1.0, 2.0, 5.0],
    'w': [0.5, 1.0, 2.0],
    'K': [40, 60],
    'm': [0, 1, 2],
    # orders for the recurrence suite, all pole free
    'order': [0.5, 1.5, 2.5, 3.3, 4.7],
    # u for the T2_8 transforms, x for E13/E14
    'u': [0.25, 0.5, 0.9, 2.0],
    'xc': [0.4, 0.6, 0.8, math.sqrt(3) / 2],
}

# Case tolerances, see ReportRecord for how they combine with error estimates
IDENTITY_TOLERANCES = {
    "T1a": 1e-4, "T1a'": 1e-4,
    "T1b": 1e-4, "T1b'": 1e-4,
    "T1c": 1e-3, "T1c'": 1e-3,
    "T2_8a": 1e-3, "T2_8b": 1e-3,
    "T2_9a": 1e-9, "T2_9b": 1e-9,
    "E10a": 1e-10, "E10b": 1e-10, "E11": 1e-10, "E12": 1e-10,
    "E13": 1e-12, "E14": 1e-3,
    "E15a": 1e-6, "E15b": 1e-12,
    "E16": 1e-8, "E17": 1e-5,
}

# Step for the central finite differences in the E15a check
FD_STEP = 1e-5

# The T1 index integrals are only explored on (0, THEOREM1_MAX_ARG]
THEOREM1_MAX_ARG = 5.0

# The transforms (and E14 through u = sqrt(1-x^2)) diverge at u = 1; closer
# than this is left alone
TRANSFORM_EDGE = 0.05

### Output

# DEVEL: point this somewhere else if you don't want reports in the repo
OUTPUT_DIR = os.path.join(PROJECT_ROOT, 'output')
OUTPUT_DIR_ENV = "LOMMEL_OUTPUT_DIR"
CONVENTIONS_FILENAME = "conventions.txt"
LOG_FILENAME = "lommel.log"
CSV_FILENAME = "scan.csv"
REPORT_FILENAME = "report.json"
