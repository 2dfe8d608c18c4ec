"""
Configuration and constants - tolerances, defaults and thread detection
"""
import os

# Application info
APP_NAME = "curveflux"
VERSION = "0.3.0"

# Environment
THREADS_ENV_VAR = "CURVEFLUX_THREADS"

# Geometry tolerances
ARC_LENGTH_TOLERANCE = 1e-9
ZERO_CURVATURE = 1e-12
FOCAL_TOLERANCE = 1e-12
MIN_SAMPLES = 4
# arc-length nodes for a sampled base curve from the config
SAMPLED_BASE_NODES = 513

# Channel validity
VALIDITY_MARGIN = 1e-6
VALIDITY_GRID = (64, 17)
DEFAULT_NV = 33

# Steiner construction
LEVEL_TOLERANCE = 1e-9
LEVEL_SAMPLES = 256
CONCENTRIC_TOLERANCE = 1e-9
TANGENCY_TOLERANCE = 1e-12

# Estimators
SERIES_THRESHOLD = 1e-6
PARALLEL_CONDITION = 1e12
STRAIGHT_WALL_RADIUS = 1e8
FIBER_PATH_POINTS = 8
LIMIT_STEP = 1e-4

# Oracle
DEFAULT_NU = 256
MEASURE_MARGIN = 0.1
SOLVER_RTOL = 1e-10
RESIDUAL_TOLERANCE = 1e-8
MAX_PRINCIPLE_SLACK = 1e-10
ITERATION_FACTOR = 50
FLAT_GRADIENT = 1e-12

# CLI defaults
DEFAULT_N_PROFILE = 101
DEFAULT_PROFILE_CSV = "profile.csv"
DEFAULT_COMPARE_CSV = "compare.csv"
DEFAULT_SWEEP_CSV = "sweep.csv"
DEFAULT_SWEEP_K = (0.0, 0.2, 1.6, 2.5)
DEFAULT_SWEEP_RANGE = (-1.0, 1.0)
DEFAULT_SWEEP_N = 21


def thread_count() -> int:
    """
    Worker count for fan-out loops, capped by CURVEFLUX_THREADS when set
    """
    raw = os.environ.get(THREADS_ENV_VAR)
    if raw:
        try:
            return max(1, int(raw))
        except ValueError:
            pass
    return os.cpu_count() or 1
