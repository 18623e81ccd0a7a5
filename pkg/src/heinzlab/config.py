"""Versioned defaults: tolerances, parameter grids and sampling ranges.

Reports echo ``GRID_VERSION`` so that campaigns run with different grids
are never compared by accident.
"""
import math

GRID_VERSION = "1"

TOL_REL = 1e-9

# interpolation parameter grids for the monotonicity suites
THETA_GRID_LOW = (0.0, 0.1, 0.2, 0.3, 0.4, 0.5)
THETA_GRID_HIGH = (0.5, 0.75, 1.0, 1.5, 2.0, 3.0, 5.0, 10.0)
T_GRID = (-1.9, -1.0, 0.0, 1.0, 2.0)
MU_GRID = (0.25, 0.5, 0.75)
SCHATTEN_FAMILY = (1.0, 2.0, 3.0, math.inf)

# instance sampling
SPECTRUM_LO = 0.1
SPECTRUM_HI = 10.0
SCALAR_LO = 1e-2
SCALAR_HI = 1e2
CONDITION_LO = 0.1
CONDITION_HI = 10.0
M_MAX = 4
R_EXP_MAX = 3.0
P_MAX = 6.0
N_TERMS_MAX = 4

DEFAULT_TRIALS = 1000
DEFAULT_DIM_MIN = 1
DEFAULT_DIM_MAX = 6
SEED_ENV = "HEINZLAB_SEED"


def theta_grid():
    """Full monotonicity grid, ascending, without the duplicated 1/2."""
    return THETA_GRID_LOW + THETA_GRID_HIGH[1:]
