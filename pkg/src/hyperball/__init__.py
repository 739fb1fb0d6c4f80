"""Congruent and non-congruent hyperball packing densities in truncated
regular simplex tilings of hyperbolic 3- and 5-space."""

from .packing import (
    build_3d,
    build_5d,
    density,
    density_sweep,
    maximize_over_p,
    maximize_over_x,
    table1_row,
    validate,
    x_max,
)
from .specfun import lobachevsky, zeta3

__version__ = "0.1.0"
