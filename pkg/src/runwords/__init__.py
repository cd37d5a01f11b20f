"""Statistics of binary words avoiding k consecutive 1s.

Exact big-integer enumeration, rational generating-function expansion,
and certified numerics for the generalized golden ratio and the limiting
expected bit value.
"""

from .core import (
    OnesDistribution,
    alpha,
    count_words,
    kstep_fibonacci,
    ones_distribution,
    popularity,
)
from .interval import Interval
from .numerics import all_roots, inverse_phi, limit_value, phi

__all__ = [
    "Interval",
    "OnesDistribution",
    "all_roots",
    "alpha",
    "count_words",
    "inverse_phi",
    "kstep_fibonacci",
    "limit_value",
    "ones_distribution",
    "phi",
    "popularity",
]

__version__ = "0.1.0"
