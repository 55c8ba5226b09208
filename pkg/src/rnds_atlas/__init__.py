"""Executable geometry of Reissner-Nordstrom-de Sitter black holes.

Classification of horizon structure, tortoise and Kruskal-type coordinate
charts, radial geodesics across horizons, and the conformal block atlas of
the maximal extension, for the generic three-horizon parameter regime.
"""

from .errors import (
    ConsistencyError,
    DomainError,
    ExcludedRegionError,
    HorizonIncidenceError,
    InvalidParametersError,
    RndsError,
)
from .horizons import (
    BlackHoleParams,
    Classification,
    DerivedThresholds,
    GcReport,
    HorizonStructure,
    PhotonSphere,
    check_gc_conditions,
    classify_horizons,
    horizon_function,
    horizon_function_derivative,
    horizon_polynomial,
    photon_sphere,
)

__version__ = "0.1.0"

__all__ = [
    "BlackHoleParams",
    "Classification",
    "DerivedThresholds",
    "GcReport",
    "HorizonStructure",
    "PhotonSphere",
    "check_gc_conditions",
    "classify_horizons",
    "horizon_function",
    "horizon_function_derivative",
    "horizon_polynomial",
    "photon_sphere",
    "RndsError",
    "DomainError",
    "InvalidParametersError",
    "HorizonIncidenceError",
    "ExcludedRegionError",
    "ConsistencyError",
    "__version__",
]
