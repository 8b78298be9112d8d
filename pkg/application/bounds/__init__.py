"""
Closed-form security analysis: p, q relations, spectra, Holevo bounds,
their maxima over Eve's parameters and the key-distillation condition.
"""

from .holevo import (
    holevo_ae,
    holevo_be,
    holevo_bounds,
    holevo_grid_values,
    pq_from_stats,
    spectrum,
)
from .maximize import (
    THRESHOLD,
    diagonal_max,
    max_holevo,
    max_holevo_ae,
    max_holevo_be,
    max_holevo_grid,
    surface_grid,
)
from .security import (
    analyze_experiment,
    anticorrelation_from_experiment,
    mutual_information_ab,
    security_condition,
)
from .types import (
    BoundsResult,
    ChannelStats,
    EveParams,
    SecurityVerdict,
    Surface,
    SurfaceMaximum,
)

__all__ = [
    # Types
    "BoundsResult",
    "ChannelStats",
    "EveParams",
    "SecurityVerdict",
    "Surface",
    "SurfaceMaximum",
    # Holevo bounds
    "holevo_ae",
    "holevo_be",
    "holevo_bounds",
    "holevo_grid_values",
    "pq_from_stats",
    "spectrum",
    # Maxima
    "THRESHOLD",
    "diagonal_max",
    "max_holevo",
    "max_holevo_ae",
    "max_holevo_be",
    "max_holevo_grid",
    "surface_grid",
    # Security
    "analyze_experiment",
    "anticorrelation_from_experiment",
    "mutual_information_ab",
    "security_condition",
]
