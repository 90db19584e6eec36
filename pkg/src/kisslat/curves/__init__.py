"""Point enumeration on recursive towers and genus arithmetic."""

from .genus import (
    GenusRecord,
    PreconditionError,
    densify_ladder,
    densify_level,
    drinfeld_genus,
    epsilon_kappa,
    genus_ratios,
    gs_genus,
    x0m_invariants,
    x0m_raw,
)
from .towers import (
    TowerBudgetError,
    TowerPoint,
    affine_plane_points,
    elkies_points,
    gs_points,
    points_csv,
    supersingular_roots,
)
