"""Maximal arrangements of soft-hull dominoes in squares and diamonds."""

from .lattice import (
    DIAMOND,
    SQUARE,
    Cell,
    DomainRole,
    Shape,
    cardinality_delta,
    diamond_cardinality,
    diamond_cells,
    hull_domain,
    hull_domain_size,
    kernel_domain,
    shape_cells,
)
from .dominoes import (
    Configuration,
    Domino,
    InvalidConfiguration,
    Violation,
    cover_grid,
    density_metrics,
    domino,
    from_json,
    is_compatible,
    lacunar_voids,
    occupancy_identity_holds,
    occupancy_index,
    overlap_index,
    to_json,
    validate,
)
from .squares import build_square, capacity_recurrence_holds, square_capacity
from .diamonds import (
    SizeClass,
    build_diamond,
    classify,
    core_side,
    diamond_capacity,
    diamond_recurrence_check,
    expansion_ledger,
    wedge_capacity_even,
    wedge_capacity_odd,
)
from .bounds import (
    RidgeFlatteningInapplicable,
    bounds_report,
    capacity_midpoint,
    flatten_ridges,
    series_rows,
    upper_capacity,
)
from .oracle import OracleResult, SearchBudget, enumerate_candidates, exact_max, sandwich_check

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
