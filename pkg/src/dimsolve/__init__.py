"""Dominating induced matchings in S_{2,2,3}-free graphs."""

from .coloring import BLACK, UNCOLORED, WHITE, Color, Coloring
from .errors import Contradiction, Diagnostics, NoDimWithXy, NotInClassError, StructureError
from .generate import GenerationError, GenSpec, SplitMix64, gen_planted, gen_random_s223free
from .graph import (
    DistanceLevels,
    Graph,
    dim_violations,
    distance_levels,
    is_induced_matching,
    verify_dim,
)
from .io import FormatError, format_edge_list, parse_edge_list, read_edge_list
from .oracle import OracleLimit, OracleTooLarge, enumerate_all_dims, has_dim, oracle_solve
from .patterns import CATALOG, find_induced, is_sijk_free
from .reduce import ReductionState, preprocess_assumptions
from .s222free import S222Instance, solve_s222free
from .xy import init_xy
from .ysolver import DimResult, dim_with_xy, solve

__version__ = "0.1.0"

__all__ = [
    "BLACK", "UNCOLORED", "WHITE", "Color", "Coloring",
    "Contradiction", "Diagnostics", "NoDimWithXy", "NotInClassError", "StructureError",
    "GenerationError", "GenSpec", "SplitMix64", "gen_planted", "gen_random_s223free",
    "DistanceLevels", "Graph", "dim_violations", "distance_levels", "is_induced_matching", "verify_dim",
    "FormatError", "format_edge_list", "parse_edge_list", "read_edge_list",
    "OracleLimit", "OracleTooLarge", "enumerate_all_dims", "has_dim", "oracle_solve",
    "CATALOG", "find_induced", "is_sijk_free",
    "ReductionState", "preprocess_assumptions",
    "S222Instance", "solve_s222free",
    "init_xy", "DimResult", "dim_with_xy", "solve",
]


def __getattr__(name):
    # the estimator pulls in scikit-learn; load it only on request
    if name in ("DimEstimator", "validate_adjacency"):
        from . import estimator

        return getattr(estimator, name)
    raise AttributeError(f"module 'dimsolve' has no attribute {name!r}")
