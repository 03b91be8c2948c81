"""Cayley graphs of Rubik's Cube groups: enumeration, local parameters and diameter bounds."""

from .bounds import (
    BoundsInput,
    BoundsReport,
    bounds_report,
    bv_lower,
    bv_upper,
    d_min,
    d_probab,
    n0,
    n_max,
    r_max,
)
from .cube import (
    CubeState,
    Metric,
    Move,
    apply_move,
    generators,
    get_metric,
    group_order,
    rank,
    solved_state,
    unrank,
)
from .gpg import AdjacencyGraph, generate_gpg, load_graph, read_graph, validate_lower_bound
from .graph import (
    CubeGraph,
    DistanceArray,
    GraphTooLarge,
    LocalParams,
    bfs_distance_array,
    branching_ratios,
    local_params,
    shell_counts,
    verify_identities,
)
from .kernels import BACKEND

__version__ = "0.1.0"
