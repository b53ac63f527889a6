"""Arc consistency filtering for the global cardinality constraint with costs."""

from .errors import (
    BadBounds,
    CostGccError,
    EmptyDomain,
    Infeasible,
    MissingCost,
    NegativeReducedCost,
    ParseError,
    TooLarge,
    ValidationError,
)
from .instance import CostGccInstance, ValueNetwork, build_value_network, validate
from .flow import FlowState, ResidualGraph, build_residual, min_cost_feasible_flow, reduced_cost
from .graphs import (
    DistanceVector,
    SccPartition,
    SpCounter,
    shortest_paths_from,
    shortest_paths_into,
    strongly_connected_components,
)
from .landmarks import Landmark, Method, SelectionPolicy, select_landmarks
from .propagator import FilterReport, propagate, propagate_landmarks, propagate_regin
from .oracle import oracle_consistent_pairs, oracle_min_cost
from .io import workers_example, load_instance, save_instance

__version__ = "0.1.0"
