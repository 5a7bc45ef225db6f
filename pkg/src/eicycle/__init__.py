"""k-uniform hypergraphs whose edge intersection hypergraph is the cycle C_n."""
from .constructions import (
    ConstructionSpec,
    RangeError,
    build,
    build_k3,
    build_k4_minimal,
    build_k4_n_edges,
    build_k5_32,
    build_k5_minimal,
)
from .core import EiResult, Hypergraph, HypergraphError, degrees, ei, is_cycle
from .lp import LpProblem, LpSolution, paper_lp, solve
from .search import SearchOutcome, find_minimum, find_representation
from .sections import half_edge_capacity, profile, sections
from .transforms import TransformError, augment_to_six, insert_odd_vertex
from .verification import VerificationReport, lower_bound_32_only, lower_bound_uniform, verify

__version__ = "0.1.0"
