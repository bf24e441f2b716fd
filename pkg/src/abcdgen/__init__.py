"""Benchmark graphs with ground-truth communities.

Degrees and community sizes follow truncated power laws.  Each graph is the
union of one random graph per community and a background random graph over
all vertices; the share of each vertex's weight sent to the background is
the mixing parameter ``xi``.
"""

from .assignment import Assignment, assign_communities, compute_bounds
from .config import GeneratorConfig, parse_config
from .edges_cl import cl_generate, cl_sample_edges
from .edges_cm import cm_generate, cm_pairing, cm_resolve_cluster
from .edgeset import EdgeList
from .errors import (
    ABCDError,
    AntiCommunityError,
    ConfigError,
    GenerationError,
    InfeasibleError,
    ParseError,
)
from .mixing import (
    MixingSpec,
    compute_phi,
    expected_internal_degree,
    randomized_round,
    resolve_mixing,
    split_weights,
)
from .pipeline import GeneratedGraph, RunReport, generate, run_generate
from .sampling import (
    PowerLawSpec,
    generate_community_sizes,
    generate_degree_sequence,
    resolve_min_degree,
    sample_power_law,
)
from .stats import community_mixing, expected_mixing_curve, global_mixing, mixing_table

__version__ = "0.1.0"
