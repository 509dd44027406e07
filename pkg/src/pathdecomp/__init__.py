"""Path decompositions of regular graphs built from a perfect matching.

Covers powers of cycles plus a matching (any odd path length), complete
graphs of even order, and P_5-decompositions of 5-regular graphs made of a
Cayley graph on two commuting generators plus a perfect matching.
"""

from .cayley import (
    GrGraph,
    GrGraphError,
    MatchingError,
    assemble_gr_graph,
    build_cayley,
    is_power_of_cycle,
    power_of_cycle,
    random_matching,
    random_power_matching,
)
from .collage import CollagePlan, K44Block, collage_merge, decompose_degenerate, decompose_k44, decompose_k44_factor
from .engine import (
    EngineError,
    EngineResult,
    EngineState,
    decompose,
    eliminate_free_A,
    extract_chains,
    initial_decomposition,
    reduce_admissible,
)
from .graphs import Decomposition, Graph, Matching, Trail, TrailError, components, edge, validate_trail
from .groups import Group, GroupAxiomError, SCGError, SCGPair, make_cyclic, make_product, make_table, validate_scg
from .powers import PowerCycleInstance, decompose_complete, decompose_cycle_power_factors, decompose_power_cycle, q_path
from .trails import TrailClass, Typer
from .verify import VerifyReport, brute_force_p_l, check_admissible, check_complete, verify_decomposition

__version__ = "0.1.0"
