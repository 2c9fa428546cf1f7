"""closurelab: c-closed graphs, maximal prescribed blow-ups and the graphs that make them many."""
from .blowup import (BlowupAssignment, EnumerationResult, check_assignment,
                     enumerate_maximal_blowups, find_blowup_assignment, is_blowup,
                     is_maximal_blowup)
from .bounds import (clique_bound_ceil, clique_bound_floor, induced_polynomial_bound,
                     maximal_blowup_bound, star_bound, transversal_lower_bound)
from .config import Caps, SuiteConfig, current_caps, parse_caps
from .errors import (CapacityError, ClosureLabError, ConstructionError, GraphParseError,
                     InvalidArgument, PreconditionError)
from .fast import CandidateSeed, enumerate_maximal_fast, generate_candidates, iter_seeds
from .graph import (ClosureReport, Graph, GraphStats, c_closure_repair, closure_number,
                    common_neighbors, dump_graph, graph_stats, independence_number,
                    is_c_closed, load_graph, maximal_cliques, maximum_matching, read_graph)
from .pattern import (EXPONENTIAL, POLYNOMIAL, DichotomyVerdict, Pattern, TwinDecomposition,
                      TwinGroup, bad_twin_groups, classify_dichotomy, dump_pattern, load_pattern,
                      read_pattern, twin_decomposition)

__version__ = "0.1.0"
