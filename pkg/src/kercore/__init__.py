"""Independence, matching and critical-set invariants of graphs.

Computes alpha, mu, d, id, ker, core and corona; recognizes almost bipartite
graphs (exactly one odd cycle); and checks the known identities between these
quantities as executable laws, with a seeded counterexample search.
"""

from .critical import critical_difference, diff, ker
from .errors import (
    CertificateMismatch,
    GenerationError,
    GraphClassError,
    GraphFormatError,
    GuardExceeded,
    InternalInconsistency,
)
from .facts import Facts
from .graph import Graph, load_graph, read_graph
from .independence import core_corona_deletion, independence_number, is_ke, max_independent_set
from .laws import LAWS, LawResult, SearchReport, check, check_all, search_counterexample
from .matching import maximum_matching
from .randgen import GenSpec, gen_almost_bipartite, gen_bipartite, gen_non_ke_almost_bipartite
from .structure import almost_bipartite, find_odd_cycle, is_bipartite, recognize

__version__ = "0.1.0"

__all__ = [
    "CertificateMismatch",
    "Facts",
    "GenSpec",
    "GenerationError",
    "Graph",
    "GraphClassError",
    "GraphFormatError",
    "GuardExceeded",
    "InternalInconsistency",
    "LAWS",
    "LawResult",
    "SearchReport",
    "almost_bipartite",
    "check",
    "check_all",
    "core_corona_deletion",
    "critical_difference",
    "diff",
    "find_odd_cycle",
    "gen_almost_bipartite",
    "gen_bipartite",
    "gen_non_ke_almost_bipartite",
    "independence_number",
    "is_bipartite",
    "is_ke",
    "ker",
    "load_graph",
    "max_independent_set",
    "maximum_matching",
    "read_graph",
    "recognize",
    "search_counterexample",
]
