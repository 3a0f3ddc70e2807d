"""Exact and closed-form h-super connectivity for star-type interconnection networks."""

from .cuts import CutCertificate, Verdict, verify_edge_cut, verify_vertex_cut
from .errors import DomainError, OracleTimeout, ResourceError, StarkitError, StructureError
from .formulas import FormulaResult, formula
from .iso import IsoWitness, edge_sets_equal, isomorphic
from .oracle import ExactResult, exact_kappa_s, exact_lambda_s, h_core
from .perm import Arrangement, rank, unrank
from .split import SplitMap, split_graph, split_nkstar
from .topology import (
    FamilyParams,
    Graph,
    build_alternating_network,
    build_complete,
    build_cycle,
    build_nkstar,
    build_star,
)

__version__ = "0.1.0"
