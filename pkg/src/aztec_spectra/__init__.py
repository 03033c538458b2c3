"""Exact spectra, spanning-tree counts and tree generating functions of
checkerboard graphs EC_{m,n} and OC_{m,n}."""

from .algebra import CharPoly, RingMatrix, charpoly, charpoly_via_traces, det_bareiss, det_mod2, kronecker
from .bipoly import U, V, BiPoly
from .cyclotomic import CycInt, Factorization, OrbitFactorization, factor_aztec_count, factor_integer
from .errors import DisconnectedGraphWarning, EnumerationCapExceeded, InconsistencyError, NonRationalProductError
from .graphs import (
    BipartiteGraph,
    SignedGridGraph,
    check_product_identities,
    checkerboard,
    checkerboard_charpoly,
    interior_dual,
    path_graph,
    product_component,
)
from .kernels import BACKEND
from .spectral import checkerboard_product_spectrum, path_eigenvalues, verify_eq5, verify_eq8, verify_eq13
from .trees import (
    count_trees,
    cotree_genfun,
    enumerate_spanning_trees,
    spanning_tree_count,
    spanning_tree_count_theorem2,
    tree_genfun,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND", "BiPoly", "BipartiteGraph", "CharPoly", "CycInt", "DisconnectedGraphWarning",
    "EnumerationCapExceeded", "Factorization", "InconsistencyError", "NonRationalProductError",
    "OrbitFactorization", "RingMatrix", "SignedGridGraph", "U", "V", "charpoly", "charpoly_via_traces",
    "check_product_identities", "checkerboard", "checkerboard_charpoly", "checkerboard_product_spectrum",
    "cotree_genfun", "count_trees", "det_bareiss", "det_mod2", "enumerate_spanning_trees",
    "factor_aztec_count", "factor_integer", "interior_dual", "kronecker", "path_eigenvalues",
    "path_graph", "product_component", "spanning_tree_count", "spanning_tree_count_theorem2",
    "tree_genfun", "verify_eq13", "verify_eq5", "verify_eq8",
]
