"""Generating graphs of cyclic groups.

Builds the generating graph of Z_n, enumerates its minimal generating
sets through divisor-class combinatorics, and computes adjacency and
Laplacian spectra via quotient matrices, a Kronecker-product
factorization, and per-index eigenvalue bounds, with brute-force
counterparts for every closed form.
"""

from .numth import DivisorTuple, FactoredInt, divisor_tuple, divisors, euler_phi, factorize, sigma
from .partition import ClassPartition, DivisorClass, build_partition, class_of
from .gensets import (
    GenSetFamily,
    enumerate_Gk,
    is_generating_set,
    is_minimal_generating_set,
    max_minimal_size,
)
from .graph import (
    GeneratingGraph,
    GraphProps,
    HGraph,
    build_graph,
    build_h_graph,
    compute_props,
    degree_of_class,
    edge_count,
    gen_probability,
)
from .linalg import (
    EigenResult,
    SymMatrix,
    backend_name,
    char_poly_exact,
    kron,
    multiset_close,
    sym_eigenvalues,
)
from .spectra import (
    BoundInterval,
    QuotientMatrices,
    SpectrumReport,
    TensorFactorization,
    adjacency_spectrum,
    build_quotients,
    char_poly_quotient,
    laplacian_spectrum,
    qtilde_eigenvalues,
    tensor_factorize,
    weyl_bounds_adjacency,
    weyl_bounds_laplacian,
)

__version__ = "0.1.0"

__all__ = [
    "FactoredInt", "DivisorTuple", "factorize", "euler_phi", "sigma",
    "divisors", "divisor_tuple",
    "ClassPartition", "DivisorClass", "build_partition", "class_of",
    "GenSetFamily", "enumerate_Gk", "is_generating_set",
    "is_minimal_generating_set", "max_minimal_size",
    "GeneratingGraph", "HGraph", "GraphProps", "build_graph", "build_h_graph",
    "compute_props", "degree_of_class", "edge_count", "gen_probability",
    "SymMatrix", "EigenResult", "sym_eigenvalues", "char_poly_exact", "kron",
    "multiset_close", "backend_name",
    "QuotientMatrices", "TensorFactorization", "SpectrumReport",
    "BoundInterval", "build_quotients", "tensor_factorize",
    "qtilde_eigenvalues", "adjacency_spectrum", "laplacian_spectrum",
    "weyl_bounds_adjacency", "weyl_bounds_laplacian", "char_poly_quotient",
]
