"""Exact-arithmetic toolkit for homology triplets (B, H, C) over [0, n]:
Hilbert-polynomial coefficient vectors, hypercohomology tables, Betti
diagrams of the associated pure free squarefree complexes, and classical
pure resolutions from supernatural root sequences."""

from .classical import (
    PureComplexReport,
    RootSequence,
    buchsbaum_rim,
    eagon_northcott,
    pure_zip,
    schur_roots,
    supernatural_poly,
    supernatural_table,
    tensor_roots,
)
from .core import HomologyTriplet, enumerate_triplets, validate_triplet
from .degsets import DegreeSet, StrandDecomposition, is_balanced, reflect, strands
from .errors import (
    ConsistencyError,
    DegenerateSystem,
    Overdetermined,
    TripletError,
    Underdetermined,
)
from .linalg import (
    RatMatrix,
    RatPoly,
    basis_poly,
    binom_poly,
    degree_drop_equations,
    from_basis,
    in_basis,
    nullspace,
    primitive_normalize,
)
from .solver import (
    AlphaVector,
    BettiDiagram,
    ChiFamily,
    betti,
    build_equations,
    chi_family,
    dual_alpha,
    solve_alpha,
)
from .squarefree import (
    HomologicalData,
    homological_data,
    hsq_from_series,
    hsq_of_reduction,
    hsq_series,
    rotated_betti_via_strands,
    sheaf_class_decompose,
    triplet_betti,
)
from .tables import HyperTable, ZipTerm, corner_table, full_table, render, tate_terms, zip_terms

__version__ = "0.1.0"
