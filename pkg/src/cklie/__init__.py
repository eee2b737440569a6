"""cklie: exact Cayley-Klein algebra families and their central extensions.

Constructs the orthogonal (so), special unitary (su), unitary (u) and
quaternionic unitary (sq) families of real Lie algebras for arbitrary
dimension and rational contraction coefficients, computes their second
cohomology exactly, and cross-validates the result against a closed-form
classification of the extension coefficients.
"""

from .scalars import Hypercomplex, Kind, hyper_conj, hyper_mul, parse_rational, rat_normalize, unit
from .ck_matrix import (
    B,
    E,
    FAMILIES,
    GeneratorLabel,
    I_LABEL,
    J,
    M,
    MatrixOverK,
    MetricMatrix,
    Mq,
    OmegaVector,
    XI_LABEL,
    build_generator,
    build_metric,
    canonical_signs,
    decompose_in_basis,
    family_dimension,
    is_metric_antihermitian,
    is_traceless,
    labels_for_family,
    mat_commutator,
    omega_product,
)
from .lie_core import (
    ExtendedAlgebra,
    LieAlgebra,
    build_algebra,
    build_extended,
    build_so,
    build_sq,
    build_su,
    build_u,
    contract,
    epsilon,
    from_matrices,
    permute_basis,
    verify_jacobi,
)
from .cohomology import (
    CohomologyResult,
    CohomologySolver,
    OneCochain,
    TwoCochain,
    coboundary,
    coboundary_space,
    cocycle_equations,
    cocycle_space,
    exact_rank,
    h2,
    is_trivial,
)
from .classify import (
    CatalogEntry,
    CrosscheckReport,
    ExtensionCatalog,
    ZeroPattern,
    coefficient_cocycle,
    crosscheck,
    pair_combination,
    pair_mu,
    predict,
    predict_so,
    predict_sq,
    predict_su,
    predict_u,
    removal_mu,
)

__version__ = "0.1.0"
