"""Exact-arithmetic construction and certification of two-parameter quantum
group R-matrices for the classical series, finite and with a spectral
parameter."""

from .scalars import (
    LaurentPoly,
    Scalar,
    ScalarRing,
    Variable,
    parse,
    ring_create,
    rs_binomial,
    rs_factorial,
    rs_integer,
    rs_ring,
    substitute,
    text_form,
)
from .rootdata import (
    AffineData,
    Root,
    RootSystem,
    affine_data,
    build_root_system,
    f_function,
    fundamental_weights,
    omega_pairing,
    weyl_dimension,
)
from .lyndon import (
    ConvexOrder,
    canonical_factorization,
    is_convex,
    is_lyndon,
    lalonde_ram,
    minimal_pair,
    standard_factorization,
)
from .matrices import SMatrix, kron
from .rep import (
    EvaluationRep,
    Representation,
    build_evaluation,
    build_fundamental,
    highest_weight_vectors,
    verify_affine_relations,
    verify_finite_relations,
)
from .pairing import (
    HalfElement,
    PairingOracle,
    abstract_root_vector,
    c_gamma,
    pairing_power,
    verify_pbw_orthogonality,
)
from .rootvec import build_root_vector_matrices, verify_closed_forms
from .rmatrix import (
    build_rbar_inverse,
    build_rhat_explicit,
    build_rhat_factorized,
    build_theta,
    check_braid,
    check_eigenvalues,
    check_intertwining,
    check_min_poly,
    specialize_and_compare,
)
from .affine import (
    baxterize,
    build_affine_rhat,
    check_affine_intertwiner,
    check_spectral_ybe,
)
from .embed import (
    b_type_obstruction,
    d_gamma,
    kappa_constants,
    verify_dj_relations,
    verify_root_vector_embedding,
    verify_twist_A,
)

__all__ = [
    "AffineData",
    "ConvexOrder",
    "EvaluationRep",
    "HalfElement",
    "LaurentPoly",
    "PairingOracle",
    "Representation",
    "Root",
    "RootSystem",
    "SMatrix",
    "Scalar",
    "ScalarRing",
    "Variable",
    "abstract_root_vector",
    "affine_data",
    "b_type_obstruction",
    "baxterize",
    "build_affine_rhat",
    "build_evaluation",
    "build_fundamental",
    "build_rbar_inverse",
    "build_rhat_explicit",
    "build_rhat_factorized",
    "build_root_system",
    "build_root_vector_matrices",
    "build_theta",
    "c_gamma",
    "canonical_factorization",
    "check_affine_intertwiner",
    "check_braid",
    "check_eigenvalues",
    "check_intertwining",
    "check_min_poly",
    "check_spectral_ybe",
    "d_gamma",
    "f_function",
    "fundamental_weights",
    "highest_weight_vectors",
    "is_convex",
    "is_lyndon",
    "kappa_constants",
    "kron",
    "lalonde_ram",
    "minimal_pair",
    "omega_pairing",
    "pairing_power",
    "parse",
    "ring_create",
    "rs_binomial",
    "rs_factorial",
    "rs_integer",
    "rs_ring",
    "specialize_and_compare",
    "standard_factorization",
    "substitute",
    "text_form",
    "verify_affine_relations",
    "verify_closed_forms",
    "verify_dj_relations",
    "verify_finite_relations",
    "verify_pbw_orthogonality",
    "verify_root_vector_embedding",
    "verify_twist_A",
    "weyl_dimension",
]
