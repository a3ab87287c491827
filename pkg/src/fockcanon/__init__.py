"""Canonical bases of tensor products of level-one modules inside higher-level Fock spaces."""

from .canonical import (
    CanonicalBasis,
    CanonicalBasisEntry,
    CanonicalBasisError,
    DecompositionMatrix,
    UnstableError,
    canonical_basis_up_to,
    canonical_basis_up_to_einf,
    canonical_vector,
    canonical_vector_einf,
    decomposition_matrix,
)
from .combinat import (
    Charge,
    Node,
    dominates,
    is_multiregular,
    is_regular,
    ladder_decomposition,
    multipartitions,
    parse_multipartition,
    refine_order_gte,
)
from .fockspace import FockVector, WeightData, apply_e, apply_f, apply_f_divided, h_pairing, weight_of
from .laurentq import LaurentPoly, alpha_extract, quantum_factorial, quantum_int
from .llt_level1 import auxiliary_vector, llt_canonical
from .wedge_oracle import (
    Multicharge,
    WedgeError,
    bar_coefficients,
    canonical_basis_twisted,
    oracle_bar,
    oracle_canonical,
)

__all__ = [
    "CanonicalBasis",
    "CanonicalBasisEntry",
    "CanonicalBasisError",
    "Charge",
    "DecompositionMatrix",
    "FockVector",
    "LaurentPoly",
    "Multicharge",
    "Node",
    "UnstableError",
    "WedgeError",
    "WeightData",
    "alpha_extract",
    "apply_e",
    "apply_f",
    "apply_f_divided",
    "auxiliary_vector",
    "bar_coefficients",
    "canonical_basis_twisted",
    "canonical_basis_up_to",
    "canonical_basis_up_to_einf",
    "canonical_vector",
    "canonical_vector_einf",
    "decomposition_matrix",
    "dominates",
    "h_pairing",
    "is_multiregular",
    "is_regular",
    "ladder_decomposition",
    "llt_canonical",
    "multipartitions",
    "oracle_bar",
    "oracle_canonical",
    "parse_multipartition",
    "quantum_factorial",
    "quantum_int",
    "refine_order_gte",
    "weight_of",
]
