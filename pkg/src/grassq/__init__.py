"""Classical and quantum Schubert calculus on isotropic Grassmannians."""

from .core import (Box, GrassmannianSpec, Label, PartitionPair, SpecError, dual, ell_k,
                   enumerate_basis, format_label, index_set_to_label, k_related,
                   label_to_index_set, make_label, make_spec, parse_label,
                   partition_pair_to_label, validate_label)
from .gw import (SpecialPolynomial, classical_product, degree_one_crosscheck,
                 express_in_specials, gromov_witten, quantum_product)
from .index_pieri import classical_pieri_via_index, index_arrow, index_multiplicity
from .pieri import PieriMove, SpecialClass, bc_comparison_exponent, classical_pieri, pieri_arrow
from .presentation import basis_check, schur_determinant, verify_presentation
from .quantum import max_q_degree_bound, quantum_pieri
from .ring import RingElement, add, extract_coefficient, scale

__all__ = [
    "Box", "GrassmannianSpec", "Label", "PartitionPair", "PieriMove", "RingElement",
    "SpecError", "SpecialClass", "SpecialPolynomial", "add", "basis_check",
    "bc_comparison_exponent", "classical_pieri", "classical_pieri_via_index",
    "classical_product", "degree_one_crosscheck", "dual", "ell_k", "enumerate_basis",
    "express_in_specials", "extract_coefficient", "format_label", "gromov_witten",
    "index_arrow", "index_multiplicity", "index_set_to_label", "k_related",
    "label_to_index_set", "make_label", "make_spec", "max_q_degree_bound", "parse_label",
    "partition_pair_to_label", "pieri_arrow", "quantum_pieri", "quantum_product", "scale",
    "schur_determinant", "validate_label", "verify_presentation",
]
