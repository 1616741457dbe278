"""Exact computations in cones spanned by products of Schur functions."""

from .cone import (ConeSpec, ExtremalityResult, InfeasibilityProof, SeparationCertificate,
                   SeparationError, Witness, distinct_parts_separator, find_separator,
                   is_extreme, lift_separator, separates_check, verify_conjecture1,
                   verify_distinct, verify_strong)
from .errors import DomainError, ParseError
from .nested import (enumerate_sp, enumerate_ssp, enumerate_ssp_lambda, is_nested,
                     make_factor_set, parse_factor_set, phi, psi)
from .partitions import (dominates, lambda_dagger, lambda_plus, lambda_plusplus,
                         parse_partition, partitions_of)
from .symfunc import (HPolynomial, SchurVector, h_to_schur, inner_product, jacobi_trudi,
                      schur_product, syzygy_decompose)
from .tableaux import enumerate_ssyt, kostka, lr_coefficient

__version__ = "0.1.0"
