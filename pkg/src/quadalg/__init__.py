"""Exact constructions for three-dimensional quadratic algebras."""

from .algebra import (ClassId, ClassParams, InvalidParams, Interpretation, QuadraticAlgebraSpec,
                      Validity, casimir_correction, casimir_lowest_weight, casimir_value,
                      class_structure_constants, dimension_of, enumerate_params, identify_class,
                      require_valid, structure_function, validate_params)
from .diffop import DiffOperator, basis_for, matrix_in_basis, realization_for, verify_equivalence
from .exact import Rational, SqrtRational, parse_rational, sqrt_exact
from .fock import FockSpace, SparseOperator, invariant_block, realize, verify_central
from .parsing import ParseError, format_spec, parse_spec
from .polynomial import Polynomial, antidifference
from .reps import (TripleRep, build_rep, casimir_diag, deformed_oscillator, tavis_cummings_matrix,
                   verify_relations)
from .spectra import (aniso_spectrum, degeneracy_brute, degeneracy_closed, degeneracy_via_reps,
                      partitions_brute, partitions_closed)

__all__ = [
    "ClassId", "ClassParams", "InvalidParams", "Interpretation", "QuadraticAlgebraSpec",
    "Validity", "casimir_correction", "casimir_lowest_weight", "casimir_value",
    "class_structure_constants", "dimension_of", "enumerate_params", "identify_class",
    "require_valid", "structure_function", "validate_params",
    "DiffOperator", "basis_for", "matrix_in_basis", "realization_for", "verify_equivalence",
    "Rational", "SqrtRational", "parse_rational", "sqrt_exact",
    "FockSpace", "SparseOperator", "invariant_block", "realize", "verify_central",
    "ParseError", "format_spec", "parse_spec", "Polynomial", "antidifference",
    "TripleRep", "build_rep", "casimir_diag", "deformed_oscillator", "tavis_cummings_matrix",
    "verify_relations",
    "aniso_spectrum", "degeneracy_brute", "degeneracy_closed", "degeneracy_via_reps",
    "partitions_brute", "partitions_closed",
]
