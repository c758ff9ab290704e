"""Macaulay inverse systems and complete-intersection certificates over Q."""

from inversys.apolarity import (
    HilbertFunction, MinimalGenerators, ann_piece, cat_matrix, contract,
    derived_piece, hilbert_function, inverse_system_top, minimal_generators,
    socle_piece)
from inversys.certify import (
    CICertificate, CIDecision, CIType, SampleReport, feasible_types,
    is_complete_intersection, lemma_ku_check, sample_ci_witness, verify_certificate)
from inversys.errors import (
    DimensionError, InputError, InvariantError, InversysError, ParseError)
from inversys.graded import GradedBasis
from inversys.poly import (
    Poly, PolyMatrix, add, det, format_poly, jacobian, monomials, mul, parse,
    parse_many, partial, scale)
from inversys.regseq import (
    FormSystem, RankWitness, ideal_piece, is_regular_sequence, macaulay_matrix,
    quotient_hf)

__all__ = [
    "CICertificate", "CIDecision", "CIType", "DimensionError", "FormSystem",
    "GradedBasis", "HilbertFunction", "InputError", "InvariantError", "InversysError",
    "MinimalGenerators", "ParseError", "Poly", "PolyMatrix", "RankWitness",
    "SampleReport", "add", "ann_piece", "cat_matrix", "contract", "derived_piece",
    "det", "feasible_types", "format_poly", "hilbert_function", "ideal_piece",
    "inverse_system_top", "is_complete_intersection", "is_regular_sequence", "jacobian",
    "lemma_ku_check", "macaulay_matrix", "minimal_generators", "monomials", "mul",
    "parse", "parse_many", "partial", "quotient_hf", "sample_ci_witness", "scale",
    "socle_piece", "verify_certificate",
]

__version__ = "0.1.0"
