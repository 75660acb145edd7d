"""Desk-scale verification of the finiteness argument for Tribonacci
Diophantine triples: certified interval arithmetic, exact splitting-field
computations, gcd and norm certificates, two independent triple searches,
and a truncation-error decay check, with machine-readable records.
"""

from .constants import (Cmp, DEFAULT_PRECISION, MAX_PRECISION, alpha_power,
                        cmp_alpha_power, constants, floor_log_alpha,
                        verify_growth, verify_numeric_window)
from .enclosure import (ComplexEnclosure, Enclosure, PrecisionFailure,
                        round_down, round_up, sqrt_split)
from .expansion import (DecayReport, ExpansionParams, ExpansionTerm,
                        decay_report, expansion_error, expansion_terms)
from .gcdbound import (FactorBoundsReport, GcdWitness, IntegrityError,
                       SweepReport, alpha_power_cubic, factor_bounds,
                       factor_sweep, gcd_shifted, norm_sweep, norm_witness,
                       prop1_holds, sweep)
from .records import (RecordFormatError, VerificationRecord, check_record,
                      emit_records, read_records)
from .splitfield import (ALPHA_C, ALPHA_K, EPS, CubicElement, FieldElement,
                         InconclusiveSquareTest, SquareCertificate,
                         all_embeddings, binet_constants, embed_alpha,
                         embed_field, fast_path_refutes,
                         field_identity_report, is_root_of_unity,
                         is_square_in_K, monomial, norm3, norm6,
                         sqrt_minus_11)
from .tribonacci import (TribTable, default_table, index_window,
                         is_tribonacci, trib, trib_fast)
from .triples import (TripleCandidate, admissible, brute_force, search,
                      uvw_from_xyz, verify_triple)

__version__ = "0.1.0"

__all__ = [
    "ALPHA_C", "ALPHA_K", "Cmp", "ComplexEnclosure", "CubicElement",
    "DEFAULT_PRECISION", "DecayReport", "EPS", "Enclosure",
    "ExpansionParams", "ExpansionTerm", "FactorBoundsReport", "FieldElement",
    "GcdWitness", "InconclusiveSquareTest", "IntegrityError",
    "MAX_PRECISION", "PrecisionFailure", "RecordFormatError",
    "SquareCertificate", "SweepReport", "TribTable", "TripleCandidate",
    "VerificationRecord", "admissible", "all_embeddings", "alpha_power",
    "alpha_power_cubic", "binet_constants", "brute_force", "check_record",
    "cmp_alpha_power", "constants", "decay_report", "default_table",
    "embed_alpha", "embed_field", "emit_records", "expansion_error",
    "expansion_terms", "factor_bounds", "factor_sweep", "fast_path_refutes",
    "field_identity_report", "floor_log_alpha", "gcd_shifted",
    "index_window", "is_root_of_unity", "is_square_in_K", "is_tribonacci",
    "monomial", "norm3", "norm6", "norm_sweep", "norm_witness",
    "prop1_holds", "read_records", "round_down", "round_up", "search",
    "sqrt_minus_11", "sqrt_split", "sweep", "trib", "trib_fast",
    "uvw_from_xyz", "verify_growth", "verify_numeric_window",
    "verify_triple",
]
