"""Exact computer algebra for the differential graded Hecke algebra of
sphere braids: PBW normal forms, the differential, homology reports,
braid/skein evaluation, and the Katok geodesic index formulas.
"""

from .coeff import HBAR, ONE, ZERO, IntPoly, NonExactDivision, poly_divexact, poly_eval, poly_mul
from .symgroup import Perm, compose, identity, length, reduced_word, transposition
from .hecke import (
    HeckeElt,
    hecke_mul,
    hecke_mul_gen,
    t_inverse,
    theta,
)
from .dga import (
    DgaConfig,
    DgaElt,
    GenWord,
    PbwMono,
    d_generator,
    dga_mul,
    differential,
    insert,
    normal_form,
    pull,
    relation_suite,
    specialize_hbar,
)
from .homology import (
    ChainMatrix,
    GradedBasis,
    bareiss_rank,
    d_matrix,
    generic_betti,
    graded_basis,
    h0_presentation,
    specialized_homology,
)
from .braid import BraidWord, eval_braid, parse_braid, skein_residue, sphere_relation_class
from .katok import KatokParams, geodesic_index, geodesic_length, monotonicity_report

__version__ = "0.1.0"

__all__ = [
    "HBAR",
    "ONE",
    "ZERO",
    "IntPoly",
    "NonExactDivision",
    "poly_mul",
    "poly_eval",
    "poly_divexact",
    "Perm",
    "compose",
    "identity",
    "length",
    "reduced_word",
    "transposition",
    "HeckeElt",
    "hecke_mul",
    "hecke_mul_gen",
    "t_inverse",
    "theta",
    "DgaConfig",
    "DgaElt",
    "GenWord",
    "PbwMono",
    "pull",
    "insert",
    "normal_form",
    "dga_mul",
    "d_generator",
    "differential",
    "relation_suite",
    "specialize_hbar",
    "GradedBasis",
    "ChainMatrix",
    "graded_basis",
    "d_matrix",
    "generic_betti",
    "specialized_homology",
    "h0_presentation",
    "bareiss_rank",
    "BraidWord",
    "parse_braid",
    "eval_braid",
    "skein_residue",
    "sphere_relation_class",
    "KatokParams",
    "geodesic_length",
    "geodesic_index",
    "monotonicity_report",
]
