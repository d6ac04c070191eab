"""Exact braid group representations over Z[t,t^-1,q,q^-1] and knot invariants."""

from .laurent import (
    LaurentPoly,
    PolyFraction,
    ONE,
    Q,
    T,
    ZERO,
    exact_div,
    parse_poly,
    q_binomial,
    q_factorial,
    q_natural,
    q_pochhammer,
)
from .polymatrix import PolyMatrix
from .braid import BraidWord, CheckReport, check_braid_relations
from .reps import (
    burau_unreduced,
    burau_reduced,
    lk,
    sym2_quantized,
    change_of_basis,
    qpascal_rep,
    lie_rep,
)
from .invariants import (
    InvariantError,
    alexander,
    krammer_fraction,
    markov1_test,
    markov2_probe,
    specialize,
)

__all__ = [
    "LaurentPoly",
    "PolyFraction",
    "PolyMatrix",
    "BraidWord",
    "CheckReport",
    "ONE",
    "Q",
    "T",
    "ZERO",
    "exact_div",
    "parse_poly",
    "q_binomial",
    "q_factorial",
    "q_natural",
    "q_pochhammer",
    "check_braid_relations",
    "burau_unreduced",
    "burau_reduced",
    "lk",
    "sym2_quantized",
    "change_of_basis",
    "qpascal_rep",
    "lie_rep",
    "InvariantError",
    "alexander",
    "krammer_fraction",
    "markov1_test",
    "markov2_probe",
    "specialize",
]

__version__ = "0.1.0"
