"""Exact Betti diagram toolkit."""

from .decomposition import (
    DecompositionTerm,
    NotDecomposableError,
    decompose,
    is_chain,
    reconstruct,
    weight_sum,
)
from .diagram import (
    BettiDiagram,
    DegreeSequence,
    DiagramError,
    PureDiagram,
    check_monotonicity,
    compare_dseq,
    herzog_kuhl,
    lower_degree_sequence,
    n_dq_satisfied,
    regularity,
    upper_degree_sequence,
)
from .monomial import MonomialIdeal, betti_table, random_squarefree
from .poly import MultiPoly, PolyMatrix, parse_poly
from .reports import BoundReport

__version__ = "0.1.0"

__all__ = [
    "BettiDiagram",
    "BoundReport",
    "DecompositionTerm",
    "DegreeSequence",
    "DiagramError",
    "MonomialIdeal",
    "MultiPoly",
    "NotDecomposableError",
    "PolyMatrix",
    "PureDiagram",
    "betti_table",
    "check_monotonicity",
    "compare_dseq",
    "decompose",
    "herzog_kuhl",
    "is_chain",
    "lower_degree_sequence",
    "n_dq_satisfied",
    "parse_poly",
    "random_squarefree",
    "reconstruct",
    "regularity",
    "upper_degree_sequence",
    "weight_sum",
]
