"""Exact Schur functions, lattice paths and determinantal identities."""

from .exactpoly import Poly, to_text, x, y
from .identities import check_dodgson_schur, fuzz, symbolic
from .jacobitrudi import jt_matrix
from .linalg import RingMatrix, det
from .overlays import verify_dodgson_bijection
from .shapes import parse_shape, partition, shape
from .tableaux import BudgetExceeded, enumerate_ssyt, skew_schur
from .verdict import Verdict

__version__ = "0.1.0"

__all__ = [
    "BudgetExceeded",
    "Poly",
    "RingMatrix",
    "Verdict",
    "check_dodgson_schur",
    "det",
    "enumerate_ssyt",
    "fuzz",
    "jt_matrix",
    "parse_shape",
    "partition",
    "shape",
    "skew_schur",
    "symbolic",
    "to_text",
    "verify_dodgson_bijection",
    "x",
    "y",
]
