"""Exact rational arithmetic, polynomial algebra and certified real roots."""
from .integrate import PoleInInterval, UnsupportedIntegrand, integrate_rational_on_interval
from .linalg import (ExactMatrix, InconsistentSystemError, SingularMatrixError, nullspace,
                     rank, solve_consistent, solve_linear_exact)
from .poly import Poly, as_fraction, determinant, gcd, resultant, squarefree_part, symbols
from .ratfunc import RationalFunction, as_rational_function
from .roots import (Interval, RootInterval, count_real_roots, enclose, evaluate_algebraic,
                    format_decimal, isolate_real_roots, refine_root, sqrt, sturm_sequence)

__all__ = [
    "ExactMatrix", "InconsistentSystemError", "Interval", "PoleInInterval", "Poly",
    "RationalFunction", "RootInterval", "SingularMatrixError", "UnsupportedIntegrand",
    "as_fraction", "as_rational_function", "count_real_roots", "determinant", "enclose",
    "evaluate_algebraic", "format_decimal", "gcd", "integrate_rational_on_interval",
    "isolate_real_roots", "nullspace", "rank", "refine_root", "resultant", "solve_consistent",
    "solve_linear_exact", "sqrt", "squarefree_part", "sturm_sequence", "symbols",
]
