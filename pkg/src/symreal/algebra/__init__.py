"""Exact arithmetic substrate: rationals, polynomials, matrices."""

from .bipoly import BiPoly
from .matrix import PolyMatrix, det, jacobian, minors_k, rational_rank
from .multipoly import MultiPoly, Rational, grevlex_key, poly_eval
from .parse import PolySyntaxError, poly_parse
from .unipoly import UniPoly, is_squarefree, poly_gcd, poly_xgcd, squarefree_part

__all__ = [
    "BiPoly",
    "MultiPoly",
    "PolyMatrix",
    "PolySyntaxError",
    "Rational",
    "UniPoly",
    "det",
    "grevlex_key",
    "is_squarefree",
    "jacobian",
    "minors_k",
    "poly_eval",
    "poly_gcd",
    "poly_parse",
    "poly_xgcd",
    "rational_rank",
    "squarefree_part",
]
