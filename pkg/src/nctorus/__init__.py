"""Exact computations on the algebraic noncommutative torus and its Z_3, Z_4, Z_6 orbifolds."""

from .scalar import Coefficient, Cyclotomic, frac_solve
from .torus import GroupMatrix, TorusElement, act, elem_mul, group, star
from .crossed import CrossedElement, build_projection, cross_mul, cross_star, is_projection

__version__ = "0.1.0"

__all__ = [
    "Coefficient",
    "Cyclotomic",
    "frac_solve",
    "GroupMatrix",
    "TorusElement",
    "act",
    "elem_mul",
    "group",
    "star",
    "CrossedElement",
    "build_projection",
    "cross_mul",
    "cross_star",
    "is_projection",
]
