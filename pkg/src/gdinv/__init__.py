"""Exact GD1 and 1GD generalized inverses over the Gaussian rationals."""

from .errors import GDInvError
from .inverses import (
    CompositeKind,
    GDrazinParam,
    Gd1BlockParam,
    InnerParam,
    composite_inverse,
    drazin,
    g_drazin,
    gd1,
    gd1_from_decomposition,
    inner_inverse,
    is_g_drazin,
    moore_penrose,
    one_gd,
    one_gd_from_decomposition,
)
from .linalg import rank, rref, solve_matrix_equations
from .matrix import Matrix
from .oracles import characterization_report, check_gd1_basic
from .orders import OrderKind, OrderWitness, relation_holds, sharp_to_gd1_witness
from .scalar import GaussianRational, gaussian
from .spectral import core_nilpotent, matrix_index

__version__ = "0.1.0"

__all__ = [
    "GDInvError",
    "CompositeKind",
    "GDrazinParam",
    "Gd1BlockParam",
    "InnerParam",
    "composite_inverse",
    "drazin",
    "g_drazin",
    "gd1",
    "gd1_from_decomposition",
    "inner_inverse",
    "is_g_drazin",
    "moore_penrose",
    "one_gd",
    "one_gd_from_decomposition",
    "rank",
    "rref",
    "solve_matrix_equations",
    "Matrix",
    "characterization_report",
    "check_gd1_basic",
    "OrderKind",
    "OrderWitness",
    "relation_holds",
    "sharp_to_gd1_witness",
    "GaussianRational",
    "gaussian",
    "core_nilpotent",
    "matrix_index",
]
