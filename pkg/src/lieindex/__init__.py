"""Exact index computations for finite-dimensional Lie algebras over Q."""

from .constructions import (
    Representation,
    adjoint,
    borel_gl,
    generalized_takiff,
    gl,
    heisenberg,
    ideal_representation,
    inonu_wigner,
    irreducible_sl2,
    mautner,
    quotient_representation,
    semidirect_abelian,
    sl,
    so,
    sp,
    strict_upper,
    takiff,
)
from .exactlin import Subspace
from .index import GenericRankConfig, IndexReport, index, index_ideal, index_rep
from .liealg import LieAlgebra, LieError, bracket, dumps, loads, quotient, subalgebra

__version__ = "0.1.0"

__all__ = [
    "GenericRankConfig",
    "IndexReport",
    "LieAlgebra",
    "LieError",
    "Representation",
    "Subspace",
    "adjoint",
    "borel_gl",
    "bracket",
    "dumps",
    "generalized_takiff",
    "gl",
    "heisenberg",
    "ideal_representation",
    "index",
    "index_ideal",
    "index_rep",
    "inonu_wigner",
    "irreducible_sl2",
    "loads",
    "mautner",
    "quotient",
    "quotient_representation",
    "semidirect_abelian",
    "sl",
    "so",
    "sp",
    "strict_upper",
    "subalgebra",
    "takiff",
]
