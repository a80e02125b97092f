"""Laurent series over finite fields, matrices, elementary divisors and lattices."""

from .fields import GF, FiniteField, find_primitive_modulus
from .lattices import (
    LatticeRep,
    diagonal_lattice,
    enumerate_lattices,
    hermite,
    lattice_pair_invariant,
    standard_lattice,
    translation_classes,
)
from .literals import LiteralError, format_series, parse_series
from .matrices import MatLS, determinant, diag, frobenius_matrix, identity, matmul, monomial_diag, smith_invariants
from .series import LSeries

__all__ = [
    "GF",
    "FiniteField",
    "find_primitive_modulus",
    "LSeries",
    "MatLS",
    "identity",
    "diag",
    "monomial_diag",
    "matmul",
    "frobenius_matrix",
    "determinant",
    "smith_invariants",
    "LatticeRep",
    "hermite",
    "enumerate_lattices",
    "translation_classes",
    "lattice_pair_invariant",
    "standard_lattice",
    "diagonal_lattice",
    "parse_series",
    "format_series",
    "LiteralError",
]
