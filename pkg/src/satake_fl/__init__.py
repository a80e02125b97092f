"""Exact spherical Hecke algebras of GL_d, unramified base change, and lattice-counting
orbital integrals over local function fields."""

from .coweights import (
    Coweight,
    dominance_leq,
    enumerate_below,
    rho2,
    split_plus_minus,
    sup_norm,
    weight,
)
from .errors import (
    DimensionMismatch,
    DivisionByZero,
    HypothesisViolated,
    InsufficientPrecision,
    InternalInconsistency,
    NormalizationFailure,
    NotDominant,
    NotInImage,
    NotRegular,
    SatakeError,
    WeightMismatch,
    WindowUnstable,
)
from .hecke import HeckeElement, base_change, convolve, phi, psi, satake, satake_inv
from .laurent import LaurentPoly
from .orbital import (
    OrbitalProblem,
    OrbitalValue,
    conductor,
    fl_check,
    norm_map,
    orbital_integral,
    saito_shintani_check,
    twisted_orbital_integral,
)
from .symfunc import (
    SymPoly,
    hall_littlewood,
    kostka_foulkes,
    lusztig_kato_poly,
    msym,
    mul,
    schur,
    substitute_power,
)

__version__ = "0.1.0"
