"""Exact-arithmetic invariants of invertible Landau-Ginzburg orbifolds."""

from .invertible import (
    AtomicDecomposition,
    Block,
    ExponentMatrix,
    Monomial,
    Polynomial,
    WeightSystem,
    check_invertible,
    decompose_atomic,
    inverse_exponent_matrix,
    parse_polynomial,
    transpose_polynomial,
    weights,
)
from .milnor import GradedMonomialBasis, character, degree_of, milnor_basis
from .periods import (
    CubicFlatStructure,
    QuinticPeriods,
    cubic_flat_coordinate,
    cubic_g_h,
    quintic_mirror_map,
    quintic_omegas,
    quintic_yukawa,
)
from .quintic import FamilyElement, QuinticFamily
from .series import FormalPowerSeries
from .splitting import (
    EquivarianceCertificate,
    splitting_obstruction_dims,
    verify_degree_gap,
)
from .state_space import OrbifoldStateSpace, Sector, localize, sector_report
from .symmetry import (
    PhaseVector,
    SymmetryGroup,
    fixed_locus,
    is_special_linear,
    max_symmetry_group,
    restrict_to_fixed_locus,
    subgroup,
)

__version__ = "0.1.0"

__all__ = [
    "AtomicDecomposition",
    "Block",
    "CubicFlatStructure",
    "EquivarianceCertificate",
    "ExponentMatrix",
    "FamilyElement",
    "FormalPowerSeries",
    "GradedMonomialBasis",
    "Monomial",
    "OrbifoldStateSpace",
    "PhaseVector",
    "Polynomial",
    "QuinticFamily",
    "QuinticPeriods",
    "Sector",
    "SymmetryGroup",
    "WeightSystem",
    "character",
    "check_invertible",
    "cubic_flat_coordinate",
    "cubic_g_h",
    "decompose_atomic",
    "degree_of",
    "fixed_locus",
    "inverse_exponent_matrix",
    "is_special_linear",
    "localize",
    "max_symmetry_group",
    "milnor_basis",
    "parse_polynomial",
    "quintic_mirror_map",
    "quintic_omegas",
    "quintic_yukawa",
    "restrict_to_fixed_locus",
    "sector_report",
    "splitting_obstruction_dims",
    "subgroup",
    "transpose_polynomial",
    "verify_degree_gap",
    "weights",
]
