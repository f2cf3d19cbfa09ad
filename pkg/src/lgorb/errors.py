"""Exception taxonomy.

Two families: ``InputError`` for malformed or out-of-contract inputs (the CLI
maps these to exit code 2), and ``InternalInvariantError`` for conditions that
indicate a bug in this library rather than bad input (exit code 3).
"""

from __future__ import annotations


class LgorbError(Exception):
    """Base class for all library errors."""


class InputError(LgorbError):
    """A caller-supplied value violates an operation's precondition."""


class InternalInvariantError(LgorbError):
    """An internal cross-check failed; this is a bug, not bad input."""


class PolynomialSyntaxError(InputError):
    """Malformed polynomial text; ``position`` is the 0-based offset."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (offset {position})")
        self.position = position


class UnknownVariableError(InputError):
    """A name that is not x1, x2, ... appeared where a variable was expected."""

    def __init__(self, name: str, position: int):
        super().__init__(f"unknown variable name {name!r} (offset {position})")
        self.name = name
        self.position = position


class ZeroPolynomialError(InputError):
    """All terms cancelled; the zero polynomial carries no structure."""


class NotSquareError(InputError):
    """Term count differs from variable count."""


class SingularExponentMatrixError(InputError):
    """The exponent matrix has determinant zero."""


class WeightOutOfRangeError(InputError):
    """Some solved weight lies outside (0, 1/2]."""


class NotAtomicDecomposableError(InputError):
    """The exponent matrix is not a disjoint union of Fermat, chain and loop blocks."""


class GeneratorNotInAmbientError(InputError):
    """A subgroup generator is not an element of the ambient group."""


class RestrictionNotInvertibleError(InputError):
    """Restriction to a fixed locus failed the invertibility check."""


class GroupNotInMaxSymmetryError(InputError):
    """The orbifold group is not contained in the maximal diagonal symmetry group."""


class InternalCountMismatchError(InternalInvariantError):
    """A monomial basis count disagrees with the Milnor number."""


class ClosedFormMismatchError(InternalInvariantError):
    """Generic matrix inversion disagrees with a chain/loop closed form."""


class DegreeTooLargeError(InputError):
    """Requested normal form exceeds the configured degree bound."""


class NotHomogeneousError(InputError):
    """A family element mixes total degrees."""


class DivisionByNonUnitError(InputError):
    """Power series division requires an invertible constant term."""


class ReversionNotDefinedError(InputError):
    """Series reversion requires zero constant term and a unit linear term."""


class WordOutsideCatalogError(InputError):
    """A chain word is outside the finite catalog the transport operator covers."""


class PoleAtRequestedPointError(InputError):
    """Evaluation requested at a zero of a denominator (the locus psi^5 = 1)."""
