"""Finite diagonal symmetry groups of invertible polynomials.

Group elements are *phase vectors*: tuples of rationals theta in [0, 1)^N,
acting by x_i -> exp(2 pi i theta_i) x_i and composed by addition mod 1.
Working additively with exact rationals avoids cyclotomic fields entirely.

The maximal diagonal symmetry group of W is generated by the columns of the
inverse exponent matrix reduced mod 1; its order is |det E|.  The exponential
grading element J is the weight vector mod 1.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import (
    GeneratorNotInAmbientError,
    InternalInvariantError,
    RestrictionNotInvertibleError,
)
from .invertible import (
    ExponentMatrix,
    Monomial,
    Polynomial,
    check_invertible,
    inverse_exponent_matrix,
    weights,
)


@dataclass(frozen=True, order=True)
class PhaseVector:
    """Element of (Q/Z)^N with phases canonically reduced to [0, 1)."""

    phases: tuple[Fraction, ...]

    def __post_init__(self):
        if any(not (0 <= t < 1) for t in self.phases):
            raise ValueError("phases must be reduced to [0, 1)")

    @staticmethod
    def of(values) -> "PhaseVector":
        return PhaseVector(tuple(Fraction(v) % 1 for v in values))

    def __len__(self) -> int:
        return len(self.phases)

    def __add__(self, other: "PhaseVector") -> "PhaseVector":
        return PhaseVector(tuple((a + b) % 1 for a, b in zip(self.phases, other.phases)))

    def __neg__(self) -> "PhaseVector":
        return PhaseVector(tuple((-a) % 1 for a in self.phases))

    def is_identity(self) -> bool:
        return all(t == 0 for t in self.phases)


def is_special_linear(g: PhaseVector) -> bool:
    """True when the phase sum is an integer (determinant-1 scaling)."""
    return sum(g.phases, Fraction(0)) % 1 == 0


def fixed_locus(g: PhaseVector) -> tuple[int, ...]:
    """1-based indices of the coordinates g leaves fixed."""
    return tuple(i + 1 for i, t in enumerate(g.phases) if t == 0)


@dataclass(frozen=True)
class SymmetryGroup:
    """A finite subgroup of (Q/Z)^N given by generators; elements on demand.

    ``grading_element`` is the exponential grading element J (weights mod 1)
    of the polynomial this group acts on, when known.
    """

    ambient_dim: int
    generators: tuple[PhaseVector, ...]
    grading_element: PhaseVector | None = None
    _elements: tuple[PhaseVector, ...] = field(default=None, compare=False, repr=False)

    @property
    def elements(self) -> tuple[PhaseVector, ...]:
        if self._elements is None:
            closure = _close_under_addition(self.generators, self.ambient_dim)
            object.__setattr__(self, "_elements", closure)
        return self._elements

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, g: PhaseVector) -> bool:
        return g in set(self.elements)

    def is_special_linear_group(self) -> bool:
        return all(is_special_linear(g) for g in self.elements)

    def contains_grading(self) -> bool:
        if self.grading_element is None:
            return False
        return self.grading_element in self


def _close_under_addition(
    generators: tuple[PhaseVector, ...], dim: int
) -> tuple[PhaseVector, ...]:
    identity = PhaseVector((Fraction(0),) * dim)
    elements = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for e in frontier:
            for g in generators:
                s = e + g
                if s not in elements:
                    elements.add(s)
                    nxt.append(s)
        frontier = nxt
    return tuple(sorted(elements))


def max_symmetry_group(E: ExponentMatrix) -> SymmetryGroup:
    """Group of all diagonal scalings fixing W: columns of E^-1 mod 1.

    The order is verified against |det E|; a mismatch is an internal error.
    """
    n = E.size
    inv = inverse_exponent_matrix(E)
    cols = tuple(
        PhaseVector(tuple(inv[i][j] % 1 for i in range(n))) for j in range(n)
    )
    w = weights(E)
    j_element = PhaseVector(tuple(q % 1 for q in w.weights))
    group = SymmetryGroup(n, cols, grading_element=j_element)
    expected = abs(E.determinant())
    if group.order != expected:
        raise InternalInvariantError(
            f"maximal symmetry group has order {group.order}, |det E| = {expected}"
        )
    return group


def subgroup(generators, ambient: SymmetryGroup) -> SymmetryGroup:
    """Closure of ``generators`` inside ``ambient``.

    Membership of each generator in the ambient group is checked by
    enumeration.  The result inherits the ambient grading element, so the
    SL and J-membership flags remain available.
    """
    gens = tuple(g if isinstance(g, PhaseVector) else PhaseVector.of(g) for g in generators)
    ambient_elements = set(ambient.elements)
    for g in gens:
        if len(g) != ambient.ambient_dim:
            raise GeneratorNotInAmbientError(
                f"generator {g.phases} has length {len(g)}, ambient dimension is {ambient.ambient_dim}"
            )
        if g not in ambient_elements:
            raise GeneratorNotInAmbientError(f"generator {g.phases} is not in the ambient group")
    return SymmetryGroup(ambient.ambient_dim, gens, grading_element=ambient.grading_element)


def restrict_to_fixed_locus(p: Polynomial, fixed: tuple[int, ...]) -> Polynomial:
    """Restriction of W to the coordinate subspace of ``fixed`` variables.

    Keeps exactly the terms supported on the fixed variables and renumbers
    them 1..m in increasing original order.  The result must again be
    invertible (it always is when ``fixed`` is the fixed locus of a maximal
    diagonal symmetry); an empty locus yields the zero-variable polynomial.
    """
    fixed_sorted = tuple(sorted(fixed))
    fixed_set = set(fixed_sorted)
    position = {v: k for k, v in enumerate(fixed_sorted)}
    kept = []
    for coef, mono in p.terms:
        support = {i + 1 for i, e in enumerate(mono.exponents) if e > 0}
        if support <= fixed_set:
            exps = [0] * len(fixed_sorted)
            for v in support:
                exps[position[v]] = mono.exponents[v - 1]
            kept.append((coef, Monomial(tuple(exps))))
    kept.sort(key=lambda t: t[1].exponents, reverse=True)
    restricted = Polynomial(tuple(kept), len(fixed_sorted))
    try:
        check_invertible(restricted)
    except Exception as exc:
        raise RestrictionNotInvertibleError(
            f"restriction to variables {fixed_sorted} is not invertible: {exc}"
        ) from exc
    return restricted
