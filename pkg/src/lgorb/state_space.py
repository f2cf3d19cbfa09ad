"""Equivariant orbifold state spaces via the twisted-sector localization sum.

For an orbifold group G inside the maximal diagonal symmetry group of W, the
state space decomposes over twisted sectors indexed by g in G.  Each sector
carries the Milnor ring of the restriction of W to the fixed locus of g, cut
down to its G-invariant part; invariance of x^r dx under g' is the vanishing
of the character sum_{i fixed} theta'_i (r_i + 1) mod 1.  Because characters
are additive in g', checking the generators of G suffices.  A sector's parity
is the dimension of the fixed locus mod 2; no degree shift is applied to
twisted sectors, and invariants (not coinvariants) are taken.

Diagonal groups act through the fixed coordinates only; no determinant twist
on the normal directions is applied.  Non-special-linear groups are accepted
but flagged, since for them such a twist could matter.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import GroupNotInMaxSymmetryError
from .invertible import Monomial, Polynomial, check_invertible, decompose_atomic, weights
from .milnor import character, milnor_basis
from .symmetry import (
    PhaseVector,
    SymmetryGroup,
    fixed_locus,
    max_symmetry_group,
    restrict_to_fixed_locus,
)


@dataclass(frozen=True)
class Sector:
    """One twisted sector: restricted Milnor ring and its invariant classes."""

    twist: PhaseVector
    fixed_indices: tuple[int, ...]
    restricted_poly: Polynomial
    restricted_mu: int
    invariant_classes: tuple[tuple[Monomial, Fraction], ...]
    parity: int  # dim of the fixed locus mod 2

    @property
    def invariant_count(self) -> int:
        return len(self.invariant_classes)


@dataclass(frozen=True)
class OrbifoldStateSpace:
    """All sectors of (W, G) in canonical twist order, with parity totals."""

    polynomial: Polynomial
    group: SymmetryGroup
    sectors: tuple[Sector, ...]
    odd_dim: int
    even_dim: int
    group_is_special_linear: bool


def localize(W: Polynomial, G: SymmetryGroup) -> OrbifoldStateSpace:
    """Sector-by-sector state space of the orbifold (W, G).

    G must be a subgroup of the maximal diagonal symmetry group of W
    (membership is checked by enumeration).  Sectors are sorted by twist.
    """
    E = check_invertible(W)
    ambient = max_symmetry_group(E)
    ambient_elements = set(ambient.elements)
    for g in G.generators:
        if len(g) != E.size or g not in ambient_elements:
            raise GroupNotInMaxSymmetryError(
                f"generator {g.phases} does not fix W"
            )
    odd = even = 0
    sectors = []
    for g in sorted(G.elements):
        fixed = fixed_locus(g)
        restricted = restrict_to_fixed_locus(W, fixed)
        e_res = check_invertible(restricted)
        basis = milnor_basis(decompose_atomic(e_res), weights(e_res))
        gens_on_fixed = [
            PhaseVector(tuple(h.phases[v - 1] for v in fixed)) for h in G.generators
        ]
        invariant = tuple(
            (mono, deg)
            for mono, deg in basis.elements
            if all(character(h, mono) == 0 for h in gens_on_fixed)
        )
        parity = len(fixed) % 2
        if parity == 1:
            odd += len(invariant)
        else:
            even += len(invariant)
        sectors.append(
            Sector(g, fixed, restricted, len(basis), invariant, parity)
        )
    return OrbifoldStateSpace(
        W,
        G,
        tuple(sectors),
        odd,
        even,
        G.is_special_linear_group(),
    )


def sector_report(space: OrbifoldStateSpace) -> list[dict]:
    """Deterministic per-sector rows for tabular output."""
    rows = []
    for s in space.sectors:
        degree_multiset = sorted((d for _, d in s.invariant_classes), reverse=True)
        rows.append(
            {
                "twist": tuple(str(t) for t in s.twist.phases),
                "fixed_dim": len(s.fixed_indices),
                "fixed_indices": s.fixed_indices,
                "restricted_mu": s.restricted_mu,
                "invariant_count": s.invariant_count,
                "parity": "odd" if s.parity else "even",
                "degrees": tuple(str(d) for d in degree_multiset),
            }
        )
    return rows
