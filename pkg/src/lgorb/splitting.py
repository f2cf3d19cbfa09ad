"""Machine certificate that homogeneous pieces of different degree admit no
equivariant maps, which pins the canonical splitting.

A linear map between the degree-a and degree-b pieces of the Milnor ring
commutes with the full diagonal symmetry group iff the basis classes it
relates have equal characters, i.e. (r' - r) E^-1 is an integer vector.  The
certificate brute-forces all ordered pairs of basis monomials, records any
pair with different degrees and integral character difference, and holds iff
none exists.  A failing verdict is reported loudly; it would mean either a
bug here or a counterexample to the uniqueness statement.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

from .invertible import Polynomial, check_invertible, decompose_atomic, inverse_exponent_matrix, weights
from .milnor import GradedMonomialBasis, milnor_basis


@dataclass(frozen=True)
class Violation:
    r: tuple[int, ...]
    r_prime: tuple[int, ...]
    degree_gap: Fraction
    integrality_witness: tuple[Fraction, ...]  # (r' - r) E^-1, all entries integral


@dataclass(frozen=True)
class EquivarianceCertificate:
    polynomial: str
    pairs_checked: int
    violations: tuple[Violation, ...]

    @property
    def verdict(self) -> str:
        return "holds" if not self.violations else "fails"


def _character_classes(W: Polynomial):
    """Basis exponents with degrees and character vectors r E^-1 mod 1."""
    E = check_invertible(W)
    inv = inverse_exponent_matrix(E)
    basis = milnor_basis(decompose_atomic(E), weights(E))
    n = E.size
    rows = []
    for mono, deg in basis.elements:
        r = mono.exponents
        vec = tuple(
            sum((r[i] * inv[i][j] for i in range(n)), Fraction(0)) % 1 for j in range(n)
        )
        rows.append((r, deg, vec))
    return rows, inv, basis


def verify_degree_gap(W: Polynomial) -> EquivarianceCertificate:
    """Check every ordered basis pair with distinct degrees for equivariance.

    Two classes x^r dx and x^{r'} dx of different degree would admit an
    equivariant map iff (r' - r) E^-1 were integral; equivalently iff the
    vectors r E^-1 and r' E^-1 agree mod 1.  All ordered pairs r != r' are
    enumerated; equal-degree pairs are vacuous for uniqueness and skipped.
    """
    rows, inv, _ = _character_classes(W)
    n = len(inv)
    mu = len(rows)
    pairs = 0
    violations = []
    for i in range(mu):
        ri, di, vi = rows[i]
        for j in range(mu):
            if j == i:
                continue
            pairs += 1
            rj, dj, vj = rows[j]
            if dj != di and vj == vi:
                witness = tuple(
                    sum((Fraction(rj[k] - ri[k]) * inv[k][l] for k in range(n)), Fraction(0))
                    for l in range(n)
                )
                violations.append(Violation(ri, rj, dj - di, witness))
    return EquivarianceCertificate(W.text(), pairs, tuple(violations))


@dataclass(frozen=True)
class ObstructionRow:
    """Lifting ambiguity at one (degree, u-power) slot.

    Extending a splitting from u^{k-1} to u^k at a source class of degree d
    is a torsor over the degree d + 2k piece; equivariance kills it when the
    equivariant Hom dimension is zero.
    """

    degree: Fraction
    k: int
    target_degree: Fraction
    target_dim: int
    equivariant_hom_dim: int


def splitting_obstruction_dims(W: Polynomial) -> list[ObstructionRow]:
    """Dimensions of the u^k lifting ambiguities for every basis degree.

    For each basis degree d and k >= 1 with d + 2k inside the attained degree
    range, reports the dimension of the degree-(d + 2k) piece and of the
    space of maximal-group-equivariant maps from the degree-d piece into it.
    The latter is always 0 while :func:`verify_degree_gap` holds.
    """
    rows, _, _ = _character_classes(W)
    if not rows:
        return []
    degrees = sorted({d for _, d, _ in rows})
    by_degree: dict[Fraction, Counter] = {}
    for r, d, v in rows:
        by_degree.setdefault(d, Counter())[v] += 1
    hi = degrees[-1]
    table = []
    for d in degrees:
        k = 1
        while d + 2 * k <= hi:
            target = d + 2 * k
            target_chars = by_degree.get(target, Counter())
            source_chars = by_degree[d]
            hom_dim = sum(
                c * target_chars[v] for v, c in source_chars.items() if v in target_chars
            )
            table.append(ObstructionRow(d, k, target, sum(target_chars.values()), hom_dim))
            k += 1
    return table
