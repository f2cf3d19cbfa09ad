"""Normal forms and the residue pairing for the one-parameter quintic family

    (1/5)(x1^5 + ... + x5^5) - psi * x1 x2 x3 x4 x5.

Partial derivatives are x_j^4 - psi * (product of the other four variables),
so the Jacobian ideal relates any monomial with an exponent >= 4 to a single
shifted monomial times psi.  Box monomials (all exponents <= 3) descend to a
basis of the 1024-dimensional Milnor ring over the rational function field in
psi, with denominators supported on the singular locus psi^5 = 1.

The normal form of a homogeneous element is computed degree by degree with
exact linear algebra on the graded piece.  The diagonal symmetry group splits
each graded piece into character blocks (two exponent vectors are equivalent
iff they differ by a multiple of (1,1,1,1,1) mod 5, and the ideal generators
respect this splitting), which keeps every elimination small: the largest
block, the invariant one at degree 20, has 126 monomials.

The residue functional is normalized so that the Hessian class evaluates to
the Milnor number 1024; degree-15 elements pair into the socle spanned by
(x1 x2 x3 x4 x5)^3.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import (
    DegreeTooLargeError,
    InternalInvariantError,
    NotHomogeneousError,
)
from .ratfun import (
    ONE_MINUS_PSI5,
    RF_ONE,
    RF_ZERO,
    RationalFunction,
    p_normalize,
)

N_VARS = 5
MU = 1024
SOCLE = (3, 3, 3, 3, 3)
DEFAULT_MAX_DEGREE = 20

Exponent = tuple[int, ...]

ONE = tuple([1] * N_VARS)

RF_PSI = RationalFunction.make((Fraction(0), Fraction(1)))


@dataclass
class FamilyElement:
    """Polynomial in x1..x5 with rational-function coefficients in psi."""

    coefficients: dict[Exponent, RationalFunction]

    def __post_init__(self):
        self.coefficients = {
            r: c for r, c in self.coefficients.items() if not c.is_zero()
        }

    @staticmethod
    def monomial(r: Exponent, coeff: RationalFunction = RF_ONE) -> "FamilyElement":
        return FamilyElement({tuple(r): coeff})

    def is_zero(self) -> bool:
        return not self.coefficients

    def homogeneous_degree(self) -> int:
        """Total degree; raises NotHomogeneousError when degrees mix."""
        degrees = {sum(r) for r in self.coefficients}
        if len(degrees) > 1:
            raise NotHomogeneousError(f"mixed total degrees {sorted(degrees)}")
        return degrees.pop() if degrees else 0

    def __add__(self, other: "FamilyElement") -> "FamilyElement":
        out = dict(self.coefficients)
        for r, c in other.coefficients.items():
            out[r] = out.get(r, RF_ZERO) + c
        return FamilyElement(out)

    def __sub__(self, other: "FamilyElement") -> "FamilyElement":
        return self + other.scale_rf(-RF_ONE)

    def scale_rf(self, c: RationalFunction) -> "FamilyElement":
        return FamilyElement({r: v * c for r, v in self.coefficients.items()})

    def __mul__(self, other: "FamilyElement") -> "FamilyElement":
        out: dict[Exponent, RationalFunction] = {}
        for r1, c1 in self.coefficients.items():
            for r2, c2 in other.coefficients.items():
                key = tuple(a + b for a, b in zip(r1, r2))
                term = c1 * c2
                out[key] = out.get(key, RF_ZERO) + term
        return FamilyElement(out)

    def socle_coefficient(self) -> RationalFunction:
        return self.coefficients.get(SOCLE, RF_ZERO)

    def denominators_supported_on_singular_locus(self) -> bool:
        return all(
            c.denominator_divides_power_of(ONE_MINUS_PSI5)
            for c in self.coefficients.values()
        )


def character_class(r: Exponent) -> Exponent:
    """Canonical representative of r mod 5 up to shifts by (1,1,1,1,1)."""
    return min(tuple((v + c) % 5 for v in r) for c in range(5))


def _block_monomials(degree: int, key: Exponent) -> list[Exponent]:
    """All exponent vectors of the given total degree in the character block."""
    out = []
    for c in range(5):
        pattern = tuple((v + c) % 5 for v in key)
        rem = degree - sum(pattern)
        if rem < 0 or rem % 5:
            continue
        k = rem // 5
        # distribute k extra steps of 5 over the five slots
        for cuts in itertools.combinations(range(k + 4), 4):
            parts = []
            prev = -1
            for cut in cuts:
                parts.append(cut - prev - 1)
                prev = cut
            parts.append(k + 3 - prev)
            out.append(tuple(p + 5 * s for p, s in zip(pattern, parts)))
    return sorted(set(out))


def _is_box(r: Exponent) -> bool:
    return all(v <= 3 for v in r)


class _BlockSolver:
    """Jordan-eliminated ideal rows of one (degree, character block) piece.

    Rows are the ideal generators x^alpha d_j W, each with two monomial
    entries: +1 at r (some exponent r_j >= 4) and -psi at r - 5 e_j + 1.
    After full Gauss-Jordan elimination with pivots on all non-box columns,
    each pivot row has a unit pivot and support otherwise only on box
    columns, so reduction of an arbitrary vector is a single pass.
    """

    def __init__(self, degree: int, key: Exponent):
        monomials = _block_monomials(degree, key)
        self.index = {r: i for i, r in enumerate(monomials)}
        self.monomials = monomials
        nonbox = [r for r in monomials if not _is_box(r)]
        # pivot-friendly order: rewrite sources (large max exponent) first
        nonbox.sort(key=lambda r: (-max(r), r))
        rows: list[dict[int, RationalFunction]] = []
        for r in monomials:
            for j in range(N_VARS):
                if r[j] >= 4:
                    target = tuple(
                        v - 5 + 1 if i == j else v + 1 for i, v in enumerate(r)
                    )
                    row = {self.index[r]: RF_ONE}
                    t_idx = self.index[target]
                    row[t_idx] = row.get(t_idx, RF_ZERO) - RF_PSI
                    rows.append({k: v for k, v in row.items() if not v.is_zero()})
        self.pivot_row_of_col: dict[int, dict[int, RationalFunction]] = {}
        used = [False] * len(rows)
        for r_mono in nonbox:
            col = self.index[r_mono]
            pick = None
            for i, row in enumerate(rows):
                if used[i] or col not in row:
                    continue
                if pick is None or len(row) < len(rows[pick]):
                    pick = i
            if pick is None:
                raise InternalInvariantError(
                    f"no pivot for non-box monomial {r_mono} at degree {degree}"
                )
            used[pick] = True
            pivot = rows[pick]
            inv = RF_ONE / pivot[col]
            pivot = {k: v * inv for k, v in pivot.items()}
            rows[pick] = pivot
            for i, row in enumerate(rows):
                if i == pick or col not in row:
                    continue
                f = row[col]
                for k, v in pivot.items():
                    row[k] = row.get(k, RF_ZERO) - f * v
                rows[i] = {k: v for k, v in row.items() if not v.is_zero()}
            for other_col, other_row in self.pivot_row_of_col.items():
                if col in other_row:
                    f = other_row[col]
                    for k, v in pivot.items():
                        other_row[k] = other_row.get(k, RF_ZERO) - f * v
                    self.pivot_row_of_col[other_col] = {
                        k: v for k, v in other_row.items() if not v.is_zero()
                    }
            self.pivot_row_of_col[col] = pivot
        for i, row in enumerate(rows):
            if not used[i] and row:
                raise InternalInvariantError(
                    f"ideal row supported on box monomials only at degree {degree}: {row}"
                )

    def reduce(self, vec: dict[int, RationalFunction]) -> dict[int, RationalFunction]:
        out = dict(vec)
        for col, pivot in self.pivot_row_of_col.items():
            f = out.get(col)
            if f is None or f.is_zero():
                continue
            for k, v in pivot.items():
                out[k] = out.get(k, RF_ZERO) - f * v
        return {k: v for k, v in out.items() if not v.is_zero()}


class QuinticFamily:
    """Handle holding the degree bound and the per-block solver memo."""

    def __init__(self, max_degree: int | None = None):
        if max_degree is None:
            max_degree = int(os.environ.get("LG_MAX_DEGREE", DEFAULT_MAX_DEGREE))
        self.max_degree = max_degree
        self._solvers: dict[tuple[int, Exponent], _BlockSolver] = {}

    def partial(self, j: int) -> FamilyElement:
        """d/dx_j of the family: x_j^4 - psi * prod of the other variables."""
        lead = tuple(4 if i == j - 1 else 0 for i in range(N_VARS))
        other = tuple(0 if i == j - 1 else 1 for i in range(N_VARS))
        return FamilyElement({lead: RF_ONE, other: -RF_PSI})

    def hessian_determinant(self) -> FamilyElement:
        """Determinant of the matrix of second partials (degree 15)."""
        entries = [[None] * N_VARS for _ in range(N_VARS)]
        for i in range(N_VARS):
            for j in range(N_VARS):
                if i == j:
                    r = tuple(3 if k == i else 0 for k in range(N_VARS))
                    entries[i][j] = FamilyElement({r: RationalFunction.constant(4)})
                else:
                    r = tuple(0 if k in (i, j) else 1 for k in range(N_VARS))
                    entries[i][j] = FamilyElement({r: -RF_PSI})
        return _determinant(entries)

    def _solver(self, degree: int, key: Exponent) -> _BlockSolver:
        memo_key = (degree, key)
        if memo_key not in self._solvers:
            self._solvers[memo_key] = _BlockSolver(degree, key)
        return self._solvers[memo_key]

    def normal_form(self, f: FamilyElement) -> FamilyElement:
        """Unique box-monomial representative of f modulo the Jacobian ideal.

        f must be homogeneous of total degree at most the configured bound.
        The result's denominators are checked to be supported on psi^5 = 1.
        """
        if f.is_zero():
            return f
        degree = f.homogeneous_degree()
        if degree > self.max_degree:
            raise DegreeTooLargeError(
                f"degree {degree} exceeds the configured bound {self.max_degree}"
            )
        blocks: dict[Exponent, dict[Exponent, RationalFunction]] = {}
        for r, c in f.coefficients.items():
            blocks.setdefault(character_class(r), {})[r] = c
        out: dict[Exponent, RationalFunction] = {}
        for key, part in blocks.items():
            if all(_is_box(r) for r in part):
                out.update(part)
                continue
            solver = self._solver(degree, key)
            vec = {solver.index[r]: c for r, c in part.items()}
            reduced = solver.reduce(vec)
            for idx, c in reduced.items():
                mono = solver.monomials[idx]
                if not _is_box(mono):
                    raise InternalInvariantError(
                        f"normal form kept non-box monomial {mono}"
                    )
                out[mono] = out.get(mono, RF_ZERO) + c
        result = FamilyElement(out)
        if not result.denominators_supported_on_singular_locus():
            raise InternalInvariantError(
                "normal form produced denominators away from psi^5 = 1"
            )
        return result

    def residue(self, f: FamilyElement) -> RationalFunction:
        """Residue functional, normalized so the Hessian class maps to 1024.

        Nonzero only on total degree 15, where it reads off the socle
        coefficient (x1..x5)^3 of the normal form.
        """
        if f.is_zero():
            return RF_ZERO
        if f.homogeneous_degree() != 15:
            return RF_ZERO
        lam = self.hessian_socle_coefficient()
        coeff = self.normal_form(f).socle_coefficient()
        return coeff * RationalFunction.constant(MU) / lam

    def hessian_socle_coefficient(self) -> RationalFunction:
        if not hasattr(self, "_hessian_socle"):
            nf = self.normal_form(self.hessian_determinant())
            self._hessian_socle = nf.socle_coefficient()
            if self._hessian_socle.is_zero():
                raise InternalInvariantError("hessian normal form lost its socle term")
        return self._hessian_socle

    def bare_coupling(self) -> RationalFunction:
        """residue((x1..x5)^3): the Yukawa numerator in the unnormalized frame."""
        return self.residue(FamilyElement.monomial(SOCLE))


def _determinant(entries: list[list[FamilyElement]]) -> FamilyElement:
    n = len(entries)
    if n == 1:
        return entries[0][0]
    total = FamilyElement({})
    for j in range(n):
        minor = [row[:j] + row[j + 1 :] for row in entries[1:]]
        term = entries[0][j] * _determinant(minor)
        if j % 2:
            term = term.scale_rf(-RF_ONE)
        total = total + term
    return total
