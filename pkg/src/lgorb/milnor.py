"""Graded monomial bases of Milnor rings of invertible polynomials.

With deg(x_i) = -2 q_i and deg(dx_i) = 1 - 2 q_i, the class x^r dx has degree
c - 2 (q . r) where c is the central charge.  The basis is assembled block by
block from the atomic decomposition:

* Fermat x^a:  1, x, ..., x^{a-2}                     (a - 1 classes),
* loop:        the full box 0 <= r_j <= a_j - 1       (prod a_j classes),
* chain:       the box minus the Krawitz exclusions.

The excluded chain monomials are those ending in an alternating tail
(r_N = a_N - 1, r_{N-1} = 0, r_{N-2} = a_{N-2} - 1, ...) immediately preceded
by a nonzero entry, together with the single full-length tail when N is odd.
This exclusion set has exactly mu(shorter chain) elements, which makes the
count match the product formula; it is validated in the test suite against a
rank oracle on the graded pieces of the Jacobian ideal.

Elements of a diagonal symmetry group act on x^r dx by the character
sum_i theta_i (r_i + 1) mod 1; a class is invariant iff the character is 0.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .errors import InternalCountMismatchError
from .invertible import AtomicDecomposition, Block, Monomial, WeightSystem
from .symmetry import PhaseVector


@dataclass(frozen=True)
class GradedMonomialBasis:
    """Milnor basis with exact rational degrees, sorted by exponent vector."""

    ambient: AtomicDecomposition
    weight_system: WeightSystem
    elements: tuple[tuple[Monomial, Fraction], ...]

    def __len__(self) -> int:
        return len(self.elements)

    def degrees(self) -> tuple[Fraction, ...]:
        return tuple(d for _, d in self.elements)


def degree_of(r: Monomial | tuple[int, ...], w: WeightSystem) -> Fraction:
    """Degree of the class x^r dx: central charge minus 2 (q . r)."""
    exps = r.exponents if isinstance(r, Monomial) else tuple(r)
    if len(exps) != w.dimension:
        raise ValueError(f"monomial has {len(exps)} exponents, weight system has {w.dimension}")
    dot = sum((q * e for q, e in zip(w.weights, exps)), Fraction(0))
    return w.central_charge - 2 * dot


def character(g: PhaseVector, r: Monomial | tuple[int, ...]) -> Fraction:
    """Character sum_i theta_i (r_i + 1) mod 1 of g acting on x^r dx."""
    exps = r.exponents if isinstance(r, Monomial) else tuple(r)
    if len(exps) != len(g):
        raise ValueError(f"monomial has {len(exps)} exponents, phase vector has {len(g)}")
    total = sum((t * (e + 1) for t, e in zip(g.phases, exps)), Fraction(0))
    return total % 1


def chain_is_excluded(r: tuple[int, ...], a: tuple[int, ...]) -> bool:
    """Krawitz exclusion test for a chain with exponents ``a``."""
    n = len(a)
    j = n
    while j >= 1:
        # tail condition at j: alternating (a-1, 0, ..., a-1) over positions j..n
        ok = True
        for i in range(j, n + 1):
            want = a[i - 1] - 1 if (n - i) % 2 == 0 else 0
            if r[i - 1] != want:
                ok = False
                break
        if not ok:
            return False  # longer tails require this one
        if j == 1:
            return True
        if r[j - 2] >= 1:
            return True
        j -= 2
    return False


def block_basis(block: Block) -> list[tuple[int, ...]]:
    """Local exponent tuples of one atomic block's Milnor basis."""
    a = block.exponents
    if block.kind == "fermat":
        return [(k,) for k in range(a[0] - 1)]
    box = itertools.product(*(range(v) for v in a))
    if block.kind == "loop":
        return [tuple(r) for r in box]
    if block.kind == "chain":
        return [tuple(r) for r in box if not chain_is_excluded(tuple(r), a)]
    raise ValueError(f"unknown block kind {block.kind!r}")


def milnor_basis(d: AtomicDecomposition, w: WeightSystem) -> GradedMonomialBasis:
    """Tensor product of the per-block bases, with exact degrees.

    The element count is checked against the product formula
    mu = prod(1/q_j - 1); a mismatch raises InternalCountMismatchError since
    it indicates a bug in the block bases, not bad input.
    """
    n = d.ambient_dim
    per_block = [block_basis(b) for b in d.blocks]
    exponents: list[tuple[int, ...]] = []
    for combo in itertools.product(*per_block):
        exps = [0] * n
        for block, local in zip(d.blocks, combo):
            for var, e in zip(block.variable_indices, local):
                exps[var - 1] = e
        exponents.append(tuple(exps))
    exponents.sort()
    elements = tuple(
        (Monomial(r), degree_of(r, w)) for r in exponents
    )
    mu = w.milnor_number()
    if len(elements) != mu:
        raise InternalCountMismatchError(
            f"basis has {len(elements)} elements, product formula gives {mu}"
        )
    return GradedMonomialBasis(d, w, elements)
