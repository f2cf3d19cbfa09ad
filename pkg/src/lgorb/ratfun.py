"""Univariate rational functions over the rationals (the coefficient field
in the deformation parameter psi).

Polynomials are dense coefficient tuples (constant term first) with Fraction
entries; rational functions keep a reduced numerator/denominator pair with a
monic denominator.  This is all the field arithmetic the graded linear
algebra of the deformed quintic needs; degrees stay small in practice.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import PoleAtRequestedPointError
from .series import FormalPowerSeries

Poly = tuple[Fraction, ...]

P_ZERO: Poly = ()
P_ONE: Poly = (Fraction(1),)


def p_normalize(coeffs) -> Poly:
    out = [Fraction(c) for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def p_add(a: Poly, b: Poly) -> Poly:
    n = max(len(a), len(b))
    return p_normalize(
        [(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)]
    )


def p_neg(a: Poly) -> Poly:
    return tuple(-c for c in a)


def p_sub(a: Poly, b: Poly) -> Poly:
    return p_add(a, p_neg(b))


def p_mul(a: Poly, b: Poly) -> Poly:
    if not a or not b:
        return P_ZERO
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca == 0:
            continue
        for j, cb in enumerate(b):
            if cb != 0:
                out[i + j] += ca * cb
    return p_normalize(out)


def p_scale(a: Poly, c: Fraction) -> Poly:
    if c == 0:
        return P_ZERO
    return tuple(c * v for v in a)


def p_divmod(a: Poly, b: Poly) -> tuple[Poly, Poly]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(a)
    quo = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    inv_lead = 1 / b[-1]
    for k in range(len(rem) - len(b), -1, -1):
        f = rem[k + len(b) - 1] * inv_lead
        if f == 0:
            continue
        quo[k] = f
        for j, cb in enumerate(b):
            rem[k + j] -= f * cb
    return p_normalize(quo), p_normalize(rem)


def p_gcd(a: Poly, b: Poly) -> Poly:
    while b:
        _, r = p_divmod(a, b)
        a, b = b, r
    if not a:
        return P_ZERO
    return p_scale(a, 1 / a[-1])  # monic


def p_eval(a: Poly, x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(a):
        acc = acc * x + c
    return acc


def p_pow(a: Poly, n: int) -> Poly:
    out = P_ONE
    for _ in range(n):
        out = p_mul(out, a)
    return out


@dataclass(frozen=True)
class RationalFunction:
    """Reduced fraction of two polynomials; denominator monic and nonzero."""

    numerator: Poly
    denominator: Poly

    @staticmethod
    def make(num, den=P_ONE) -> "RationalFunction":
        num = p_normalize(num)
        den = p_normalize(den)
        if not den:
            raise ZeroDivisionError("zero denominator")
        if not num:
            return RationalFunction(P_ZERO, P_ONE)
        g = p_gcd(num, den)
        if len(g) > 1:
            num, _ = p_divmod(num, g)
            den, _ = p_divmod(den, g)
        lead = den[-1]
        if lead != 1:
            num = p_scale(num, 1 / lead)
            den = p_scale(den, 1 / lead)
        return RationalFunction(num, den)

    @staticmethod
    def constant(c) -> "RationalFunction":
        c = Fraction(c)
        return RationalFunction((c,) if c else P_ZERO, P_ONE)

    def is_zero(self) -> bool:
        return not self.numerator

    def __add__(self, other: "RationalFunction") -> "RationalFunction":
        return RationalFunction.make(
            p_add(p_mul(self.numerator, other.denominator), p_mul(other.numerator, self.denominator)),
            p_mul(self.denominator, other.denominator),
        )

    def __sub__(self, other: "RationalFunction") -> "RationalFunction":
        return self + (-other)

    def __neg__(self) -> "RationalFunction":
        return RationalFunction(p_neg(self.numerator), self.denominator)

    def __mul__(self, other: "RationalFunction") -> "RationalFunction":
        return RationalFunction.make(
            p_mul(self.numerator, other.numerator),
            p_mul(self.denominator, other.denominator),
        )

    def __truediv__(self, other: "RationalFunction") -> "RationalFunction":
        if other.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return RationalFunction.make(
            p_mul(self.numerator, other.denominator),
            p_mul(self.denominator, other.numerator),
        )

    def evaluate(self, x) -> Fraction:
        x = Fraction(x)
        den = p_eval(self.denominator, x)
        if den == 0:
            raise PoleAtRequestedPointError(f"pole at psi = {x}")
        return p_eval(self.numerator, x) / den

    def series(self, order: int) -> FormalPowerSeries:
        """Power series expansion at 0; needs a unit denominator there."""
        num = FormalPowerSeries.from_coefficients(self.numerator or (0,), order)
        den = FormalPowerSeries.from_coefficients(self.denominator, order)
        return num / den

    def denominator_divides_power_of(self, base: Poly) -> bool:
        """True when every irreducible factor of the denominator divides ``base``."""
        den = self.denominator
        while len(den) > 1:
            g = p_gcd(den, base)
            if len(g) <= 1:
                return False
            den, _ = p_divmod(den, g)
        return True


RF_ZERO = RationalFunction(P_ZERO, P_ONE)
RF_ONE = RationalFunction(P_ONE, P_ONE)

# psi and the smoothness locus factor 1 - psi^5
PSI: Poly = (Fraction(0), Fraction(1))
ONE_MINUS_PSI5: Poly = p_normalize([1, 0, 0, 0, 0, -1])
