"""Truncated formal power series over exact rationals.

A :class:`FormalPowerSeries` stores coefficients for exponents 0..order
inclusive; every operation is exact up to the common truncation order and no
floating point is used anywhere.  Division requires a unit constant term,
composition a nilpotent inner series, reversion a zero constant term and a
unit linear term.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DivisionByNonUnitError, ReversionNotDefinedError


@dataclass(frozen=True)
class FormalPowerSeries:
    coefficients: tuple[Fraction, ...]
    order: int

    def __post_init__(self):
        if len(self.coefficients) != self.order + 1:
            raise ValueError("need exactly order + 1 coefficients")

    @staticmethod
    def from_coefficients(values, order: int | None = None) -> "FormalPowerSeries":
        coeffs = [Fraction(v) for v in values]
        if order is None:
            order = len(coeffs) - 1
        coeffs = coeffs[: order + 1] + [Fraction(0)] * (order + 1 - len(coeffs))
        return FormalPowerSeries(tuple(coeffs), order)

    @staticmethod
    def zero(order: int) -> "FormalPowerSeries":
        return FormalPowerSeries((Fraction(0),) * (order + 1), order)

    @staticmethod
    def one(order: int) -> "FormalPowerSeries":
        return FormalPowerSeries.from_coefficients([1], order)

    @staticmethod
    def identity(order: int) -> "FormalPowerSeries":
        """The series t."""
        return FormalPowerSeries.from_coefficients([0, 1], order)

    def __getitem__(self, k: int) -> Fraction:
        return self.coefficients[k]

    def truncate(self, order: int) -> "FormalPowerSeries":
        return FormalPowerSeries.from_coefficients(self.coefficients, order)

    def _common_order(self, other: "FormalPowerSeries") -> int:
        return min(self.order, other.order)

    def __add__(self, other: "FormalPowerSeries") -> "FormalPowerSeries":
        n = self._common_order(other)
        return FormalPowerSeries(
            tuple(self[k] + other[k] for k in range(n + 1)), n
        )

    def __sub__(self, other: "FormalPowerSeries") -> "FormalPowerSeries":
        n = self._common_order(other)
        return FormalPowerSeries(
            tuple(self[k] - other[k] for k in range(n + 1)), n
        )

    def __neg__(self) -> "FormalPowerSeries":
        return FormalPowerSeries(tuple(-c for c in self.coefficients), self.order)

    def scale(self, c) -> "FormalPowerSeries":
        c = Fraction(c)
        return FormalPowerSeries(tuple(c * v for v in self.coefficients), self.order)

    def __mul__(self, other: "FormalPowerSeries") -> "FormalPowerSeries":
        n = self._common_order(other)
        out = [Fraction(0)] * (n + 1)
        for i, a in enumerate(self.coefficients[: n + 1]):
            if a == 0:
                continue
            for j in range(n + 1 - i):
                b = other[j]
                if b != 0:
                    out[i + j] += a * b
        return FormalPowerSeries(tuple(out), n)

    def __truediv__(self, other: "FormalPowerSeries") -> "FormalPowerSeries":
        if other[0] == 0:
            raise DivisionByNonUnitError("divisor has zero constant term")
        n = self._common_order(other)
        inv0 = 1 / other[0]
        out = [Fraction(0)] * (n + 1)
        for k in range(n + 1):
            acc = self[k]
            for j in range(1, k + 1):
                acc -= other[j] * out[k - j]
            out[k] = acc * inv0
        return FormalPowerSeries(tuple(out), n)

    def compose(self, inner: "FormalPowerSeries") -> "FormalPowerSeries":
        """self(inner(t)); inner must have zero constant term."""
        if inner[0] != 0:
            raise DivisionByNonUnitError("composition needs zero constant term inside")
        n = self._common_order(inner)
        result = FormalPowerSeries.zero(n)
        power = FormalPowerSeries.one(n)
        inner_n = inner.truncate(n)
        for k in range(n + 1):
            if self[k] != 0:
                result = result + power.scale(self[k])
            if k < n:
                power = power * inner_n
        return result

    def revert(self) -> "FormalPowerSeries":
        """Compositional inverse g with self(g(t)) = t.

        Solved coefficient by coefficient; needs zero constant term and a
        unit linear coefficient.
        """
        if self[0] != 0 or self.order < 1 or self[1] == 0:
            raise ReversionNotDefinedError(
                "reversion needs zero constant term and nonzero linear term"
            )
        n = self.order
        g = [Fraction(0)] * (n + 1)
        g[1] = 1 / self[1]
        for k in range(2, n + 1):
            partial = FormalPowerSeries.from_coefficients(g[: k + 1], k)
            coeff_k = self.truncate(k).compose(partial)[k]
            g[k] = -coeff_k / self[1]
        return FormalPowerSeries(tuple(g), n)

    def derivative(self) -> "FormalPowerSeries":
        """Termwise derivative, truncated at order - 1."""
        if self.order == 0:
            return FormalPowerSeries.zero(0)
        return FormalPowerSeries(
            tuple(k * self[k] for k in range(1, self.order + 1)), self.order - 1
        )

    def supported_exponents(self) -> tuple[int, ...]:
        return tuple(k for k, c in enumerate(self.coefficients) if c != 0)

    def as_strings(self) -> list[str]:
        return [str(c) for c in self.coefficients]
