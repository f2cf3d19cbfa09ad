"""Primitive-form period series: cubic flat structure, quintic mirror map,
and the Yukawa coupling in flat coordinates.

Everything is a truncated series over exact rationals.  The cubic data

    g(t) = sum_n (-1)^n d_n^3 t^{3n} / (3n)!,   d_n = 1*4*7*...*(3n-2),
    h(t) = sum_n (-1)^n c_n^3 t^{3n+1}/(3n+1)!, c_n = 2*5*8*...*(3n-1),

gives the flat coordinate tau = h/g; the genus-zero prepotential in flat
coordinates is (1/2) t0^2 tau with no higher corrections.

The quintic period series at the Gepner point are

    omega_i(psi) = sum_k [(5k-4+i)(5k-9+i)...(1+i)]^5 / (5k+i)! * psi^{5k+i},

for i = 0..3 (empty product = 1), the mirror map is tau = omega_1/omega_0,
and the coupling in the flat frame zeta = (1/omega_0) dx is

    F3(tau) = C(psi(tau)) * (d psi/d tau)^3 / omega_0(psi(tau))^2,

where C(psi) is the residue of (x1..x5)^3, normalized by residue(Hessian) =
1024.  The excluded locus is psi^5 = 1; series are formal at psi = 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .quintic import QuinticFamily
from .ratfun import ONE_MINUS_PSI5, RationalFunction, p_mul, p_normalize
from .series import FormalPowerSeries


def descending_product(top: int, step: int, count: int) -> int:
    """top * (top-step) * ... with ``count`` factors; empty product is 1."""
    out = 1
    v = top
    for _ in range(count):
        out *= v
        v -= step
    return out


def cubic_g_h(order: int) -> tuple[FormalPowerSeries, FormalPowerSeries]:
    """The two flat-section coefficient series of the orbifolded cubic."""
    g = [Fraction(0)] * (order + 1)
    h = [Fraction(0)] * (order + 1)
    n = 0
    while 3 * n <= order:
        d_n = descending_product(3 * n - 2, 3, n)
        g[3 * n] = Fraction((-1) ** n * d_n**3, factorial(3 * n))
        n += 1
    n = 0
    while 3 * n + 1 <= order:
        c_n = descending_product(3 * n - 1, 3, n)
        h[3 * n + 1] = Fraction((-1) ** n * c_n**3, factorial(3 * n + 1))
        n += 1
    return (
        FormalPowerSeries(tuple(g), order),
        FormalPowerSeries(tuple(h), order),
    )


@dataclass(frozen=True)
class CubicFlatStructure:
    """g, h, the flat coordinate tau = h/g, and its reversion t(tau).

    The prepotential is (1/2) t0^2 tau for a formal unit-direction parameter
    t0; there are no higher genus-zero corrections.
    """

    g: FormalPowerSeries
    h: FormalPowerSeries
    tau: FormalPowerSeries
    t_of_tau: FormalPowerSeries


def cubic_flat_coordinate(order: int) -> CubicFlatStructure:
    g, h = cubic_g_h(order)
    tau = h / g
    return CubicFlatStructure(g, h, tau, tau.revert())


def quintic_omegas(order: int) -> tuple[FormalPowerSeries, ...]:
    """The four period series omega_0..omega_3 at the Gepner point."""
    out = []
    for i in range(4):
        coeffs = [Fraction(0)] * (order + 1)
        k = 0
        while 5 * k + i <= order:
            prod = descending_product(5 * k - 4 + i, 5, k)
            coeffs[5 * k + i] = Fraction(prod**5, factorial(5 * k + i))
            k += 1
        out.append(FormalPowerSeries(tuple(coeffs), order))
    return tuple(out)


def quintic_mirror_map(order: int) -> tuple[FormalPowerSeries, FormalPowerSeries]:
    """Flat coordinate tau(psi) = omega_1/omega_0 and its reversion psi(tau)."""
    omega = quintic_omegas(order)
    tau = omega[1] / omega[0]
    return tau, tau.revert()


@dataclass(frozen=True)
class QuinticPeriods:
    """Complete quintic primitive-form package at one truncation order."""

    omega: tuple[FormalPowerSeries, ...]
    tau: FormalPowerSeries
    psi_of_tau: FormalPowerSeries
    yukawa_psi: RationalFunction  # C(psi), the bare coupling
    coupling_numerator: tuple[Fraction, ...]  # (1 - psi^5) * C(psi), a polynomial
    f3: FormalPowerSeries  # third tau-derivative of the prepotential
    normalization: str


NORMALIZATION_NOTE = (
    "residue normalized by residue(hessian) = 1024; "
    "coupling reported in the frame zeta = (1/omega_0) dx with flat coordinate "
    "tau = omega_1/omega_0; excluded locus psi^5 = 1"
)


def quintic_yukawa(order: int, family: QuinticFamily | None = None) -> QuinticPeriods:
    """Bare coupling C(psi) and the flat-frame series F3(tau).

    C(psi) is computed from the residue of the cube of the fundamental
    monomial; (1 - psi^5) C(psi) is asserted to be a polynomial and reported.
    """
    if family is None:
        family = QuinticFamily()
    omega = quintic_omegas(order)
    tau = omega[1] / omega[0]
    psi_of_tau = tau.revert()
    coupling = family.bare_coupling()

    numerator = RationalFunction.make(
        p_mul(coupling.numerator, ONE_MINUS_PSI5), coupling.denominator
    )
    if len(numerator.denominator) != 1:
        raise AssertionError(
            "(1 - psi^5) * C(psi) is not a polynomial; denominators left over"
        )
    poly = p_normalize(
        [c / numerator.denominator[0] for c in numerator.numerator]
    )

    # one extra order internally so the derivative is exact at `order`
    omega_hi = quintic_omegas(order + 1)
    psi_hi = (omega_hi[1] / omega_hi[0]).revert()
    dpsi = psi_hi.derivative()
    c_of_tau = coupling.series(order).compose(psi_hi)
    omega0_of_tau = omega_hi[0].compose(psi_hi)
    f3 = c_of_tau * dpsi * dpsi * dpsi / (omega0_of_tau * omega0_of_tau)
    return QuinticPeriods(
        omega, tau, psi_of_tau, coupling, poly, f3.truncate(order), NORMALIZATION_NOTE
    )
