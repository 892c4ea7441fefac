"""Conformal flattening of the winding surface onto a single strip plane.

The map r = -i e^{i x / 2} sends each half-turn sheet of the surface to a
width-2*pi vertical strip of the x plane: Re x plays the angular role and
Im x the radial one.  In strip coordinates the radial equation becomes an
exponential-potential problem,

    phi'' + (kappa^2 / 4) e^{i x} phi + (nu^2 / 4) phi = 0,

for phi = psi / sqrt(dr/dx).  The change of variables contributes a constant
1/16 that combines with l(l+1)/4 into nu^2/4 through nu = l + 1/2; the
numerical equivalence of transported radial solutions with this equation is
part of the acceptance checks.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .hankel import ell_from_order, order_from_ell
from .riemann import SurfacePoint

__all__ = ["StripPoint", "map_to_strip", "map_from_strip",
           "strip_equation_residual", "strip_amplitude", "weight_factor"]


@dataclass(frozen=True)
class StripPoint:
    """x = u + i v in the strip plane; u is angular, v radial."""

    u: float
    v: float

    def to_complex(self) -> complex:
        return complex(self.u, self.v)


def map_to_strip(p: SurfacePoint) -> StripPoint:
    """Strip image of a surface point: u = 2 theta + pi, v = -2 ln rho."""
    return StripPoint(u=2.0 * p.theta + math.pi, v=-2.0 * math.log(p.rho))


def map_from_strip(q: StripPoint) -> SurfacePoint:
    """Exact inverse of map_to_strip."""
    return SurfacePoint(rho=math.exp(-q.v / 2.0), theta=(q.u - math.pi) / 2.0)


def weight_factor(p: SurfacePoint) -> complex:
    """sqrt(dr/dx) at p, with dr/dx = i r / 2 and the sheet-correct root.

    Written as e^{(i x/2 + i pi/2 + ln 2^{-1}) / 2} in terms of the strip
    coordinate so the branch follows the unwrapped phase continuously.
    """
    x = map_to_strip(p).to_complex()
    return cmath.exp(0.25j * x + 0.25j * math.pi - 0.5 * math.log(2.0))


def strip_amplitude(psi: complex, p: SurfacePoint) -> complex:
    """Strip-plane amplitude phi = psi / sqrt(dr/dx) matching a radial psi."""
    return psi / weight_factor(p)


def strip_equation_residual(nu: float, kappa: float, x: complex,
                            phi: complex, phi_xx: complex) -> complex:
    """Residual of the strip equation at x for a candidate (phi, phi'').

    Zero exactly when phi solves phi'' + (kappa^2/4) e^{ix} phi
    + (nu^2/4) phi = 0.  The constant coefficient is assembled from the
    centrifugal strength as (l(l+1) + 1/4)/4 with l = ell_from_order(nu),
    which equals nu^2/4 identically; keeping that form ties the strip
    equation to the radial one through the shared order conversion.
    """
    ell = ell_from_order(nu)
    coefficient = (ell * (ell + 1.0) + 0.25) / 4.0
    return -phi_xx - (kappa * kappa / 4.0) * cmath.exp(1j * x) * phi \
        - coefficient * phi
