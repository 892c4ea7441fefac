"""Bound states of the free radial equation on spiral complex contours.

The package builds counterclockwise winding paths around the origin,
transports Hankel-seeded solutions along them, and quantizes the angular
momentum (equivalently the inverse-square coupling) by demanding that the
growing component vanish at the far end.  Closed-form connection
coefficients and an independent numerical continuation oracle check each
other throughout.
"""

from .contour import ContourPath, ContourSpec, build_contour, export_contour, winding_number
from .hankel import (
    bessel_j,
    continuation_oracle,
    ell_from_order,
    hankel_asymptotic,
    hankel_on_surface,
    hankel_principal,
    monodromy_coeffs,
    order_from_ell,
)
from .ode import Numerics, PropState, fit_coefficients, propagate, rhs, seed_asymptotic
from .riemann import HankelKind, SurfacePoint, decaying_kind_in_sector, sector_of, to_complex
from .spectral import (
    KnotQuantum,
    PhysicalChannel,
    ShootResult,
    allowed_angular_momenta,
    coupling_for_knot,
    dimension_dichotomy,
    effective_order,
    growing_coefficient,
    is_bound_state,
    scan_sturmian,
    shoot,
)
from .unroll import StripPoint, map_from_strip, map_to_strip, strip_equation_residual

__version__ = "0.1.0"

__all__ = [
    "ContourPath", "ContourSpec", "build_contour", "export_contour",
    "winding_number", "bessel_j", "continuation_oracle", "ell_from_order",
    "hankel_asymptotic", "hankel_on_surface", "hankel_principal",
    "monodromy_coeffs", "order_from_ell", "Numerics", "PropState",
    "fit_coefficients", "propagate", "rhs", "seed_asymptotic", "HankelKind",
    "SurfacePoint", "decaying_kind_in_sector", "sector_of", "to_complex",
    "KnotQuantum", "PhysicalChannel", "ShootResult", "allowed_angular_momenta",
    "coupling_for_knot", "dimension_dichotomy", "effective_order",
    "growing_coefficient", "is_bound_state", "scan_sturmian", "shoot",
    "StripPoint", "map_from_strip", "map_to_strip", "strip_equation_residual",
    "__version__",
]
