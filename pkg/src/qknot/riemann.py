"""Points on the log-type Riemann surface around r = 0 and its asymptotic sectors.

The wavefunctions handled by this package are multivalued around the origin,
so a point is not just a complex number: it carries an unwrapped phase.  Two
points with phases differing by a multiple of 2*pi project onto the same
complex value but live on different sheets and are distinct.

Sectors S_k are the open half-turn wedges theta in (k*pi - pi, k*pi) at large
modulus.  In each sector exactly one Hankel kind decays; the kinds alternate
with the sector parity.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

SECTOR_BOUNDARY_TOL = 1e-12


class SectorBoundaryError(ValueError):
    """Phase sits on an anti-Stokes line theta = k*pi; no sector is defined."""


class HankelKind(enum.Enum):
    ONE = "one"
    TWO = "two"

    def __str__(self) -> str:  # pragma: no cover - cosmetic
        return self.value


@dataclass(frozen=True)
class SurfacePoint:
    """A point rho * e^{i theta} with unwrapped (unbounded) phase theta.

    rho must be strictly positive: the branch point r = 0 does not belong to
    the surface.  The sheet index is never stored; it is derived from theta
    where needed.
    """

    rho: float
    theta: float

    def __post_init__(self) -> None:
        if not self.rho > 0.0:
            raise ValueError(f"surface point needs rho > 0, got {self.rho}")

    def to_complex(self) -> complex:
        return complex(self.rho * math.cos(self.theta),
                       self.rho * math.sin(self.theta))


def to_complex(p: SurfacePoint) -> complex:
    """Project a surface point onto the plain complex plane (loses the sheet)."""
    return p.to_complex()


def sector_of(p: SurfacePoint) -> int:
    """Index k of the sector containing p, where S_k is theta in (k*pi - pi, k*pi).

    Raises SectorBoundaryError if theta lies on a boundary within
    SECTOR_BOUNDARY_TOL: the decay classification genuinely changes across
    theta = k*pi, so boundary points are rejected rather than assigned by
    convention.
    """
    ratio = p.theta / math.pi
    if abs(ratio - round(ratio)) < SECTOR_BOUNDARY_TOL:
        raise SectorBoundaryError(
            f"theta = {p.theta!r} lies on a sector boundary (multiple of pi)")
    return math.floor(ratio) + 1


def decaying_kind_in_sector(k: int) -> HankelKind:
    """Which Hankel kind decays at large modulus inside sector S_k.

    Even sectors: kind two decays (kind one grows); odd sectors the reverse.
    """
    return HankelKind.TWO if k % 2 == 0 else HankelKind.ONE
