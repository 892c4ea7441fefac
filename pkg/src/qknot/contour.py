"""Spiral integration paths that wind counterclockwise around the origin.

A path with n_turns >= 1 consists of an incoming ray at fixed phase
theta_L = -pi + arctan(eps) descending from r_max to the loop radius, a
counterclockwise circular arc at the loop radius turning through
2*pi*n_turns + pi - 2*arctan(eps), and an outgoing ray at phase
theta_R = 2*pi*n_turns - arctan(eps) climbing back to r_max.  The junction
circle keeps the path away from the branch point; any loop radius and ray
slope give homotopic paths in the punctured surface, which downstream
residuals verify numerically.

For n_turns = 0 the path degenerates to the straight horizontal segment
r = s - i*eps*r_max, s in [-r_max, r_max], which stays inside sector S_0 and
has exactly the same endpoint phases as the ray construction.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Iterator

import numpy as np

from .riemann import SurfacePoint

__all__ = ["ContourSpec", "PathPiece", "ContourPath", "build_contour",
           "winding_number", "export_contour", "CSV_HEADER"]

CSV_HEADER = "t,rho,theta,re,im,sector,segment"


@dataclass(frozen=True)
class ContourSpec:
    """Parameters of the knot path.

    n_turns      -- number of counterclockwise turns around the origin (>= 0)
    loop_radius  -- radius of the joining circle (> 0)
    ray_slope    -- asymptotic slope eps of the rays, 0 < eps < 1
    r_max        -- truncation radius of the rays
    n_samples    -- sampling hint for the realized path (export/diagnostics;
                    the propagator re-steps adaptively regardless)
    """

    n_turns: int
    loop_radius: float = 1.0
    ray_slope: float = 0.1
    r_max: float = 30.0
    n_samples: int = 240

    def __post_init__(self) -> None:
        if self.n_turns < 0 or int(self.n_turns) != self.n_turns:
            raise ValueError(f"n_turns must be a non-negative integer, got {self.n_turns}")
        if not 0.0 < self.loop_radius < self.r_max:
            raise ValueError(
                f"need 0 < loop_radius < r_max, got {self.loop_radius}, {self.r_max}")
        if not 0.0 < self.ray_slope < 1.0:
            raise ValueError(f"need 0 < ray_slope < 1, got {self.ray_slope}")
        if self.n_samples < 4:
            raise ValueError("n_samples must be at least 4")

    @property
    def theta_left(self) -> float:
        return -math.pi + math.atan(self.ray_slope)

    @property
    def theta_right(self) -> float:
        return 2.0 * math.pi * self.n_turns - math.atan(self.ray_slope)


@dataclass(frozen=True)
class PathPiece:
    """One analytic piece of the path, parametrized on local t in [0, 1]."""

    label: str
    point: Callable[[float], SurfacePoint] = field(repr=False)
    tangent: Callable[[float], complex] = field(repr=False)

    def value(self, t: float) -> complex:
        return self.point(t).to_complex()


@dataclass(frozen=True)
class ContourPath:
    """A realized path: analytic pieces plus a sampled polyline.

    The sample columns (ts on the global [0, 1] parameter, points, tangents,
    labels) are aligned.  Phase is non-decreasing along the path and the
    modulus never drops below the junction radius.
    """

    spec: ContourSpec
    pieces: tuple[PathPiece, ...]
    ts: np.ndarray
    points: tuple[SurfacePoint, ...]
    tangents: np.ndarray
    labels: tuple[str, ...]

    @property
    def start(self) -> SurfacePoint:
        return self.points[0]

    @property
    def end(self) -> SurfacePoint:
        return self.points[-1]


def _ray_piece(label: str, theta: float, rho_from: float, rho_to: float) -> PathPiece:
    # uniform in log rho: r(t) = e^{i theta} rho_from (rho_to/rho_from)^t
    log_from = math.log(rho_from)
    log_step = math.log(rho_to) - math.log(rho_from)

    def point(t: float) -> SurfacePoint:
        return SurfacePoint(math.exp(log_from + log_step * t), theta)

    def tangent(t: float) -> complex:
        rho = math.exp(log_from + log_step * t)
        return complex(math.cos(theta), math.sin(theta)) * rho * log_step

    return PathPiece(label, point, tangent)


def _arc_piece(label: str, rho: float, theta_from: float, theta_to: float) -> PathPiece:
    dtheta = theta_to - theta_from

    def point(t: float) -> SurfacePoint:
        return SurfacePoint(rho, theta_from + dtheta * t)

    def tangent(t: float) -> complex:
        theta = theta_from + dtheta * t
        return 1j * dtheta * rho * complex(math.cos(theta), math.sin(theta))

    return PathPiece(label, point, tangent)


def _line_piece(label: str, depth: float, s_from: float, s_to: float) -> PathPiece:
    # straight horizontal segment r = s - i*depth; phase from atan2 is
    # continuous and increasing on (-pi, 0) as s runs left to right
    ds = s_to - s_from

    def point(t: float) -> SurfacePoint:
        s = s_from + ds * t
        return SurfacePoint(math.hypot(s, depth), math.atan2(-depth, s))

    def tangent(t: float) -> complex:
        return complex(ds, 0.0)

    return PathPiece(label, point, tangent)


def build_contour(spec: ContourSpec) -> ContourPath:
    """Realize the spec as ray-arc-ray (or the straight line for zero turns)."""
    if spec.n_turns == 0:
        depth = spec.ray_slope * spec.r_max
        pieces = (_line_piece("line", depth, -spec.r_max, spec.r_max),)
        weights = [1.0]
    else:
        theta_l = spec.theta_left
        theta_r = spec.theta_right
        pieces = (
            _ray_piece("incoming-ray", theta_l, spec.r_max, spec.loop_radius),
            _arc_piece("loop", spec.loop_radius, theta_l, theta_r),
            _ray_piece("outgoing-ray", theta_r, spec.loop_radius, spec.r_max),
        )
        ray_len = spec.r_max - spec.loop_radius
        arc_len = spec.loop_radius * (theta_r - theta_l)
        weights = [ray_len, arc_len, ray_len]

    total = sum(weights)
    counts = [max(2, round(spec.n_samples * w / total)) for w in weights]
    ts: list[float] = []
    points: list[SurfacePoint] = []
    tangents: list[complex] = []
    labels: list[str] = []
    offset = 0.0
    for piece, weight, count in zip(pieces, weights, counts):
        span = weight / total
        local = np.linspace(0.0, 1.0, count)
        start_index = 1 if points else 0  # avoid duplicating junction samples
        for t_local in local[start_index:]:
            ts.append(offset + span * float(t_local))
            points.append(piece.point(float(t_local)))
            tangents.append(piece.tangent(float(t_local)))
            labels.append(piece.label)
        offset += span
    return ContourPath(spec=spec, pieces=pieces, ts=np.array(ts),
                       points=tuple(points),
                       tangents=np.array(tangents, dtype=complex),
                       labels=tuple(labels))


def winding_number(path: ContourPath) -> int:
    """Number of full turns recovered from the endpoint phases.

    Raises ValueError if the phase budget is not an integer number of turns
    to within 1e-9: that indicates a malformed path.
    """
    eps = path.spec.ray_slope
    raw = (path.end.theta - path.start.theta - math.pi
           + 2.0 * math.atan(eps)) / (2.0 * math.pi)
    n = round(raw)
    if abs(raw - n) > 1e-9:
        raise ValueError(f"phase budget {raw!r} is not an integer turn count")
    return n


def _sector_index(theta: float) -> int:
    # plain floor classification for export rows; geometric samples may sit
    # arbitrarily close to a boundary and still deserve a diagnostic column
    return math.floor(theta / math.pi) + 1


def export_contour(path: ContourPath) -> Iterator[dict]:
    """Yield one record per sample: t, rho, theta, re, im, sector, segment."""
    for t, p, label in zip(path.ts, path.points, path.labels):
        value = p.to_complex()
        yield {
            "t": float(t),
            "rho": p.rho,
            "theta": p.theta,
            "re": value.real,
            "im": value.imag,
            "sector": _sector_index(p.theta),
            "segment": label,
        }
