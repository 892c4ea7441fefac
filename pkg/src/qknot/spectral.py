"""Quantization engine: which orders support bound states on a winding path.

A solution seeded as the decaying Hankel kind in the entry sector picks up,
after n_turns counterclockwise turns, a growing-kind admixture with the
closed-form coefficient ``growing_coefficient``.  Bound states exist exactly
where that coefficient vanishes: 2 * n_turns * nu integer while nu itself is
not an integer.  The shooting pipeline reproduces the same condition purely
numerically (seed, transport, fit) and the Sturmian scan locates the zeros of
the shooting residual over nu at fixed energy; the energy drops out, which is
the Sturmian character of the spectrum.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

from .contour import ContourPath, ContourSpec, build_contour
from .hankel import ell_from_order, monodromy_coeffs, near_integer
from .ode import Numerics, fit_coefficients, propagate_counted, seed_asymptotic
from .riemann import HankelKind

__all__ = [
    "QUANTIZATION_TOL",
    "KnotQuantum",
    "PhysicalChannel",
    "ShootResult",
    "ScanMinimum",
    "DichotomyResult",
    "ForbiddenLabelWarning",
    "growing_coefficient",
    "is_bound_state",
    "allowed_angular_momenta",
    "effective_order",
    "coupling_for_knot",
    "dimension_dichotomy",
    "default_contour_spec",
    "shoot",
    "predicted_residual",
    "scan_sturmian",
]

# matches the near-integer policy of the Hankel kernels so the two
# integer/non-integer dichotomies can never disagree
QUANTIZATION_TOL = 1e-6

SEED_SCALE = 30.0  # kappa * r_max at the ray tips; asymptotic seeding error ~ 1e-19


class ForbiddenLabelWarning(UserWarning):
    """Requested level label is a multiple of 2 * n_turns (no bound state)."""


@dataclass(frozen=True)
class KnotQuantum:
    """A quantized level: label m_index at winding n_turns.

    nu = m_index / (2 n_turns), ell = nu - 1/2; allowed is False exactly when
    nu is an integer (m_index a multiple of 2 n_turns).
    """

    n_turns: int
    m_index: int
    nu: float
    ell: float
    allowed: bool

    @classmethod
    def from_label(cls, n_turns: int, m_index: int) -> "KnotQuantum":
        if n_turns < 1 or m_index < 1:
            raise ValueError("need n_turns >= 1 and m_index >= 1")
        nu = m_index / (2.0 * n_turns)
        return cls(n_turns=n_turns, m_index=m_index, nu=nu,
                   ell=ell_from_order(nu),
                   allowed=m_index % (2 * n_turns) != 0)


@dataclass(frozen=True)
class PhysicalChannel:
    """A partial-wave channel: spatial dimension, wave index, coupling, momentum."""

    dim: int
    partial_wave: int
    coupling: float = 0.0
    kappa: float = 1.0

    def __post_init__(self) -> None:
        if self.dim < 1:
            raise ValueError("dimension must be >= 1")
        if self.partial_wave < 0:
            raise ValueError("partial wave index must be >= 0")
        if self.dim == 1 and self.partial_wave not in (0, 1):
            raise ValueError("one dimension admits only partial waves 0 and 1")
        if self.kappa <= 0:
            raise ValueError("kappa must be positive")


@dataclass(frozen=True)
class ShootResult:
    c1: complex
    c2: complex
    residual: float
    logscale: float
    n_eval: int


@dataclass(frozen=True)
class ScanMinimum:
    nu: float
    residual: float


@dataclass(frozen=True)
class DichotomyResult:
    allowed_free: bool
    m_index: int | None


def growing_coefficient(nu: float, n_turns: int) -> complex:
    """Coefficient of the growing kind after n_turns full turns.

    Equals e^{i pi nu} sin(2 n_turns pi nu)/sin(pi nu), with the continuous
    integer-order limit; identically zero for n_turns = 0, where no phase is
    accumulated and every order stays unconstrained.
    """
    if n_turns < 0:
        raise ValueError("n_turns must be non-negative")
    _, b = monodromy_coeffs(nu, 2 * n_turns)
    return b


def is_bound_state(nu: float, n_turns: int, tol: float = QUANTIZATION_TOL) -> bool:
    """True iff 2*n_turns*nu is an integer while nu is not (within tol)."""
    doubled = 2.0 * n_turns * nu
    return (abs(doubled - round(doubled)) < tol) and not near_integer(nu, tol)


def allowed_angular_momenta(n_turns: int, m_max: int) -> list[KnotQuantum]:
    """All allowed levels with label up to m_max (labels divisible by
    2*n_turns are skipped: those orders are integers and support no state)."""
    if n_turns < 1:
        raise ValueError("n_turns must be >= 1")
    if m_max < 1:
        raise ValueError("m_max must be >= 1")
    return [KnotQuantum.from_label(n_turns, m)
            for m in range(1, m_max + 1) if m % (2 * n_turns) != 0]


def effective_order(channel: PhysicalChannel) -> float:
    """Bessel order of the channel: nu = sqrt(coupling + (m + (D-2)/2)^2).

    The centrifugal strength l(l+1) of the reduced radial problem combines
    the coupling with the dimensional term; with a = m + (D-2)/2 the identity
    (a - 1/2)(a + 1/2) + 1/4 = a^2 collapses it so that nu^2 = coupling + a^2.
    Raises ValueError when the radicand is negative (complex-order channel,
    out of scope here).
    """
    a = channel.partial_wave + (channel.dim - 2) / 2.0
    radicand = channel.coupling + a * a
    if radicand < 0.0:
        raise ValueError(
            f"coupling {channel.coupling} makes the order complex "
            f"(radicand {radicand})")
    return math.sqrt(radicand)


def coupling_for_knot(dim: int, partial_wave: int, n_turns: int,
                      m_index: int) -> float:
    """Inverse-square coupling that places level m_index in this channel.

    coupling = (m_index/(2 n_turns))^2 - (partial_wave + (dim-2)/2)^2.
    Warns (ForbiddenLabelWarning) when m_index is a multiple of 2*n_turns:
    the formula still evaluates but the level does not exist.
    """
    if m_index % (2 * n_turns) == 0:
        warnings.warn(
            f"label {m_index} is a multiple of {2 * n_turns}; "
            "no bound state exists there", ForbiddenLabelWarning, stacklevel=2)
    nu = m_index / (2.0 * n_turns)
    a = partial_wave + (dim - 2) / 2.0
    return nu * nu - a * a


def dimension_dichotomy(dim: int, partial_wave: int, n_turns: int) -> DichotomyResult:
    """Free-particle (zero coupling) existence test for a channel.

    The free order is nu = partial_wave + (dim-2)/2.  In odd dimensions nu is
    a half-odd integer, 2*n_turns*nu is an odd multiple of n_turns, and the
    level is allowed.  In even dimensions nu is an integer, the induced label
    is a multiple of 2*n_turns, and no free bound state exists.
    """
    channel = PhysicalChannel(dim=dim, partial_wave=partial_wave)
    nu = effective_order(channel)
    doubled = 2 * n_turns * nu
    m_index = round(doubled)
    if abs(doubled - m_index) > 1e-12 or m_index < 1:
        return DichotomyResult(allowed_free=False, m_index=None)
    if near_integer(nu):
        return DichotomyResult(allowed_free=False, m_index=None)
    return DichotomyResult(allowed_free=True, m_index=m_index)


def default_contour_spec(n_turns: int, kappa: float, loop_radius: float = 1.0,
                         ray_slope: float = 0.1, n_samples: int = 240) -> ContourSpec:
    """Contour sized so the ray tips sit at kappa*r = SEED_SCALE."""
    if kappa <= 0:
        raise ValueError("kappa must be positive")
    r_max = max(SEED_SCALE / kappa, 4.0 * loop_radius)
    return ContourSpec(n_turns=n_turns, loop_radius=loop_radius,
                       ray_slope=ray_slope, r_max=r_max, n_samples=n_samples)


def predicted_residual(nu: float, n_turns: int) -> float:
    """Closed-form value of the shooting residual |c1|/(|c1| + |c2|)."""
    a, b = monodromy_coeffs(nu, 2 * n_turns)
    return abs(b) / (abs(b) + abs(a))


def shoot(nu: float, n_turns: int, kappa: float,
          cspec: ContourSpec | None = None,
          num: Numerics = Numerics(),
          path: ContourPath | None = None) -> ShootResult:
    """Seed the decaying kind at the path entry, transport, fit at the exit.

    Returns the fitted coefficients in the exit basis and the dimensionless
    residual |c1|/(|c1| + |c2|), which vanishes exactly at the quantized
    orders.  A prebuilt ``path`` may be passed to amortize construction over
    a scan; it takes precedence over ``cspec``.
    """
    if nu < 0:
        raise ValueError("order must be non-negative")
    if kappa <= 0:
        raise ValueError("kappa must be positive")
    if path is None:
        spec = cspec if cspec is not None else default_contour_spec(n_turns, kappa)
        if spec.n_turns != n_turns:
            raise ValueError(
                f"contour has {spec.n_turns} turns but n_turns={n_turns}")
        path = build_contour(spec)
    elif path.spec.n_turns != n_turns:
        raise ValueError(
            f"path has {path.spec.n_turns} turns but n_turns={n_turns}")
    ell = ell_from_order(nu)
    seed = seed_asymptotic(HankelKind.TWO, nu, path.start, kappa)
    final, n_eval = propagate_counted(path, ell, kappa * kappa, seed, num)
    c1, c2 = fit_coefficients(final, path.end, nu, kappa)
    residual = abs(c1) / (abs(c1) + abs(c2))
    return ShootResult(c1=c1, c2=c2, residual=residual,
                       logscale=final.logscale, n_eval=n_eval)


_INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0
_INV_PHI_SQ = (3.0 - math.sqrt(5.0)) / 2.0


def _golden_minimum(f, a: float, b: float, width: float) -> tuple[float, float]:
    """Golden-section refinement of a bracketed minimum to the given width."""
    h = b - a
    if h <= width:
        x = 0.5 * (a + b)
        return x, f(x)
    steps = int(math.ceil(math.log(width / h) / math.log(_INV_PHI)))
    c = a + _INV_PHI_SQ * h
    d = a + _INV_PHI * h
    yc = f(c)
    yd = f(d)
    for _ in range(steps - 1):
        if yc < yd:
            b, d, yd = d, c, yc
            h *= _INV_PHI
            c = a + _INV_PHI_SQ * h
            yc = f(c)
        else:
            a, c, yc = c, d, yd
            h *= _INV_PHI
            d = a + _INV_PHI * h
            yd = f(d)
    if yc < yd:
        return c, yc
    return d, yd


def scan_sturmian(n_turns: int, kappa: float, nu_min: float, nu_max: float,
                  grid_points: int, cspec: ContourSpec | None = None,
                  num: Numerics = Numerics(),
                  residual_cut: float = 1e-4,
                  refine_width: float = 1e-8) -> list[ScanMinimum]:
    """Locate quantized orders as minima of the shooting residual over nu.

    Evaluates the residual on a uniform grid over [nu_min, nu_max], refines
    every interior local minimum by golden-section search down to
    ``refine_width``, and reports those whose refined residual falls below
    ``residual_cut``.  The contour is built once and shared by all
    evaluations.  Results are ordered by nu; an empty list is a valid
    outcome.
    """
    if not 0.0 <= nu_min < nu_max:
        raise ValueError("need 0 <= nu_min < nu_max")
    if grid_points < 3:
        raise ValueError("grid needs at least 3 points")
    spec = cspec if cspec is not None else default_contour_spec(n_turns, kappa)
    path = build_contour(spec)

    def residual_at(nu: float) -> float:
        return shoot(nu, n_turns, kappa, num=num, path=path).residual

    step = (nu_max - nu_min) / (grid_points - 1)
    grid = [nu_min + i * step for i in range(grid_points)]
    values = [residual_at(nu) for nu in grid]
    minima: list[ScanMinimum] = []
    for i in range(1, grid_points - 1):
        if values[i] <= values[i - 1] and values[i] < values[i + 1]:
            nu_star, res_star = _golden_minimum(
                residual_at, grid[i - 1], grid[i + 1], refine_width)
            if res_star < residual_cut:
                minima.append(ScanMinimum(nu=nu_star, residual=res_star))
    return minima
