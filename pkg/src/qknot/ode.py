"""Transport of the radial equation along a contour, with overflow-safe scaling.

The second-order equation psi'' = (l(l+1)/r^2 - E) psi is integrated as a
first-order system in the path parameter with an adaptive high-order
Runge-Kutta pair.  States carry a logarithmic magnitude factor so that the
exponential growth accumulated over many windings never overflows: the true
wavefunction is e^{logscale} * u and all downstream quantities (coefficient
ratios, residuals) are invariant under the rescaling.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

import numpy as np
from scipy.integrate import solve_ivp

from .contour import ContourPath
from .hankel import HankelKind, hankel_on_surface_pair
from .riemann import SurfacePoint

__all__ = ["Numerics", "PropState", "PropagationError", "BasisConditionError",
           "rhs", "propagate", "propagate_with_trace", "seed_asymptotic",
           "fit_coefficients"]

RENORM_LOW = 1e-2
RENORM_HIGH = 1e2

# basis-fit determinant is exactly -4i/pi for the sqrt(r)-weighted Hankel pair
_EXACT_DET = -4j / math.pi


@dataclass(frozen=True)
class Numerics:
    rel_tol: float = 1e-10
    abs_tol: float = 1e-12
    max_steps: int = 1_000_000

    def __post_init__(self) -> None:
        if self.rel_tol <= 0 or self.abs_tol <= 0:
            raise ValueError("tolerances must be positive")


@dataclass(frozen=True)
class PropState:
    """Rescaled solution pair: true psi = e^{logscale} u, true dpsi/dr = e^{logscale} du."""

    u: complex
    du: complex
    logscale: float = 0.0

    def normalized(self) -> "PropState":
        """Rescale so max(|u|, |du|) = 1, folding the factor into logscale."""
        scale = max(abs(self.u), abs(self.du))
        if scale == 0.0:
            raise ValueError("cannot normalize the zero state")
        return PropState(self.u / scale, self.du / scale,
                         self.logscale + math.log(scale))

    @property
    def true_psi(self) -> complex:
        return self.u * math.exp(self.logscale)

    @property
    def true_dpsi(self) -> complex:
        return self.du * math.exp(self.logscale)


class PropagationError(RuntimeError):
    """Integration failure; carries the path location where it happened."""

    def __init__(self, message: str, segment: str, t: float):
        super().__init__(f"{message} (segment {segment!r}, local t={t:.6g})")
        self.segment = segment
        self.t = t


class BasisConditionError(RuntimeError):
    """Fit system determinant too far from its exact value."""


def rhs(r: complex, psi: complex, ell: float, energy: complex) -> complex:
    """Second derivative of the radial equation, (l(l+1)/r^2 - E) psi."""
    if r == 0:
        raise ValueError("the equation has a pole at r = 0")
    return (ell * (ell + 1.0) / (r * r) - energy) * psi


def _integrate_piece(piece, ell: float, energy: complex, y: np.ndarray,
                     num: Numerics, t_eval=None):
    ll1 = ell * (ell + 1.0)

    def f(t, state):
        r = piece.value(t)
        dr = piece.tangent(t)
        return (dr * state[1], dr * ((ll1 / (r * r)) - energy) * state[0])

    sol = solve_ivp(f, (0.0, 1.0), y, method="DOP853",
                    rtol=num.rel_tol, atol=num.abs_tol, t_eval=t_eval)
    if not sol.success:
        raise PropagationError(sol.message, piece.label, float(sol.t[-1]) if len(sol.t) else 0.0)
    return sol


def propagate(path: ContourPath, ell: float, energy: complex,
              state: PropState, num: Numerics = Numerics()) -> PropState:
    """Transport a state from the start of the path to its end.

    The state is renormalized into the [RENORM_LOW, RENORM_HIGH] magnitude
    band at every segment boundary; the accumulated factor lives in logscale.
    Raises PropagationError on step failure or when the total number of
    right-hand-side evaluations exceeds num.max_steps.
    """
    final, _, _ = _propagate_impl(path, ell, energy, state, num, want_trace=False)
    return final


def propagate_counted(path: ContourPath, ell: float, energy: complex,
                      state: PropState, num: Numerics = Numerics(),
                      ) -> tuple[PropState, int]:
    """propagate plus the number of right-hand-side evaluations used."""
    final, _, nfev = _propagate_impl(path, ell, energy, state, num, want_trace=False)
    return final, nfev


def propagate_with_trace(path: ContourPath, ell: float, energy: complex,
                         state: PropState, num: Numerics = Numerics(),
                         ) -> tuple[PropState, list[tuple[SurfacePoint, PropState]]]:
    """Like propagate, but also return states at the path's sample points."""
    final, trace, _ = _propagate_impl(path, ell, energy, state, num, want_trace=True)
    return final, trace


def _propagate_impl(path, ell, energy, state, num, want_trace):
    y = np.array([state.u, state.du], dtype=complex)
    logscale = state.logscale
    nfev = 0
    trace: list[tuple[SurfacePoint, PropState]] = []
    n_pieces = len(path.pieces)
    # per-piece local sample parameters, reconstructed from the path samples
    for index, piece in enumerate(path.pieces):
        if want_trace:
            locals_ = _piece_sample_locals(path, index, n_pieces)
            t_eval = np.unique(np.concatenate((locals_, [0.0, 1.0])))
        else:
            t_eval = None
        sol = _integrate_piece(piece, ell, energy, y, num, t_eval)
        nfev += sol.nfev
        if nfev > num.max_steps:
            raise PropagationError(
                f"evaluation budget exceeded ({nfev} > {num.max_steps})",
                piece.label, 1.0)
        if want_trace:
            for t_local, col in zip(sol.t, sol.y.T):
                trace.append((piece.point(float(t_local)),
                              PropState(col[0], col[1], logscale)))
        y = sol.y[:, -1]
        scale = max(abs(y[0]), abs(y[1]))
        if scale == 0.0:
            raise PropagationError("state collapsed to zero", piece.label, 1.0)
        if not (RENORM_LOW <= scale <= RENORM_HIGH) or index < n_pieces - 1:
            y = y / scale
            logscale += math.log(scale)
    final = PropState(complex(y[0]), complex(y[1]), logscale)
    return final, trace, nfev


def _piece_sample_locals(path: ContourPath, index: int, n_pieces: int) -> np.ndarray:
    label = path.pieces[index].label
    # recover local parameters of this piece's samples from the global ts
    t0, t1 = _piece_spans(path)[index]
    ts = np.array([t for t, lab in zip(path.ts, path.labels) if lab == label])
    if len(ts) == 0:
        return np.array([0.0, 1.0])
    return np.clip((ts - t0) / (t1 - t0), 0.0, 1.0)


def _piece_spans(path: ContourPath) -> list[tuple[float, float]]:
    spec = path.spec
    if spec.n_turns == 0:
        return [(0.0, 1.0)]
    ray = spec.r_max - spec.loop_radius
    arc = spec.loop_radius * (spec.theta_right - spec.theta_left)
    total = 2 * ray + arc
    a = ray / total
    b = (ray + arc) / total
    return [(0.0, a), (a, b), (b, 1.0)]


def _sqrt_on_surface(p: SurfacePoint) -> complex:
    """Sheet-correct sqrt(r): sqrt(rho) e^{i theta / 2} with unwrapped theta."""
    return math.sqrt(p.rho) * complex(math.cos(p.theta / 2.0),
                                      math.sin(p.theta / 2.0))


def _basis_pair(kind: HankelKind, nu: float, p: SurfacePoint, kappa: float,
                sqrt_r: complex, n_terms: int = 20) -> tuple[complex, complex]:
    """f = sqrt_r * H_kind(kappa r) and df/dr at surface point p."""
    zp = SurfacePoint(kappa * p.rho, p.theta)
    h, dh = hankel_on_surface_pair(kind, nu, zp, n_terms=n_terms)
    rc = p.rho * complex(math.cos(p.theta), math.sin(p.theta))
    f = sqrt_r * h
    df = 0.5 * sqrt_r / rc * h + sqrt_r * kappa * dh
    return f, df


def seed_asymptotic(kind: HankelKind, nu: float, p: SurfacePoint,
                    kappa: float, n_terms: int = 20) -> PropState:
    """State for psi = sqrt(r) H^(kind)_nu(kappa r) at surface point p.

    The Hankel factor is evaluated sheet-correctly (monodromy applied for
    points beyond the principal sheet) and the overall magnitude is absorbed
    into logscale.
    """
    if kappa <= 0:
        raise ValueError("kappa must be positive")
    sqrt_r = _sqrt_on_surface(p)
    f, df = _basis_pair(kind, nu, p, kappa, sqrt_r, n_terms)
    return PropState(f, df, 0.0).normalized()


def fit_coefficients(state: PropState, p: SurfacePoint, nu: float,
                     kappa: float) -> tuple[complex, complex]:
    """Coefficients (c1, c2) of psi = c1 sqrt(r) H^(1) + c2 sqrt(r) H^(2) at p.

    The basis is the principal-sheet pair at the projected argument of p
    (the decaying/growing classification in p's sector refers to exactly
    this pair), solved against both the value and derivative rows.  The
    system determinant equals -4i/pi identically; a large deviation means a
    broken basis evaluation and raises BasisConditionError.
    """
    m = math.ceil(p.theta / math.pi)
    theta0 = p.theta - m * math.pi
    proj = SurfacePoint(p.rho, theta0)
    sqrt_r = _sqrt_on_surface(proj)
    f1, df1 = _basis_pair(HankelKind.ONE, nu, proj, kappa, sqrt_r)
    f2, df2 = _basis_pair(HankelKind.TWO, nu, proj, kappa, sqrt_r)
    det = f1 * df2 - df1 * f2
    if abs(det - _EXACT_DET) > 1e-8 * abs(_EXACT_DET):
        raise BasisConditionError(
            f"fit determinant {det!r} deviates from {_EXACT_DET!r}")
    scale = math.exp(state.logscale)
    psi = state.u * scale
    dpsi = state.du * scale
    c1 = (psi * df2 - dpsi * f2) / det
    c2 = (dpsi * f1 - psi * df1) / det
    return c1, c2
