"""Built-in verification suite: one check per advertised guarantee.

Each criterion function runs a self-contained numerical experiment and
returns a CriterionResult; run_all executes them in order.  The CLI
``verify`` command prints one line per criterion and fails the process if
any of them fail.  The pytest acceptance module calls the same functions, so
there is a single implementation of every check.
"""

from __future__ import annotations

import math
import random
import subprocess
import sys
import time
from dataclasses import dataclass

import numpy as np

from .contour import ContourSpec, build_contour
from .hankel import (
    check_regime_overlap,
    continuation_oracle,
    ell_from_order,
    hankel_principal,
    monodromy_coeffs,
    order_from_ell,
)
from .ode import Numerics, PropState, propagate_with_trace
from .riemann import HankelKind, SurfacePoint
from .spectral import (
    PhysicalChannel,
    coupling_for_knot,
    default_contour_spec,
    dimension_dichotomy,
    effective_order,
    scan_sturmian,
    shoot,
)
from .unroll import map_from_strip, map_to_strip, strip_amplitude, strip_equation_residual

__all__ = ["CriterionResult", "run_all", "CRITERIA"]


@dataclass(frozen=True)
class CriterionResult:
    name: str
    passed: bool
    detail: str
    seconds: float

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status}  {self.name}  ({self.detail}; {self.seconds:.1f} s)"


def _timed(name, worker):
    start = time.perf_counter()
    try:
        passed, detail = worker()
    except Exception as exc:  # a crash is a failing criterion, not a crash of verify
        return CriterionResult(name, False, f"exception: {exc!r}",
                               time.perf_counter() - start)
    return CriterionResult(name, passed, detail, time.perf_counter() - start)


def criterion_monodromy_oracle() -> CriterionResult:
    """Connection formula versus numerical circle transport, and time budget."""

    def worker():
        start = time.perf_counter()
        worst = 0.0
        for nu in (0.3, 0.5, 0.7, 1.0, 1.25):
            for m in (1, 2, 4):
                for radius in (3.0, 8.0):
                    z0 = complex(radius, 0.0)
                    value, _ = continuation_oracle(nu, z0, m * math.pi)
                    a, b = monodromy_coeffs(nu, m)
                    predicted = (a * hankel_principal(HankelKind.TWO, nu, z0)
                                 + b * hankel_principal(HankelKind.ONE, nu, z0))
                    worst = max(worst, abs(value - predicted) / abs(predicted))
        elapsed = time.perf_counter() - start
        ok = worst <= 1e-8 and elapsed < 10.0
        return ok, f"worst rel dev {worst:.2e} (tol 1e-8), grid in {elapsed:.1f} s (< 10 s)"

    return _timed("monodromy-vs-oracle", worker)


def _nearest(values, target):
    return min(values, key=lambda v: abs(v - target)) if values else math.inf


def criterion_quantization_scan() -> CriterionResult:
    """Sturmian scans find exactly the predicted orders."""

    def worker():
        t1 = time.perf_counter()
        minima1 = scan_sturmian(1, 1.0, 0.005, 1.995, 400)
        dt1 = time.perf_counter() - t1
        locations1 = [m.nu for m in minima1]
        ok1 = (abs(_nearest(locations1, 0.5) - 0.5) <= 1e-6
               and abs(_nearest(locations1, 1.5) - 1.5) <= 1e-6
               and all(abs(nu - 1.0) > 0.05 for nu in locations1)
               and dt1 < 60.0)
        t2 = time.perf_counter()
        minima2 = scan_sturmian(2, 1.0, 0.005, 0.995, 300)
        dt2 = time.perf_counter() - t2
        locations2 = [m.nu for m in minima2]
        ok2 = all(abs(_nearest(locations2, target) - target) <= 1e-6
                  for target in (0.25, 0.5, 0.75)) and dt2 < 60.0
        detail = (f"turn-1 minima {sorted(round(x, 7) for x in locations1)} in {dt1:.1f} s; "
                  f"turn-2 minima {sorted(round(x, 7) for x in locations2)} in {dt2:.1f} s")
        return ok1 and ok2, detail

    return _timed("quantization-scan", worker)


def criterion_shoot_equivalence() -> CriterionResult:
    """Shooting coefficients equal the closed-form connection prediction."""

    def worker():
        worst = 0.0
        for n_turns in (1, 2):
            for nu in (0.3, 0.5, 0.75, 1.5):
                result = shoot(nu, n_turns, 1.0)
                a, b = monodromy_coeffs(nu, 2 * n_turns)
                if abs(b) < 1e-12:
                    dev = result.residual  # prediction is zero: residual itself
                else:
                    dev = abs(result.c1 / result.c2 - b / a)
                worst = max(worst, dev)
        return worst <= 1e-6, f"worst deviation {worst:.2e} (tol 1e-6)"

    return _timed("shoot-vs-closed-form", worker)


def criterion_homotopy_invariance() -> CriterionResult:
    """Residual independent of loop radius and ray slope at fixed winding."""

    def worker():
        worst_spread = 0.0
        for nu in (0.5, 0.3):
            residuals = []
            for loop_radius in (0.5, 1.0, 2.0):
                for ray_slope in (0.05, 0.1, 0.2):
                    spec = default_contour_spec(1, 1.0, loop_radius=loop_radius,
                                                ray_slope=ray_slope)
                    residuals.append(shoot(nu, 1, 1.0, cspec=spec).residual)
            worst_spread = max(worst_spread, max(residuals) - min(residuals))
        return worst_spread <= 1e-6, f"worst spread {worst_spread:.2e} (tol 1e-6)"

    return _timed("homotopy-invariance", worker)


def criterion_energy_independence() -> CriterionResult:
    """Coefficient ratio is energy-free; zero-turn path constrains nothing."""

    def worker():
        worst = 0.0
        for nu, n_turns in ((0.3, 1), (0.75, 2)):
            ratios = []
            for kappa in (0.5, 1.0, 2.0):
                result = shoot(nu, n_turns, kappa)
                ratios.append(result.c1 / result.c2)
            spread = max(abs(r - ratios[0]) for r in ratios)
            worst = max(worst, spread)
        flat_worst = 0.0
        for nu in (0.3, 0.8):
            for kappa in (0.5, 1.0, 2.0):
                flat_worst = max(flat_worst, shoot(nu, 0, kappa).residual)
        ok = worst <= 1e-6 and flat_worst <= 1e-6
        return ok, (f"ratio spread {worst:.2e} (tol 1e-6); "
                    f"zero-turn residual {flat_worst:.2e} (tol 1e-6)")

    return _timed("energy-independence", worker)


def criterion_dimension_dichotomy() -> CriterionResult:
    """Free knots exist in odd dimensions only; coupling formula round-trips."""

    def worker():
        for dim in (3, 5, 7):
            for partial in (0, 1, 2):
                for n_turns in (1, 2, 3):
                    res = dimension_dichotomy(dim, partial, n_turns)
                    quotient = (res.m_index or 0) // n_turns
                    if not (res.allowed_free and res.m_index is not None
                            and res.m_index % n_turns == 0 and quotient % 2 == 1):
                        return False, f"odd dimension {dim} failed at m={partial}, turns={n_turns}"
        for dim in (2, 4, 6):
            for partial in (0, 1, 2):
                for n_turns in (1, 2, 3):
                    if dimension_dichotomy(dim, partial, n_turns).allowed_free:
                        return False, f"even dimension {dim} wrongly allowed"
        rng = random.Random(20260810)
        worst = 0.0
        count = 0
        while count < 50:
            dim = rng.randint(1, 6)
            partial = rng.randint(0, 1) if dim == 1 else rng.randint(0, 4)
            n_turns = rng.randint(1, 4)
            m_index = rng.randint(1, 12)
            if m_index % (2 * n_turns) == 0:
                continue
            count += 1
            gamma = coupling_for_knot(dim, partial, n_turns, m_index)
            channel = PhysicalChannel(dim=dim, partial_wave=partial, coupling=gamma)
            worst = max(worst, abs(effective_order(channel) - m_index / (2 * n_turns)))
        ok = worst <= 1e-12
        return ok, f"dichotomy grids pass; round-trip worst {worst:.2e} (tol 1e-12)"

    return _timed("dimension-dichotomy", worker)


def criterion_plane_wave_transport() -> CriterionResult:
    """Exact solution e^{-i r} is reproduced over three turns."""

    def worker():
        spec = ContourSpec(n_turns=3, loop_radius=1.0, ray_slope=0.1, r_max=30.0,
                           n_samples=400)
        path = build_contour(spec)
        num = Numerics(rel_tol=1e-10, abs_tol=1e-12)
        r0 = path.start.to_complex()
        down = PropState(np.exp(-1j * r0), -1j * np.exp(-1j * r0), 0.0).normalized()
        up = PropState(np.exp(1j * r0), 1j * np.exp(1j * r0), 0.0).normalized()
        final_down, trace_down = propagate_with_trace(path, 0.0, 1.0, down, num)
        final_up, trace_up = propagate_with_trace(path, 0.0, 1.0, up, num)
        r_end = path.end.to_complex()
        value = final_down.true_psi
        rel_err = abs(value - np.exp(-1j * r_end)) / abs(np.exp(-1j * r_end))

        def wronskian(sa, sb):
            return (sa.u * sb.du - sa.du * sb.u) * math.exp(sa.logscale + sb.logscale)

        w0 = wronskian(trace_down[0][1], trace_up[0][1])
        drift = max(abs(wronskian(sa, sb) - w0)
                    for (_, sa), (_, sb) in zip(trace_down, trace_up)) / abs(w0)
        ok = rel_err <= 1e-9 and drift <= 1e-9
        return ok, f"endpoint rel err {rel_err:.2e}, Wronskian drift {drift:.2e} (tol 1e-9)"

    return _timed("plane-wave-transport", worker)


def criterion_unrolling() -> CriterionResult:
    """Strip map round trip, transformed-equation residual, coefficient identity."""

    def worker():
        rng = random.Random(13)
        worst_round = 0.0
        for _ in range(200):
            p = SurfacePoint(math.exp(rng.uniform(-3, 3)), rng.uniform(-20, 20))
            q = map_to_strip(p)
            back = map_from_strip(q)
            worst_round = max(worst_round,
                              abs(back.rho - p.rho) / p.rho,
                              abs(back.theta - p.theta) / max(1.0, abs(p.theta)))
        ok_round = worst_round <= 1e-14

        worst_identity = 0.0
        for _ in range(100):
            ell = rng.uniform(-0.5, 4.0)
            nu = order_from_ell(ell)
            worst_identity = max(worst_identity,
                                 abs(ell * (ell + 1.0) + 0.25 - nu * nu))
            worst_identity = max(worst_identity, abs(ell_from_order(nu) - ell))
        ok_identity = worst_identity <= 1e-12

        worst_strip = _strip_residual_on_arc(nu=0.8, kappa=1.0)
        ok_strip = worst_strip <= 1e-8
        ok = ok_round and ok_identity and ok_strip
        return ok, (f"round trip {worst_round:.1e} (tol 1e-14); identity "
                    f"{worst_identity:.1e}; strip residual {worst_strip:.2e} (tol 1e-8)")

    return _timed("strip-unrolling", worker)


def _strip_residual_on_arc(nu: float, kappa: float) -> float:
    """Transport a solution along an arc and test it against the strip equation.

    The arc lies at constant modulus, so its strip image is a horizontal line
    and a uniform angle grid gives a uniform Re x grid for the five-point
    second-difference stencil.
    """
    from scipy.integrate import solve_ivp

    from .hankel import hankel_pair

    rho0 = 1.0
    theta0, theta1 = -2.0, -0.5
    ell = ell_from_order(nu)
    z0 = kappa * rho0 * complex(math.cos(theta0), math.sin(theta0))
    h, dh = hankel_pair(HankelKind.TWO, nu, z0)
    sqrt_r = math.sqrt(rho0) * complex(math.cos(theta0 / 2), math.sin(theta0 / 2))
    r0c = rho0 * complex(math.cos(theta0), math.sin(theta0))
    psi0 = sqrt_r * h
    dpsi0 = 0.5 * sqrt_r / r0c * h + sqrt_r * kappa * dh

    span = theta1 - theta0

    def r_of(t):
        theta = theta0 + span * t
        return rho0 * complex(math.cos(theta), math.sin(theta))

    def rhs(t, y):
        r = r_of(t)
        dr = 1j * span * r
        return [dr * y[1], dr * (ell * (ell + 1.0) / (r * r) - kappa * kappa) * y[0]]

    ts = np.linspace(0.0, 1.0, 401)
    sol = solve_ivp(rhs, (0.0, 1.0), [psi0, dpsi0], method="DOP853",
                    rtol=1e-12, atol=1e-14, t_eval=ts)
    thetas = theta0 + span * ts
    points = [SurfacePoint(rho0, float(theta)) for theta in thetas]
    phi = np.array([strip_amplitude(psi, p)
                    for psi, p in zip(sol.y[0], points)])
    us = np.array([map_to_strip(p).u for p in points])
    v = map_to_strip(points[0]).v
    h_u = us[1] - us[0]
    worst = 0.0
    for i in range(2, len(us) - 2):
        phi_xx = (-phi[i - 2] + 16 * phi[i - 1] - 30 * phi[i]
                  + 16 * phi[i + 1] - phi[i + 2]) / (12 * h_u * h_u)
        x = complex(us[i], v)
        resid = strip_equation_residual(nu, kappa, x, phi[i], phi_xx)
        scale = max(abs(phi_xx), abs(phi[i]))
        worst = max(worst, abs(resid) / scale)
    return worst


def criterion_cli_determinism() -> CriterionResult:
    """Repeated CLI invocations are byte-identical (overlap check rides along)."""

    def worker():
        overlap_worst = max(check_regime_overlap(nu) for nu in (0.3, 0.7, 1.25, 2.4))
        commands = [
            ["table", "--N", "1", "--m-max", "5", "--dim", "3", "--partial", "0"],
            ["shoot", "--N", "1", "--nu", "0.3", "--energy", "1"],
            ["scan", "--N", "1", "--energy", "1", "--nu", "0.3:0.7:40"],
        ]
        for argv in commands:
            first = _run_cli(argv)
            second = _run_cli(argv)
            if first != second:
                return False, f"non-deterministic output for {' '.join(argv)}"
        return True, (f"3 commands byte-identical across reruns; "
                      f"regime overlap {overlap_worst:.2e} (tol 1e-9)")

    return _timed("cli-determinism", worker)


def _run_cli(argv: list[str]) -> bytes:
    proc = subprocess.run([sys.executable, "-m", "qknot", *argv],
                          capture_output=True, check=True)
    return proc.stdout


CRITERIA = (
    criterion_monodromy_oracle,
    criterion_quantization_scan,
    criterion_shoot_equivalence,
    criterion_homotopy_invariance,
    criterion_energy_independence,
    criterion_dimension_dichotomy,
    criterion_plane_wave_transport,
    criterion_unrolling,
    criterion_cli_determinism,
)


def run_all() -> list[CriterionResult]:
    return [criterion() for criterion in CRITERIA]
