"""Bessel and Hankel functions of real order on every sheet of the surface.

Principal-sheet kernels
-----------------------
Two evaluation regimes cover the principal sheet |arg z| < pi:

* a power series for J_nu (accumulated in 80-bit extended precision, which
  pushes the roundoff floor of the J_{+nu}/J_{-nu} Hankel combination far
  below double precision), used for |z| below ``Z_SWITCH``;
* the truncated large-argument expansion of H^(1,2), used beyond it.

Both regimes are wrapped in a reflection dispatch: for |arg z| > pi/2 the
evaluation is moved to w = z * e^{-+i pi} through the exact half-turn
connection formulas, so every primitive evaluation happens in the wedge
|arg w| <= pi/2 where a single exponential dominates and the truncated
expansion carries no switched-on subdominant component.

Known accuracy boundary: for |z| in the series regime with |Im z| >~ 12 the
subdominant kind loses digits to cancellation (relative error grows like
e^{2|Im z|} * 1e-18).  Nothing in this package evaluates there; direct callers
should prefer |z| <= 8 at strongly complex phases.

Sheets
------
Evaluation off the principal sheet goes through the half-turn transfer
matrix in the (H^(2), H^(1)) basis, whose first row is ``monodromy_coeffs``.
``continuation_oracle`` provides the independent check: it transports the
function numerically around the origin by integrating Bessel's differential
equation along a circle with an extended-precision embedded Runge-Kutta pair,
never consulting the connection formulas.
"""

from __future__ import annotations

import functools
import math

import mpmath
import numpy as np

from .riemann import HankelKind, SurfacePoint

__all__ = [
    "Z_SWITCH",
    "NEAR_INTEGER_TOL",
    "SeriesConvergenceError",
    "AsymptoticAccuracyError",
    "OverlapDisagreementError",
    "bessel_j",
    "hankel_principal",
    "hankel_pair",
    "hankel_asymptotic",
    "monodromy_coeffs",
    "h1_circuit_coeffs",
    "transfer_matrix",
    "hankel_on_surface",
    "hankel_on_surface_pair",
    "continuation_oracle",
    "order_from_ell",
    "ell_from_order",
    "check_regime_overlap",
]

# Regime switch radius.  Chosen so the 20-term asymptotic tail satisfies its
# 1e-12 last-term bound at the switch while the series still has headroom;
# validated by check_regime_overlap rather than set by hand.
Z_SWITCH = 14.0
ASYM_TERMS = 20
ASYM_LAST_TERM_RTOL = 1e-12
SERIES_TAIL_RTOL = 5e-19
SERIES_MAX_TERMS = 300

# Orders closer than this to an integer are evaluated by the integer limit
# forms.  Kept equal to the quantization tolerance used downstream so the
# integer/non-integer dichotomy is decided consistently everywhere.
NEAR_INTEGER_TOL = 1e-6

_LD = np.clongdouble
_RD = np.longdouble
_PI = _RD("3.14159265358979323846264338327950288420")
_EULER_GAMMA = _RD("0.57721566490153286060651209008240243104")


class SeriesConvergenceError(ArithmeticError):
    """Power-series tail bound not met within the allowed number of terms."""

    def __init__(self, message: str, achieved: float):
        super().__init__(message)
        self.achieved = achieved


class AsymptoticAccuracyError(ArithmeticError):
    """|z| too small for the requested truncated-expansion accuracy."""

    def __init__(self, message: str, achieved: float):
        super().__init__(message)
        self.achieved = achieved


class OverlapDisagreementError(ArithmeticError):
    """Series and asymptotic regimes disagree beyond tolerance."""


def order_from_ell(ell: float) -> float:
    """Bessel order for angular momentum ell; the single source of nu = ell + 1/2."""
    return ell + 0.5


def ell_from_order(nu: float) -> float:
    """Inverse of order_from_ell."""
    return nu - 0.5


def near_integer(nu: float, tol: float = NEAR_INTEGER_TOL) -> bool:
    return abs(nu - round(nu)) < tol


@functools.lru_cache(maxsize=512)
def _rgamma_ld(x: float) -> np.longdouble:
    """1/Gamma(x) in extended precision (cached; zero at non-positive integers)."""
    with mpmath.workdps(30):
        return np.longdouble(mpmath.nstr(mpmath.rgamma(x), 25))


def _to_ld(z: complex) -> np.clongdouble:
    z = complex(z)
    return _LD(z.real) + 1j * _LD(z.imag)


def _clog_ld(z):
    # numpy's complex log on clongdouble is only double-accurate; build it
    # from the real extended-precision kernels instead
    re, im = np.real(z), np.imag(z)
    return np.log(np.hypot(re, im)) + 1j * np.arctan2(im, re)


def _cexp_ld(z):
    re, im = np.real(z), np.imag(z)
    m = np.exp(re)
    return m * np.cos(im) + 1j * (m * np.sin(im))


def _bessel_j_pair_ld(nu: float, z: complex, max_terms: int = SERIES_MAX_TERMS,
                      tail_rtol: float = SERIES_TAIL_RTOL):
    """(J_nu(z), dJ_nu/dz) by the ascending series, clongdouble throughout."""
    zl = _to_ld(z)
    half = zl / 2
    q = half * half
    nu_ld = _LD(nu)
    t = _cexp_ld(nu_ld * _clog_ld(half)) * _rgamma_ld(float(nu) + 1.0)
    s = t
    sd = t * nu_ld
    converged = False
    achieved = math.inf
    for j in range(1, max_terms):
        t = t * (-q) / (_LD(j) * (nu_ld + _LD(j)))
        s = s + t
        sd = sd + t * (nu_ld + _LD(2 * j))
        at = abs(complex(t))
        asum = abs(complex(s))
        if asum > 0.0:
            achieved = at / asum
        if achieved <= tail_rtol:
            # once the term ratio is geometric the remaining tail is bounded
            # by the current term; safe to stop
            if abs(complex(q)) / ((j + 1) * abs(nu + j + 1)) < 0.5:
                converged = True
                break
    if not converged:
        raise SeriesConvergenceError(
            f"J series for nu={nu}, |z|={abs(z):.3g} reached tail bound "
            f"{achieved:.3e} (> {tail_rtol:.1e}) after {max_terms} terms",
            achieved)
    return s, sd / zl


def _bessel_y_int_pair_ld(n: int, z: complex, max_terms: int = SERIES_MAX_TERMS):
    """(Y_n(z), dY_n/dz) for integer n >= 0 by the logarithmic series."""
    zl = _to_ld(z)
    half = zl / 2
    q = half * half
    jn, djn = _bessel_j_pair_ld(float(n), z, max_terms)
    lg = _clog_ld(half)
    fin = _LD(0) + 0j
    dfin = _LD(0) + 0j
    if n > 0:
        inv_pow = _cexp_ld(-_LD(n) * lg)
        for k in range(n):
            num = _RD(1)
            for i in range(2, n - k):
                num = num * i
            den = _RD(1)
            for i in range(2, k + 1):
                den = den * i
            term = (num / den) * inv_pow * _cexp_ld(_LD(2 * k) * lg)
            fin = fin + term
            dfin = dfin + term * _LD(2 * k - n)
    h_k = _RD(0)
    h_nk = _RD(0)
    for i in range(1, n + 1):
        h_nk = h_nk + _RD(1) / i
    t = _cexp_ld(_LD(n) * lg) * _rgamma_ld(float(n) + 1.0)
    w = t * (h_k + h_nk - 2 * _EULER_GAMMA)
    ser = w
    dser = w * _LD(n)
    for k in range(1, max_terms):
        t = t * (-q) / (_LD(k) * _LD(n + k))
        h_k = h_k + _RD(1) / k
        h_nk = h_nk + _RD(1) / (n + k)
        w = t * (h_k + h_nk - 2 * _EULER_GAMMA)
        ser = ser + w
        dser = dser + w * _LD(2 * k + n)
        if abs(complex(t)) <= 1e-18 * max(abs(complex(ser)), 1e-290) and k > abs(complex(half)):
            break
    ipi = _RD(1) / _PI
    y = 2 * ipi * lg * jn - ipi * fin - ipi * ser
    dy = 2 * ipi * (lg * djn + jn / zl) - ipi * dfin / zl - ipi * dser / zl
    return y, dy


def bessel_j(nu: float, z: complex, terms: int = SERIES_MAX_TERMS) -> complex:
    """J_nu(z) on the principal sheet by the ascending power series.

    Valid for |arg z| < pi and any real order (negative orders included;
    the reciprocal-gamma coefficients vanish where the series demands it).
    Raises SeriesConvergenceError when the relative tail bound cannot be
    brought below 1e-12 within ``terms`` terms.
    """
    j, _ = _bessel_j_pair_ld(nu, z, max_terms=terms, tail_rtol=1e-12)
    return complex(j)


def _hankel_series_pair(kind: HankelKind, nu: float, z: complex):
    """Series-regime (H, dH/dz); integer orders via the Y_n limit form."""
    if near_integer(nu):
        n = round(nu)
        jn, djn = _bessel_j_pair_ld(float(n), z)
        yn, dyn = _bessel_y_int_pair_ld(int(n), z)
        if kind is HankelKind.ONE:
            return complex(jn + 1j * yn), complex(djn + 1j * dyn)
        return complex(jn - 1j * yn), complex(djn - 1j * dyn)
    jp, djp = _bessel_j_pair_ld(nu, z)
    jm, djm = _bessel_j_pair_ld(-nu, z)
    s = np.sin(_LD(nu) * _PI)
    sign = -1j if kind is HankelKind.ONE else 1j
    e = _cexp_ld(sign * _PI * _LD(nu))
    den = (1j * s) if kind is HankelKind.ONE else (-1j * s)
    return complex((jm - e * jp) / den), complex((djm - e * djp) / den)


def _asym_sum(kind: HankelKind, nu: float, z: complex, n_terms: int):
    """Truncated correction series and phase factor of the large-z expansion."""
    zc = complex(z)
    sgn = 1.0 if kind is HankelKind.ONE else -1.0
    mu = 4.0 * nu * nu
    term = 1.0 + 0j
    total = term
    last_rel = 0.0
    for k in range(1, n_terms):
        term = term * (mu - (2 * k - 1) ** 2) * (sgn * 1j) / (8.0 * k * zc)
        total += term
        last_rel = abs(term) / max(abs(total), 1e-300)
        if term == 0:
            last_rel = 0.0
            break
    prefactor = np.sqrt(2.0 / (np.pi * zc)) * np.exp(
        sgn * 1j * (zc - np.pi * (2.0 * nu + 1.0) / 4.0))
    return prefactor * total, last_rel


def hankel_asymptotic(kind: HankelKind, nu: float, z: complex,
                      n_terms: int = ASYM_TERMS) -> complex:
    """H^(kind)_nu(z) from the truncated large-argument expansion.

    sqrt(pi z / 2) H^(1)_nu = e^{ i(z - pi(2 nu + 1)/4)} (1 - (nu^2 - 1/4)/(2 i z) + ...)
    sqrt(pi z / 2) H^(2)_nu = e^{-i(z - pi(2 nu + 1)/4)} (1 + (nu^2 - 1/4)/(2 i z) + ...)

    Requires |arg z| < pi and |z| large enough that the last retained term is
    below ASYM_LAST_TERM_RTOL of the sum; raises AsymptoticAccuracyError
    otherwise.  Near |arg z| = pi the truncation additionally misses a
    switched subdominant exponential; use hankel_principal, whose reflection
    dispatch avoids that region.
    """
    value, last_rel = _asym_sum(kind, nu, z, n_terms)
    if last_rel > ASYM_LAST_TERM_RTOL:
        raise AsymptoticAccuracyError(
            f"asymptotic last term {last_rel:.3e} above "
            f"{ASYM_LAST_TERM_RTOL:.1e} at |z|={abs(z):.3g} "
            f"(nu={nu}, {n_terms} terms); increase |z|",
            last_rel)
    return complex(value)


def _hankel_asym_pair(kind: HankelKind, nu: float, z: complex,
                      n_terms: int = ASYM_TERMS):
    """(H, dH/dz) in the asymptotic regime; derivative via the order recurrence

    dH_nu/dz = (nu/z) H_nu - H_{nu+1}, which keeps all expansions at orders
    whose last-term bound we can check.
    """
    h, last0 = _asym_sum(kind, nu, z, n_terms)
    hp1, last1 = _asym_sum(kind, nu + 1.0, z, n_terms)
    worst = max(last0, last1)
    if worst > ASYM_LAST_TERM_RTOL:
        raise AsymptoticAccuracyError(
            f"asymptotic last term {worst:.3e} above "
            f"{ASYM_LAST_TERM_RTOL:.1e} at |z|={abs(z):.3g} (nu={nu})",
            worst)
    dh = (nu / complex(z)) * h - hp1
    return complex(h), complex(dh)


def _sin_ratio(nu: float, mult: int) -> float:
    """sin(mult*pi*nu)/sin(pi*nu), with the continuous limit at integer nu."""
    if near_integer(nu):
        n = round(nu)
        return mult * math.cos(mult * math.pi * n) / math.cos(math.pi * n)
    return math.sin(mult * math.pi * nu) / math.sin(math.pi * nu)


def monodromy_coeffs(nu: float, m: int) -> tuple[complex, complex]:
    """Half-turn connection coefficients (a, b) of the decaying kind.

    Continuing around the origin through m half-turns,

        H^(2)_nu(z e^{i m pi}) = a H^(2)_nu(z) + b H^(1)_nu(z),
        a = sin((1+m) pi nu)/sin(pi nu),   b = e^{i pi nu} sin(m pi nu)/sin(pi nu).

    Near-integer orders return the continuous (L'Hopital) limits evaluated at
    n = round(nu), so the map is total.  Valid for any integer m, negative
    included.
    """
    if near_integer(nu):
        n = round(nu)
        cp = math.cos(math.pi * n)
        a = complex((1 + m) * math.cos((1 + m) * math.pi * n) / cp)
        b = complex(math.cos(math.pi * n) + 1j * math.sin(math.pi * n)) * (
            m * math.cos(m * math.pi * n) / cp)
        return a, b
    a = complex(_sin_ratio(nu, 1 + m))
    b = complex(math.cos(math.pi * nu) + 1j * math.sin(math.pi * nu)) * _sin_ratio(nu, m)
    return a, b


def h1_circuit_coeffs(nu: float, m: int) -> tuple[complex, complex]:
    """Companion circuit relation for the growing kind:

        H^(1)_nu(z e^{i m pi}) = c H^(2)_nu(z) + d H^(1)_nu(z),
        c = -e^{-i pi nu} sin(m pi nu)/sin(pi nu),
        d = -sin((m-1) pi nu)/sin(pi nu).

    Follows from monodromy_coeffs combined with the single half-turn
    reflection H^(1)_nu(z e^{i pi}) = -e^{-i pi nu} H^(2)_nu(z).
    """
    phase = complex(math.cos(math.pi * (nu if not near_integer(nu) else round(nu))),
                    -math.sin(math.pi * (nu if not near_integer(nu) else round(nu))))
    c = -phase * _sin_ratio(nu, m)
    d = -_sin_ratio(nu, m - 1)
    return c, complex(d)


def transfer_matrix(nu: float, m: int) -> np.ndarray:
    """2x2 continuation matrix for m half-turns in the (H^(2), H^(1)) basis."""
    a, b = monodromy_coeffs(nu, m)
    c, d = h1_circuit_coeffs(nu, m)
    return np.array([[a, b], [c, d]], dtype=complex)


def hankel_pair(kind: HankelKind, nu: float, z: complex,
                n_terms: int = ASYM_TERMS) -> tuple[complex, complex]:
    """(H^(kind)_nu(z), dH/dz) on the principal sheet, |arg z| < pi.

    Dispatches between the series and asymptotic regimes at |z| = Z_SWITCH,
    reflecting through the exact half-turn connection whenever |arg z| > pi/2
    so that primitive evaluations stay in the single-exponential wedge.
    Falls back to the (always convergent) series if the truncated expansion
    cannot meet its accuracy bound at this |z| and order.
    """
    zc = complex(z)
    if zc == 0:
        raise ValueError("Hankel functions are singular at z = 0")
    ph = math.atan2(zc.imag, zc.real)

    def zone_pair(kd: HankelKind, w: complex) -> tuple[complex, complex]:
        if abs(w) >= Z_SWITCH:
            try:
                return _hankel_asym_pair(kd, nu, w, n_terms)
            except AsymptoticAccuracyError:
                pass
        return _hankel_series_pair(kd, nu, w)

    if abs(ph) <= math.pi / 2:
        return zone_pair(kind, zc)
    m = 1 if ph > 0 else -1
    rot = (-1.0) ** m  # e^{-i m pi}, exact
    w = zc * rot
    h2w, dh2w = zone_pair(HankelKind.TWO, w)
    h1w, dh1w = zone_pair(HankelKind.ONE, w)
    if kind is HankelKind.TWO:
        a, b = monodromy_coeffs(nu, m)
    else:
        a, b = h1_circuit_coeffs(nu, m)
    value = a * h2w + b * h1w
    derivative = (a * dh2w + b * dh1w) * rot
    return value, derivative


def hankel_principal(kind: HankelKind, nu: float, z: complex) -> complex:
    """H^(kind)_nu(z) on the principal sheet |arg z| < pi."""
    value, _ = hankel_pair(kind, nu, z)
    return value


def _sheet_decomposition(theta: float) -> tuple[int, float]:
    """Split theta = theta0 + m*pi with theta0 in (-pi, 0] and integer m."""
    m = math.ceil(theta / math.pi)
    theta0 = theta - m * math.pi
    # guard the representable boundary: theta0 is in (-pi, 0] up to rounding
    if theta0 > 0.0:
        theta0 = 0.0
    if theta0 <= -math.pi:
        theta0 += math.pi
        m -= 1
    return m, theta0


def hankel_on_surface_pair(kind: HankelKind, nu: float, p: SurfacePoint,
                           n_terms: int = ASYM_TERMS) -> tuple[complex, complex]:
    """(H, dH/dz) of the analytic continuation of H^(kind)_nu at surface point p.

    The unwrapped phase is decomposed as theta = theta0 + m*pi with theta0 in
    (-pi, 0]; the function is evaluated on the principal sheet at the
    projected argument and carried to sheet m by the half-turn transfer
    matrix.  The derivative is with respect to z moving on the surface.
    """
    m, theta0 = _sheet_decomposition(p.theta)
    z0 = complex(p.rho * math.cos(theta0), p.rho * math.sin(theta0))
    if m == 0:
        return hankel_pair(kind, nu, z0, n_terms)
    h2, dh2 = hankel_pair(HankelKind.TWO, nu, z0, n_terms)
    h1, dh1 = hankel_pair(HankelKind.ONE, nu, z0, n_terms)
    if kind is HankelKind.TWO:
        a, b = monodromy_coeffs(nu, m)
    else:
        a, b = h1_circuit_coeffs(nu, m)
    rot = (-1.0) ** m  # dz0/dz = e^{-i m pi}, exact
    return a * h2 + b * h1, (a * dh2 + b * dh1) * rot


def hankel_on_surface(kind: HankelKind, nu: float, p: SurfacePoint) -> complex:
    value, _ = hankel_on_surface_pair(kind, nu, p)
    return value


# ---------------------------------------------------------------------------
# Independent continuation oracle: extended-precision circle transport
# ---------------------------------------------------------------------------

# Dormand-Prince 5(4) tableau in exact longdouble rationals
_DP_C = (_RD(0), _RD(1) / 5, _RD(3) / 10, _RD(4) / 5, _RD(8) / 9, _RD(1), _RD(1))
_DP_A = (
    (),
    (_RD(1) / 5,),
    (_RD(3) / 40, _RD(9) / 40),
    (_RD(44) / 45, _RD(-56) / 15, _RD(32) / 9),
    (_RD(19372) / 6561, _RD(-25360) / 2187, _RD(64448) / 6561, _RD(-212) / 729),
    (_RD(9017) / 3168, _RD(-355) / 33, _RD(46732) / 5247, _RD(49) / 176,
     _RD(-5103) / 18656),
    (_RD(35) / 384, _RD(0), _RD(500) / 1113, _RD(125) / 192,
     _RD(-2187) / 6784, _RD(11) / 84),
)
_DP_B5 = _DP_A[6]
_DP_B4 = (_RD(5179) / 57600, _RD(0), _RD(7571) / 16695, _RD(393) / 640,
          _RD(-92097) / 339200, _RD(187) / 2100, _RD(1) / 40)


class OracleIntegrationError(RuntimeError):
    """The oracle's step control failed to meet its tolerances."""


def _rk45_ld(f, t0: float, t1: float, y0, rtol: float, atol: float,
             max_steps: int = 200_000):
    """Adaptive Dormand-Prince 5(4) on a clongdouble state vector.

    The tiny absolute tolerance matters: errors injected where the solution
    magnitude dips are amplified exponentially during the subsequent regrowth
    around the circle, so the dip must be resolved far below the target
    accuracy of the final value.  Extended precision keeps that affordable.
    """
    t = _RD(t0)
    t_end = _RD(t1)
    y = np.array(y0, dtype=_LD)
    direction = 1.0 if t1 >= t0 else -1.0
    h = _RD(direction) * _RD(min(0.1, abs(t1 - t0) or 1.0))
    rtol_ld = _RD(rtol)
    atol_ld = _RD(atol)
    nfev = 0
    k1 = np.array(f(t, y), dtype=_LD)
    nfev += 1
    steps = 0
    while (t_end - t) * direction > 0:
        steps += 1
        if steps > max_steps:
            raise OracleIntegrationError(
                f"oracle exceeded {max_steps} steps at t={float(t):.6g}")
        if (t + h - t_end) * direction > 0:
            h = t_end - t
        ks = [k1]
        for i in range(1, 7):
            yi = y.copy()
            for j, aij in enumerate(_DP_A[i]):
                yi = yi + (h * aij) * ks[j]
            ks.append(np.array(f(t + _DP_C[i] * h, yi), dtype=_LD))
            nfev += 1
        y5 = y.copy()
        for j in range(6):
            y5 = y5 + (h * _DP_B5[j]) * ks[j]
        y4 = y.copy()
        for j in range(7):
            y4 = y4 + (h * _DP_B4[j]) * ks[j]
        scale = atol_ld + rtol_ld * np.maximum(np.abs(y), np.abs(y5))
        err = float(np.max(np.abs(y5 - y4) / scale))
        if err <= 1.0:
            t = t + h
            y = y5
            k1 = ks[6]  # first-same-as-last
        factor = 5.0 if err == 0.0 else min(5.0, max(0.2, 0.9 * err ** -0.2))
        h = h * _RD(factor)
    return y, nfev


def continuation_oracle(nu: float, z0: complex, dtheta: float,
                        kind: HankelKind = HankelKind.TWO,
                        rtol: float = 3e-12, atol: float = 1e-19,
                        ) -> tuple[complex, complex]:
    """Continue H^(kind)_nu numerically along the circle |z| = |z0|.

    Integrates w'' + w'/z + (1 - nu^2/z^2) w = 0 in the circle angle from
    arg z0 through dtheta, seeded with the principal-sheet value and
    derivative at z0.  Returns the continued (value, dw/dz).  This transport
    never uses the connection formulas, so it is an independent check of
    monodromy_coeffs and hankel_on_surface.
    """
    h, dh = hankel_pair(kind, nu, complex(z0))
    scale = max(abs(h), abs(dh))
    rho = _RD(abs(complex(z0)))
    phi0 = math.atan2(complex(z0).imag, complex(z0).real)
    nusq = _LD(nu) * _LD(nu)

    def f(phi, y):
        z = rho * (np.cos(phi) + 1j * np.sin(phi))
        w, dw = y[0], y[1]
        return (1j * z * dw, -1j * dw - 1j * z * (1 - nusq / (z * z)) * w)

    y0 = (_to_ld(h / scale), _to_ld(dh / scale))
    if dtheta == 0.0:
        return h, dh
    y, _ = _rk45_ld(f, phi0, phi0 + dtheta, y0, rtol, atol)
    return complex(y[0]) * scale, complex(y[1]) * scale


def check_regime_overlap(nu: float, tol: float = 1e-9,
                         n_radii: int = 5, n_phases: int = 9) -> float:
    """Largest relative deviation between the two regimes on the switch annulus.

    Samples |z| in [0.8, 1.2] * Z_SWITCH at phases where both regimes apply:
    the truncated expansion must meet its last-term bound and the series
    combination must be clear of its deep-|Im z| cancellation zone.  Raises
    OverlapDisagreementError if the deviation exceeds ``tol``.
    """
    worst = 0.0
    compared = 0
    for radius in np.linspace(0.8 * Z_SWITCH, 1.2 * Z_SWITCH, n_radii):
        for phase in np.linspace(-math.pi / 2, math.pi / 2, n_phases):
            z = radius * complex(math.cos(phase), math.sin(phase))
            if abs(z.imag) > 6.0:
                continue
            for kind in (HankelKind.ONE, HankelKind.TWO):
                try:
                    asym = hankel_asymptotic(kind, nu, z)
                except AsymptoticAccuracyError:
                    continue
                series, _ = _hankel_series_pair(kind, nu, z)
                worst = max(worst, abs(series - asym) / abs(asym))
                compared += 1
    if compared == 0:
        raise OverlapDisagreementError(
            f"no comparable overlap points for nu={nu}")
    if worst > tol:
        raise OverlapDisagreementError(
            f"regimes disagree by {worst:.3e} (> {tol:.1e}) for nu={nu}")
    return worst
