"""Heat-trace curves over the unit interval.

The diagonal of the corrected heat kernel integrates to

    full_trace(t) = friedrichs_trace(t) + correction_trace(t),

where the correction is the trace of the double boundary-layer term:
time-convolving the kernel parts against TrQ(s), the traced diagonal
self-convolution of the boundary kernel (``tn_trace``, identically
1/2 + O(t^inf)).  The main contribution T1 is evaluated in the y-outer
(Fubini) order, which avoids the 1/((t-s) log^2(t-s)) endpoint
singularity of the s-outer order entirely; the s-outer route is kept as
an independent cross-check (``t1_s_outer``).

``exotic_term`` is the non-polyhomogeneous part of the small-t expansion:
 -int_1^inf e^{-ty} dy / (y((log y + 2 kappa)^2 + pi^2)), an expansion in
powers of 1/log t rather than t, which is what the degree-two fit in
``asymptotics`` isolates.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .kernels import BoundaryParam
from .ktheta import DEFAULT_OPTIONS, KernelOptions, k1_smooth, m_main, pole_location
from .quadrature import (
    DEFAULT_SPEC,
    QuadSpec,
    gauss_legendre_panel,
    integrate,
    integrate_log_tail,
)
from .specfun import bessel_i0_scaled

_PI = math.pi
_PI2 = math.pi * math.pi
_U_CUT = 40.0  # arctan tail beyond this in all u = log y integrals

_i0s_vec = np.vectorize(bessel_i0_scaled, otypes=[float])

# fixed 48-point Gauss-Legendre rule on [0, 1/2] for the inner TrQ sweeps
_TRQ_N, _TRQ_W = gauss_legendre_panel(48)
_TRQ_N = 0.25 * (_TRQ_N + 1.0)
_TRQ_W = 0.25 * _TRQ_W
_TRQ_G = _TRQ_N * (1.0 - _TRQ_N)

# geometric panel edges for the w = (t-s) y inner convolution variable
_W_EDGES = np.array([0.0, 1.0, 3.0, 7.0, 15.0, 31.0, 46.0])
_GLW_N, _GLW_W = gauss_legendre_panel(16)


@dataclass(frozen=True)
class TraceParts:
    friedrichs: float
    correction: float
    exotic_ref: float


@dataclass(frozen=True)
class TraceSample:
    """One point of a heat-trace curve."""

    t: float
    value: float
    est_error: float
    parts: TraceParts


def _trq_values(s):
    """TrQ on an array of times via the fixed interior rule (vectorized)."""
    s = np.atleast_1d(np.asarray(s, dtype=float))
    out = np.full(s.shape, 0.5)
    pos = s > 0.0
    if np.any(pos):
        with np.errstate(divide="ignore", under="ignore"):
            e = np.exp(-1.0 / (4.0 * s[pos, None] * _TRQ_G[None, :]))
        out[pos] = np.sum(_TRQ_W[None, :] * (1.0 - e), axis=1)
    return out


def _trq(s):
    return float(_trq_values(np.array([s]))[0])


def tn_trace(t, spec: QuadSpec = DEFAULT_SPEC):
    """(1/2t) int_0^t (1 - exp(-t/(4 s (t-s)))) ds, adaptively.

    Equals int_0^1 q_diag(x, t) dx and 1/2 + O(t^inf); always < 1/2.
    """
    if t <= 0.0 or not math.isfinite(t):
        raise DomainError(f"tn_trace: need t > 0, got {t!r}")

    def f(us):
        us = np.asarray(us)
        g = us * (1.0 - us)
        with np.errstate(divide="ignore", under="ignore"):
            e = np.where(g > 0, np.exp(-1.0 / (4.0 * t * np.maximum(g, 1e-300))), 0.0)
        return 1.0 - e

    # integrand symmetric about u = 1/2: (1/2) int_0^1 = int_0^{1/2}
    return integrate(f, 0.0, 0.5, spec).value


def friedrichs_trace(t, spec: QuadSpec = DEFAULT_SPEC):
    """int_0^1 (x/2t) I0(x^2/2t) e^{-x^2/2t} dx; ~ 1/sqrt(4 pi t) as t -> 0."""
    return _friedrichs_trace_res(t, spec)[0]


def _friedrichs_trace_res(t, spec):
    if t <= 0.0 or not math.isfinite(t):
        raise DomainError(f"friedrichs_trace: need t > 0, got {t!r}")

    def f(xs):
        xs = np.asarray(xs)
        return (xs / (2.0 * t)) * _i0s_vec(xs * xs / (2.0 * t))

    r = integrate(f, 0.0, 1.0, spec)
    return r.value, r.est_error


def _a_conv(y, t):
    """A(y, t) = int_0^t e^{-(t-s) y} TrQ(s) ds via w = (t-s) y panels."""
    w_max = min(t * y, 46.0)
    edges = _W_EDGES[_W_EDGES < w_max]
    edges = np.append(edges, w_max)
    lo = edges[:-1, None]
    hi = edges[1:, None]
    w = 0.5 * (lo * (1.0 - _GLW_N) + hi * (1.0 + _GLW_N))
    s = t - w / y
    vals = np.exp(-w) * _trq_values(s.ravel()).reshape(w.shape)
    return float(np.sum(0.5 * (hi - lo) * _GLW_W * vals)) / y


def _arctan_tail(k2):
    return (1.0 / _PI) * (0.5 * _PI - math.atan((_U_CUT + k2) / _PI))


def t1_y_outer(t, bp: BoundaryParam, spec: QuadSpec = DEFAULT_SPEC):
    """T1 in the y-outer order:
    2 int_1^inf [int_0^t e^{-(t-s)y} TrQ(s) ds] ((log y + 2k)^2+pi^2)^{-1} dy.
    """
    if t <= 0.0 or not math.isfinite(t):
        raise DomainError(f"t1_y_outer: need t > 0, got {t!r}")
    k2 = 2.0 * bp.kappa

    def f(us):
        us = np.asarray(us)
        return np.array([
            _a_conv(math.exp(u), t) * math.exp(u) / ((u + k2) ** 2 + _PI2)
            for u in us])

    r = integrate(f, 0.0, _U_CUT, spec)
    return 2.0 * r.value + 2.0 * _trq(t) * _arctan_tail(k2)


def t1_s_outer(t, bp: BoundaryParam, spec: QuadSpec = DEFAULT_SPEC, eps=1e-6):
    """T1 in the s-outer order (independent cross-check of t1_y_outer).

    int_0^t M(tau) TrQ(t - tau) dtau in v = log tau, truncated at
    tau = eps*t; the cut [0, eps*t] contributes TrQ(t) * C(eps t) with
    C(a) = int_0^a M = 2 * t1_reference(a), added analytically.
    """
    if t <= 0.0 or not math.isfinite(t):
        raise DomainError(f"t1_s_outer: need t > 0, got {t!r}")

    def f(vs):
        vs = np.asarray(vs)
        taus = np.exp(vs)
        trqs = _trq_values(t - taus)
        return np.array([
            m_main(float(tau), bp, spec) * float(q) * float(tau)
            for tau, q in zip(taus, trqs)])

    r = integrate(f, math.log(eps * t), math.log(t), spec)
    return r.value + _trq(t) * 2.0 * t1_reference(eps * t, bp, spec)


def t1_reference(t, bp: BoundaryParam, spec: QuadSpec = DEFAULT_SPEC):
    """int_1^inf (1 - e^{-ty}) dy / (y ((log y + 2 kappa)^2 + pi^2)).

    The closed-form leading part of T1; T1 - t1_reference = O(t^inf).
    Positive and increasing in t.
    """
    if t <= 0.0 or not math.isfinite(t):
        raise DomainError(f"t1_reference: need t > 0, got {t!r}")
    k2 = 2.0 * bp.kappa

    def f(us):
        us = np.asarray(us)
        return -np.expm1(-t * np.exp(us)) / ((us + k2) ** 2 + _PI2)

    r = integrate(f, 0.0, _U_CUT, spec)
    return r.value + _arctan_tail(k2)


def exotic_term(t, bp: BoundaryParam, spec: QuadSpec = DEFAULT_SPEC):
    """-int_1^inf e^{-ty} dy / (y ((log y + 2 kappa)^2 + pi^2)).

    Negative, increasing toward 0 in t; tends to
    -(1/pi)(pi/2 - arctan(2 kappa / pi)) as t -> 0, approaching it only at
    1/log(1/t) speed.
    """
    if t <= 0.0 or not math.isfinite(t):
        raise DomainError(f"exotic_term: need t > 0, got {t!r}")
    k2 = 2.0 * bp.kappa
    u_max = math.log(max(46.0 / t, 1e-300))
    u_max = max(math.log(max((46.0 + max(u_max, 0.0)) / t, 1e-300)), 0.01)

    def f(us):
        us = np.asarray(us)
        return np.exp(-t * np.exp(us)) / ((us + k2) ** 2 + _PI2)

    r = integrate(f, 0.0, u_max, spec)
    return -r.value


def exotic_limit(bp: BoundaryParam):
    """Exact t -> 0 limit of exotic_term: -(1/pi)(pi/2 - arctan(2k/pi))."""
    k2 = 2.0 * bp.kappa
    return -(1.0 / _PI) * (0.5 * _PI - math.atan(k2 / _PI))


def t2_part(t, bp: BoundaryParam, opts: KernelOptions = DEFAULT_OPTIONS,
            spec: QuadSpec = DEFAULT_SPEC):
    """T2 = int_0^t K1(t-s) TrQ(s) ds (smooth kernel part convolution)."""
    if t <= 0.0 or not math.isfinite(t):
        raise DomainError(f"t2_part: need t > 0, got {t!r}")
    bp.kappa  # reject Friedrichs early

    def f(ss):
        ss = np.asarray(ss)
        trqs = _trq_values(ss)
        return np.array([
            k1_smooth(t - float(s), bp, opts) * float(q)
            for s, q in zip(ss, trqs)])

    return integrate(f, 0.0, t, spec).value


def residue_trace_part(t, bp: BoundaryParam, spec: QuadSpec = DEFAULT_SPEC):
    """int_0^t 2 zeta0 e^{(t-s) zeta0} TrQ(s) ds; ~ zeta0 t as t -> 0."""
    if t <= 0.0 or not math.isfinite(t):
        raise DomainError(f"residue_trace_part: need t > 0, got {t!r}")
    z0 = pole_location(bp)
    if z0 * t > 700.0:
        return math.inf

    def f(ss):
        ss = np.asarray(ss)
        return 2.0 * z0 * np.exp((t - ss) * z0) * _trq_values(ss)

    return integrate(f, 0.0, t, spec).value


def correction_trace(t, bp: BoundaryParam, opts: KernelOptions = DEFAULT_OPTIONS,
                     spec: QuadSpec = DEFAULT_SPEC):
    """Trace of the boundary correction kernel: T1 + T2 (+ residue trace)."""
    if bp.is_friedrichs:
        raise DomainError("correction_trace: no correction for the Friedrichs extension")
    total = t1_y_outer(t, bp, spec) + t2_part(t, bp, opts, spec)
    if opts.include_residue:
        total += residue_trace_part(t, bp, spec)
    return total


def full_trace(t, bp: BoundaryParam, opts: KernelOptions = DEFAULT_OPTIONS,
               spec: QuadSpec = DEFAULT_SPEC):
    """Assembled trace sample; the Friedrichs branch has zero correction."""
    fr, fr_err = _friedrichs_trace_res(t, spec)
    if bp.is_friedrichs:
        parts = TraceParts(fr, 0.0, 0.0)
        return TraceSample(t, parts.friedrichs + parts.correction, fr_err, parts)
    corr = correction_trace(t, bp, opts, spec)
    parts = TraceParts(fr, corr, exotic_term(t, bp, spec))
    est = fr_err + max(spec.abs_tol, spec.rel_tol * abs(corr)) * 4.0
    return TraceSample(t, parts.friedrichs + parts.correction, est, parts)


def trace_curve(bp: BoundaryParam, ts, opts: KernelOptions = DEFAULT_OPTIONS,
                spec: QuadSpec = DEFAULT_SPEC, workers: int | None = None):
    """full_trace over a time grid, evaluated concurrently.

    Output order follows the input grid regardless of worker count; each
    point is pure, so the result is deterministic.
    """
    ts = [float(t) for t in ts]
    if workers is None or workers <= 1:
        return [full_trace(t, bp, opts, spec) for t in ts]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        futures = [pool.submit(full_trace, t, bp, opts, spec) for t in ts]
        return [f.result() for f in futures]
