"""Half-line heat kernel building blocks.

The operator is -d^2/dx^2 - 1/(4x^2) on (0, inf).  Functions in the
maximal domain behave like c_plus sqrt(x) + c_minus sqrt(x) log(x) near 0,
and the self-adjoint realizations are cut out by

    cos(theta) c_plus + sin(theta) c_minus = 0,   theta in [0, pi),

with theta = pi/2 the Friedrichs extension (c_minus = 0).  This module
provides the Friedrichs heat kernel, its boundary limit, the diagonal
self-convolution, the driven ("signaling") solution with prescribed
c_minus data, and a numerical extractor for (c_plus, c_minus).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, FitError
from .quadrature import DEFAULT_SPEC, QuadSpec, integrate
from .specfun import EULER_GAMMA, LN2, bessel_i0_scaled

_HALF_PI = 0.5 * math.pi


@dataclass(frozen=True)
class BoundaryParam:
    """Boundary angle theta and the derived constant kappa.

    kappa = gamma - log 2 + tan(theta) controls every non-Friedrichs
    quantity in the package; it is undefined for the Friedrichs extension
    and accessing it there raises DomainError.
    """

    theta: float

    def __post_init__(self):
        th = float(self.theta)
        if not (0.0 <= th < math.pi) or not math.isfinite(th):
            raise DomainError(f"theta must lie in [0, pi), got {self.theta!r}")
        object.__setattr__(self, "theta", th)

    @classmethod
    def friedrichs(cls):
        return cls(_HALF_PI)

    @property
    def is_friedrichs(self):
        return self.theta == _HALF_PI

    @property
    def kappa(self):
        if self.is_friedrichs:
            raise DomainError("kappa is undefined for the Friedrichs extension")
        return EULER_GAMMA - LN2 + math.tan(self.theta)


@dataclass(frozen=True)
class BoundaryCoeffs:
    """Extracted boundary coefficients of a maximal-domain function."""

    c_plus: float
    c_minus: float
    fit_residual: float

    def boundary_value(self, bp: BoundaryParam) -> float:
        """cos(theta) c_plus + sin(theta) c_minus."""
        return math.cos(bp.theta) * self.c_plus + math.sin(bp.theta) * self.c_minus


def friedrichs_kernel(x, x2, t):
    """Heat kernel of the Friedrichs extension.

    E(x, x2, t) = sqrt(x x2)/(2t) I0(x x2 / 2t) exp(-(x^2+x2^2)/(4t)),
    evaluated through the scaled Bessel function as
    sqrt(x x2)/(2t) i0_scaled(x x2/2t) exp(-(x-x2)^2/(4t)), which never
    overflows and keeps full relative accuracy for x^2/t up to ~1e6.
    """
    if t <= 0.0 or not math.isfinite(t):
        raise DomainError(f"friedrichs_kernel: need t > 0, got {t!r}")
    if x < 0.0 or x2 < 0.0:
        raise DomainError("friedrichs_kernel: need x, x2 >= 0")
    if x == 0.0 or x2 == 0.0:
        return 0.0
    z = x * x2 / (2.0 * t)
    return (math.sqrt(x * x2) / (2.0 * t)) * bessel_i0_scaled(z) * math.exp(
        -((x - x2) ** 2) / (4.0 * t))


def nprime(x, t):
    """Boundary limit sqrt(x)/(2t) exp(-x^2/4t) of the Friedrichs kernel.

    Equals lim_{x2 -> 0} x2^{-1/2} friedrichs_kernel(x, x2, t).
    """
    if t <= 0.0 or not math.isfinite(t):
        raise DomainError(f"nprime: need t > 0, got {t!r}")
    if x < 0.0:
        raise DomainError("nprime: need x >= 0")
    if x == 0.0:
        return 0.0
    return (math.sqrt(x) / (2.0 * t)) * math.exp(-x * x / (4.0 * t))


def q_diag(x, t, spec: QuadSpec = DEFAULT_SPEC):
    """Diagonal time self-convolution of the boundary kernel.

    Q(x, t) = int_0^t nprime(x, t-s) nprime(x, s) ds, reduced by s = t u to
    (x/4t) int_0^1 exp(-(x^2/4t)/(u(1-u))) du/(u(1-u)).  The endpoint
    singularities of 1/(u(1-u)) are killed by the exponential for x > 0.
    """
    if t <= 0.0 or not math.isfinite(t):
        raise DomainError(f"q_diag: need t > 0, got {t!r}")
    if x < 0.0:
        raise DomainError("q_diag: need x >= 0")
    if x == 0.0:
        return 0.0
    a = x * x / (4.0 * t)

    def f(us):
        us = np.asarray(us)
        w = us * (1.0 - us)
        with np.errstate(divide="ignore", over="ignore", under="ignore"):
            out = np.where(w > 0.0, np.exp(-a / np.maximum(w, 1e-300)) / np.maximum(w, 1e-300), 0.0)
        return out

    # integrand symmetric about u = 1/2
    res = integrate(f, 0.0, 0.5, spec)
    return (x / (4.0 * t)) * 2.0 * res.value


def signaling(h, x, t, spec: QuadSpec = DEFAULT_SPEC):
    """Driven solution F(h)(x, t) = -int_0^t h(t-s) nprime(x, s) ds.

    Solves the heat equation with zero initial data and boundary data
    c_minus(F(h)(., t)) = h(t).  ``h`` may consume numpy arrays or plain
    scalars.  Integrated in v = log s; below s = x^2/184 the Gaussian
    factor underflows and the integrand is dropped.
    """
    if t <= 0.0 or not math.isfinite(t):
        raise DomainError(f"signaling: need t > 0, got {t!r}")
    if x <= 0.0:
        raise DomainError("signaling: need x > 0")
    s_min = x * x / 184.0
    if s_min >= t:
        return 0.0  # exp(-x^2/4s) < 1e-20 throughout [0, t]
    sq = math.sqrt(x)

    def h_vec(ss):
        try:
            out = np.asarray(h(ss), dtype=float)
            if out.shape == ss.shape:
                return out
        except (TypeError, ValueError):
            pass
        return np.array([float(h(float(s))) for s in ss])

    def f(vs):
        vs = np.asarray(vs)
        ss = np.exp(vs)
        return h_vec(t - ss) * (0.5 * sq) * np.exp(-x * x / (4.0 * ss))

    res = integrate(f, math.log(s_min), math.log(t), spec)
    return -res.value


def extract_coeffs(f, window=(1e-4, 1e-2), n_points=40):
    """Least-squares fit of f against {sqrt(x), sqrt(x) log x} on a log grid.

    The default window [1e-4, 1e-2] balances cancellation in evaluating f
    (below) against contamination by the O(x^{3/2} log x) remainder of
    maximal-domain functions (above).  The boundary combination
    cos(theta) c_plus + sin(theta) c_minus for any angle is available as
    BoundaryCoeffs.boundary_value on the result.
    """
    x_lo, x_hi = float(window[0]), float(window[1])
    if not (0.0 < x_lo < x_hi <= 0.05):
        raise DomainError(f"extract_coeffs: need 0 < x_lo < x_hi <= 0.05, got {window!r}")
    if n_points < 20:
        raise DomainError("extract_coeffs: need at least 20 sample points")
    xs = np.geomspace(x_lo, x_hi, int(n_points))
    try:
        vals = np.asarray(f(xs), dtype=float)
        if vals.shape != xs.shape:
            raise TypeError
    except TypeError:
        vals = np.array([float(f(float(x))) for x in xs])
    design = np.column_stack([np.sqrt(xs), np.sqrt(xs) * np.log(xs)])
    coef, _, rank, sv = np.linalg.lstsq(design, vals, rcond=None)
    if rank < 2 or not np.all(np.isfinite(coef)):
        raise FitError("extract_coeffs: degenerate window (rank-deficient fit)")
    if sv[0] / sv[-1] > 1e13:
        raise FitError("extract_coeffs: window too short, basis nearly collinear")
    resid = float(np.max(np.abs(vals - design @ coef)))
    return BoundaryCoeffs(float(coef[0]), float(coef[1]), resid)
