"""Adaptive Gauss-Kronrod integration and the log-tail integral family.

The engine is a standard globally adaptive G7/K15 scheme: keep a heap of
panels ordered by error estimate, bisect the worst one until the summed
estimate meets the tolerance or the subdivision budget runs out.
Integrands are called with a numpy array of nodes and must return an array
(`as_vectorized` wraps plain scalar callables).

`integrate_log_tail` handles the semi-infinite integrals with the
logarithmically decaying weight 1/((log y + c)^2 + pi^2) that appear
throughout the package; after u = log y the integrand decays like
exp(u - t e^u) and is truncated where that factor underflows, with the
truncation bound folded into the reported error.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass

import numpy as np

from .errors import ConvergenceError, DomainError

# 15-point Kronrod nodes/weights and embedded 7-point Gauss weights
# (QUADPACK dqk15 values).
_XGK = np.array([
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.0,
])
_WGK = np.array([
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
])
_WG = np.array([
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
])

# all 15 nodes on [-1, 1], ordered
_NODES = np.concatenate([-_XGK[:7], [0.0], _XGK[6::-1]])
_WEIGHTS_K = np.concatenate([_WGK[:7], [_WGK[7]], _WGK[6::-1]])
# Gauss nodes are the odd-index Kronrod nodes (1,3,5,7,9,11,13)
_GAUSS_IDX = np.arange(1, 15, 2)
_WEIGHTS_G = np.concatenate([_WG[:3], [_WG[3]], _WG[2::-1]])


@dataclass(frozen=True)
class QuadSpec:
    """Tolerances and budget for one adaptive integration."""

    rel_tol: float = 1e-10
    abs_tol: float = 1e-12
    max_subdivisions: int = 4000
    tail_cutoff_policy: str = "fixed_upper_limit"

    def __post_init__(self):
        if not (self.rel_tol > 0.0 and self.abs_tol > 0.0):
            raise DomainError("QuadSpec: tolerances must be positive")
        if self.max_subdivisions < 1:
            raise DomainError("QuadSpec: max_subdivisions must be >= 1")
        if self.tail_cutoff_policy not in ("fixed_upper_limit", "exp_substitution"):
            raise DomainError(
                f"QuadSpec: unknown tail policy {self.tail_cutoff_policy!r}")


@dataclass(frozen=True)
class QuadResult:
    value: float
    est_error: float
    evaluations: int


DEFAULT_SPEC = QuadSpec()


def as_vectorized(f):
    """Wrap a scalar callable so the engine can pass node arrays."""

    def wrapped(xs):
        return np.array([f(float(x)) for x in xs], dtype=float)

    return wrapped


def _panel(f, a, b):
    c = 0.5 * (a + b)
    h = 0.5 * (b - a)
    fx = np.asarray(f(c + h * _NODES))
    k15 = h * float(np.sum(_WEIGHTS_K * fx))
    g7 = h * float(np.sum(_WEIGHTS_G * fx[_GAUSS_IDX]))
    return k15, abs(k15 - g7)


def integrate(f, a, b, spec=DEFAULT_SPEC, points=None):
    """Adaptively integrate ``f`` over the finite interval [a, b].

    ``f`` receives numpy arrays of interior nodes (endpoints are never
    sampled, so integrable endpoint singularities are allowed).  ``points``
    optionally lists interior breakpoints for the initial panelization.

    Raises ConvergenceError (carrying the partial result) when the
    subdivision budget is exhausted before the tolerance is met.
    """
    a = float(a)
    b = float(b)
    if not (math.isfinite(a) and math.isfinite(b) and a < b):
        raise DomainError(f"integrate: need finite a < b, got [{a}, {b}]")
    edges = [a]
    if points:
        edges.extend(sorted(float(p) for p in points if a < p < b))
    edges.append(b)

    heap = []
    total = 0.0
    err = 0.0
    evals = 0
    counter = 0
    for lo, hi in zip(edges[:-1], edges[1:]):
        v, e = _panel(f, lo, hi)
        evals += 15
        total += v
        err += e
        heapq.heappush(heap, (-e, counter, lo, hi, v, e))
        counter += 1

    splits = 0
    while err > max(spec.abs_tol, spec.rel_tol * abs(total)):
        if splits >= spec.max_subdivisions or not heap:
            raise ConvergenceError(
                f"integrate: budget exhausted after {splits} subdivisions "
                f"(value={total!r}, est_error={err!r})",
                partial=QuadResult(total, err, evals),
            )
        _, _, lo, hi, v_old, e_old = heapq.heappop(heap)
        mid = 0.5 * (lo + hi)
        v1, e1 = _panel(f, lo, mid)
        v2, e2 = _panel(f, mid, hi)
        evals += 30
        total += v1 + v2 - v_old
        err += e1 + e2 - e_old
        heapq.heappush(heap, (-e1, counter, lo, mid, v1, e1))
        counter += 1
        heapq.heappush(heap, (-e2, counter, mid, hi, v2, e2))
        counter += 1
        splits += 1

    return QuadResult(total, err, evals)


def _log_tail_umax(t):
    """u with t*e^u - u = 46 (underflow cut for exp(u - t e^u)).

    Clamped below at a small positive width: for t > ~46 the exponential
    factor is already below 1e-20 on all of [0, inf).
    """
    u = math.log(max(46.0 / t, 1e-300))
    for _ in range(4):
        u = math.log(max((46.0 + u) / t, 1e-300))
    return max(u, 0.01)


def integrate_log_tail(g, t, kappa2, spec=DEFAULT_SPEC):
    """int_1^inf e^{-t y} g(y) / ((log y + kappa2)^2 + pi^2) dy.

    Evaluated after u = log y as
    int_0^inf e^{u - t e^u} g(e^u) / ((u + kappa2)^2 + pi^2) du.
    ``g`` must accept numpy arrays and be bounded on [1, inf).

    With the default ``fixed_upper_limit`` policy the integral is cut where
    the exponential factor underflows (t e^u - u >= 46) and the truncation
    bound |g| e^{-t e^umax}/t / ((umax+kappa2)^2 + pi^2) is added to the
    reported error.  The ``exp_substitution`` policy instead maps the whole
    half line to [0, 1) via u = -log(1 - v).
    """
    t = float(t)
    if not (t > 0.0 and math.isfinite(t)):
        raise DomainError(f"integrate_log_tail: need t > 0, got {t!r}")
    pi2 = math.pi * math.pi

    if spec.tail_cutoff_policy == "exp_substitution":
        def h(vs):
            vs = np.asarray(vs)
            us = -np.log1p(-vs)
            w = np.exp(us - t * np.exp(us)) / ((us + kappa2) ** 2 + pi2)
            return w * np.asarray(g(np.exp(us))) / (1.0 - vs)

        res = integrate(h, 0.0, 1.0 - 1e-16, spec)
        return res

    umax = _log_tail_umax(t)

    def h(us):
        us = np.asarray(us)
        return np.exp(us - t * np.exp(us)) * np.asarray(g(np.exp(us))) / (
            (us + kappa2) ** 2 + pi2)

    res = integrate(h, 0.0, umax, spec)
    g_end = float(np.max(np.abs(np.asarray(g(np.array([math.exp(umax)]))))))
    # int_umax^inf e^{u - t e^u} du = e^{-t e^umax}/t exactly
    tail = g_end * math.exp(-t * math.exp(umax)) / t / ((umax + kappa2) ** 2 + pi2)
    return QuadResult(res.value, res.est_error + tail, res.evaluations)


def gauss_legendre_panel(n):
    """Nodes and weights of the n-point Gauss-Legendre rule on [-1, 1]."""
    return np.polynomial.legendre.leggauss(n)
