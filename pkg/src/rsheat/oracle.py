"""Independent spectral ground truth on (0, 1) with a Dirichlet wall at x = 1.

Eigenvalues of the interval realization are roots of transcendental
secular functions assembled from the small-x boundary coefficients of the
explicit solutions sqrt(x) Z0(sqrt(lambda) x):

* positive spectrum:  S(l) = (log l + 2 kappa) J0(sqrt l) - pi Y0(sqrt l)
  (Friedrichs: J0(sqrt l) alone);
* negative spectrum (l = -mu^2):  N(mu) = (log mu + kappa) I0(mu) + K0(mu)
  (Friedrichs: I0(mu), which never vanishes).

Root isolation seeds brackets from the squares of J0 zeros (the cells
between consecutive squares carry the sign alternation of Y0 at J0
zeros), scans each cell, and polishes by bisection + Newton.  A scan at
doubled resolution guards against missed roots.

theta = 0 carries the eigenvalue 0 exactly: sqrt(x) log x is annihilated
by the operator, satisfies the theta = 0 condition (c_plus = 0) and
vanishes at x = 1.  The scan cannot see a boundary root, so it is added
explicitly.

The eigenvalue sums feed ``oracle_trace``, the end-to-end cross-check of
the kernel-built traces.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import CompletenessError, DomainError, InsufficientSpectrumError
from .kernels import BoundaryParam
from .specfun import (
    bessel_i0_scaled,
    bessel_j0,
    bessel_j1,
    bessel_k0_scaled,
    bessel_y0,
    bessel_y1,
)

_PI = math.pi


@dataclass(frozen=True)
class Spectrum:
    """Sorted eigenvalues of one boundary condition, with certification data."""

    theta: float
    eigenvalues: tuple
    residuals: tuple
    lambda_max: float

    @property
    def negative_count(self):
        return sum(1 for ev in self.eigenvalues if ev < 0.0)

    def tail_bound(self, t):
        """Weyl-envelope bound on the part of the trace sum beyond lambda_max:
        2 int_{L}^inf e^{-t l} (2 pi sqrt(l))^{-1} dl = erfc(sqrt(t L))/sqrt(pi t),
        started one mean level spacing early, L = (sqrt(lambda_max) - pi)^2,
        so that an eigenvalue sitting just past the cutoff is still covered;
        the factor 2 absorbs residual density fluctuation.
        """
        lam_eff = max(math.sqrt(self.lambda_max) - _PI, 0.0) ** 2
        return math.erfc(math.sqrt(t * lam_eff)) / math.sqrt(_PI * t)

    def to_csv(self, fileobj):
        fileobj.write("index,lambda,secular_residual\n")
        for i, (ev, r) in enumerate(zip(self.eigenvalues, self.residuals)):
            fileobj.write(f"{i},{ev:.17g},{r:.17g}\n")


@dataclass(frozen=True)
class OracleTrace:
    value: float
    tail_error: float


def j0_zeros(n):
    """First n positive zeros of J0 (McMahon seed + Newton on J0/J1)."""
    out = []
    for k in range(1, n + 1):
        beta = (k - 0.25) * _PI
        z = beta + 1.0 / (8.0 * beta) - 124.0 / (3.0 * (8.0 * beta) ** 3)
        for _ in range(4):
            z += bessel_j0(z) / bessel_j1(z)  # J0' = -J1
        out.append(z)
    return out


def secular_positive(lam, bp: BoundaryParam):
    """Positive-spectrum secular function; zeros are eigenvalues."""
    if lam <= 0.0:
        raise DomainError(f"secular_positive: need lambda > 0, got {lam!r}")
    r = math.sqrt(lam)
    if bp.is_friedrichs:
        return bessel_j0(r)
    return (math.log(lam) + 2.0 * bp.kappa) * bessel_j0(r) - _PI * bessel_y0(r)


def _secular_positive_dlam(lam, bp):
    r = math.sqrt(lam)
    if bp.is_friedrichs:
        return -bessel_j1(r) / (2.0 * r)
    j0 = bessel_j0(r)
    dj0 = -bessel_j1(r) / (2.0 * r)  # d/dlam J0(sqrt lam)
    dy0 = -bessel_y1(r) / (2.0 * r)
    return j0 / lam + (math.log(lam) + 2.0 * bp.kappa) * dj0 - _PI * dy0


def secular_negative(mu, bp: BoundaryParam):
    """Negative-spectrum secular function for lambda = -mu^2.

    Scaled by e^{-mu} so it stays finite for large mu; the zero set is
    unchanged.  Tends to tan(theta) as mu -> 0 (after unscaling; the
    scaling factor tends to 1).
    """
    if mu <= 0.0:
        raise DomainError(f"secular_negative: need mu > 0, got {mu!r}")
    if bp.is_friedrichs:
        return bessel_i0_scaled(mu)
    return ((math.log(mu) + bp.kappa) * bessel_i0_scaled(mu)
            + bessel_k0_scaled(mu) * math.exp(-2.0 * mu))


def _bisect_refine(f, a, b, fa, fb, tol):
    for _ in range(200):
        m = 0.5 * (a + b)
        if b - a <= tol * max(1.0, abs(m)):
            break
        fm = f(m)
        if fm == 0.0:
            return m
        if (fa < 0.0) != (fm < 0.0):
            b, fb = m, fm
        else:
            a, fa = m, fm
    return 0.5 * (a + b)


def _newton_polish(f, df, x, lo, hi):
    for _ in range(3):
        d = df(x)
        if d == 0.0:
            break
        step = f(x) / d
        y = x - step
        if not (lo < y < hi):
            break
        x = y
    return x


def _scan_roots(f, grid):
    vals = [f(x) for x in grid]
    brackets = []
    for i in range(len(grid) - 1):
        if vals[i] == 0.0:
            brackets.append((grid[i], grid[i], vals[i], vals[i]))
        elif (vals[i] < 0.0) != (vals[i + 1] < 0.0):
            brackets.append((grid[i], grid[i + 1], vals[i], vals[i + 1]))
    return brackets


def eigenvalues(bp: BoundaryParam, lambda_max=4000.0, tol=1e-10,
                cell_resolution=200):
    """All eigenvalues up to lambda_max, certified by residual and rescans.

    Brackets for the positive spectrum are seeded by interlacing with the
    squares of J0 zeros; each cell is scanned at ``cell_resolution`` points
    and re-scanned at double resolution (doubling again on mismatch, then
    raising CompletenessError).
    """
    if lambda_max < 100.0:
        raise DomainError("eigenvalues: need lambda_max >= 100")
    if tol > 1e-8:
        raise DomainError("eigenvalues: need tol <= 1e-8")

    evs = []
    if bp.is_friedrichs:
        for z in j0_zeros(int(math.sqrt(lambda_max) / _PI) + 3):
            lam = z * z
            if lam <= lambda_max:
                evs.append(lam)
    else:
        if bp.theta == 0.0:
            evs.append(0.0)  # sqrt(x) log x zero mode
        # negative spectrum
        kap = bp.kappa
        mu_half = math.exp(-kap) if kap > -13.8 else math.inf  # e^13.8 ~ 1e6
        if mu_half is math.inf:
            raise DomainError(
                "eigenvalues: bound state beyond supported range (kappa too negative)")
        mu_max = max(10.0, 1.5 * mu_half)
        f_neg = lambda mu: secular_negative(mu, bp)
        grid = [mu_max * (k + 1) / 800.0 for k in range(800)]
        brackets = _scan_roots(f_neg, grid)
        if len(brackets) > 1:
            raise CompletenessError(
                f"eigenvalues: {len(brackets)} negative-spectrum roots; at most one expected")
        for a, b, fa, fb in brackets:
            mu = _bisect_refine(f_neg, a, b, fa, fb, 1e-14)
            evs.append(-mu * mu)
        # positive spectrum
        f_pos = lambda lam: secular_positive(lam, bp)
        df_pos = lambda lam: _secular_positive_dlam(lam, bp)
        cells = [0.0]
        for z in j0_zeros(int(math.sqrt(lambda_max) / _PI) + 3):
            cells.append(z * z)
        cells = [c for c in cells if c < lambda_max] + [lambda_max]
        for lo, hi in zip(cells[:-1], cells[1:]):
            res = cell_resolution
            pad = (hi - lo) * 1e-9
            found = None
            for _ in range(3):
                g1 = [lo + pad + (hi - lo - 2 * pad) * k / res for k in range(res + 1)]
                g2 = [lo + pad + (hi - lo - 2 * pad) * k / (2 * res) for k in range(2 * res + 1)]
                b1 = _scan_roots(f_pos, g1)
                b2 = _scan_roots(f_pos, g2)
                if len(b1) == len(b2):
                    found = b2
                    break
                res *= 2
            if found is None:
                raise CompletenessError(
                    f"eigenvalues: inconsistent root count in cell ({lo}, {hi})")
            for a, b, fa, fb in found:
                lam = _bisect_refine(f_pos, a, b, fa, fb, tol)
                lam = _newton_polish(f_pos, df_pos, lam, a, b)
                evs.append(lam)

    evs.sort()
    residuals = tuple(
        abs(secular_positive(ev, bp)) if ev > 0.0
        else (abs(secular_negative(math.sqrt(-ev), bp)) if ev < 0.0 else 0.0)
        for ev in evs)
    return Spectrum(bp.theta, tuple(evs), residuals, float(lambda_max))


def oracle_trace(t, spectrum: Spectrum):
    """Eigenvalue-sum heat trace with an explicit spectral-tail error bar."""
    if t <= 0.0 or not math.isfinite(t):
        raise DomainError(f"oracle_trace: need t > 0, got {t!r}")
    if t * spectrum.lambda_max < 30.0:
        raise InsufficientSpectrumError(
            f"oracle_trace: t*lambda_max = {t * spectrum.lambda_max:.3g} < 30; "
            "recompute the spectrum with a larger lambda_max")
    value = math.fsum(math.exp(-t * ev) for ev in spectrum.eigenvalues)
    return OracleTrace(value, spectrum.tail_bound(t))
