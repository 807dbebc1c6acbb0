"""Spectral oracle: secular functions, bracketing completeness, trace sums."""

import io
import math

import numpy as np
import pytest

from rsheat import (
    BoundaryParam,
    DomainError,
    InsufficientSpectrumError,
    eigenvalues,
    j0_zeros,
    oracle_trace,
    secular_negative,
    secular_positive,
)
from rsheat.oracle import Spectrum, _secular_positive_dlam

J01_SQ = 5.783185962946784521176
J02_SQ = 30.47126234366208639908


class TestSecularPositive:
    def test_friedrichs_vanishes_at_j0_zero_squares(self, bp_friedrichs):
        assert abs(secular_positive(J01_SQ, bp_friedrichs)) < 1e-12

    def test_friedrichs_zeros_are_not_theta0_zeros(self, bp0):
        # S(j01^2) = -pi Y0(j01) = -pi * 0.5104...
        val = secular_positive(J01_SQ, bp0)
        assert val < -1.0

    def test_sign_change_count_on_0_400(self, bp0):
        # brute fine-scan oracle: five sign changes (none in the first
        # interlacing cell: theta = 0 has its lowest eigenvalue exactly at 0)
        lams = np.linspace(1e-6, 400.0, 100000)
        vals = np.array([secular_positive(float(l), bp0) for l in lams])
        sgn = np.sign(vals)
        changes = int(np.sum(sgn[1:] * sgn[:-1] < 0))
        assert changes == 5

    def test_zero_mode_expansion(self, bp0):
        # S(lam) = 2 tan(theta) - lam/2 + O(lam^2): small negative for theta=0
        for lam in (1e-6, 1e-4):
            s = secular_positive(lam, bp0)
            assert s < 0.0
            assert abs(s + lam / 2.0) < 1e-2 * lam


class TestSecularNegative:
    def test_three_quarter_bracket(self, bp_three_quarter):
        assert secular_negative(3.0, bp_three_quarter) < 0.0
        assert secular_negative(3.2, bp_three_quarter) > 0.0

    def test_theta0_positive_on_grid(self, bp0):
        for mu in np.geomspace(1e-3, 10.0, 60):
            assert secular_negative(float(mu), bp0) > 0.0

    @pytest.mark.parametrize("theta", [0.0, math.pi / 4, 3 * math.pi / 4])
    def test_small_mu_limit_is_tan_theta(self, theta):
        bp = BoundaryParam(theta)
        assert abs(secular_negative(1e-6, bp) - math.tan(theta)) < 1e-3


class TestEigenvalues:
    def test_friedrichs_first_five(self, bp_friedrichs):
        sp = eigenvalues(bp_friedrichs)
        want = [5.7832, 30.4713, 74.8870, 139.0403, 222.9323]
        for got, ref in zip(sp.eigenvalues[:5], want):
            assert abs(got - ref) < 5e-5

    def test_theta0_zero_mode_and_first_positive(self, bp0):
        sp = eigenvalues(bp0)
        assert sp.eigenvalues[0] == 0.0
        # first positive eigenvalue sits in the second interlacing cell
        first_pos = min(ev for ev in sp.eigenvalues if ev > 0.0)
        assert J01_SQ < first_pos < J02_SQ

    def test_negative_counts(self, bp0, bp_three_quarter):
        assert eigenvalues(bp0).negative_count == 0
        assert eigenvalues(bp_three_quarter).negative_count == 1

    def test_sorted_and_bounded(self, bp_quarter):
        sp = eigenvalues(bp_quarter)
        evs = sp.eigenvalues
        assert all(a < b for a, b in zip(evs, evs[1:]))
        assert evs[-1] <= sp.lambda_max
        assert sp.negative_count <= 1

    def test_bound_state_near_half_line_prediction(self, bp_three_quarter):
        sp = eigenvalues(bp_three_quarter)
        mu = math.sqrt(-sp.eigenvalues[0])
        assert abs(mu - math.exp(-bp_three_quarter.kappa)) < 0.021

    def test_completeness_against_finer_scan(self, bp_quarter):
        coarse = eigenvalues(bp_quarter, lambda_max=500.0)
        fine = eigenvalues(bp_quarter, lambda_max=500.0, cell_resolution=2000)
        assert len(coarse.eigenvalues) == len(fine.eigenvalues)
        for a, b in zip(coarse.eigenvalues, fine.eigenvalues):
            assert abs(a - b) < 1e-8 * max(1.0, abs(a))

    def test_residual_certification(self, bp_quarter):
        sp = eigenvalues(bp_quarter, lambda_max=500.0)
        evs = sp.eigenvalues
        for i, (ev, res) in enumerate(zip(evs, sp.residuals)):
            if ev <= 0.0:
                continue
            spacing = min(abs(ev - evs[j]) for j in (i - 1, i + 1)
                          if 0 <= j < len(evs))
            slope = abs(_secular_positive_dlam(ev, bp_quarter))
            assert res <= 1e-8 * (1.0 + slope * spacing)

    def test_theta_continuity_of_eigenvalues(self):
        th = 0.3
        sp1 = eigenvalues(BoundaryParam(th), lambda_max=500.0)
        sp2 = eigenvalues(BoundaryParam(th + 0.01), lambda_max=500.0)
        pos1 = [ev for ev in sp1.eigenvalues if ev > 0.0]
        pos2 = [ev for ev in sp2.eigenvalues if ev > 0.0]
        for a, b in zip(pos1[:5], pos2[:5]):
            # |dlam/dtheta| = |2 sec^2(theta) J0(sqrt(lam)) / S'(lam)|
            from rsheat.specfun import bessel_j0
            slope = abs(2.0 * bessel_j0(math.sqrt(a))
                        / (math.cos(th) ** 2 * _secular_positive_dlam(a, BoundaryParam(th))))
            assert abs(b - a) <= 1.5 * slope * 0.01 + 1e-6

    def test_domain_guards(self, bp0):
        with pytest.raises(DomainError):
            eigenvalues(bp0, lambda_max=50.0)
        with pytest.raises(DomainError):
            eigenvalues(bp0, tol=1e-6)
        with pytest.raises(DomainError):
            eigenvalues(BoundaryParam(math.pi / 2 + 1e-4))  # kappa ~ -1e4


class TestOracleTrace:
    def test_single_eigenvalue(self):
        sp = Spectrum(0.0, (1.0,), (0.0,), 4000.0)
        for t in (0.01, 0.5, 2.0):
            assert abs(oracle_trace(t, sp).value - math.exp(-t)) < 1e-15

    def test_bound_state_dominates_large_t(self, bp_three_quarter):
        sp = eigenvalues(bp_three_quarter)
        assert oracle_trace(2.0, sp).value > oracle_trace(1.0, sp).value

    def test_insufficient_spectrum_guard(self, bp0):
        sp = eigenvalues(bp0)
        with pytest.raises(InsufficientSpectrumError):
            oracle_trace(0.001, sp)

    def test_tail_bound_covers_truncation(self, bp_quarter):
        small = eigenvalues(bp_quarter, lambda_max=300.0)
        big = eigenvalues(bp_quarter, lambda_max=4000.0)
        t = 0.1
        missing = sum(math.exp(-t * ev) for ev in big.eigenvalues
                      if ev > small.lambda_max)
        assert missing <= small.tail_bound(t)


class TestCsvExport:
    def test_columns_and_roundtrip(self, bp_quarter):
        sp = eigenvalues(bp_quarter, lambda_max=200.0)
        buf = io.StringIO()
        sp.to_csv(buf)
        lines = buf.getvalue().strip().split("\n")
        assert lines[0] == "index,lambda,secular_residual"
        first = lines[1].split(",")
        assert int(first[0]) == 0
        assert float(first[1]) == sp.eigenvalues[0]  # 17 digits round-trip


def test_j0_zeros_against_frozen():
    z = j0_zeros(5)
    frozen = [2.404825557695772768622, 5.520078110286310649597,
              8.653727912911012216954, 11.79153443901428161374,
              14.93091770848778594776]
    for a, b in zip(z, frozen):
        assert abs(a - b) < 1e-13
