import cmath
import random

import numpy as np
import pytest

from selbergkit.closedform import eaflt_rhs, elliptic_selberg_rhs
from selbergkit.coeffs import delta0
from selbergkit.elliptic import (
    bc1_interp, connection_check, eaflt_lhs_n1, elliptic_beta_lhs,
    elliptic_binomial, jackson_sum_check, mac_side_limit,
    normalised_binomial, skew_interp, skew_interp_pm, skew_limit_value,
    thm92_lhs_n1, thm92_rhs_n1,
)
from selbergkit.partitions import Bipartition, P

Q0, P0, T0 = 0.45, 0.0015, 0.4
A0, B0 = 0.52, 0.31


def balanced_params():
    q = 0.45
    t1, t2, t3, t4, t5, t6 = 0.4, 0.15, 0.4, 0.35, 0.4, 0.2
    p = t1 * t2 * t3 * t4 * t5 * t6 / q
    return [t1, t2, t3, t4, t5, t6], p, q


class TestBC1:
    def test_m0(self):
        assert bc1_interp(0, 0.7, A0, B0, Q0, P0) == 1

    def test_vanishing_at_spectral_points(self):
        # R*_m(a q^l) = 0 for m > l
        for l in (0, 1):
            for m in range(l + 1, l + 3):
                v = bc1_interp(m, A0 * Q0 ** l, A0, B0, Q0, P0)
                assert abs(v) < 1e-12, (m, l)

    def test_cauchy_factorisation(self):
        # t a b = pq makes the function factor through Delta0
        t, p, q = T0, 0.12, 0.3
        a = 0.6
        b = p * q / (t * a)
        z = 0.77 + 0.2j
        for m in (1, 2):
            lhs = bc1_interp(m, z, a, b, q, p)
            rhs = delta0(a / b, [a * z, a / z], q, t, p, P(m))
            assert abs(lhs - rhs) < 1e-10 * abs(rhs)

    def test_evaluation_symmetry(self):
        v, b = 0.37, 0.29
        lam, mu = 2, 1
        a = 0.52
        ap = v * cmath.sqrt(b) / a
        lhs = bc1_interp(mu, v * Q0 ** lam / a, a, b / a, Q0, P0) \
            / bc1_interp(mu, v / a, a, b / a, Q0, P0)
        rhs = bc1_interp(lam, v * Q0 ** mu / ap, ap, b / ap, Q0, P0) \
            / bc1_interp(lam, v / ap, ap, b / ap, Q0, P0)
        assert abs(lhs - rhs) < 1e-10 * abs(rhs)


class TestBinomials:
    def test_trivialises_at_mu_zero(self):
        for m in (1, 2, 3):
            v = elliptic_binomial(P(m), P(), A0, B0, Q0, T0, P0)
            assert abs(v - 1) < 1e-12

    def test_vanishes_off_containment(self):
        assert elliptic_binomial(P(1), P(2), A0, B0, Q0, T0, P0) == 0

    def test_branch_independence(self):
        v0 = elliptic_binomial(P(2), P(1), A0, B0, Q0, T0, P0, sqrt_branch=0)
        v1 = elliptic_binomial(P(2), P(1), A0, B0, Q0, T0, P0, sqrt_branch=1)
        assert abs(v0 - v1) < 1e-10 * abs(v0)

    def test_rejects_long_partitions(self):
        with pytest.raises(ValueError):
            elliptic_binomial(P(1, 1), P(), A0, B0, Q0, T0, P0)


class TestJackson:
    def test_collapse(self):
        e = A0 * P0 * Q0 / (B0 * 0.41 * 0.62)
        tot, rhs, ok = jackson_sum_check(P(1), P(1), A0, B0, 0.41, 0.62, e,
                                         Q0, T0, P0)
        assert ok

    def test_two_and_three_term(self):
        e = A0 * P0 * Q0 / (B0 * 0.41 * 0.62)
        for lam in (P(1), P(2)):
            tot, rhs, ok = jackson_sum_check(lam, P(), A0, B0, 0.41, 0.62,
                                             e, Q0, T0, P0)
            assert ok, lam

    def test_balancing_enforced(self):
        with pytest.raises(ValueError):
            jackson_sum_check(P(1), P(), A0, B0, 0.4, 0.6, 0.5, Q0, T0, P0)


class TestSkewInterp:
    def test_two_argument_shortcut(self):
        v1, v2 = 0.77 + 0.1j, 0.6 - 0.2j
        for lm, nm in [(1, 0), (2, 0), (2, 1)]:
            lam, nu = P(lm), P(nm) if nm else P()
            lhs = skew_interp(lam, nu, [v1, v2], A0, B0, Q0, T0, P0)
            rhs = normalised_binomial(lam, nu, A0 / B0, v1 * v2,
                                      [A0 / v1, A0 / v2], Q0, T0, P0)
            assert abs(lhs - rhs) < 1e-10 * max(1e-12, abs(rhs))

    def test_branching(self):
        vs = [0.77 + 0.1j, 0.6 - 0.2j, 0.9 + 0.05j, 0.55]
        V12 = vs[0] * vs[1]
        for lam in (P(1), P(2)):
            lhs = skew_interp(lam, P(), vs, A0, B0, Q0, T0, P0)
            tot = 0
            for mm in range(lam.part(1) + 1):
                mu = P(mm) if mm else P()
                tot += (skew_interp(lam, mu, vs[:2], A0, B0, Q0, T0, P0)
                        * skew_interp(mu, P(), vs[2:], A0 / V12, B0,
                                      Q0, T0, P0))
            assert abs(lhs - tot) < 1e-10 * abs(lhs)

    def test_reduction_to_plain(self):
        rt = cmath.sqrt(T0)
        t1, t2 = 0.4, 0.15
        x = 0.83 + 0.2j
        for m in (1, 2):
            lhs = skew_interp_pm(P(m), P(), rt, [x], [], rt * t1, rt * t2,
                                 Q0, T0, P0)
            rhs = delta0(t1 / t2, [T0], Q0, T0, P0, P(m)) \
                * bc1_interp(m, x, t1, t2, Q0, P0)
            assert abs(lhs - rhs) < 1e-10 * abs(rhs)


class TestConnection:
    def test_single_and_bipartite(self):
        bl = Bipartition(P(2), P())
        lhs, tot, ok = connection_check(bl, 0.83 + 0.2j, 0.52, 0.37, 0.31,
                                        T0, P0, Q0)
        assert ok
        bl2 = Bipartition(P(1), P(1))
        lhs, tot, ok = connection_check(bl2, 0.7 - 0.3j, 0.52, 0.37, 0.31,
                                        T0, 0.25, 0.3)
        assert ok


class TestEllipticIntegrals:
    def test_spiridonov_beta(self):
        ts, p, q = balanced_params()
        lhs = elliptic_beta_lhs(ts, T0, p, q, npts=128)
        rhs = elliptic_selberg_rhs(1, ts, T0, p, q)
        assert abs(lhs - rhs) < 1e-8 * abs(rhs)

    def test_thm92(self):
        ts, p, q = balanced_params()
        bl = Bipartition(P(1), P())
        bm = Bipartition(P(1), P())
        lhs = thm92_lhs_n1(bl, bm, ts, T0, p, q, npts=160)
        rhs = thm92_rhs_n1(bl, bm, ts, T0, p, q)
        assert abs(lhs - rhs) < 1e-7 * abs(rhs)

    def test_eaflt_cases(self):
        ts, p, q = balanced_params()
        B00 = Bipartition(P(), P())
        for bl, bm in [(B00, B00), (Bipartition(P(1), P()), B00),
                       (Bipartition(P(1), P()), Bipartition(P(1), P()))]:
            lhs = eaflt_lhs_n1(bl, bm, T0, ts, p, q, npts=160)
            rhs = eaflt_rhs(1, bl, bm, T0, ts, p, q)
            assert abs(lhs - rhs) < 1e-7 * abs(rhs), (bl, bm)

    def test_display_form_disagrees_for_skew_mu(self):
        # the printed final ratio differs from the derivation; the
        # quadrature arbitrates in favour of the derivation form
        ts, p, q = balanced_params()
        bl = Bipartition(P(1), P())
        bm = Bipartition(P(1), P())
        lhs = eaflt_lhs_n1(bl, bm, T0, ts, p, q, npts=160)
        display = eaflt_rhs(1, bl, bm, T0, ts, p, q, display_form=True)
        assert abs(lhs - display) > 1e-3 * abs(display)


class TestSkewLimit:
    def test_degeneration_trend(self):
        lam = P(1)
        xs = [0.6 + 0.1j]
        c, d, a, b, q, t = 0.35, 0.55, 0.6, 0.8, 0.3, 0.4
        target = mac_side_limit(lam, xs, c, d, a, q, t)
        errs = []
        for p in (1e-2, 1e-3, 1e-4):
            v = skew_limit_value(lam, xs, c, d, a, b, q, t, p)
            errs.append(abs(v - target) / abs(target))
        assert errs[0] > errs[1] > errs[2]
        # error tracks p^(1/4) for the chosen scaling exponents
        ratio = errs[1] / errs[2]
        assert 1.5 < ratio < 4.0
