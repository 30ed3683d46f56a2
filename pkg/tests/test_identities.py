import random

import pytest

from selbergkit.coeffs import qt_poch
from selbergkit.field import fe, var
from selbergkit.identities import (
    an_cauchy_check, f_function, f_function_limit, interleaves,
    verify_skew_sum, verify_skew_sum_limit, verify_Z_Selb, zbifund,
)
from selbergkit.macdonald import b_lambda, principal_spec_a
from selbergkit.partitions import Bipartition, P, Partition, partitions_up_to

q, t, a = var("q"), var("t"), var("a")


class TestFFunction:
    def test_empty(self):
        assert fe(f_function(P(), P(), 1, 1)) == fe(1)

    def test_single_factor(self):
        got = f_function(P(1), P(), 1, 1)
        assert fe(got) == (1 - a * q / t) / (1 - a * q)

    def test_transpose_relation(self):
        for lam in partitions_up_to(3):
            for mu in partitions_up_to(3):
                k = max(len(lam), 1)
                l = max(len(mu), 1)
                lhs = f_function(lam, mu, k, l)
                rhs = f_function(mu, lam, l, k, t / (a * q))
                assert fe(lhs) == fe(rhs), (lam, mu)

    def test_padding_reduction_display(self):
        # f^{k,l} via f^{l(lam),l(mu)} times two partition-factorial ratios
        for lam, mu, k, l in [(P(2), P(1), 2, 2), (P(1, 1), P(2), 3, 2),
                              (P(2, 1), P(1), 3, 3)]:
            base = fe(1) * f_function(lam, mu, len(lam), len(mu))
            corr = (fe(1) * qt_poch(a * q * t ** (len(mu) - 1), q, t, lam)
                    / (fe(1) * qt_poch(a * q * t ** (l - 1), q, t, lam)))
            corr = corr * qt_poch(t ** len(lam) / a, q, t, mu) \
                / (fe(1) * qt_poch(t ** k / a, q, t, mu))
            assert fe(f_function(lam, mu, k, l)) == fe(base * corr)

    def test_fQfQ_relation(self):
        # f^{k,inf} Q_lam[1/(1-t)] = f^{k,l} Q_lam[(1-aq t^{l-1})/(1-t)]
        for lam in partitions_up_to(3):
            for mu in partitions_up_to(2):
                k = max(len(lam), 1)
                for l in (max(len(mu), 1), max(len(mu), 1) + 2):
                    lhs = (fe(1) * f_function(lam, mu, k, None)
                           * b_lambda(lam) * principal_spec_a(lam, fe(0)))
                    rhs = (fe(1) * f_function(lam, mu, k, l) * b_lambda(lam)
                           * principal_spec_a(lam, a * q * t ** (l - 1)))
                    assert fe(lhs) == fe(rhs), (lam, mu, l)

    def test_limit_vanishing_condition(self):
        rng = random.Random(3)
        pool = list(partitions_up_to(4, 3))
        for _ in range(60):
            lam = rng.choice(pool)
            mu = rng.choice(pool)
            k = rng.randint(max(len(lam), 1), 3)
            l = rng.randint(max(k, len(mu), 1), 4)
            val = fe(f_function_limit(lam, mu, k, l))
            assert val.is_zero() == (not interleaves(lam, mu, k, l))

    def test_limit_vs_numeric_b_to_one(self):
        from fractions import Fraction
        lam, mu, k, l = P(1), P(2, 1), 1, 2
        exact = fe(f_function_limit(lam, mu, k, l))
        qv, tv = 0.23, 0.41
        target = exact.eval({"q": qv, "t": tv})
        prev = None
        for exp in (4, 6):
            b = 1 - Fraction(1, 10 ** exp)
            approx = fe(f_function(lam, mu, k, l,
                                   b * t ** (k - l))).eval({"q": qv, "t": tv})
            err = abs(approx - target)
            if prev is not None:
                assert err < prev / 10
            prev = err


class TestSkewSum:
    def test_empty(self):
        chk = verify_skew_sum(P(), P(), 1, 1)
        assert chk.equal and fe(chk.lhs) == fe(1)

    def test_basic(self):
        assert verify_skew_sum(P(1), P(1), 1, 1).equal

    def test_padding_freedom(self):
        assert verify_skew_sum(P(2, 1), P(2), 2, 1).equal
        assert verify_skew_sum(P(2, 1), P(2), 2, 3).equal

    def test_limit_corollary(self):
        assert verify_skew_sum_limit(P(2), P(2, 1), 2, 3).equal
        assert verify_skew_sum_limit(P(1, 1), P(1), 2, 2).equal


class TestAnCauchy:
    def test_n1_reduces_to_cauchy(self):
        assert an_cauchy_check(1, [2], P(), cap=3, variant="II").equal

    def test_n1_skew(self):
        assert an_cauchy_check(1, [2], P(2, 1), cap=3, variant="I").equal

    def test_n2_variants(self):
        assert an_cauchy_check(2, [1, 1], P(), cap=3, variant="II").equal
        assert an_cauchy_check(2, [1, 2], P(), cap=3, variant="I").equal
        assert an_cauchy_check(2, [1], P(), cap=3, variant="I-inf").equal

    def test_n2_plethystic(self):
        assert an_cauchy_check(2, [1, 2], P(), cap=2, variant="II-pleth").equal

    def test_cap_zero(self):
        assert an_cauchy_check(2, [1, 2], P(), cap=0, variant="II").equal

    def test_skew_mu_with_long_tail(self):
        # exercises the padding-extended pairing factor
        assert an_cauchy_check(2, [1, 2], P(1, 1), cap=2, variant="I").equal


class TestBridge:
    def test_zbifund_empty(self):
        val = zbifund((0.3, -0.3), Bipartition(P(), P()), (0.2, -0.2),
                      Bipartition(P(), P()), 0.5, 0.8)
        assert val == 1

    def test_zbifund_dual_path(self):
        # independent re-implementation reading arm/leg directly
        us, vs, m, b = (0.31, -0.31), (0.22, -0.22), 0.47, 0.83
        blam = Bipartition(P(1), P())
        bmu = Bipartition(P(), P())
        direct = zbifund(us, blam, vs, bmu, m, b)
        Q = b + 1 / b
        ref = 1.0
        lam = P(1)
        for i in (0, 1):
            for j in (0, 1):
                lam_i = [lam, P()][i]
                mu_j = P()
                for (r, c) in lam_i.cells():
                    E = (us[i] - vs[j] - b * mu_j.leg(r, c)
                         + (lam_i.arm(r, c) + 1) / b)
                    ref *= E - m
        assert abs(direct - ref) < 1e-14

    def test_bridge(self):
        chk = verify_Z_Selb(1, P(1), P(), 0.87, 0.45, 0.6)
        assert chk.equal, chk.note
        chk = verify_Z_Selb(2, P(1), P(1), 0.91, 0.52, 0.63)
        assert chk.equal, chk.note
