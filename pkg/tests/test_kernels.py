import importlib
import os
import subprocess
import sys

import numpy as np
import pytest

from selbergkit import kernels
from selbergkit.coeffs import ell_gamma, qpoch_inf, theta


def _sample_z(n=64, seed=0):
    rng = np.random.default_rng(seed)
    mod = 0.6 + 0.6 * rng.random(n)
    arg = 2 * np.pi * rng.random(n)
    return mod * np.exp(1j * arg)


class TestAgainstScalarReferences:
    def test_qpoch_inf(self):
        z = _sample_z()
        q = 0.3
        n = kernels.trunc_order(q)
        got = kernels.qpoch_inf_arr(z, q, n)
        ref = np.array([qpoch_inf(zz, q) for zz in z])
        assert np.max(np.abs(got - ref)) < 1e-12

    def test_theta(self):
        z = _sample_z(seed=1)
        p = 0.25
        n = kernels.trunc_order(p)
        got = kernels.theta_arr(z, p, n)
        ref = np.array([theta(zz, p) for zz in z])
        assert np.max(np.abs(got - ref)) < 1e-12

    def test_ellgamma(self):
        z = _sample_z(seed=2)
        p, q = 0.2, 0.25
        np_, nq = kernels.trunc_order(p), kernels.trunc_order(q)
        got = kernels.ellgamma_arr(z, p, q, np_, nq)
        ref = np.array([ell_gamma(zz, p, q) for zz in z])
        assert np.max(np.abs(got - ref) / np.abs(ref)) < 1e-11


class TestPathsAgree:
    def test_numpy_twin_matches_active_path(self):
        z = _sample_z(seed=3)
        q = 0.35
        n = kernels.trunc_order(q)
        a = kernels.qpoch_inf_arr(z, q, n)
        b = kernels.qpoch_inf_arr_numpy(z, q, n)
        assert np.max(np.abs(a - b)) < 1e-13

        p = 0.2
        a = kernels.ellgamma_arr(z, p, q, kernels.trunc_order(p), n)
        b = kernels.ellgamma_arr_numpy(z, p, q, kernels.trunc_order(p), n)
        assert np.max(np.abs(a - b) / np.abs(b)) < 1e-12

        ts = np.random.default_rng(4).random((40, 3))
        ss = np.random.default_rng(5).random((40, 2))
        if kernels.HAS_NUMBA:
            a = kernels.vandermonde_pow_nb(ts, 1.0)
            b = kernels.vandermonde_pow_numpy(ts, 1.0)
            assert np.max(np.abs(a - b)) < 1e-14
            a = kernels.cross_pow_nb(ts, ss, -0.5)
            b = kernels.cross_pow_numpy(ts, ss, -0.5)
            assert np.max(np.abs(a - b) / np.abs(b)) < 1e-13

    def test_env_flag_forces_numpy(self):
        code = (
            "import os\n"
            "os.environ['SELBERGKIT_NO_NUMBA'] = '1'\n"
            "from selbergkit import kernels\n"
            "assert not kernels.HAS_NUMBA\n"
            "assert kernels.qpoch_inf_arr is kernels.qpoch_inf_arr_numpy\n"
            "print('fallback ok')\n"
        )
        out = subprocess.run([sys.executable, "-c", code],
                             capture_output=True, text=True)
        assert out.returncode == 0, out.stderr
        assert "fallback ok" in out.stdout
