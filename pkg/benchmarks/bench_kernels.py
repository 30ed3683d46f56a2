#!/usr/bin/env python3
"""Benchmark the numba kernels against their pure-numpy twins.

Run with the environment as-is to time the active (numba, if available)
path alongside the numpy reference; SELBERGKIT_NO_NUMBA=1 would force the
package itself onto the numpy path.
"""

import time

import numpy as np

from selbergkit import kernels


def timeit(fn, *args, repeat=5, warmup=2):
    for _ in range(warmup):
        fn(*args)
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(*args)
        times.append(time.perf_counter() - t0)
    return np.mean(times) * 1000, np.std(times) * 1000


def main():
    rng = np.random.default_rng(0)
    print(f"numba available and active: {kernels.HAS_NUMBA}")
    print(f"{'kernel':<18}{'numba/active (ms)':>20}{'numpy (ms)':>16}"
          f"{'speedup':>10}")

    n = 200_000
    z = (0.6 + 0.6 * rng.random(n)) * np.exp(2j * np.pi * rng.random(n))
    q, p = 0.3, 0.2
    nq, np_ = kernels.trunc_order(q), kernels.trunc_order(p)

    cases = [
        ("qpoch_inf", kernels.qpoch_inf_arr, kernels.qpoch_inf_arr_numpy,
         (z, q, nq)),
        ("theta", kernels.theta_arr, kernels.theta_arr_numpy, (z, p, np_)),
        ("ellgamma", kernels.ellgamma_arr, kernels.ellgamma_arr_numpy,
         (z[:20_000], p, q, np_, nq)),
    ]
    ts = rng.random((100_000, 3))
    ss = rng.random((100_000, 2))
    if kernels.HAS_NUMBA:
        # the jitted twins exist but numpy is the active path for these
        cases.append(("vandermonde*", kernels.vandermonde_pow_nb,
                      kernels.vandermonde_pow_numpy, (ts, 1.0)))
        cases.append(("cross_pow*", kernels.cross_pow_nb,
                      kernels.cross_pow_numpy, (ts, ss, -0.5)))

    for name, active, reference, args in cases:
        got = active(*args)
        ref = reference(*args)
        scale = np.max(np.abs(ref))
        err = np.max(np.abs(got - ref)) / scale
        assert err < 1e-11, f"{name}: paths disagree ({err:.2e})"
        ma, sa = timeit(active, *args)
        mr, sr = timeit(reference, *args)
        print(f"{name:<18}{ma:>13.2f} ± {sa:<5.2f}{mr:>11.2f} ± {sr:<5.2f}"
              f"{mr / ma:>9.2f}x")


if __name__ == "__main__":
    main()
