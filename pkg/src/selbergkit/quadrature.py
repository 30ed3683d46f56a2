"""Numerical left-hand sides: Gauss-Jacobi simplex quadrature, rank-n chain
domains with sine-weight decomposition (plus the companion chain), torus
quadrature for q-series integrands, and sector-contour quadrature.

Chain regions are totally ordered at rank two; each region is mapped to the
unit cube by the ordered-ratio substitution, endpoint exponents are
absorbed into per-axis Gauss-Jacobi weights, and the remaining factors are
evaluated pointwise.  gamma is kept in (0,1) so all exponents are
integrable.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from . import kernels
from .macdonald import jack_P
from .partitions import Partition

__all__ = [
    "gauss_jacobi_01", "QuadratureSpec", "ChainRegion", "enumerate_chain",
    "enumerate_companion_chain", "region_covering_check", "an_selberg_lhs",
    "aflt_lhs", "jack_pair_callback", "torus_integral", "sector_integral",
    "SectorSpec", "mac_aflt_lhs", "ortho_norm_lhs",
]


# ---------------------------------------------------------------------------
# Gauss-Jacobi rules (Golub-Welsch)
# ---------------------------------------------------------------------------

_GJ_CACHE: dict = {}


def gauss_jacobi_01(n: int, p: float, q: float):
    """Nodes/weights for integral_0^1 f(t) t^p (1-t)^q dt, p, q > -1."""
    key = (n, round(float(p), 12), round(float(q), 12))
    hit = _GJ_CACHE.get(key)
    if hit is not None:
        return hit
    # weight (1-x)^a (1+x)^b on [-1,1] with a = q, b = p
    a, b = float(q), float(p)
    k = np.arange(n)
    apb = a + b
    # three-term recurrence coefficients for monic Jacobi polynomials
    alpha = np.empty(n)
    beta = np.empty(n)
    alpha[0] = (b - a) / (apb + 2)
    if n > 1:
        k1 = k[1:]
        alpha[1:] = (b * b - a * a) / ((2 * k1 + apb) * (2 * k1 + apb + 2))
    beta[0] = 2.0 ** (apb + 1) * math.gamma(a + 1) * math.gamma(b + 1) \
        / math.gamma(apb + 2)
    if n > 1:
        k1 = k[1:]
        num = 4 * k1 * (k1 + a) * (k1 + b) * (k1 + apb)
        den = (2 * k1 + apb) ** 2 * (2 * k1 + apb + 1) * (2 * k1 + apb - 1)
        beta[1:] = num / den
    mat = np.diag(alpha) + np.diag(np.sqrt(beta[1:]), 1) \
        + np.diag(np.sqrt(beta[1:]), -1)
    vals, vecs = np.linalg.eigh(mat)
    w = beta[0] * vecs[0, :] ** 2
    # map x in [-1,1] to t = (1+x)/2; t^p(1-t)^q dt = 2^{-p-q-1}(1+x)^p(1-x)^q dx
    t = (1 + vals) / 2
    w = w * 2.0 ** (-apb - 1)
    _GJ_CACHE[key] = (t, w)
    return t, w


@dataclass
class QuadratureSpec:
    points: int = 48
    tol: float = 1e-8
    max_refine: int = 3


# ---------------------------------------------------------------------------
# chain domains
# ---------------------------------------------------------------------------

@dataclass
class ChainRegion:
    """A totally ordered region with its sine weight.

    order lists (level, index) pairs from smallest to largest variable;
    level 0 entries are the auxiliary upper bound (absent here; the chain
    variables all live in (0,1)).
    """
    order: tuple
    weight: float


def _admissible_maps(k_lo: int, k_hi: int):
    """Nondecreasing M: {1..k_lo} -> {1..?} with M(i) <= i + k_hi - k_lo."""
    def rec(i, prev):
        if i > k_lo:
            yield ()
            return
        hi = i + k_hi - k_lo
        for v in range(prev, hi + 1):
            for rest in rec(i + 1, v):
                yield (v,) + rest
    yield from rec(1, 1)


def _interleave_order(m1, k1: int, k2: int, upper_slot: bool):
    """Total order of level-1 and level-2 variables fixed by the map m1.

    m1[i-1] = M(i) places t1_i strictly between t2_{M(i)-1} and t2_{M(i)};
    with upper_slot, M(i) may equal k2 + 1 (above every level-2 variable).
    """
    order = []
    for j in range(1, k2 + 1):
        for i in range(1, k1 + 1):
            if m1[i - 1] == j:
                order.append((1, i))
        order.append((2, j))
    for i in range(1, k1 + 1):
        if m1[i - 1] == k2 + 1:
            order.append((1, i))
    return tuple(order)


def _sine_weight(m1, k1, k2, gamma_):
    out = 1.0
    for i in range(1, k1 + 1):
        num = math.sin(math.pi * (i + k2 - k1 - m1[i - 1] + 1) * gamma_)
        den = math.sin(math.pi * (i + k2 - k1) * gamma_)
        out *= num / den
    return out


def enumerate_chain(n: int, ks, gamma_) -> list[ChainRegion]:
    """All chain regions with weights; rank <= 2 regions are total orders."""
    if n == 1:
        order = tuple((1, i) for i in range(1, ks[0] + 1))
        return [ChainRegion(order, 1.0)]
    if n != 2:
        raise NotImplementedError("chain quadrature is implemented for n <= 2")
    k1, k2 = ks
    regions = []
    for m1 in _admissible_maps(k1, k2):
        order = _interleave_order(m1, k1, k2, upper_slot=False)
        regions.append(ChainRegion(order, _sine_weight(m1, k1, k2, gamma_)))
    return regions


def enumerate_companion_chain(n: int, ks, beta_nm1, gamma_) -> list[ChainRegion]:
    """Companion chain: the last interleaving is freed and beta-weighted."""
    if n != 2:
        raise NotImplementedError("companion chain implemented for n = 2")
    k1, k2 = ks
    regions = []
    for mp in _companion_maps(k1, k2):
        order = _interleave_order(mp, k1, k2, upper_slot=True)
        w = 1.0
        for i in range(1, k1 + 1):
            num = math.sin(math.pi * (beta_nm1 - (i + k2 - k1 - mp[i - 1] + 1)
                                      * gamma_))
            den = math.sin(math.pi * (beta_nm1 - (i + k2 - k1) * gamma_))
            w *= num / den
        regions.append(ChainRegion(order, w))
    return regions


def _companion_maps(k_lo: int, k_hi: int):
    def rec(i, prev):
        if i > k_lo:
            yield ()
            return
        for v in range(prev, k_hi + 2):
            for rest in rec(i + 1, v):
                yield (v,) + rest
    yield from rec(1, 1)


def region_covering_check(regions, n, ks, rng, samples: int = 500,
                          companion: bool = False) -> bool:
    """Uniform samples of the constrained domain land in exactly one region."""
    k1, k2 = (ks[0], ks[1]) if n == 2 else (ks[0], 0)
    done = 0
    while done < samples:
        t1 = sorted(rng.random() for _ in range(k1))
        t2 = sorted(rng.random() for _ in range(k2)) if n == 2 else []
        if n == 2 and not companion:
            # the straight chain constrains t1_i < t2_{i - k1 + k2}
            if not all(t1[i - 1] < t2[i - 1 + k2 - k1] for i in range(1, k1 + 1)):
                continue
        done += 1
        vals = {}
        for i, v in enumerate(t1, start=1):
            vals[(1, i)] = v
        for j, v in enumerate(t2, start=1):
            vals[(2, j)] = v
        hits = 0
        for reg in regions:
            seq = [vals[key] for key in reg.order]
            if all(seq[i] < seq[i + 1] for i in range(len(seq) - 1)):
                hits += 1
        if hits != 1:
            return False
    return True


# ---------------------------------------------------------------------------
# region integration by the ordered-ratio substitution
# ---------------------------------------------------------------------------

def _pair_exponent(a_key, b_key, gamma_):
    """Interaction exponent between two chain variables."""
    if a_key[0] == b_key[0]:
        return 2 * gamma_
    return -gamma_


def integrate_region(region: ChainRegion, n, ks, alphas, betas, gamma_,
                     integrand, npts: int) -> float:
    """Integrate the chain density times `integrand` over one region.

    Substitution: with the region order w_1 < ... < w_m < 1 set
    w_j = prod_{i >= j} v_i.  Per-axis endpoint exponents (monomials and
    consecutive-pair interactions) go into Gauss-Jacobi weights; remaining
    pair factors are evaluated pointwise.
    """
    order = region.order
    m = len(order)
    # per-variable monomial exponent alpha_r - 1 and (1 - w)^{beta_r - 1}
    mono = [alphas[key[0] - 1] - 1 for key in order]
    # axis j of v corresponds to position j in the order (0-based);
    # v_j exponent: sum of monomial exponents of w_1..w_{j+1}, plus
    # consecutive-pair contributions, plus the Jacobian power j
    v_exp = []
    for j in range(m):
        e = sum(mono[: j + 1]) + j
        # consecutive pairs (i, i+1) with i <= j-1 contribute exponents on
        # (1 - v_i) only; pair exponent on w-difference contributes
        # |w_{i+1} - w_i|^c = w_{i+1}^c (1 - v_i)^c, the w-part adds c to
        # every v_l with l >= i+1
        for i in range(j):
            c = _pair_exponent(order[i], order[i + 1], gamma_)
            e += c
        v_exp.append(e)
    one_minus_exp = []
    for j in range(m):
        if j < m - 1:
            c = _pair_exponent(order[j], order[j + 1], gamma_)
            one_minus_exp.append(c)
        else:
            one_minus_exp.append(betas[order[j][0] - 1] - 1)
    rules = [gauss_jacobi_01(npts, v_exp[j], one_minus_exp[j])
             for j in range(m)]
    grids = np.meshgrid(*[r[0] for r in rules], indexing="ij")
    wgrid = np.ones_like(grids[0])
    for r, g in zip(rules, np.meshgrid(*[r[1] for r in rules], indexing="ij")):
        wgrid = wgrid * g
    # w_j = prod_{i >= j} v_i
    ws = [None] * m
    acc = np.ones_like(grids[0])
    for j in range(m - 1, -1, -1):
        acc = acc * grids[j]
        ws[j] = acc
    # leftover factors: non-consecutive pairs, (1 - w_j)^{beta-1} for j < m
    rest = np.ones_like(grids[0])
    for i in range(m):
        for j in range(i + 1, m):
            c = _pair_exponent(order[i], order[j], gamma_)
            if j == i + 1:
                continue
            rest = rest * np.abs(ws[j] - ws[i]) ** c
    for j in range(m - 1):
        bexp = betas[order[j][0] - 1] - 1
        if bexp != 0:
            rest = rest * (1 - ws[j]) ** bexp
    levels = {}
    for pos, key in enumerate(order):
        levels.setdefault(key[0], []).append(ws[pos])
    level_arrays = [np.stack(levels.get(r, []), axis=-1)
                    if levels.get(r) else None
                    for r in range(1, n + 1)]
    fvals = integrand(level_arrays)
    return float(np.sum(wgrid * rest * fvals).real) * region.weight \
        if not np.iscomplexobj(fvals) else \
        complex(np.sum(wgrid * rest * fvals)) * region.weight


def an_selberg_lhs(n: int, ks, alphas, beta, gamma_, integrand=None,
                   spec: QuadratureSpec | None = None,
                   companion: tuple | None = None):
    """Chain integral of the rank-n density times a symmetric integrand.

    companion = (beta_{n-1}, beta_n) switches to the companion chain.
    Returns (value, err_estimate); err is the last refinement delta.
    """
    spec = spec or QuadratureSpec()
    if integrand is None:
        def integrand(levels):
            shape = next(a.shape[:-1] for a in levels if a is not None)
            return np.ones(shape)
    if companion is None:
        betas = [1.0] * (n - 1) + [beta]
        regions = enumerate_chain(n, ks, gamma_)
    else:
        b1, b2 = companion
        betas = [1.0] * (n - 2) + [b1, b2]
        regions = enumerate_companion_chain(n, ks, b1, gamma_)
    prev = None
    delta = float("nan")
    npts = spec.points
    total = 0.0
    for _ in range(spec.max_refine + 1):
        total = 0.0
        for reg in regions:
            total += integrate_region(reg, n, ks, alphas, betas, gamma_,
                                      integrand, npts)
        if prev is not None:
            delta = abs(total - prev)
            if delta <= spec.tol * max(1, abs(total)):
                return total, delta
        prev = total
        npts *= 2
    return total, delta


def jack_pair_callback(n, lam: Partition, mu: Partition, beta, gamma_):
    """O = P_lam[t^(1)] P_mu[t^(n) + beta/gamma - 1] on level arrays."""
    lam, mu = Partition(lam), Partition(mu)
    shift = beta / gamma_ - 1

    def callback(levels):
        first = levels[0]
        last = levels[n - 1]
        base = next(a for a in levels if a is not None)
        shape = base.shape[:-1]
        out = np.ones(shape, dtype=float)
        out = out * _jack_on_grid(lam, first, gamma_, None)
        out = out * _jack_on_grid(mu, last, gamma_, shift)
        return out

    return callback


def _jack_on_grid(lam: Partition, arr, gamma_, shift):
    """Vectorised Jack evaluation on the last axis of arr."""
    lam = Partition(lam)
    if not lam:
        return 1.0
    if arr is None:
        arr_k = 0
    else:
        arr_k = arr.shape[-1]

    fp = jack_P(lam).to_basis("p")
    pk_cache = {}

    def pk(k):
        if k not in pk_cache:
            val = np.sum(arr ** k, axis=-1) if arr_k else 0.0
            if shift is not None:
                val = val + shift
            pk_cache[k] = val
        return pk_cache[k]

    total = 0.0
    for rho, c in fp.coeffs.items():
        cv = c.eval({"gamma": complex(gamma_)})
        term = complex(cv).real if abs(complex(cv).imag) < 1e-13 else complex(cv)
        for part in rho:
            term = term * pk(part)
        total = total + term
    return total


def aflt_lhs(k: int, lam: Partition, mu: Partition, alpha, beta, gamma_,
             npts: int = 48) -> float:
    """Jack-pair integral over [0,1]^k by simplex Gauss-Jacobi (k <= 2)."""
    lam, mu = Partition(lam), Partition(mu)
    shift = beta / gamma_ - 1
    if k == 1:
        t, w = gauss_jacobi_01(npts, alpha - 1, beta - 1)
        arr = t[:, None]
        vals = _jack_on_grid(lam, arr, gamma_, None) \
            * _jack_on_grid(mu, arr, gamma_, shift)
        return float(np.sum(w * vals))
    if k == 2:
        # ordered simplex t1 = s v < t2 = v, doubled by symmetry
        s, ws = gauss_jacobi_01(npts, alpha - 1, 2 * gamma_)
        v, wv = gauss_jacobi_01(npts, 2 * alpha + 2 * gamma_ - 1, beta - 1)
        S, V = np.meshgrid(s, v, indexing="ij")
        W = np.outer(ws, wv)
        t1 = S * V
        t2 = V
        arr = np.stack([t1, t2], axis=-1)
        vals = _jack_on_grid(lam, arr, gamma_, None) \
            * _jack_on_grid(mu, arr, gamma_, shift)
        rest = (1 - t1) ** (beta - 1)
        return 2.0 * float(np.sum(W * rest * vals))
    raise NotImplementedError("direct simplex rule implemented for k <= 2")


# ---------------------------------------------------------------------------
# torus and sector quadrature
# ---------------------------------------------------------------------------

def torus_integral(n: int, f, rho=1.0, npts: int = 256) -> complex:
    """(1/(2 pi i)^n) oint f(z) dz_1/z_1 ... dz_n/z_n on |z_i| = rho.

    f receives n flat complex arrays (a meshgrid of the torus) and must
    return the integrand values elementwise.  Nodes are offset by half a
    step so integrands with removable 0*inf points at z^4 = 1 stay finite.
    """
    angles = 2 * np.pi * (np.arange(npts) + 0.5) / npts
    if np.ndim(rho) == 0:
        radii = [float(rho)] * n
    else:
        radii = [float(r) for r in rho]
    circles = [r * np.exp(1j * angles) for r in radii]
    grids = np.meshgrid(*circles, indexing="ij")
    flat = [g.reshape(-1) for g in grids]
    vals = f(*flat)
    return complex(np.sum(vals)) / npts ** n


def _mac_eval_on_grid(lam: Partition, zs: list, q, t, shift_ratio=None):
    """P_lam(z;q,t) (plus an optional (t-b)/(1-t) shift) on flat z arrays."""
    from .macdonald import macdonald_P
    lam = Partition(lam)
    if not lam:
        return 1.0
    fp = macdonald_P(lam).to_basis("p")
    cache = {}

    def pk(k):
        if k not in cache:
            val = sum(z ** k for z in zs)
            if shift_ratio is not None:
                tv, bv = shift_ratio
                val = val + (tv ** k - bv ** k) / (1 - tv ** k)
            cache[k] = val
        return cache[k]

    total = 0.0
    for rho, c in fp.coeffs.items():
        cv = complex(c.eval({"q": complex(q), "t": complex(t)}))
        term = cv
        for part in rho:
            term = term * pk(part)
        total = total + term
    return total


def mac_aflt_lhs(n: int, lam: Partition, mu: Partition, a, b, q, t,
                 rho: float | None = None, npts: int = 256) -> complex:
    """Torus quadrature of the Macdonald-pair integrand.

    The stated contour is the torus, but (z_i;q)_inf in the denominator
    puts poles at z = q^{-j} (including 1); integrating on |z| = rho with
    max(|b|,|q|) < rho < 1 keeps the pole ladders separated.
    """
    lam, mu = Partition(lam), Partition(mu)
    a, b, q, t = complex(a), complex(b), complex(q), complex(t)
    if rho is None:
        rho = (max(abs(b), abs(q)) + 1) / 2
    nt = kernels.trunc_order(abs(q))

    def integrand(*zs):
        num = np.ones_like(zs[0])
        den = np.ones_like(zs[0])
        for z in zs:
            num = num * kernels.qpoch_inf_arr(a / z, q, nt)
            num = num * kernels.qpoch_inf_arr(q * z / a, q, nt)
            den = den * kernels.qpoch_inf_arr(b / z, q, nt)
            den = den * kernels.qpoch_inf_arr(z, q, nt)
        for i in range(n):
            for j in range(i + 1, n):
                r = zs[i] / zs[j]
                num = num * kernels.qpoch_inf_arr(r, q, nt)
                num = num * kernels.qpoch_inf_arr(1 / r, q, nt)
                den = den * kernels.qpoch_inf_arr(t * r, q, nt)
                den = den * kernels.qpoch_inf_arr(t / r, q, nt)
        pl = _mac_eval_on_grid(lam, list(zs), q, t)
        pm = _mac_eval_on_grid(mu, list(zs), q, t, shift_ratio=(t, b))
        return pl * pm * num / den

    val = torus_integral(n, integrand, rho, npts)
    return val / math.factorial(n)


def ortho_norm_lhs(n: int, lam: Partition, mu: Partition, q, t,
                   rho: float = 1.0, npts: int = 128) -> complex:
    """Torus quadrature of <P_lam, Q_mu>'_n."""
    from .field import fe
    from .macdonald import b_lambda
    lam, mu = Partition(lam), Partition(mu)
    q, t = complex(q), complex(t)
    nt = kernels.trunc_order(abs(q))
    bmu = complex(fe(b_lambda(mu)).eval({"q": q, "t": t})) if mu else 1.0

    def integrand(*zs):
        weight = np.ones_like(zs[0])
        for i in range(n):
            for j in range(i + 1, n):
                r = zs[i] / zs[j]
                weight = weight * kernels.qpoch_inf_arr(r, q, nt)
                weight = weight * kernels.qpoch_inf_arr(1 / r, q, nt)
                weight = weight / kernels.qpoch_inf_arr(t * r, q, nt)
                weight = weight / kernels.qpoch_inf_arr(t / r, q, nt)
        pl = _mac_eval_on_grid(lam, list(zs), q, t)
        pm = _mac_eval_on_grid(mu, [1 / z for z in zs], q, t)
        return pl * pm * bmu * weight

    return torus_integral(n, integrand, rho, npts) / math.factorial(n)


@dataclass
class SectorSpec:
    theta: float = 2.4
    radius: float = 1.6
    n_ray: int = 200
    n_arc: int = 200
    eps0: float = 1e-7


def sector_integral(f, spec: SectorSpec | None = None) -> complex:
    """(1/2 pi i) oint f over the angular-sector border, eps0 cutoff at 0."""
    spec = spec or SectorSpec()
    x, w = np.polynomial.legendre.leggauss(spec.n_ray)
    # radial parameter r in [eps0, R] along arg = -theta (outgoing)
    r_nodes = spec.eps0 + (spec.radius - spec.eps0) * (x + 1) / 2
    r_w = (spec.radius - spec.eps0) * w / 2
    out_dir = cmath.exp(-1j * spec.theta)
    in_dir = cmath.exp(1j * spec.theta)
    total = np.sum(r_w * f(r_nodes * out_dir) * out_dir)
    # arc from -theta to theta at radius R
    xa, wa = np.polynomial.legendre.leggauss(spec.n_arc)
    phis = spec.theta * xa
    phi_w = spec.theta * wa
    zs = spec.radius * np.exp(1j * phis)
    total += np.sum(phi_w * f(zs) * 1j * zs)
    # return along arg = +theta (ingoing)
    total -= np.sum(r_w * f(r_nodes * in_dir) * in_dir)
    return complex(total) / (2j * math.pi)
