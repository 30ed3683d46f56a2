"""Shifted factorials, hook polynomials, gamma/theta/elliptic-gamma numerics.

Most functions are generic over the scalar ring: they accept FieldElements
(for exact identities in q, t, a, ...) or complex numbers interchangeably,
as long as only +, -, *, /, integer powers are used.  Infinite products
(q-Pochhammer at infinity, theta, elliptic gamma) are numeric only.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .field import PoleError
from .partitions import Partition

__all__ = [
    "poch", "qpoch", "qpoch_ext", "QPochExt", "qt_poch", "gamma_poch",
    "hooks", "b_hook", "gamma", "lgamma", "gamma_ratio", "gamma_q",
    "theta", "theta_poch", "ell_gamma", "ell_qt_poch", "delta0",
    "delta0_bipartite", "c_minus", "c_plus", "EllipticParams",
    "ELL_TRUNC_EPS",
]

ELL_TRUNC_EPS = 1e-16


# ---------------------------------------------------------------------------
# classical and q-shifted factorials (generic ring)
# ---------------------------------------------------------------------------

def poch(b, n):
    """Pochhammer (b)_n.

    Integer n (negative allowed, as 1/(b-1)...(b+n)); non-integer n falls
    back to Gamma(b+n)/Gamma(b) for numeric b.
    """
    if isinstance(n, int):
        if n >= 0:
            out = 1
            for i in range(n):
                out = out * (b + i)
            return out
        out = 1
        for i in range(1, -n + 1):
            out = out * (b - i)
        return _recip(out)
    return gamma_ratio([b + n], [b])


def _recip(x):
    if isinstance(x, int):
        from fractions import Fraction
        return Fraction(1, x)
    return 1 / x


def qpoch(b, q, n: int):
    """q-shifted factorial (b;q)_n for integer n.

    Negative index uses (b;q)_{-n} = 1/(b q^{-n};q)_n and raises PoleError
    on a vanishing factor (e.g. (q;q)_{-n}); use qpoch_ext to observe the
    reciprocal-zero convention instead.
    """
    if n >= 0:
        out = 1
        for i in range(n):
            out = out * (1 - b * q ** i)
        return out
    den = inv_qpoch(b, q, n)
    if _is_exact_zero(den):
        raise PoleError(f"(b;q)_{n} has a vanishing factor in the denominator")
    return _recip(den)


def inv_qpoch(b, q, n: int):
    """1/(b;q)_n as a ring element: a plain product when n < 0."""
    if n >= 0:
        return 1 / qpoch(b, q, n)
    out = 1
    for i in range(1, -n + 1):
        out = out * (1 - b * q ** (-i))
    return out


def _is_exact_zero(x) -> bool:
    if hasattr(x, "is_zero"):
        return x.is_zero()
    return x == 0


@dataclass
class QPochExt:
    """(b;q)_n with n in Z and the reciprocal-zero convention flagged."""
    value: object
    pole: bool

    def reciprocal(self):
        if self.pole:
            return QPochExt(0, False)
        return QPochExt(1 / self.value, False)


def qpoch_ext(b, q, n: int) -> QPochExt:
    if n >= 0:
        return QPochExt(qpoch(b, q, n), False)
    den = inv_qpoch(b, q, n)
    if _is_exact_zero(den):
        return QPochExt(None, True)
    return QPochExt(1 / den, False)


def qpoch_inf(b, q, eps: float = ELL_TRUNC_EPS) -> complex:
    """(b;q)_infty by truncated product, |q| < 1."""
    q = complex(q)
    if abs(q) >= 1:
        raise ValueError("(b;q)_infty needs |q| < 1")
    out = 1.0 + 0.0j
    term = complex(b)
    aq = abs(q)
    bound = abs(term)
    while bound > eps:
        out *= 1 - term
        term *= q
        bound *= aq
    return out


def qpoch_z(b, q, z) -> complex:
    """(b;q)_z = (b;q)_infty / (b q^z;q)_infty for complex z, 0 < |q| < 1."""
    q = complex(q)
    return qpoch_inf(b, q) / qpoch_inf(b * q ** z, q)


def qt_poch(b, q, t, lam: Partition):
    """(b;q,t)_lambda, row-product form; cell form available for checks."""
    lam = Partition(lam)
    out = 1
    for i, part in enumerate(lam.parts, start=1):
        out = out * qpoch(b * t ** (1 - i), q, part)
    return out


def qt_poch_cells(b, q, t, lam: Partition):
    """(b;q,t)_lambda as the product over cells of (1 - b q^{a'} t^{-l'})."""
    lam = Partition(lam)
    out = 1
    for (i, j) in lam.cells():
        out = out * (1 - b * q ** (j - 1) * t ** (1 - i))
    return out


def gamma_poch(b, g, lam: Partition):
    """(b;gamma)_lambda = prod_i (b + (1-i) gamma)_{lambda_i}."""
    lam = Partition(lam)
    out = 1
    for i, part in enumerate(lam.parts, start=1):
        out = out * poch(b + (1 - i) * g, part)
    return out


# ---------------------------------------------------------------------------
# hook polynomials
# ---------------------------------------------------------------------------

def hooks(lam: Partition, q, t):
    """Generalised hook polynomials (c_lambda, c'_lambda, b_lambda)."""
    lam = Partition(lam)
    c = 1
    cp = 1
    for (i, j) in lam.cells():
        a = lam.arm(i, j)
        l = lam.leg(i, j)
        c = c * (1 - q ** a * t ** (l + 1))
        cp = cp * (1 - q ** (a + 1) * t ** l)
    return c, cp, c * _recip(cp)


def hooks_row_form(lam: Partition, q, t, n: int):
    """Row-product forms of (c_lambda, c'_lambda) for any padding n >= l(lambda)."""
    lam = Partition(lam)
    if n < len(lam):
        raise ValueError("padding too short")
    c = 1
    cp = 1
    for i in range(1, n + 1):
        c = c * qpoch(t ** (n - i + 1), q, lam.part(i))
        cp = cp * qpoch(q * t ** (n - i), q, lam.part(i))
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            d = lam.part(i) - lam.part(j)
            c = c * qpoch(t ** (j - i), q, d) / qpoch(t ** (j - i + 1), q, d)
            cp = cp * qpoch(q * t ** (j - i - 1), q, d) / qpoch(q * t ** (j - i), q, d)
    return c, cp


def b_hook(lam: Partition, q, t):
    c, cp, b = hooks(lam, q, t)
    return b


# ---------------------------------------------------------------------------
# gamma functions
# ---------------------------------------------------------------------------

_LANCZOS_G = 7
_LANCZOS = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)


def _is_nonpositive_int(z: complex, tol: float = 1e-12) -> bool:
    z = complex(z)
    return (abs(z.imag) < tol and z.real < 0.5
            and abs(z.real - round(z.real)) < tol)


def gamma(z) -> complex:
    """Complex Gamma via Lanczos with reflection; PoleError at 0, -1, -2, ..."""
    z = complex(z)
    if _is_nonpositive_int(z):
        raise PoleError(f"Gamma pole at {z}")
    if z.real < 0.5:
        return math.pi / (cmath.sin(math.pi * z) * gamma(1 - z))
    z -= 1
    x = _LANCZOS[0]
    for i in range(1, len(_LANCZOS)):
        x += _LANCZOS[i] / (z + i)
    t = z + _LANCZOS_G + 0.5
    out = math.sqrt(2 * math.pi) * t ** (z + 0.5) * cmath.exp(-t) * x
    if abs(out.imag) < 1e-15 * abs(out.real):
        out = complex(out.real, 0.0)
    return out


def lgamma(z) -> complex:
    """A logarithm of Gamma(z), branch-consistent only up to 2*pi*i per call.

    Safe inside gamma_ratio because the ambiguities exponentiate to 1.
    """
    z = complex(z)
    if _is_nonpositive_int(z):
        raise PoleError(f"Gamma pole at {z}")
    if z.real < 0.5:
        return (cmath.log(math.pi) - cmath.log(cmath.sin(math.pi * z))
                - lgamma(1 - z))
    z -= 1
    x = _LANCZOS[0]
    for i in range(1, len(_LANCZOS)):
        x += _LANCZOS[i] / (z + i)
    t = z + _LANCZOS_G + 0.5
    return (0.5 * math.log(2 * math.pi) + (z + 0.5) * cmath.log(t) - t
            + cmath.log(x))


def gamma_ratio(nums, dens) -> complex:
    """prod Gamma(nums) / prod Gamma(dens) in log space with pole pairing.

    Gamma poles in the denominator produce zeros; paired poles (one up, one
    down at nonpositive integers) are resolved by the reflection limit
    Gamma(-m+e)/Gamma(-n+e) -> (-1)^(n-m) n!/m!.
    """
    num_poles = [z for z in nums if _is_nonpositive_int(z)]
    den_poles = [z for z in dens if _is_nonpositive_int(z)]
    if len(num_poles) > len(den_poles):
        raise PoleError("unpaired Gamma pole in numerator")
    if len(num_poles) < len(den_poles):
        return 0.0
    extra = 1.0 + 0.0j
    for zn, zd in zip(sorted(num_poles, key=lambda z: z.real),
                      sorted(den_poles, key=lambda z: z.real)):
        m = round(-zn.real)
        n = round(-zd.real)
        extra *= (-1.0) ** ((n - m) % 2) * math.factorial(n) / math.factorial(m)
    acc = 0.0 + 0.0j
    for z in nums:
        if not _is_nonpositive_int(z):
            acc += lgamma(z)
    for z in dens:
        if not _is_nonpositive_int(z):
            acc -= lgamma(z)
    return extra * cmath.exp(acc)


def gamma_q(z, q) -> complex:
    """q-gamma function for 0 < q < 1."""
    q = complex(q)
    if not (0 < q.real < 1 and abs(q.imag) < 1e-15):
        raise ValueError("Gamma_q needs 0 < q < 1")
    z = complex(z)
    return (qpoch_inf(q, q) / qpoch_inf(q ** z, q)) * (1 - q) ** (1 - z)


# ---------------------------------------------------------------------------
# theta and elliptic gamma
# ---------------------------------------------------------------------------

@dataclass
class EllipticParams:
    p: complex
    q: complex
    trunc_eps: float = ELL_TRUNC_EPS

    def __post_init__(self):
        if abs(self.p) >= 1 or abs(self.q) >= 1:
            raise ValueError("elliptic parameters need |p|, |q| < 1")


def theta(z, p, eps: float = ELL_TRUNC_EPS) -> complex:
    """Modified theta theta(z;p) = (z;p)_inf (p/z;p)_inf, z != 0, |p| < 1."""
    z = complex(z)
    if z == 0:
        raise ZeroDivisionError("theta(0; p) undefined")
    return qpoch_inf(z, p, eps) * qpoch_inf(complex(p) / z, p, eps)


def theta_poch(b, q, p, n: int, eps: float = ELL_TRUNC_EPS) -> complex:
    """Elliptic shifted factorial (b;q,p)_n = prod theta(b q^i;p), n in Z."""
    if n >= 0:
        out = 1.0 + 0.0j
        for i in range(n):
            out *= theta(complex(b) * complex(q) ** i, p, eps)
        return out
    out = 1.0 + 0.0j
    for i in range(1, -n + 1):
        out *= theta(complex(b) * complex(q) ** (-i), p, eps)
    return 1 / out


def ell_gamma(z, p, q, eps: float = ELL_TRUNC_EPS) -> complex:
    """Elliptic gamma by the truncated double product, accumulated in log space."""
    z = complex(z)
    p = complex(p)
    q = complex(q)
    if z == 0:
        raise ZeroDivisionError("elliptic gamma undefined at z = 0")
    mp, mq = abs(p), abs(q)
    np_ = _trunc_order(mp, eps)
    nq = _trunc_order(mq, eps)
    acc = 0.0 + 0.0j
    pq_over_z = p * q / z
    pi_ = 1.0 + 0.0j
    for i in range(np_):
        qj_num = pq_over_z * pi_
        qj_den = z * pi_
        for j in range(nq):
            num = 1 - qj_num
            den = 1 - qj_den
            if den == 0:
                raise PoleError(f"elliptic gamma pole at z={z}")
            acc += cmath.log(num) - cmath.log(den)
            qj_num *= q
            qj_den *= q
        pi_ *= p
    return cmath.exp(acc)


def _trunc_order(m: float, eps: float) -> int:
    if m == 0:
        return 1
    return max(2, int(math.log(eps) / math.log(m)) + 2)


def ell_qt_poch(b, q, t, p, lam: Partition, eps: float = ELL_TRUNC_EPS) -> complex:
    """(b;q,t;p)_lambda = prod_i (b t^{1-i};q,p)_{lambda_i}."""
    lam = Partition(lam)
    out = 1.0 + 0.0j
    for i, part in enumerate(lam.parts, start=1):
        out *= theta_poch(complex(b) * complex(t) ** (1 - i), q, p, part, eps)
    return out


def delta0(a, bs, q, t, p, lam: Partition) -> complex:
    """Well-poised ratio Delta0_lambda(a | b_1..b_k; q,t;p)."""
    lam = Partition(lam)
    pq = complex(p) * complex(q)
    out = 1.0 + 0.0j
    for b in bs:
        num = ell_qt_poch(b, q, t, p, lam)
        den = ell_qt_poch(pq * complex(a) / complex(b), q, t, p, lam)
        if den == 0:
            raise PoleError("Delta0 denominator vanished")
        out *= num / den
    return out


def delta0_bipartite(a, bs, t, p, q, blam) -> complex:
    """Delta0 for a bipartition: (q,t;p) factor times (p,t;q) factor."""
    lam1, lam2 = blam
    return (delta0(a, bs, q, t, p, lam1) * delta0(a, bs, p, t, q, lam2))


def c_minus(b, q, t, p, lam: Partition) -> complex:
    """C^-_lambda(b;q,t;p) = prod over cells of theta(b q^arm t^leg; p)."""
    lam = Partition(lam)
    out = 1.0 + 0.0j
    for (i, j) in lam.cells():
        out *= theta(complex(b) * complex(q) ** lam.arm(i, j)
                     * complex(t) ** lam.leg(i, j), p)
    return out


def c_plus(b, q, t, p, lam: Partition) -> complex:
    """C^+_lambda(b;q,t;p) = prod theta(b q^{lam_i+j-1} t^{2-lam'_j-i}; p)."""
    lam = Partition(lam)
    conj = lam.conjugate()
    out = 1.0 + 0.0j
    for (i, j) in lam.cells():
        out *= theta(complex(b) * complex(q) ** (lam.part(i) + j - 1)
                     * complex(t) ** (2 - conj.part(j) - i), p)
    return out
