"""Macdonald polynomials P/Q and skews over Q(q,t), Jack polynomials over
Q(gamma), specialisation formulas, and evaluation symmetry.

P_lambda is computed basis-free (an m-basis coefficient map) by solving the
unitriangular orthogonality system for the q,t-Hall scalar product; Jack
polynomials are built independently over Q(gamma) with the scalar product
<p_lam, p_mu> = delta z_lam gamma^{-l(lam)}, not as a limit (the numeric
q -> 1 limit along t = q^gamma is kept as a cross-check in the tests).
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .coeffs import hooks, poch, qpoch, qt_poch
from .field import FieldElement, fe, var
from .partitions import Partition, partitions_of, spectral_vector, subpartitions
from .symfunc import (
    Alphabet, Letters, Ratio, Sum, SymFunc,
    monomial_expansion, plethysm, z_lambda,
)

__all__ = [
    "macdonald_P", "macdonald_Q", "skew_P", "skew_Q", "jack_P",
    "b_lambda", "macdonald_hall_norm",
    "principal_spec_a", "principal_spec_n", "jack_binomial_spec",
    "single_row_xminusy", "evaluation_symmetry_check",
    "generalized_evaluation_symmetry_check", "jack_eval", "plethysm_eval",
]


def _qvar():
    return var("q")


def _tvar():
    return var("t")


# ---------------------------------------------------------------------------
# scalar products in the p-basis
# ---------------------------------------------------------------------------

def _hall_norm_qt(rho: Partition) -> FieldElement:
    q, t = _qvar(), _tvar()
    out = fe(z_lambda(rho))
    for part in rho:
        out = out * (1 - q ** part) / (1 - t ** part)
    return out


def _hall_norm_gamma(rho: Partition) -> FieldElement:
    g = var("gamma")
    return fe(z_lambda(rho)) * g ** (-len(rho))


@lru_cache(maxsize=None)
def _m_in_p(d: int) -> dict[Partition, dict[Partition, Fraction]]:
    from .symfunc import _m_to_basis
    return _m_to_basis("p", d)


def _gram_matrix(d: int, norm) -> dict[tuple[Partition, Partition], FieldElement]:
    """<m_lam, m_mu> for all lam, mu of degree d under the given p-norm."""
    lams = list(partitions_of(d)) if d else [Partition()]
    minp = _m_in_p(d)
    norms = {rho: norm(rho) for rho in lams}
    out = {}
    for i, lam in enumerate(lams):
        for mu in lams[i:]:
            acc = fe(0)
            for rho, a in minp[lam].items():
                b = minp[mu].get(rho)
                if b is not None:
                    acc = acc + fe(a * b) * norms[rho]
            out[(lam, mu)] = acc
            out[(mu, lam)] = acc
    return out


def _orthogonal_family(d: int, norm) -> dict[Partition, SymFunc]:
    """Monic dominance-unitriangular family orthogonal for the given norm."""
    lams = list(partitions_of(d)) if d else [Partition()]
    gram = _gram_matrix(d, norm)
    family: dict[Partition, SymFunc] = {}
    # lams is in decreasing lexicographic order (refines dominance downward);
    # process from the smallest up so each solve sees only smaller partitions
    for pos in range(len(lams) - 1, -1, -1):
        lam = lams[pos]
        smaller = lams[pos + 1:]
        if not smaller:
            family[lam] = SymFunc("m", {lam: fe(1)})
            continue
        k = len(smaller)
        # solve sum_mu u_mu <m_mu, m_nu> = -<m_lam, m_nu> for nu smaller
        mat = [[gram[(nu, mu)] for mu in smaller] for nu in smaller]
        rhs = [fe(-1) * gram[(nu, lam)] for nu in smaller]
        sol = _solve_field(mat, rhs)
        coeffs = {lam: fe(1)}
        for mu, u in zip(smaller, sol):
            if not u.is_zero():
                coeffs[mu] = u
        family[lam] = SymFunc("m", coeffs)
    return family


def _solve_field(mat, rhs):
    n = len(rhs)
    a = [row[:] + [rhs[i]] for i, row in enumerate(mat)]
    for col in range(n):
        piv = next(r for r in range(col, n) if not a[r][col].is_zero())
        a[col], a[piv] = a[piv], a[col]
        inv = fe(1) / a[col][col]
        a[col] = [x * inv for x in a[col]]
        for r in range(n):
            if r != col and not a[r][col].is_zero():
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [a[i][n] for i in range(n)]


# ---------------------------------------------------------------------------
# construction by the branching rule (horizontal strips)
# ---------------------------------------------------------------------------

def _horizontal_strip_preds(lam: Partition):
    """mu with mu subseteq lam and lam/mu a horizontal strip."""
    lam = Partition(lam)
    if not lam:
        yield Partition()
        return
    ranges = [(lam.part(i + 1), lam.part(i)) for i in range(1, len(lam) + 1)]

    def rec(i, acc):
        if i == len(ranges):
            yield Partition(acc)
            return
        lo, hi = ranges[i]
        upper = min(hi, acc[-1]) if acc else hi
        for v in range(upper, lo - 1, -1):
            yield from rec(i + 1, acc + (v,))

    yield from rec(0, ())


def _b_cell_qt(lam: Partition, i: int, j: int) -> FieldElement:
    q, t = _qvar(), _tvar()
    a, l = lam.arm(i, j), lam.leg(i, j)
    return (1 - q ** a * t ** (l + 1)) / (1 - q ** (a + 1) * t ** l)


def _b_cell_gamma(lam: Partition, i: int, j: int) -> FieldElement:
    g = var("gamma")
    a, l = lam.arm(i, j), lam.leg(i, j)
    return (a + (l + 1) * g) / ((a + 1) + l * g)


def _psi_coeff(lam: Partition, mu: Partition, b_cell) -> FieldElement:
    """Branching coefficient: prod over cells of mu in strip rows but not
    strip columns of b_mu(s)/b_lam(s)."""
    strip_rows = {i for i in range(1, len(lam) + 1) if lam.part(i) > mu.part(i)}
    strip_cols = set()
    for i in range(1, len(lam) + 1):
        for j in range(mu.part(i) + 1, lam.part(i) + 1):
            strip_cols.add(j)
    out = fe(1)
    for (i, j) in mu.cells():
        if i in strip_rows and j not in strip_cols:
            out = out * b_cell(mu, i, j) / b_cell(lam, i, j)
    return out


@lru_cache(maxsize=None)
def _psi_cached(lam: Partition, mu: Partition, kind: str) -> FieldElement:
    b_cell = _b_cell_qt if kind == "qt" else _b_cell_gamma
    return _psi_coeff(lam, mu, b_cell)


@lru_cache(maxsize=None)
def _coeff_at(lam: Partition, evec: tuple[int, ...], kind: str) -> FieldElement:
    """Coefficient of x_1^{e_1}..x_k^{e_k} in P_lambda(x_1..x_k), by branching."""
    lam = Partition(lam)
    if not evec:
        return fe(1) if not lam else fe(0)
    e_last = evec[-1]
    total = fe(0)
    for mu in _horizontal_strip_preds(lam):
        if lam.size - mu.size != e_last or len(mu) > len(evec) - 1:
            continue
        sub = _coeff_at(mu, evec[:-1], kind)
        if sub.is_zero():
            continue
        total = total + _psi_cached(lam, mu, kind) * sub
    return total


def _family_member(lam: Partition, kind: str) -> SymFunc:
    lam = Partition(lam)
    if not lam:
        return SymFunc("m", {Partition(): fe(1)})
    coeffs: dict[Partition, FieldElement] = {}
    for mu in partitions_of(lam.size):
        if not lam.dominates(mu):
            continue
        c = _coeff_at(lam, mu.parts, kind)
        if not c.is_zero():
            coeffs[mu] = c
    return SymFunc("m", coeffs)


@lru_cache(maxsize=None)
def macdonald_P(lam: Partition) -> SymFunc:
    """P_lambda(q,t) in the m-basis with FieldElement(q,t) coefficients."""
    return _family_member(Partition(lam), "qt")


def macdonald_Q(lam: Partition) -> SymFunc:
    lam = Partition(lam)
    return macdonald_P(lam).scale(b_lambda(lam))


def b_lambda(lam: Partition) -> FieldElement:
    _, _, b = hooks(lam, _qvar(), _tvar())
    return b


@lru_cache(maxsize=None)
def jack_P(lam: Partition) -> SymFunc:
    """Jack P^(1/gamma)_lambda in the m-basis over Q(gamma)."""
    return _family_member(Partition(lam), "gamma")


def macdonald_hall_norm(lam: Partition) -> FieldElement:
    """<P_lambda, P_lambda> for the q,t-Hall scalar product."""
    lam = Partition(lam)
    f = macdonald_P(lam).to_basis("p")
    acc = fe(0)
    for rho, c in f.coeffs.items():
        acc = acc + c * c * _hall_norm_qt(rho)
    return acc


# ---------------------------------------------------------------------------
# skew Macdonald polynomials via two-alphabet expansion
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _skew_table(lam: Partition) -> dict[Partition, SymFunc]:
    """All P_{lam/mu} as m-basis SymFuncs, extracted from P_lam[X + Y]."""
    lam = Partition(lam)
    if not lam:
        return {Partition(): SymFunc("m", {Partition(): fe(1)})}
    nx = lam.size
    ny = len(lam)
    # expand P_lam in nx + ny variables, first nx are X, last ny are Y
    pm = macdonald_P(lam).to_basis("m")
    nvars = nx + ny
    buckets: dict[tuple[int, ...], dict[tuple[int, ...], FieldElement]] = {}
    for nu, c in pm.coeffs.items():
        if len(nu) > nvars:
            continue
        for exps, _ in monomial_expansion(nu, nvars):
            xpart, ypart = exps[:nx], exps[nx:]
            b = buckets.setdefault(ypart, {})
            b[xpart] = b.get(xpart, fe(0)) + c
    # P_mu expansions in the Y variables for all mu with l(mu) <= ny
    mus = [mu for mu in subpartitions(lam) if len(mu) <= ny]
    mus.sort(key=lambda m: (-m.size, m.parts))  # by degree, then lex ascending
    pm_y: dict[Partition, dict[tuple[int, ...], FieldElement]] = {}
    for mu in mus:
        exp_map = {}
        for nu, c in macdonald_P(mu).to_basis("m").coeffs.items():
            for exps, _ in monomial_expansion(nu, ny):
                exp_map[exps] = exp_map.get(exps, fe(0)) + c
        pm_y[mu] = exp_map
    # peel off coefficients: process mu of each degree from lex-largest down
    out: dict[Partition, SymFunc] = {}
    for d in sorted({mu.size for mu in mus}, reverse=True):
        degree_mus = sorted((mu for mu in mus if mu.size == d),
                            key=lambda m: m.parts, reverse=True)
        for mu in degree_mus:
            key = mu.parts + (0,) * (ny - len(mu))
            coeff_map = dict(buckets.get(key, {}))
            # subtract contributions of lex-larger nu of the same degree
            for nu in degree_mus:
                if nu.parts <= mu.parts or nu not in out:
                    continue
                w = pm_y[nu].get(key)
                if w is None:
                    continue
                for xexp, c in _sf_to_xmap(out[nu], nx).items():
                    coeff_map[xexp] = coeff_map.get(xexp, fe(0)) - c * w
            sf_coeffs: dict[Partition, FieldElement] = {}
            for xexp, c in coeff_map.items():
                if isinstance(c, FieldElement) and c.is_zero():
                    continue
                se = tuple(sorted((x for x in xexp if x), reverse=True))
                if xexp[:len(se)] == se and not any(xexp[len(se):]):
                    sf_coeffs[Partition(se)] = c
            out[mu] = SymFunc("m", sf_coeffs)
    return out


def _sf_to_xmap(f: SymFunc, nx: int) -> dict[tuple[int, ...], FieldElement]:
    out: dict[tuple[int, ...], FieldElement] = {}
    for nu, c in f.to_basis("m").coeffs.items():
        for exps, _ in monomial_expansion(nu, nx):
            out[exps] = out.get(exps, fe(0)) + c
    return out


def skew_P(lam: Partition, mu: Partition) -> SymFunc:
    """P_{lam/mu}; zero unless mu is contained in lam."""
    lam, mu = Partition(lam), Partition(mu)
    if not lam.contains(mu):
        return SymFunc("m", {})
    return _skew_table(lam)[mu]


def skew_Q(lam: Partition, mu: Partition) -> SymFunc:
    """Q_{lam/mu} = (b_lam / b_mu) P_{lam/mu}."""
    lam, mu = Partition(lam), Partition(mu)
    if not lam.contains(mu):
        return SymFunc("m", {})
    return skew_P(lam, mu).scale(b_lambda(lam) / b_lambda(mu))


# ---------------------------------------------------------------------------
# specialisation formulas
# ---------------------------------------------------------------------------

def principal_spec_a(lam: Partition, a, q=None, t=None):
    """P_lambda[(1-a)/(1-t)] = t^{n(lam)} (a;q,t)_lam / c_lam(q,t)."""
    lam = Partition(lam)
    if q is None:
        q = _qvar()
    if t is None:
        t = _tvar()
    c, _, _ = hooks(lam, q, t)
    return t ** lam.n_stat() * qt_poch(a, q, t, lam) / c


def principal_spec_n(lam: Partition, n: int, q=None, t=None):
    """P_lambda[(1-t^n)/(1-t)], the principal specialisation."""
    if t is None:
        t = _tvar()
    return principal_spec_a(lam, t ** n, q=q, t=t)


def jack_binomial_spec(lam: Partition, z, g=None, k: int | None = None):
    """Jack polynomial at a binomial element z, fully factorised.

    P^(1/gamma)_lam[z] = (z g;g)_lam / (k g;g)_lam *
                         prod_{i<j<=k} ((j-i+1)g)_{lam_i-lam_j} / ((j-i)g)_{..}
    for any padding k >= l(lam).
    """
    lam = Partition(lam)
    if g is None:
        g = var("gamma")
    if k is None:
        k = max(len(lam), 1)
    if k < len(lam):
        raise ValueError("padding too short")
    from .coeffs import _recip, gamma_poch
    out = gamma_poch(z * g, g, lam) * _recip(gamma_poch(k * g, g, lam))
    for i in range(1, k + 1):
        for j in range(i + 1, k + 1):
            d = lam.part(i) - lam.part(j)
            out = out * poch((j - i + 1) * g, d) * _recip(poch((j - i) * g, d))
    return out


def jack_eval(lam: Partition, xs, g, shift=None):
    """P^(1/gamma)_lam at points xs (plus optional binomial shift), numeric g."""
    lam = Partition(lam)

    def pk(k: int) -> complex:
        v = sum(complex(x) ** k for x in xs)
        if shift is not None:
            v += complex(shift)
        return v

    return plethysm_eval(jack_P(lam), pk, {"gamma": g})


def plethysm_eval(f: SymFunc, pk_fn, env: dict) -> complex:
    """Numeric plethysm: p_k -> pk_fn(k), coefficients evaluated at env."""
    fp = f.to_basis("p")
    cache: dict[int, complex] = {}

    def pk(k):
        if k not in cache:
            cache[k] = complex(pk_fn(k))
        return cache[k]

    total = 0.0 + 0.0j
    for rho, c in fp.coeffs.items():
        cv = c.eval(env) if isinstance(c, FieldElement) else c
        term = complex(cv)
        for part in rho:
            term *= pk(part)
        total += term
    return total


def single_row_xminusy(r: int, x, y, q=None, t=None):
    """P_(r)([x - y];q,t) as the terminating 2phi1 sum (single letters x, y)."""
    if q is None:
        q = _qvar()
    if t is None:
        t = _tvar()
    if r < 0:
        raise ValueError("row length must be >= 0")
    # x^r * 2phi1(t^{-1}, q^{-r}; q^{1-r} t^{-1}; q, yq/x), terminating at k=r
    acc = 0
    for k in range(r + 1):
        num = qpoch(1 / t, q, k) * qpoch(q ** (-r), q, k)
        den = qpoch(q ** (1 - r) / t, q, k) * qpoch(q, q, k)
        acc = acc + (x ** r) * num * (y * q / x) ** k / den
    return acc


# ---------------------------------------------------------------------------
# evaluation symmetry
# ---------------------------------------------------------------------------

def evaluation_symmetry_check(lam: Partition, mu: Partition, n: int) -> bool:
    """Eq: P_mu[<0>_n] P_lam[<mu>_n] = P_lam[<0>_n] P_mu[<lam>_n], exact."""
    lam, mu = Partition(lam), Partition(mu)
    if len(lam) > n or len(mu) > n:
        raise ValueError("length exceeds n")
    lhs = (plethysm(macdonald_P(mu), Letters(spectral_vector(Partition(), n)))
           * plethysm(macdonald_P(lam), Letters(spectral_vector(mu, n))))
    rhs = (plethysm(macdonald_P(lam), Letters(spectral_vector(Partition(), n)))
           * plethysm(macdonald_P(mu), Letters(spectral_vector(lam, n))))
    return fe(lhs) == fe(rhs)


def generalized_evaluation_symmetry_check(lam: Partition, mu: Partition,
                                          n: int, m: int) -> bool:
    """Nonsymmetric evaluation symmetry with symbolic a, exact in Q(q,t,a)."""
    lam, mu = Partition(lam), Partition(mu)
    if len(lam) > n or len(mu) > m:
        raise ValueError("length exceeds padding")
    a, t = var("a"), _tvar()

    def shifted(spec_part: Partition, npad: int) -> Alphabet:
        pref = a * t ** (-npad)
        return Sum(Letters([pref * v for v in spectral_vector(spec_part, npad)]),
                   Ratio(fe(1), pref, t))

    lhs = (plethysm(macdonald_P(mu), Ratio(fe(1), a, t))
           * plethysm(macdonald_P(lam), shifted(mu, m)))
    rhs = (plethysm(macdonald_P(lam), Ratio(fe(1), a, t))
           * plethysm(macdonald_P(mu), shifted(lam, n)))
    return fe(lhs) == fe(rhs)
