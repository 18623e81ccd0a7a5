"""Matrix, operator, trace and determinant inequality checks.

Every check returns a :class:`~heinzlab.result.CheckResult` whose
``parts`` hold the individual comparisons (one per norm, per singular
value, per grid pair ...).  Labels of norm-dependent parts are prefixed
with the norm label, e.g. ``"ky_fan:2|left<=mid"``.

Loewner-order statements report ``slack = lambda_min(rhs - lhs)`` with the
spectral norms of both sides in ``lhs``/``rhs``.
"""
from __future__ import annotations

import math
from dataclasses import asdict, dataclass
from typing import Optional, Sequence

import numpy as np

from . import scalar
from .config import TOL_REL, theta_grid
from .errors import DimensionError, ParameterError, PreconditionError
from .linalg import (
    NormSelector,
    _same_dims,
    as_matrix,
    check_positive,
    eig_hermitian,
    fractional_power,
    hermitize,
    norm_family,
    singular_values,
)
from .means import (
    InterpolantTerms,
    MonotoneFunctionSpec,
    _GeomMeanBase,
    corollary_matrix,
)
from .result import CheckResult

CONDITION_RTOL = 1e-9

HEINZ_STATEMENTS = ("refine_O1", "reverse_A2op")


def _norms(dim: int, sels: Optional[Sequence[NormSelector]]) -> list[NormSelector]:
    return list(sels) if sels else norm_family(dim)


def _norm_values(m: np.ndarray, sels: Sequence[NormSelector]) -> list[float]:
    s = singular_values(m)
    return [sel.of_singular_values(s) for sel in sels]


def _loewner(lhs: np.ndarray, rhs: np.ndarray, tol: float, label: str) -> CheckResult:
    gap = eig_hermitian(hermitize(rhs - lhs)).values[-1]
    return CheckResult.from_slack(_spectral(lhs), _spectral(rhs), gap, tol, label)


def _spectral(h: np.ndarray) -> float:
    return float(np.max(np.abs(eig_hermitian(hermitize(h)).values)))


def _pd(a):
    return check_positive(a, definite=True)


# ---------------------------------------------------------------------------
# structural lemmas
# ---------------------------------------------------------------------------

def check_schur_norm_bound(t, s, sels=None, tol=TOL_REL) -> CheckResult:
    """``|||T o S||| <= max_i t_ii |||S|||`` for positive semi-definite ``T``."""
    t, _ = check_positive(t)
    s = as_matrix(s)
    n = _same_dims(t, s)
    sels = _norms(n, sels)
    dmax = float(np.max(t.diagonal().real))
    lhs = _norm_values(t * s, sels)
    rhs = _norm_values(s, sels)
    return CheckResult.combine(
        [CheckResult.compare(a, dmax * b, tol, sel.label) for sel, a, b in zip(sels, lhs, rhs)]
    )


def hhm2_matrix(kappas, r: float, t: float) -> np.ndarray:
    k = np.asarray(kappas, dtype=float)
    if k.ndim != 1 or k.size == 0 or np.any(k <= 0.0):
        raise ParameterError("kappas must be a non-empty list of positive numbers")
    if not (-1.0 <= r <= 1.0):
        raise ParameterError(f"r must lie in [-1, 1], got {r}")
    if not (-2.0 < t <= 2.0):
        raise ParameterError(f"t must lie in (-2, 2], got {t}")
    ki, kj = k[:, None], k[None, :]
    return (ki**r + kj**r) / (ki**2 + t * ki * kj + kj**2)


def check_hhm2_psd(kappas, r: float, t: float, tol=TOL_REL) -> CheckResult:
    """The Cauchy-like matrix ``(k_i^r + k_j^r) / (k_i^2 + t k_i k_j + k_j^2)`` is PSD."""
    g = hhm2_matrix(kappas, r, t)
    lam = eig_hermitian(g.astype(complex)).values
    return CheckResult.from_slack(0.0, float(np.max(np.abs(lam))), float(lam[-1]), tol, "min-eigenvalue")


# ---------------------------------------------------------------------------
# interpolation of means
# ---------------------------------------------------------------------------

def _grid_split(grid):
    grid = sorted(set(float(g) for g in grid))
    if 0.5 not in grid:
        raise ParameterError("theta grid must contain 1/2")
    low = [g for g in grid if g < 0.5]
    high = [g for g in grid if g >= 0.5]
    return low, high


def _monotone_parts(values: dict, low, high, sels, name, tol):
    parts = []
    for i, sel in enumerate(sels):
        for g in low:
            parts.append(CheckResult.compare(values[g][i], values[0.5][i], tol, f"{sel.label}|{name}({g:g})<={name}(0.5)"))
        for a, b in zip(high, high[1:]):
            parts.append(CheckResult.compare(values[a][i], values[b][i], tol, f"{sel.label}|{name}({a:g})<={name}({b:g})"))
    return parts


def _interpolant_check(t, s, x, kappa, sels, grid, tol, name):
    terms = InterpolantTerms.build(t, s, x, kappa)
    sels = _norms(terms.geo.shape[0], sels)
    low, high = _grid_split(grid if grid is not None else theta_grid())
    build = terms.psi_matrix if name == "psi" else terms.phi_matrix
    values = {g: _norm_values(build(g), sels) for g in low + high}
    return CheckResult.combine(_monotone_parts(values, low, high, sels, name, tol))


def check_psi_monotone(t, s, x, kappa, sels=None, grid=None, tol=TOL_REL) -> CheckResult:
    """``psi(theta) <= psi(1/2)`` on ``[0, 1/2]`` and ``psi`` non-decreasing on ``[1/2, inf)``.

    ``psi(theta) = |||(1-theta) T^k X S^{1-k} + theta (TX + XS)/2|||``,
    sampled on the versioned grid.
    """
    return _interpolant_check(t, s, x, kappa, sels, grid, tol, "psi")


def check_phi_monotone(t, s, x, kappa, sels=None, grid=None, tol=TOL_REL) -> CheckResult:
    """Same shape as :func:`check_psi_monotone` for
    ``phi(theta) = |||(1-theta/2)(T^k X S^{1-k} + T^{1-k} X S^k) + theta (TX + XS)/2|||``.
    """
    return _interpolant_check(t, s, x, kappa, sels, grid, tol, "phi")


def check_chain_refund2(t, s, x, kappa, t_param, sels=None, tol=TOL_REL) -> CheckResult:
    """``|||G||| <= |||G + G'|||/2 <= |||TX + XS + t G||| / (t + 2)``.

    ``G = T^k X S^{1-k}`` and ``G' = T^{1-k} X S^k``.
    """
    if not (-2.0 < t_param <= 2.0):
        raise ParameterError(f"t must lie in (-2, 2], got {t_param}")
    terms = InterpolantTerms.build(t, s, x, kappa)
    sels = _norms(terms.geo.shape[0], sels)
    left = _norm_values(terms.geo, sels)
    mid = _norm_values(terms.geo + terms.geo_swap, sels)
    right = _norm_values(terms.tx + terms.xs + t_param * terms.geo, sels)
    parts = []
    for sel, a, b, c in zip(sels, left, mid, right):
        parts.append(CheckResult.compare(a, 0.5 * b, tol, f"{sel.label}|left<=mid"))
        parts.append(CheckResult.compare(0.5 * b, c / (t_param + 2.0), tol, f"{sel.label}|mid<=right"))
    return CheckResult.combine(parts)


def _psi_floor(terms, sels, grid):
    _, high = _grid_split(grid if grid is not None else theta_grid())
    per_theta = [_norm_values(terms.psi_matrix(g), sels) for g in high]
    return [min(v[i] for v in per_theta) for i in range(len(sels))]


def _mu_values(mu):
    return [float(mu)] if np.ndim(mu) == 0 else [float(v) for v in mu]


def _mu_label(mus, mu):
    return f"mu={mu:g}|" if len(mus) > 1 else ""


def check_corollary_functional_bound(t, s, x, kappa, mu, fn: MonotoneFunctionSpec, variant: str,
                                     sels=None, grid=None, tol=TOL_REL) -> CheckResult:
    """Mean functional ``<= psi(theta)`` for every grid ``theta >= 1/2``.

    The right side of each part is the smallest ``psi`` over that range.
    ``mu`` may be a sequence, in which case every value is checked against
    the same ``psi`` floor.
    """
    terms = InterpolantTerms.build(t, s, x, kappa)
    sels = _norms(terms.geo.shape[0], sels)
    rhs = _psi_floor(terms, sels, grid)
    mus = _mu_values(mu)
    parts = []
    for m_ in mus:
        m, c = corollary_matrix(t, s, x, m_, fn, variant)
        lhs = _norm_values(m, sels)
        parts += [CheckResult.compare(c * a, b, tol, f"{_mu_label(mus, m_)}{sel.label}|{variant}<=psi")
                  for sel, a, b in zip(sels, lhs, rhs)]
    return CheckResult.combine(parts)


def check_heinz_pair_bound(t, s, x, kappa, mu, sels=None, grid=None, tol=TOL_REL) -> CheckResult:
    """``|||T^mu X S^{1-mu} + T^{1-mu} X S^mu||| / 2 <= psi(theta)`` for ``theta >= 1/2``."""
    terms = InterpolantTerms.build(t, s, x, kappa)
    sels = _norms(terms.geo.shape[0], sels)
    rhs = _psi_floor(terms, sels, grid)
    mus = _mu_values(mu)
    parts = []
    for m_ in mus:
        pair = InterpolantTerms.build(t, s, x, m_)
        lhs = _norm_values(pair.geo + pair.geo_swap, sels)
        parts += [CheckResult.compare(0.5 * a, b, tol, f"{_mu_label(mus, m_)}{sel.label}|heinz-pair<=psi")
                  for sel, a, b in zip(sels, lhs, rhs)]
    return CheckResult.combine(parts)


# ---------------------------------------------------------------------------
# operator Heinz refinements
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SpectralCondition:
    """Scalar bounds on the spectra of ``T`` and ``S``.

    Variant ``a``: ``m <= T <= m' < M' <= S <= M``.
    Variant ``b``: ``m <= S <= m' <= T <= M`` (``M_prime`` is unused and
    stored equal to ``m_prime``).
    """

    m: float
    m_prime: float
    M_prime: float
    M: float
    variant: str

    def __post_init__(self):
        m, mp, bp, b = self.m, self.m_prime, self.M_prime, self.M
        if self.variant == "a":
            ok = 0.0 < m <= mp < bp <= b
        elif self.variant == "b":
            ok = 0.0 < m <= mp <= b
        else:
            raise ParameterError(f"unknown condition variant {self.variant!r}")
        if not ok:
            raise ParameterError(f"invalid spectral condition {self}")

    @property
    def h(self) -> float:
        return self.M / self.m

    def t_interval(self) -> tuple[float, float]:
        return (self.m, self.m_prime) if self.variant == "a" else (self.m_prime, self.M)

    def s_interval(self) -> tuple[float, float]:
        return (self.M_prime, self.M) if self.variant == "a" else (self.m, self.m_prime)

    def ratio_interval(self) -> tuple[float, float]:
        """Range forced on the spectrum of ``T^{-1/2} S T^{-1/2}``."""
        if self.variant == "a":
            return self.M_prime / self.m_prime, self.M / self.m
        return self.m / self.M, 1.0

    def validate(self, t: np.ndarray, s: np.ndarray) -> None:
        for name, a, (lo, hi) in (("T", t, self.t_interval()), ("S", s, self.s_interval())):
            lam = eig_hermitian(a).values
            slack = CONDITION_RTOL * max(1.0, hi)
            if lam[-1] < lo - slack or lam[0] > hi + slack:
                raise PreconditionError(
                    f"spectrum of {name} [{lam[-1]:.6g}, {lam[0]:.6g}] is outside [{lo:.6g}, {hi:.6g}]"
                )

    def to_dict(self) -> dict:
        return asdict(self)


def min_kantorovich_power(lo: float, hi: float, kappa: float) -> float:
    """``min K(x^{k/2})`` over ``x`` in ``[lo, hi]``."""
    if lo <= 1.0 <= hi:
        return 1.0
    return scalar.kantorovich((lo if lo > 1.0 else hi) ** (kappa / 2.0))


def operator_heinz_sides(t, s, cond: SpectralCondition, kappa, nu, which, form):
    """Both sides (matrices) of the operator Heinz refinement or its reverse."""
    scalar._form(form)
    w, r, big_r, rp = scalar._nu_kappa(kappa, nu)
    t, _ = _pd(t)
    s, _ = _pd(s)
    _same_dims(t, s)
    cond.validate(t, s)
    base = _GeomMeanBase(t, s)
    h0, hk, hh, hn = base.heinz(0.0), base.heinz(kappa), base.heinz(kappa / 2.0), base.heinz(nu)
    mid = h0 - w * (h0 - hk)
    if form == scalar.PAPER_STATED:
        k = scalar.kantorovich(math.sqrt(cond.h))
        bracket = hk + h0 - hh
        coef = r
    else:
        k = min_kantorovich_power(*cond.ratio_interval(), kappa)
        bracket = hk + h0 - 2.0 * hh
        coef = big_r
    if which == "refine_O1":
        return r * bracket + k**rp * hn, mid
    if which == "reverse_A2op":
        return mid, k ** (-rp) * hn + coef * bracket
    raise ParameterError(f"unknown statement {which!r}; expected one of {HEINZ_STATEMENTS}")


def check_operator_heinz(t, s, cond: SpectralCondition, kappa, nu, which, form=scalar.DERIVED_CORRECTED,
                         tol=TOL_REL) -> CheckResult:
    """Loewner-order Kantorovich refinement (``refine_O1``) or reverse (``reverse_A2op``)
    of the operator Heinz inequality.

    ``paper_stated`` uses ``h = M/m``, bracket ``H_k + H_0 - H_{k/2}`` and
    ``min{w, 1-w}`` on the reverse bracket.  ``derived_corrected`` uses the
    smallest ``K(x^{k/2})`` over the interval that the condition forces on
    ``T^{-1/2} S T^{-1/2}``, the bracket ``H_k + H_0 - 2 H_{k/2}`` and
    ``max{w, 1-w}`` on the reverse.
    """
    lhs, rhs = operator_heinz_sides(t, s, cond, kappa, nu, which, form)
    return _loewner(lhs, rhs, tol, f"{which}/{form}")


# ---------------------------------------------------------------------------
# Young-type inequalities for singular values, traces, determinants, norms
# ---------------------------------------------------------------------------

def _conjugate(p, q):
    scalar.check_conjugate(p, q)


def check_ando(t, s, p, q, tol=TOL_REL) -> CheckResult:
    """``s_j(TS) <= s_j(T^p/p + S^q/q)`` for every ``j``."""
    _conjugate(p, q)
    t, tdec = check_positive(t)
    s, sdec = check_positive(s)
    _same_dims(t, s)
    lhs = singular_values(t @ s)
    rhs = singular_values(fractional_power(tdec, p) / p + fractional_power(sdec, q) / q)
    return CheckResult.combine([CheckResult.compare(a, b, tol, f"s{j + 1}") for j, (a, b) in enumerate(zip(lhs, rhs))])


def _check_m_r(m, r_exp):
    scalar._check_m_r(m, r_exp)
    return int(m), float(r_exp)


def check_trace_young(t, s, p, q, m=1, r_exp=1.0, tol=TOL_REL) -> CheckResult:
    """Refined trace Young inequality and its trace-norm restatement.

    ``(tr|T^{1/p} S^{1/q}|)^m + r0^m ((tr T)^{m/2} - (tr S)^{m/2})^2
    <= (tr(T^r)/p + tr(S^r)/q)^{m/r}``.
    """
    _conjugate(p, q)
    m, r_exp = _check_m_r(m, r_exp)
    t, tdec = _pd(t)
    s, sdec = _pd(s)
    _same_dims(t, s)
    r0 = min(1.0 / p, 1.0 / q)
    prod = fractional_power(tdec, 1.0 / p) @ fractional_power(sdec, 1.0 / q)
    trace_norm = float(np.sum(singular_values(prod)))
    tr_t, tr_s = float(np.sum(tdec.values)), float(np.sum(sdec.values))
    refinement = r0**m * (tr_t ** (m / 2) - tr_s ** (m / 2)) ** 2
    t_r, s_r = fractional_power(tdec, r_exp), fractional_power(sdec, r_exp)
    rhs_trace = (float(np.trace(t_r).real) / p + float(np.trace(s_r).real) / q) ** (m / r_exp)
    rhs_norm = float(np.sum(singular_values(t_r / p + s_r / q))) ** (m / r_exp)
    norm_t, norm_s = float(np.sum(singular_values(t))), float(np.sum(singular_values(s)))
    lhs_norm = trace_norm**m + r0**m * (norm_t ** (m / 2) - norm_s ** (m / 2)) ** 2
    return CheckResult.combine(
        [
            CheckResult.compare(trace_norm**m + refinement, rhs_trace, tol, "trace"),
            CheckResult.compare(lhs_norm, rhs_norm, tol, "trace-norm"),
        ]
    )


def _hermitian_det(h: np.ndarray) -> float:
    return float(np.prod(eig_hermitian(hermitize(h)).values))


DET_FORMS = ("stated", "eigenwise")


def check_det_young(t, s, p, q, m=1, r_exp=1.0, form="stated", tol=TOL_REL) -> CheckResult:
    """Determinant Young refinement.

    Both sides share ``det(T^r/p + S^r/q)^{m/r}`` (right) and
    ``det(T^{1/p} S^{1/q})^m`` (left).  The additive term is

    * ``stated``:    ``r0^{mn} det(T^m + S^m - 2 S^{m/2} Z^m S^{m/2})^2``,
    * ``eigenwise``: ``r0^{mn} det(S)^m prod_j (z_j^{m/2} - 1)^2``,

    with ``Z = S^{-1/2} T S^{-1/2}`` and ``z_j`` its eigenvalues.
    """
    if form not in DET_FORMS:
        raise ParameterError(f"unknown form {form!r}; expected one of {DET_FORMS}")
    _conjugate(p, q)
    m, r_exp = _check_m_r(m, r_exp)
    t, tdec = _pd(t)
    s, sdec = _pd(s)
    n = _same_dims(t, s)
    r0 = min(1.0 / p, 1.0 / q)
    det_t, det_s = float(np.prod(tdec.values)), float(np.prod(sdec.values))
    rhs = _hermitian_det(fractional_power(tdec, r_exp) / p + fractional_power(sdec, r_exp) / q) ** (m / r_exp)
    base = (det_t ** (1.0 / p) * det_s ** (1.0 / q)) ** m
    s_inv_root = fractional_power(sdec, -0.5)
    zdec = eig_hermitian(hermitize(s_inv_root @ t @ s_inv_root))
    if form == "stated":
        s_half_m = fractional_power(sdec, m / 2.0)
        inner = fractional_power(tdec, m) + fractional_power(sdec, m) - 2.0 * s_half_m @ fractional_power(zdec, m) @ s_half_m
        extra = r0 ** (m * n) * _hermitian_det(inner) ** 2
    else:
        z = np.clip(zdec.values, 0.0, None)
        extra = r0 ** (m * n) * det_s**m * float(np.prod((z ** (m / 2.0) - 1.0) ** 2))
    return CheckResult.compare(base + extra, rhs, tol, f"det/{form}")


NORM_YOUNG_READINGS = ("XS", "SX")


def check_heinz_kato(t, s, x, theta, sels=None, tol=TOL_REL) -> CheckResult:
    """``|||T^theta X S^{1-theta}||| <= |||TX|||^theta |||XS|||^{1-theta}``."""
    scalar._unit("theta", theta)
    t, tdec = check_positive(t)
    s, sdec = check_positive(s)
    x = as_matrix(x)
    n = _same_dims(t, s, x)
    sels = _norms(n, sels)
    mid = _norm_values(fractional_power(tdec, theta) @ x @ fractional_power(sdec, 1.0 - theta), sels)
    tx, xs = _norm_values(t @ x, sels), _norm_values(x @ s, sels)
    return CheckResult.combine(
        [
            CheckResult.compare(a, b**theta * c ** (1.0 - theta), tol, f"{sel.label}|heinz-kato")
            for sel, a, b, c in zip(sels, mid, tx, xs)
        ]
    )


def check_trace_heinz_kato(t, s, theta, tol=TOL_REL) -> CheckResult:
    """``tr|T^theta S^{1-theta}| <= (tr T)^theta (tr S)^{1-theta}``."""
    scalar._unit("theta", theta)
    t, tdec = check_positive(t)
    s, sdec = check_positive(s)
    _same_dims(t, s)
    lhs = float(np.sum(singular_values(fractional_power(tdec, theta) @ fractional_power(sdec, 1.0 - theta))))
    tr_t, tr_s = float(np.sum(np.clip(tdec.values, 0, None))), float(np.sum(np.clip(sdec.values, 0, None)))
    return CheckResult.compare(lhs, tr_t**theta * tr_s ** (1.0 - theta), tol, "trace-heinz-kato")


def check_uinorm_young(t, s, x, p, q, m=1, r_exp=1.0, sels=None, reading="XS", tol=TOL_REL) -> CheckResult:
    """Norm Young refinement preceded by its Heinz-Kato step.

    ``|||T^{1/p} X S^{1/q}|||^m + r0^m (|||TX|||^{m/2} - |||YX|||^{m/2})^2
    <= (|||TX|||^r / p + |||XS|||^r / q)^{m/r}`` where the refinement term
    uses ``|||XS|||`` (``reading="XS"``) or ``|||SX|||`` (``reading="SX"``).
    """
    if reading not in NORM_YOUNG_READINGS:
        raise ParameterError(f"unknown reading {reading!r}; expected one of {NORM_YOUNG_READINGS}")
    _conjugate(p, q)
    m, r_exp = _check_m_r(m, r_exp)
    t, tdec = check_positive(t)
    s, sdec = check_positive(s)
    x = as_matrix(x)
    n = _same_dims(t, s, x)
    sels = _norms(n, sels)
    r0 = min(1.0 / p, 1.0 / q)
    mid = _norm_values(fractional_power(tdec, 1.0 / p) @ x @ fractional_power(sdec, 1.0 / q), sels)
    tx, xs = _norm_values(t @ x, sels), _norm_values(x @ s, sels)
    other = xs if reading == "XS" else _norm_values(s @ x, sels)
    parts = []
    for sel, a, b, c, d in zip(sels, mid, tx, xs, other):
        parts.append(CheckResult.compare(a, b ** (1.0 / p) * c ** (1.0 / q), tol, f"{sel.label}|heinz-kato"))
        lhs = a**m + r0**m * (b ** (m / 2) - d ** (m / 2)) ** 2
        rhs = (b**r_exp / p + c**r_exp / q) ** (m / r_exp)
        parts.append(CheckResult.compare(lhs, rhs, tol, f"{sel.label}|young-{reading}"))
    return CheckResult.combine(parts)


def _weighted_family(ts, weights):
    if len(ts) != len(weights) or len(ts) < 1:
        raise ParameterError("need one weight per matrix")
    scalar.check_weights(weights)
    decs = [_pd(a) for a in ts]
    _same_dims(*[h for h, _ in decs])
    return decs


def check_multi_trace(ts, weights, tol=TOL_REL) -> CheckResult:
    """``sum tr(w_k T_k) >= tr|prod T_k^{w_k}| + r (sum tr T_k - N (prod tr T_k)^{1/N})``.

    ``N`` is the number of matrices and ``r = min w_k``; the trace-norm
    restatement is a second part.
    """
    decs = _weighted_family(ts, weights)
    count = len(decs)
    r = min(weights)
    prod = np.eye(decs[0][0].shape[0], dtype=complex)
    for (_, dec), w in zip(decs, weights):
        prod = prod @ fractional_power(dec, w)
    trace_norm = float(np.sum(singular_values(prod)))
    traces = [float(np.sum(dec.values)) for _, dec in decs]
    geo = math.exp(math.fsum(math.log(v) for v in traces) / count)
    lhs = trace_norm + r * (math.fsum(traces) - count * geo)
    rhs = math.fsum(w * v for w, v in zip(weights, traces))
    total = sum(h for h, _ in decs)
    norms1 = [float(np.sum(singular_values(h))) for h, _ in decs]
    geo1 = math.exp(math.fsum(math.log(v) for v in norms1) / count)
    lhs1 = trace_norm + r * (float(np.sum(singular_values(total))) - count * geo1)
    rhs1 = float(np.sum(singular_values(sum(w * h for (h, _), w in zip(decs, weights)))))
    return CheckResult.combine(
        [CheckResult.compare(lhs, rhs, tol, "trace"), CheckResult.compare(lhs1, rhs1, tol, "trace-norm")]
    )


MULTI_DET_FORMS = ("stated", "rooted")


def check_multi_det(ts, weights, form="stated", tol=TOL_REL) -> CheckResult:
    """Weighted determinant refinement.

    Left side ``prod det(T_k)^{w_k}`` plus

    * ``stated``: ``r (det(sum T_k) - N (prod det T_k)^{1/N})``,
    * ``rooted``: ``r^n (sum det(T_k)^{1/n} - N (prod det T_k)^{1/(nN)})``,

    against ``det(sum w_k T_k)``; ``n`` is the dimension.
    """
    if form not in MULTI_DET_FORMS:
        raise ParameterError(f"unknown form {form!r}; expected one of {MULTI_DET_FORMS}")
    decs = _weighted_family(ts, weights)
    count, n = len(decs), decs[0][0].shape[0]
    r = min(weights)
    log_dets = [float(np.sum(np.log(dec.values))) for _, dec in decs]
    base = math.exp(math.fsum(w * ld for w, ld in zip(weights, log_dets)))
    if form == "stated":
        total = _hermitian_det(sum(h for h, _ in decs))
        extra = r * (total - count * math.exp(math.fsum(log_dets) / count))
    else:
        roots = math.fsum(math.exp(ld / n) for ld in log_dets)
        extra = r**n * (roots - count * math.exp(math.fsum(log_dets) / (n * count)))
    rhs = _hermitian_det(sum(w * h for (h, _), w in zip(decs, weights)))
    return CheckResult.compare(base + extra, rhs, tol, f"det/{form}")


def check_minkowski_det(t, s, tol=TOL_REL) -> CheckResult:
    """``det(T)^{1/n} + det(S)^{1/n} <= det(T + S)^{1/n}``."""
    t, tdec = _pd(t)
    s, sdec = _pd(s)
    n = _same_dims(t, s)
    lhs = float(np.prod(tdec.values ** (1.0 / n))) + float(np.prod(sdec.values ** (1.0 / n)))
    lam = eig_hermitian(t + s).values
    return CheckResult.compare(lhs, float(np.prod(np.clip(lam, 0.0, None) ** (1.0 / n))), tol, "minkowski")


CONSTRAINED_FORMS = ("stated", "weighted")


def check_constrained_trace(ts, gammas, form="stated", tol=TOL_REL) -> CheckResult:
    """Trace version of the asinh-concavity lemma.

    ``stated``: ``prod (tr T_k + sqrt(1 + tr T_k^2))^{1/G}
    <= u + sqrt(1 + u^2)`` with ``u = sum tr T_k / G``.
    ``weighted``: exponents ``gamma_k / G`` and ``u = sum gamma_k tr T_k / G``.
    """
    if form not in CONSTRAINED_FORMS:
        raise ParameterError(f"unknown form {form!r}; expected one of {CONSTRAINED_FORMS}")
    if len(ts) != len(gammas) or not ts:
        raise ParameterError("need one gamma per matrix")
    if any(g < 0.0 for g in gammas):
        raise ParameterError("gammas must be non-negative")
    total = math.fsum(gammas)
    if total <= 0.0:
        raise ParameterError("sum of gammas must be positive")
    decs = [_pd(a) for a in ts]
    _same_dims(*[h for h, _ in decs])
    traces = [float(np.sum(dec.values)) for _, dec in decs]
    squares = [float(np.sum(dec.values**2)) for _, dec in decs]
    expo = [1.0 / total] * len(ts) if form == "stated" else [g / total for g in gammas]
    coef = [1.0] * len(ts) if form == "stated" else list(gammas)
    u = math.fsum(c * v for c, v in zip(coef, traces)) / total
    lhs = math.exp(math.fsum(e * math.log(v + math.sqrt(1.0 + sq)) for e, v, sq in zip(expo, traces, squares)))
    return CheckResult.compare(lhs, u + math.sqrt(1.0 + u * u), tol, f"constrained/{form}")
