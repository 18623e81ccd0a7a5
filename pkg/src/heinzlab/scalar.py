"""Scalar means, the Kantorovich constant and scalar inequality checks.

Conventions (scalar only): ``sharp(rho, sigma, k) = rho**k * sigma**(1-k)``
and ``nabla(rho, sigma, k) = k*rho + (1-k)*sigma``; both put the weight
``k`` on ``rho``.  The operator means in :mod:`heinzlab.means` follow the
opposite (operator) convention and the two are never mixed.

Every ``check_*`` function returns a :class:`~heinzlab.result.CheckResult`
oriented as ``lhs <= rhs``.
"""
from __future__ import annotations

import math
from typing import NamedTuple, Sequence

from .config import TOL_REL
from .errors import ParameterError
from .result import CheckResult

PAPER_STATED = "paper_stated"
DERIVED_CORRECTED = "derived_corrected"
FORMS = (PAPER_STATED, DERIVED_CORRECTED)

KANTOROVICH_DIRECTIONS = ("refine_A5", "reverse_A5", "refine_A6", "reverse_A7", "reverse_A8")


def _positive(*values):
    for v in values:
        if not (v > 0.0 and math.isfinite(v)):
            raise ParameterError(f"expected a positive finite number, got {v}")


def _unit(name, v):
    if not (0.0 <= v <= 1.0):
        raise ParameterError(f"{name} must lie in [0, 1], got {v}")


def kantorovich(t: float) -> float:
    """K(t, 2) = (t + 1)^2 / (4 t)."""
    if not (t > 0.0) or not math.isfinite(t):
        raise ParameterError(f"Kantorovich constant needs t > 0, got {t}")
    return (t + 1.0) ** 2 / (4.0 * t)


def sharp(rho: float, sigma: float, kappa: float) -> float:
    return rho**kappa * sigma ** (1.0 - kappa)


def nabla(rho: float, sigma: float, kappa: float) -> float:
    return kappa * rho + (1.0 - kappa) * sigma


def _heinz_exponents(kappa: float) -> tuple[float, float]:
    # hi/lo are derived from one another so that kappa and 1-kappa give
    # bit-identical pairs (1 - hi is exact for hi in [1/2, 1]).
    hi = kappa if kappa >= 0.5 else 1.0 - kappa
    return 1.0 - hi, hi


def heinz_mean(rho: float, sigma: float, kappa: float) -> float:
    lo, hi = _heinz_exponents(kappa)
    return 0.5 * (rho**hi * sigma**lo + rho**lo * sigma**hi)


def heron_mean(rho: float, sigma: float, theta: float) -> float:
    return (1.0 - theta) * math.sqrt(rho * sigma) + theta * 0.5 * (rho + sigma)


class ScalarMeans(NamedTuple):
    arith_nabla: float
    geom_sharp: float
    heinz: float
    heron: float


def scalar_means(rho: float, sigma: float, kappa: float, theta: float = 0.5) -> ScalarMeans:
    _positive(rho, sigma)
    _unit("kappa", kappa)
    if not (theta >= 0.0):
        raise ParameterError(f"theta must be >= 0, got {theta}")
    return ScalarMeans(
        nabla(rho, sigma, kappa),
        sharp(rho, sigma, kappa),
        heinz_mean(rho, sigma, kappa),
        heron_mean(rho, sigma, theta),
    )


# ---------------------------------------------------------------------------
# Young-type inequalities
# ---------------------------------------------------------------------------

def check_young(rho, sigma, kappa, tol=TOL_REL) -> CheckResult:
    """Weighted AM-GM: sharp <= nabla."""
    _positive(rho, sigma)
    _unit("kappa", kappa)
    return CheckResult.compare(sharp(rho, sigma, kappa), nabla(rho, sigma, kappa), tol, "Y1")


def check_amgm(rho, sigma, tol=TOL_REL) -> CheckResult:
    _positive(rho, sigma)
    return CheckResult.compare(math.sqrt(rho * sigma), 0.5 * (rho + sigma), tol, "Y2")


def _refined_young_sides(rho, sigma, w, m, r_exp):
    r0 = min(w, 1.0 - w)
    lhs = sharp(rho, sigma, w) ** m + r0**m * (rho ** (m / 2) - sigma ** (m / 2)) ** 2
    rhs = (w * rho**r_exp + (1.0 - w) * sigma**r_exp) ** (m / r_exp)
    return lhs, rhs


def _check_m_r(m, r_exp):
    if int(m) != m or m < 1:
        raise ParameterError(f"m must be a positive integer, got {m}")
    if not (r_exp >= 1.0):
        raise ParameterError(f"r must be >= 1, got {r_exp}")


def check_young_refined(rho, sigma, kappa, m=1, r_exp=1.0, tol=TOL_REL) -> CheckResult:
    """Refined Young inequality with the ``r0^m (rho^{m/2} - sigma^{m/2})^2`` term."""
    _positive(rho, sigma)
    _unit("kappa", kappa)
    _check_m_r(m, r_exp)
    lhs, rhs = _refined_young_sides(rho, sigma, kappa, int(m), float(r_exp))
    return CheckResult.compare(lhs, rhs, tol, "Y3")


def conjugate_exponent(p: float) -> float:
    if not (p > 1.0):
        raise ParameterError(f"Hoelder exponent must exceed 1, got {p}")
    return p / (p - 1.0)


def check_conjugate(p, q):
    if not (p > 1.0 and q > 1.0) or abs(1.0 / p + 1.0 / q - 1.0) > 1e-12:
        raise ParameterError(f"(p, q) = ({p}, {q}) are not conjugate exponents")


def check_man1(rho, sigma, p, q, m=1, r_exp=1.0, tol=TOL_REL) -> CheckResult:
    """Refined Young inequality with conjugate exponents (weight 1/p on rho)."""
    _positive(rho, sigma)
    check_conjugate(p, q)
    _check_m_r(m, r_exp)
    m = int(m)
    r0 = min(1.0 / p, 1.0 / q)
    lhs = (rho ** (1.0 / p) * sigma ** (1.0 / q)) ** m + r0**m * (rho ** (m / 2) - sigma ** (m / 2)) ** 2
    rhs = (rho**r_exp / p + sigma**r_exp / q) ** (m / r_exp)
    return CheckResult.compare(lhs, rhs, tol, "Man1")


def check_kantorovich_young(rho, sigma, kappa, direction, tol=TOL_REL) -> CheckResult:
    """Multiplicative Kantorovich refinements/reversals of Young's inequality.

    ``h = sigma / rho``; ``r, R`` are min/max of ``kappa, 1 - kappa`` and
    ``r', R'`` the min/max of ``2r, 1 - 2r``.
    """
    _positive(rho, sigma)
    _unit("kappa", kappa)
    h = sigma / rho
    r = min(kappa, 1.0 - kappa)
    big_r = max(kappa, 1.0 - kappa)
    rp = min(2 * r, 1 - 2 * r)
    big_rp = max(2 * r, 1 - 2 * r)
    g = sharp(rho, sigma, kappa)
    a = nabla(rho, sigma, kappa)
    sq = (math.sqrt(rho) - math.sqrt(sigma)) ** 2
    if direction == "refine_A5":
        lhs, rhs = kantorovich(h) ** r * g, a
    elif direction == "reverse_A5":
        lhs, rhs = a, kantorovich(h) ** big_r * g
    elif direction == "refine_A6":
        lhs, rhs = r * sq + kantorovich(math.sqrt(h)) ** rp * g, a
    elif direction == "reverse_A7":
        lhs, rhs = a, kantorovich(math.sqrt(h)) ** (-rp) * g + big_r * sq
    elif direction == "reverse_A8":
        lhs, rhs = a - big_r * sq, kantorovich(math.sqrt(h)) ** big_rp * g
    else:
        raise ParameterError(f"unknown direction {direction!r}; expected one of {KANTOROVICH_DIRECTIONS}")
    return CheckResult.compare(lhs, rhs, tol, direction)


# ---------------------------------------------------------------------------
# Heinz and Heron means
# ---------------------------------------------------------------------------

def check_heinz_interpolation(rho, sigma, kappa, tol=TOL_REL) -> CheckResult:
    """sqrt(rho sigma) <= H_kappa <= (rho + sigma)/2, as two parts."""
    _positive(rho, sigma)
    _unit("kappa", kappa)
    h = heinz_mean(rho, sigma, kappa)
    return CheckResult.combine(
        [
            CheckResult.compare(math.sqrt(rho * sigma), h, tol, "geometric<=heinz"),
            CheckResult.compare(h, 0.5 * (rho + sigma), tol, "heinz<=arithmetic"),
        ],
        "A9",
    )


def check_heron_monotone(rho, sigma, theta, varrho, tol=TOL_REL) -> CheckResult:
    """F_theta <= F_varrho for 0 <= theta <= varrho."""
    _positive(rho, sigma)
    if not (0.0 <= theta <= varrho):
        raise ParameterError("need 0 <= theta <= varrho")
    return CheckResult.compare(heron_mean(rho, sigma, theta), heron_mean(rho, sigma, varrho), tol, "heron-monotone")


def check_bhatia_heron(rho, sigma, kappa, tol=TOL_REL) -> CheckResult:
    """H_kappa <= F_{(2 kappa - 1)^2}."""
    _positive(rho, sigma)
    _unit("kappa", kappa)
    theta = (2.0 * kappa - 1.0) ** 2
    return CheckResult.compare(heinz_mean(rho, sigma, kappa), heron_mean(rho, sigma, theta), tol, "A20")


def _nu_kappa(kappa, nu):
    _unit("kappa", kappa)
    if not (0.0 <= nu < kappa):
        raise ParameterError(f"need 0 <= nu < kappa <= 1, got nu={nu}, kappa={kappa}")
    w = nu / kappa
    r = min(w, 1.0 - w)
    return w, r, max(w, 1.0 - w), min(2 * r, 1 - 2 * r)


def _form(form):
    if form not in FORMS:
        raise ParameterError(f"unknown form {form!r}; expected one of {FORMS}")


def b2_identity(rho, sigma, kappa, nu) -> tuple[float, float, float]:
    """Three equal expressions of the weighted identity behind the Heinz refinements.

    Returns ``(nu rho + (1-nu) sigma - (nu/kappa)(nabla - sharp),
    (nu/kappa) rho^kappa sigma^(1-kappa) + (1 - nu/kappa) sigma,
    nabla(sharp(rho, sigma, kappa), sigma, nu/kappa))``.
    """
    w = nu / kappa
    g = sharp(rho, sigma, kappa)
    first = nu * rho + (1 - nu) * sigma - w * (nabla(rho, sigma, kappa) - g)
    second = w * rho**kappa * sigma ** (1 - kappa) + (1 - w) * sigma
    return first, second, nabla(g, sigma, w)


def _lemma_kantorovich_arg(rho, sigma, kappa, form):
    # stated: sqrt(rho/sigma); derived: the Kantorovich argument of the
    # sharpened Young step applied to (rho #_kappa sigma, sigma), whose
    # ratio is (sigma/rho)^kappa
    if form == PAPER_STATED:
        return math.sqrt(rho / sigma)
    return (sigma / rho) ** (kappa / 2)


def check_heinz_scalar_lemmas(rho, sigma, kappa, nu, which, form=DERIVED_CORRECTED, tol=TOL_REL) -> CheckResult:
    """Kantorovich refinement (``B1``) or reverse (``B3``) of the weighted identity.

    ``form='paper_stated'`` uses ``h = rho / sigma``;
    ``form='derived_corrected'`` uses the ratio of the pair
    ``(rho #_k sigma, sigma)``, which is ``(sigma/rho)^kappa``.
    """
    _positive(rho, sigma)
    _form(form)
    w, r, big_r, rp = _nu_kappa(kappa, nu)
    g = sharp(rho, sigma, kappa)
    mid = b2_identity(rho, sigma, kappa, nu)[0]
    k = kantorovich(_lemma_kantorovich_arg(rho, sigma, kappa, form))
    gn = sharp(rho, sigma, nu)
    sq = (math.sqrt(g) - math.sqrt(sigma)) ** 2
    if which == "B1":
        return CheckResult.compare(r * sq + k**rp * gn, mid, tol, f"B1/{form}")
    if which == "B3":
        return CheckResult.compare(mid, k ** (-rp) * gn + big_r * sq, tol, f"B3/{form}")
    raise ParameterError(f"unknown lemma {which!r}")


def heinz_bracket(rho, sigma, kappa, coefficient: float) -> float:
    return heinz_mean(rho, sigma, kappa) + heinz_mean(rho, sigma, 0.0) - coefficient * heinz_mean(rho, sigma, kappa / 2)


def check_heinz_refined(rho, sigma, kappa, nu, which, form=DERIVED_CORRECTED, tol=TOL_REL) -> CheckResult:
    """Kantorovich sharpening of the Heinz inequality (``A1``) and its reverse (``A2``).

    ``paper_stated`` evaluates the statement as written: bracket
    ``H_k + H_0 - H_{k/2}``, ``h = rho/sigma`` and (for ``A2``) the
    coefficient ``min{w, 1-w}``.  ``derived_corrected`` is the sum of the
    corrected B1 bound with its rho/sigma swap: bracket ``H_k + H_0 - 2 H_{k/2}``,
    Kantorovich argument ``(rho/sigma)^(kappa/2)``, and ``max{w, 1-w}`` on
    the reverse.
    """
    _positive(rho, sigma)
    _form(form)
    w, r, big_r, rp = _nu_kappa(kappa, nu)
    h0 = heinz_mean(rho, sigma, 0.0)
    hk = heinz_mean(rho, sigma, kappa)
    hn = heinz_mean(rho, sigma, nu)
    mid = h0 - w * (h0 - hk)
    if form == PAPER_STATED:
        k = kantorovich(math.sqrt(rho / sigma))
        bracket = heinz_bracket(rho, sigma, kappa, 1.0)
        coef = r
    else:
        k = kantorovich((rho / sigma) ** (kappa / 2))
        bracket = heinz_bracket(rho, sigma, kappa, 2.0)
        coef = big_r
    if which == "A1":
        return CheckResult.compare(r * bracket + k**rp * hn, mid, tol, f"A1/{form}")
    if which == "A2":
        return CheckResult.compare(mid, k ** (-rp) * hn + coef * bracket, tol, f"A2/{form}")
    raise ParameterError(f"unknown theorem {which!r}")


# ---------------------------------------------------------------------------
# weighted AM-GM families
# ---------------------------------------------------------------------------

def check_weights(weights: Sequence[float]) -> None:
    if any(not (0.0 <= w <= 1.0) for w in weights):
        raise ParameterError("weights must lie in [0, 1]")
    if abs(math.fsum(weights) - 1.0) > 1e-12:
        raise ParameterError(f"weights must sum to 1, got {math.fsum(weights)!r}")


def check_furu(weights: Sequence[float], omegas: Sequence[float], tol=TOL_REL) -> CheckResult:
    """prod w^t + r (sum w - n (prod w)^(1/n)) <= sum t w, r = min t."""
    if len(weights) != len(omegas) or not weights:
        raise ParameterError("weights and omegas must have the same positive length")
    check_weights(weights)
    _positive(*omegas)
    n = len(omegas)
    r = min(weights)
    logs = [math.log(o) for o in omegas]
    geo_w = math.exp(math.fsum(t * lg for t, lg in zip(weights, logs)))
    geo = math.exp(math.fsum(logs) / n)
    lhs = geo_w + r * (math.fsum(omegas) - n * geo)
    rhs = math.fsum(t * o for t, o in zip(weights, omegas))
    return CheckResult.compare(lhs, rhs, tol, "Furu")


def check_constrained_scalar(gammas: Sequence[float], omegas: Sequence[float], tol=TOL_REL) -> CheckResult:
    """Concavity of asinh: the weighted mean dominates the weighted log-mean of x + sqrt(1+x^2)."""
    if len(gammas) != len(omegas) or not gammas:
        raise ParameterError("gammas and omegas must have the same positive length")
    if any(g < 0.0 for g in gammas):
        raise ParameterError("gammas must be non-negative")
    total = math.fsum(gammas)
    if total <= 0.0:
        raise ParameterError("sum of gammas must be positive")
    _positive(*omegas)
    mean = math.fsum(g * o for g, o in zip(gammas, omegas)) / total
    rhs = mean + math.sqrt(1.0 + mean * mean)
    lhs = math.exp(math.fsum(g * math.log(o + math.sqrt(1.0 + o * o)) for g, o in zip(gammas, omegas)) / total)
    return CheckResult.compare(lhs, rhs, tol, "Constrained")
