"""Registered inequality suites.

A suite couples a stable identifier with an instance sampler, an
evaluator and the bookkeeping the harness needs: whether violations are
asserted or only recorded, how parameters shrink, how operands transform
under unitary conjugation, and an analytic equality instance.

Identifiers follow ``S<group>.<topic>.<statement>``; groups are 0 (harness
self-test), 1 (scalar means), 2 (norm interpolation), 3 (scalar Heinz
refinements), 4 (operator Heinz refinements) and 5 (trace, determinant and
norm Young inequalities).
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence

import numpy as np

from . import scalar, suites
from .cases import (
    InequalityCase,
    WeightParams,
    gen_conditioned_pair,
    gen_positive,
    random_complex,
    sample_condition,
)
from .config import (
    M_MAX,
    MU_GRID,
    N_TERMS_MAX,
    P_MAX,
    R_EXP_MAX,
    SCALAR_HI,
    SCALAR_LO,
    SPECTRUM_HI,
    SPECTRUM_LO,
    T_GRID,
    TOL_REL,
)
from .errors import ParameterError
from .linalg import NormSelector, norm_family
from .means import BUILTIN_FUNCTIONS, _GeomMeanBase
from .result import CheckResult

# roles of operands under simultaneous unitary conjugation:
#   "L": U A U*, "R": V A V*, "X": U A V*, "P": one monomial (permutation
#   with phases) W applied as W A W* to every "P" operand, "-": left alone
Roles = tuple


@dataclass(frozen=True)
class EvalContext:
    tol: float = TOL_REL
    norms: Optional[tuple] = None

    def selectors(self, dim: int) -> list[NormSelector]:
        if not self.norms:
            return norm_family(dim)
        usable = [s for s in self.norms if s.canonical()[0] != "ky_fan" or s.canonical()[1] <= dim]
        return usable or [NormSelector.spectral()]


@dataclass(frozen=True)
class Suite:
    id: str
    anchor: str
    statement: str
    asserted: bool
    sampler: Callable[[np.random.Generator, int], tuple]
    evaluator: Callable[[InequalityCase, EvalContext], CheckResult]
    roles: Roles = ()
    same_unitary: bool = False
    scalar_only: bool = False
    targets: dict = field(default_factory=dict)
    equality: Optional[Callable[[], InequalityCase]] = None

    def make_case(self, seed: int, dim: int) -> InequalityCase:
        from .cases import rng_for

        if self.scalar_only:
            dim = 1
        rng = rng_for(seed)
        params, cond, operands = self.sampler(rng, dim)
        dim = operands[0].shape[0] if operands else dim
        return InequalityCase(self.id, int(dim), int(seed), params, cond, tuple(operands))

    def evaluate(self, case: InequalityCase, ctx: EvalContext = EvalContext()) -> CheckResult:
        return self.evaluator(case, ctx)


# ---------------------------------------------------------------------------
# samplers
# ---------------------------------------------------------------------------

def _weight(rng, positive=False):
    u = rng.random()
    if u < 0.04:
        return 0.5
    if u < 0.08:
        return 1.0
    if u < 0.12 and not positive:
        return 0.0
    if positive:
        return float(1.0 - rng.random())
    return float(rng.random())


def _scalar_pair(rng):
    lo, hi = math.log(SCALAR_LO), math.log(SCALAR_HI)
    return float(math.exp(rng.uniform(lo, hi))), float(math.exp(rng.uniform(lo, hi)))


def _as_scalars(*values):
    return [np.array([[complex(v)]]) for v in values]


def _m_r(rng):
    m = int(rng.integers(1, M_MAX + 1))
    r_exp = 1.0 if rng.random() < 0.2 else float(rng.uniform(1.0, R_EXP_MAX))
    return m, r_exp


def _p_q(rng):
    p = 2.0 if rng.random() < 0.1 else float(math.exp(rng.uniform(math.log(1.05), math.log(P_MAX))))
    return p, p / (p - 1.0)


def _pd(rng, dim):
    return gen_positive(dim, SPECTRUM_LO, SPECTRUM_HI, rng)


def _nu_below(rng, kappa):
    return 0.0 if rng.random() < 0.05 else float(kappa * rng.random())


def _simplex(rng, count):
    return tuple(float(w) for w in rng.dirichlet(np.ones(count)))


def _omegas(rng, count):
    lo, hi = math.log(SCALAR_LO), math.log(SCALAR_HI)
    return [float(math.exp(rng.uniform(lo, hi))) for _ in range(count)]


def _scalars(case):
    return [float(a[0, 0].real) for a in case.operands]


def _check_scalar_operands(case):
    for a in case.operands:
        if a.shape != (1, 1) or a[0, 0].imag != 0.0:
            raise ParameterError("scalar suites take 1x1 real operands")


# ---------------------------------------------------------------------------
# suite builders
# ---------------------------------------------------------------------------

_SUITES: dict[str, Suite] = {}


def _register(suite: Suite) -> Suite:
    if suite.id in _SUITES:
        raise ValueError(f"duplicate suite id {suite.id}")
    _SUITES[suite.id] = suite
    return suite


def _pair_suite(sid, anchor, statement, check, sample_params, asserted=True, targets=None, eq_params=None):
    """Scalar statement about a pair; also evaluated with the pair swapped."""

    def sampler(rng, dim):
        rho, sigma = _scalar_pair(rng)
        return sample_params(rng), None, _as_scalars(rho, sigma)

    def evaluator(case, ctx):
        _check_scalar_operands(case)
        rho, sigma = _scalars(case)
        return CheckResult.combine(
            [
                check(rho, sigma, case.params, ctx.tol).relabel("direct"),
                check(sigma, rho, case.params, ctx.tol).relabel("swapped"),
            ]
        )

    def equality():
        return InequalityCase(sid, 1, 0, eq_params or sample_params(np.random.default_rng(0)), None, tuple(_as_scalars(2.5, 2.5)))

    return _register(Suite(sid, anchor, statement, asserted, sampler, evaluator, scalar_only=True,
                           targets=targets or {}, equality=equality))


_KAPPA_TARGET = {"kappa": 0.5}
_NU_TARGETS = {"kappa": 0.5, "nu": lambda prm: 0.5 * prm.kappa}


def _kappa_only(rng):
    return WeightParams(kappa=_weight(rng))


def _kappa_nu(rng):
    kappa = _weight(rng, positive=True)
    return WeightParams(kappa=kappa, nu=_nu_below(rng, kappa))


_pair_suite("S1.young.Y1", "Young (Y1)", "rho#_k sigma <= rho nabla_k sigma",
            lambda a, b, p, tol: scalar.check_young(a, b, p.kappa, tol), _kappa_only, targets=_KAPPA_TARGET,
            eq_params=WeightParams(kappa=0.3))
_pair_suite("S1.young.Y2", "AM-GM (Y2)", "sqrt(rho sigma) <= (rho + sigma)/2",
            lambda a, b, p, tol: scalar.check_amgm(a, b, tol), lambda rng: WeightParams(),
            eq_params=WeightParams())


def _young_refined_params(rng):
    m, r_exp = _m_r(rng)
    return WeightParams(kappa=_weight(rng), m=m, r_exp=r_exp)


_pair_suite("S1.young.Y3", "refined Young (Y3)",
            "(rho#_k sigma)^m + r0^m (rho^{m/2} - sigma^{m/2})^2 <= (k rho^r + (1-k) sigma^r)^{m/r}",
            lambda a, b, p, tol: scalar.check_young_refined(a, b, p.kappa, p.m, p.r_exp, tol),
            _young_refined_params, targets={"kappa": 0.5, "m": 1, "r_exp": 1.0},
            eq_params=WeightParams(kappa=0.3, m=2, r_exp=1.5))

for _direction, _sid, _anchor, _stmt in (
    ("refine_A5", "S1.kantorovich.A5.refine", "Kantorovich (A5) refinement", "K(h)^r rho#_k sigma <= rho nabla_k sigma"),
    ("reverse_A5", "S1.kantorovich.A5.reverse", "Kantorovich (A5) reverse", "rho nabla_k sigma <= K(h)^R rho#_k sigma"),
    ("refine_A6", "S1.kantorovich.A6", "Kantorovich (A6)", "r (sqrt rho - sqrt sigma)^2 + K(sqrt h)^{r'} rho#_k sigma <= rho nabla_k sigma"),
    ("reverse_A7", "S1.kantorovich.A7", "Kantorovich (A7)", "rho nabla_k sigma <= K(sqrt h)^{-r'} rho#_k sigma + R (sqrt rho - sqrt sigma)^2"),
    ("reverse_A8", "S1.kantorovich.A8", "Kantorovich (A8)", "rho nabla_k sigma - R (sqrt rho - sqrt sigma)^2 <= K(sqrt h)^{R'} rho#_k sigma"),
):
    _pair_suite(_sid, _anchor, _stmt,
                (lambda d: lambda a, b, p, tol: scalar.check_kantorovich_young(a, b, p.kappa, d, tol))(_direction),
                _kappa_only, targets=_KAPPA_TARGET, eq_params=WeightParams(kappa=0.3))

_pair_suite("S1.heinz.A9", "Heinz interpolation (A9)", "sqrt(rho sigma) <= H_k <= (rho + sigma)/2",
            lambda a, b, p, tol: scalar.check_heinz_interpolation(a, b, p.kappa, tol), _kappa_only,
            targets=_KAPPA_TARGET, eq_params=WeightParams(kappa=0.3))
_pair_suite("S1.heron.A20", "Heinz-Heron bound (A20)", "H_k <= F_{(2k-1)^2}",
            lambda a, b, p, tol: scalar.check_bhatia_heron(a, b, p.kappa, tol), _kappa_only,
            targets=_KAPPA_TARGET, eq_params=WeightParams(kappa=0.3))


def _heron_params(rng):
    a, b = sorted(float(x) for x in rng.uniform(0.0, 10.0, 2))
    return WeightParams(theta=a, varrho=b)


_pair_suite("S1.heron.mono", "Heron monotonicity", "F_theta <= F_varrho for theta <= varrho",
            lambda a, b, p, tol: scalar.check_heron_monotone(a, b, p.theta, p.varrho, tol), _heron_params,
            targets={"theta": 0.5, "varrho": 1.0}, eq_params=WeightParams(theta=0.5, varrho=2.0))

for _which, _label in (("B1", "refinement (B1)"), ("B3", "reverse (B3)")):
    for _form, _suffix, _asserted in ((scalar.PAPER_STATED, "stated", False), (scalar.DERIVED_CORRECTED, "derived", True)):
        _pair_suite(f"S3.{_which}.{_suffix}", f"Kantorovich lemma {_label}, {_suffix}",
                    f"weighted-identity Kantorovich {_label} ({_form})",
                    (lambda w, f: lambda a, b, p, tol: scalar.check_heinz_scalar_lemmas(a, b, p.kappa, p.nu, w, f, tol))(_which, _form),
                    _kappa_nu, asserted=_asserted, targets=_NU_TARGETS, eq_params=WeightParams(kappa=0.6, nu=0.2))

for _which, _label in (("A1", "Heinz refinement (Heinz-A1)"), ("A2", "Heinz reverse (Heinz-A2)")):
    for _form, _suffix, _asserted in ((scalar.PAPER_STATED, "stated", False), (scalar.DERIVED_CORRECTED, "derived", True)):
        _pair_suite(f"S3.heinz.{_which}.{_suffix}", f"{_label}, {_suffix}",
                    f"Kantorovich {_label} ({_form})",
                    (lambda w, f: lambda a, b, p, tol: scalar.check_heinz_refined(a, b, p.kappa, p.nu, w, f, tol))(_which, _form),
                    _kappa_nu, asserted=_asserted, targets=_NU_TARGETS, eq_params=WeightParams(kappa=0.6, nu=0.2))


def _man1_params(rng):
    p, q = _p_q(rng)
    m, r_exp = _m_r(rng)
    return WeightParams(p=p, q=q, m=m, r_exp=r_exp)


_P_TARGETS = {"p": 2.0, "m": 1, "r_exp": 1.0}

_pair_suite("S5.man1", "conjugate-exponent Young (Man1)",
            "(rho^{1/p} sigma^{1/q})^m + r0^m (rho^{m/2} - sigma^{m/2})^2 <= (rho^r/p + sigma^r/q)^{m/r}",
            lambda a, b, p, tol: scalar.check_man1(a, b, p.p, p.q, p.m, p.r_exp, tol), _man1_params,
            targets=_P_TARGETS, eq_params=WeightParams(p=3.0, q=1.5, m=2, r_exp=1.5))


def _list_suite(sid, anchor, statement, check, vector_field, asserted=True):
    """Scalar statement about a list of positive numbers."""

    def sampler(rng, dim):
        count = int(rng.integers(1, N_TERMS_MAX + 1))
        if vector_field == "weights":
            params = WeightParams(weights=_simplex(rng, count))
        else:
            params = WeightParams(gammas=tuple(float(g) for g in rng.uniform(0.0, 3.0, count)))
        return params, None, _as_scalars(*_omegas(rng, count))

    def evaluator(case, ctx):
        _check_scalar_operands(case)
        return check(getattr(case.params, vector_field), _scalars(case), ctx.tol)

    def equality():
        vec = (0.2, 0.3, 0.5)
        params = WeightParams(weights=vec) if vector_field == "weights" else WeightParams(gammas=(1.0, 2.0, 0.5))
        return InequalityCase(sid, 1, 0, params, None, tuple(_as_scalars(1.7, 1.7, 1.7)))

    return _register(Suite(sid, anchor, statement, asserted, sampler, evaluator, scalar_only=True, equality=equality))


_list_suite("S5.furu", "weighted AM-GM refinement (Furu)",
            "prod w^t + r (sum w - n (prod w)^{1/n}) <= sum t w", scalar.check_furu, "weights")
_list_suite("S5.constrained", "asinh concavity (Constrained)",
            "prod (w + sqrt(1 + w^2))^{g/G} <= u + sqrt(1 + u^2)", scalar.check_constrained_scalar, "gammas")


# ---------------------------------------------------------------------------
# matrix suites
# ---------------------------------------------------------------------------

def _matrix_suite(sid, anchor, statement, sampler, evaluator, roles, asserted=True, same_unitary=False,
                  targets=None, equality=None):
    return _register(Suite(sid, anchor, statement, asserted, sampler, evaluator, roles=roles,
                           same_unitary=same_unitary, targets=targets or {}, equality=equality))


def _eye(n):
    return np.eye(n, dtype=complex)


def _fixed_x(n):
    return random_complex(np.random.default_rng(1234), n)


def _schur_sampler(rng, dim):
    return WeightParams(), None, [_pd(rng, dim), random_complex(rng, dim)]


_matrix_suite(
    "S2.hhm1.schur", "Schur multiplier bound (HHM1)", "|||T o S||| <= max_i t_ii |||S|||",
    _schur_sampler,
    lambda c, ctx: suites.check_schur_norm_bound(c.operands[0], c.operands[1], ctx.selectors(c.dim), ctx.tol),
    roles=("P", "P"),
    equality=lambda: InequalityCase("S2.hhm1.schur", 3, 0, WeightParams(), None,
                                    (np.ones((3, 3), dtype=complex), _fixed_x(3))),
)


def _hhm2_sampler(rng, dim):
    kappas = np.exp(rng.uniform(math.log(SPECTRUM_LO), math.log(SPECTRUM_HI), dim))
    r = float(rng.uniform(-1.0, 1.0))
    t = 2.0 if rng.random() < 0.05 else float(-2.0 + 4.0 * (1.0 - rng.random()))
    return WeightParams(hhm_r=r, t=t), None, [np.diag(kappas).astype(complex)]


def _hhm2_eval(case, ctx):
    d = case.operands[0]
    if np.any(d - np.diag(d.diagonal())):
        raise ParameterError("the kappa operand must be diagonal")
    return suites.check_hhm2_psd(d.diagonal().real, case.params.hhm_r, case.params.t, ctx.tol)


_matrix_suite(
    "S2.hhm2.psd", "Cauchy-type PSD matrix (HHM2)",
    "[(k_i^r + k_j^r) / (k_i^2 + t k_i k_j + k_j^2)] >= 0",
    _hhm2_sampler, _hhm2_eval, roles=("-",), targets={"hhm_r": 0.0, "t": 0.0},
    equality=lambda: InequalityCase("S2.hhm2.psd", 2, 0, WeightParams(hhm_r=0.5, t=1.0), None,
                                    (np.diag([2.0, 2.0]).astype(complex),)),
)


def _txs_sampler(kappa_fn):
    def sampler(rng, dim):
        return WeightParams(kappa=kappa_fn(rng)), None, [_pd(rng, dim), _pd(rng, dim), random_complex(rng, dim)]

    return sampler


def _identity_txs(sid, kappa, n=3):
    return lambda: InequalityCase(sid, n, 0, WeightParams(kappa=kappa), None, (_eye(n), _eye(n), _fixed_x(n)))


_any_kappa = _txs_sampler(lambda rng: _weight(rng))
_half_kappa = _txs_sampler(lambda rng: 0.5)

_ROLES_TSX = ("L", "R", "X")

for _suffix, _sampler, _note in (("", _any_kappa, ""), (".half", _half_kappa, " at k = 1/2")):
    _matrix_suite(
        f"S2.rahma1.psi{_suffix}", f"psi monotonicity (Rahma1){_note}",
        "psi(theta) <= psi(1/2) on [0, 1/2], psi increasing on [1/2, inf)" + _note,
        _sampler,
        lambda c, ctx: suites.check_psi_monotone(*c.operands, c.params.kappa, ctx.selectors(c.dim), None, ctx.tol),
        roles=_ROLES_TSX, targets=({"kappa": 0.5} if not _suffix else {}),
        equality=_identity_txs(f"S2.rahma1.psi{_suffix}", 0.3 if not _suffix else 0.5),
    )

_matrix_suite(
    "S2.refund1.phi", "phi monotonicity (Refund1)",
    "phi(theta) <= phi(1/2) on [0, 1/2], phi increasing on [1/2, inf)",
    _any_kappa,
    lambda c, ctx: suites.check_phi_monotone(*c.operands, c.params.kappa, ctx.selectors(c.dim), None, ctx.tol),
    roles=_ROLES_TSX, targets={"kappa": 0.5}, equality=_identity_txs("S2.refund1.phi", 0.3),
)


def _chain_eval(case, ctx):
    sels = ctx.selectors(case.dim)
    parts = []
    for t in T_GRID:
        res = suites.check_chain_refund2(*case.operands, case.params.kappa, t, sels, ctx.tol)
        parts.append(CheckResult.combine(res.parts, f"t={t:g}"))
    return CheckResult.combine(parts)


for _suffix, _sampler, _note in (("", _any_kappa, ""), (".half", _half_kappa, " at k = 1/2")):
    _matrix_suite(
        f"S2.refund2.chain{_suffix}", f"psi/phi chain (Refund2){_note}",
        "|||G||| <= |||G + G'|||/2 <= |||TX + XS + tG|||/(t + 2), t on the grid" + _note,
        _sampler, _chain_eval, roles=_ROLES_TSX, targets=({"kappa": 0.5} if not _suffix else {}),
        equality=_identity_txs(f"S2.refund2.chain{_suffix}", 0.3 if not _suffix else 0.5),
    )


_cor25_eval = (lambda c, ctx: suites.check_heinz_pair_bound(
    *c.operands, c.params.kappa, MU_GRID, ctx.selectors(c.dim), None, ctx.tol))

for _suffix, _sampler, _note in (("", _any_kappa, ""), (".half", _half_kappa, " at k = 1/2")):
    _matrix_suite(
        f"S2.cor25{_suffix}", f"Heinz pair below psi (cor2.5){_note}",
        "|||T^mu X S^{1-mu} + T^{1-mu} X S^mu|||/2 <= psi(theta), theta >= 1/2" + _note,
        _sampler, _cor25_eval, roles=_ROLES_TSX, targets=({"kappa": 0.5} if not _suffix else {}),
        equality=_identity_txs(f"S2.cor25{_suffix}", 0.3 if not _suffix else 0.5),
    )

for _variant, _anchor in (("rahma2", "Rahma2"), ("boshra1", "Boshra1")):
    for _fname, _fn in BUILTIN_FUNCTIONS.items():
        _sid = f"S2.{_variant}.{_fname}"
        _matrix_suite(
            _sid, f"{_variant} functional with f = {_fname} ({_anchor})",
            f"{_variant} functional (f = {_fname}) <= psi(theta), theta >= 1/2",
            _any_kappa,
            (lambda v, f: lambda c, ctx: suites.check_corollary_functional_bound(
                *c.operands, c.params.kappa, MU_GRID, f, v, ctx.selectors(c.dim), None, ctx.tol))(_variant, _fn),
            roles=_ROLES_TSX, targets={"kappa": 0.5}, equality=_identity_txs(_sid, 0.3),
        )


def _heinz_op_sampler(rng, dim):
    variant = "a" if rng.random() < 0.5 else "b"
    cond = sample_condition(rng, variant)
    t, s = gen_conditioned_pair(dim, cond, rng)
    kappa = _weight(rng, positive=True)
    return WeightParams(kappa=kappa, nu=_nu_below(rng, kappa)), cond, [t, s]


def _heinz_op_equality(sid):
    from .suites import SpectralCondition

    c = 2.0
    cond = SpectralCondition(0.5, c, c, 4.0, "b")
    return lambda: InequalityCase(sid, 3, 0, WeightParams(kappa=0.6, nu=0.2), cond, (c * _eye(3), c * _eye(3)))


for _which, _short, _label in (("refine_O1", "O1", "operator Heinz refinement (Heinz-O1)"),
                               ("reverse_A2op", "A2op", "operator Heinz reverse (Heinz-A2)")):
    for _form, _suffix, _asserted in ((scalar.PAPER_STATED, "stated", False), (scalar.DERIVED_CORRECTED, "derived", True)):
        _sid = f"S4.heinz.{_short}.{_suffix}"
        _matrix_suite(
            _sid, f"{_label}, {_suffix}", f"Loewner-order {_label} ({_form})",
            _heinz_op_sampler,
            (lambda w, f: lambda c, ctx: suites.check_operator_heinz(
                c.operands[0], c.operands[1], c.condition, c.params.kappa, c.params.nu, w, f, ctx.tol))(_which, _form),
            roles=("L", "L"), same_unitary=True, asserted=_asserted, targets=_NU_TARGETS,
            equality=_heinz_op_equality(_sid),
        )


def _pq_sampler(extra=None):
    def sampler(rng, dim):
        p, q = _p_q(rng)
        m, r_exp = _m_r(rng)
        params = WeightParams(p=p, q=q, m=m, r_exp=r_exp)
        if extra == "r1":
            params = params.with_(r_exp=1.0)
        ops = [_pd(rng, dim), _pd(rng, dim)]
        if extra == "x":
            ops.append(random_complex(rng, dim))
        return params, None, ops

    return sampler


def _pq_equality(sid, with_x=False, n=3):
    ops = (gen_positive(n, 0.5, 3.0, np.random.default_rng(7)),) * 2
    if with_x:
        ops = ops + (_eye(n),)
    return lambda: InequalityCase(sid, n, 0, WeightParams(p=2.0, q=2.0, m=1, r_exp=1.0), None, ops)


def _ando_sampler(rng, dim):
    p, q = _p_q(rng)
    return WeightParams(p=p, q=q), None, [_pd(rng, dim), _pd(rng, dim)]


_matrix_suite(
    "S5.ando", "Ando singular value Young (Ando1)", "s_j(TS) <= s_j(T^p/p + S^q/q)",
    _ando_sampler, lambda c, ctx: suites.check_ando(c.operands[0], c.operands[1], c.params.p, c.params.q, ctx.tol),
    roles=("L", "L"), same_unitary=True, targets={"p": 2.0},
    equality=lambda: InequalityCase("S5.ando", 3, 0, WeightParams(p=2.0, q=2.0), None, (_eye(3), _eye(3))),
)


def _theta_sampler(with_x):
    def sampler(rng, dim):
        ops = [_pd(rng, dim), _pd(rng, dim)]
        if with_x:
            ops.append(random_complex(rng, dim))
        return WeightParams(theta=_weight(rng)), None, ops

    return sampler


def _theta_equality(sid, with_x):
    t = gen_positive(3, 0.5, 3.0, np.random.default_rng(11))
    ops = (t, t, _eye(3)) if with_x else (t, t)
    return lambda: InequalityCase(sid, 3, 0, WeightParams(theta=0.3), None, ops)


_matrix_suite(
    "S5.heinzkato.A11", "Heinz-Kato (A11)", "|||T^theta X S^{1-theta}||| <= |||TX|||^theta |||XS|||^{1-theta}",
    _theta_sampler(True),
    lambda c, ctx: suites.check_heinz_kato(*c.operands, c.params.theta, ctx.selectors(c.dim), ctx.tol),
    roles=_ROLES_TSX, targets={"theta": 0.5}, equality=_theta_equality("S5.heinzkato.A11", True),
)
_matrix_suite(
    "S5.heinzkato.A22", "trace Heinz-Kato (A22)", "tr|T^theta S^{1-theta}| <= (tr T)^theta (tr S)^{1-theta}",
    _theta_sampler(False),
    lambda c, ctx: suites.check_trace_heinz_kato(c.operands[0], c.operands[1], c.params.theta, ctx.tol),
    roles=("L", "L"), same_unitary=True, targets={"theta": 0.5}, equality=_theta_equality("S5.heinzkato.A22", False),
)


def _trace_young_eval(c, ctx):
    return suites.check_trace_young(c.operands[0], c.operands[1], c.params.p, c.params.q, c.params.m,
                                    c.params.r_exp, ctx.tol)


_matrix_suite(
    "S5.trace.man2", "trace Young refinement (Man2, RASHID-1)",
    "(tr|T^{1/p} S^{1/q}|)^m + r0^m ((tr T)^{m/2} - (tr S)^{m/2})^2 <= (tr T^r/p + tr S^r/q)^{m/r}",
    _pq_sampler(), _trace_young_eval, roles=("L", "L"), same_unitary=True, asserted=False, targets=_P_TARGETS,
)
_matrix_suite(
    "S5.trace.man2.r1", "trace Young refinement, r = 1",
    "(tr|T^{1/p} S^{1/q}|)^m + r0^m ((tr T)^{m/2} - (tr S)^{m/2})^2 <= (tr T/p + tr S/q)^m",
    _pq_sampler("r1"), _trace_young_eval, roles=("L", "L"), same_unitary=True,
    targets={"p": 2.0, "m": 1}, equality=_pq_equality("S5.trace.man2.r1"),
)

for _form, _suffix, _asserted in (("stated", "", False), ("eigenwise", ".eigen", True)):
    _sid = f"S5.det.rashidq1{_suffix}"
    _matrix_suite(
        _sid, f"determinant Young refinement (RashidQ1), {_form} term",
        f"det(T^{{1/p}} S^{{1/q}})^m + ({_form} refinement term) <= det(T^r/p + S^r/q)^{{m/r}}",
        _pq_sampler(),
        (lambda f: lambda c, ctx: suites.check_det_young(c.operands[0], c.operands[1], c.params.p, c.params.q,
                                                         c.params.m, c.params.r_exp, f, ctx.tol))(_form),
        roles=("L", "L"), same_unitary=True, asserted=_asserted, targets=_P_TARGETS,
        equality=_pq_equality(_sid) if _asserted else None,
    )

for _reading, _suffix, _asserted in (("XS", "", True), ("SX", ".sx", False)):
    _sid = f"S5.norm.ghadeer11{_suffix}"
    _matrix_suite(
        _sid, f"norm Young refinement (GHADEER11), {_reading} in the refinement term",
        f"|||T^{{1/p}} X S^{{1/q}}|||^m + r0^m (|||TX|||^{{m/2}} - |||{_reading}|||^{{m/2}})^2 "
        "<= (|||TX|||^r/p + |||XS|||^r/q)^{m/r}",
        _pq_sampler("x"),
        (lambda rd: lambda c, ctx: suites.check_uinorm_young(*c.operands, c.params.p, c.params.q, c.params.m,
                                                             c.params.r_exp, ctx.selectors(c.dim), rd, ctx.tol))(_reading),
        roles=("L", "L", "L"), same_unitary=True, asserted=_asserted, targets=_P_TARGETS,
        equality=_pq_equality(_sid, with_x=True) if _asserted else None,
    )


def _family_sampler(vector_field, min_count=2):
    def sampler(rng, dim):
        count = int(rng.integers(min_count, N_TERMS_MAX + 1))
        if vector_field == "weights":
            params = WeightParams(weights=_simplex(rng, count))
        else:
            params = WeightParams(gammas=tuple(float(g) for g in rng.uniform(0.0, 3.0, count)))
        return params, None, [_pd(rng, dim) for _ in range(count)]

    return sampler


def _family_equality(sid, vector_field, n=3, count=3):
    t = gen_positive(n, 0.5, 3.0, np.random.default_rng(5))
    params = WeightParams(weights=(0.2, 0.3, 0.5)) if vector_field == "weights" else WeightParams(gammas=(1.0, 2.0, 0.5))
    return lambda: InequalityCase(sid, n, 0, params, None, (t,) * count)


_matrix_suite(
    "S5.trace.rashid2", "multi-term trace Young refinement (Trace1, Tracethree)",
    "tr|prod T_k^{w_k}| + r (sum tr T_k - N (prod tr T_k)^{1/N}) <= sum w_k tr T_k",
    _family_sampler("weights"),
    lambda c, ctx: suites.check_multi_trace(list(c.operands), list(c.params.weights), ctx.tol),
    roles=("L",) * N_TERMS_MAX, same_unitary=True, equality=_family_equality("S5.trace.rashid2", "weights"),
)

for _form, _suffix, _asserted in (("stated", "", False), ("rooted", ".rooted", True)):
    _sid = f"S5.det.deter1{_suffix}"
    _matrix_suite(
        _sid, f"multi-term determinant refinement (DETER1), {_form} coefficient",
        f"prod det(T_k)^{{w_k}} + ({_form} refinement term) <= det(sum w_k T_k)",
        _family_sampler("weights"),
        (lambda f: lambda c, ctx: suites.check_multi_det(list(c.operands), list(c.params.weights), f, ctx.tol))(_form),
        roles=("L",) * N_TERMS_MAX, same_unitary=True, asserted=_asserted,
        equality=_family_equality(_sid, "weights") if _asserted else None,
    )


def _minkowski_sampler(rng, dim):
    return WeightParams(), None, [_pd(rng, dim), _pd(rng, dim)]


_matrix_suite(
    "S5.det.minkowski", "Minkowski determinant (sum-det)", "det(T)^{1/n} + det(S)^{1/n} <= det(T + S)^{1/n}",
    _minkowski_sampler, lambda c, ctx: suites.check_minkowski_det(c.operands[0], c.operands[1], ctx.tol),
    roles=("L", "L"), same_unitary=True,
    equality=lambda: InequalityCase("S5.det.minkowski", 3, 0, WeightParams(), None,
                                    (gen_positive(3, 0.5, 3.0, np.random.default_rng(3)),) * 2),
)


def _const_equality(sid):
    t = np.array([[1.3 + 0j]])
    return lambda: InequalityCase(sid, 1, 0, WeightParams(gammas=(1.0, 2.0, 0.5)), None, (t, t, t))


for _form, _suffix, _asserted in (("stated", "", False), ("weighted", ".weighted", True)):
    _sid = f"S5.trace.const1{_suffix}"
    _matrix_suite(
        _sid, f"trace asinh-concavity bound (Const1), {_form} form",
        f"prod (tr T_k + sqrt(1 + tr T_k^2))^(e_k) <= u + sqrt(1 + u^2) ({_form})",
        _family_sampler("gammas", min_count=1),
        (lambda f: lambda c, ctx: suites.check_constrained_trace(list(c.operands), list(c.params.gammas), f, ctx.tol))(_form),
        roles=("L",) * N_TERMS_MAX, same_unitary=True, asserted=_asserted,
        equality=_const_equality(_sid) if _asserted else None,
    )


def _selftest_eval(case, ctx):
    t, s = case.operands
    base = _GeomMeanBase(t, s)
    return suites._loewner(0.5 * (base.sharp(0.0) + base.sharp(1.0)), base.sharp(0.5), ctx.tol, "AM<=GM")


_matrix_suite(
    "S0.selftest", "harness self-test (deliberately false)", "T nabla S <= T # S (false unless T = S)",
    _minkowski_sampler, _selftest_eval, roles=("L", "L"), same_unitary=True, asserted=False,
)


# ---------------------------------------------------------------------------
# lookup
# ---------------------------------------------------------------------------

def suite_ids() -> list[str]:
    return sorted(_SUITES)


def get_suite(sid: str) -> Suite:
    try:
        return _SUITES[sid]
    except KeyError:
        raise ParameterError(f"unknown suite {sid!r}; valid ids: {', '.join(suite_ids())}") from None


def resolve_suites(names: Sequence[str]) -> list[Suite]:
    """Expand ``all`` and prefix patterns ending in ``*``; keep registry order."""
    picked = []
    for name in names:
        if name == "all":
            picked.extend(suite_ids())
        elif name.endswith("*"):
            hits = [s for s in suite_ids() if s.startswith(name[:-1])]
            if not hits:
                raise ParameterError(f"no suite matches {name!r}; valid ids: {', '.join(suite_ids())}")
            picked.extend(hits)
        else:
            picked.append(get_suite(name).id)
    seen = []
    for sid in picked:
        if sid not in seen:
            seen.append(sid)
    return [_SUITES[s] for s in sorted(seen)]
