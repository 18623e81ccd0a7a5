"""Campaign runner, report aggregation and counterexample shrinking.

A campaign evaluates ``trials`` sampled cases per suite.  Case ``i`` of a
suite is generated from ``trial_seed(seed, suite_id, i)`` alone, so the
report does not depend on evaluation order or on how trials are spread
over worker processes.
"""
from __future__ import annotations

import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from typing import Optional, Sequence

import numpy as np

from . import __version__
from .cases import InequalityCase, gen_conditioned_pair, gen_positive, random_unitary, trial_dim, trial_seed
from .config import (
    DEFAULT_DIM_MAX,
    DEFAULT_DIM_MIN,
    DEFAULT_TRIALS,
    GRID_VERSION,
    MU_GRID,
    T_GRID,
    TOL_REL,
    theta_grid,
)
from .errors import ContractError, HeinzLabError, ParameterError
from .linalg import NormSelector
from .registry import EvalContext, Suite, get_suite, resolve_suites
from .result import CheckResult

__all__ = [
    "CampaignConfig",
    "CampaignReport",
    "SuiteRecord",
    "conjugate_case",
    "gen_conditioned_pair",
    "gen_positive",
    "run_campaign",
    "shrink",
    "trial_case",
]

REPORT_VERSION = "1"
MAX_TRIALS = 10**6
MAX_DIM = 64
SHRINK_MAX_STEPS = 200


@dataclass(frozen=True)
class CampaignConfig:
    suites: tuple = ("all",)
    trials: int = DEFAULT_TRIALS
    dim_min: int = DEFAULT_DIM_MIN
    dim_max: int = DEFAULT_DIM_MAX
    seed: int = 0
    tol_rel: float = TOL_REL
    norm_family: Optional[tuple] = None
    parameter_grids: dict = field(default_factory=lambda: {
        "theta": list(theta_grid()), "t": list(T_GRID), "mu": list(MU_GRID),
    })
    shrink: bool = True

    def __post_init__(self):
        if not (1 <= self.trials <= MAX_TRIALS):
            raise ParameterError(f"trials must lie in [1, {MAX_TRIALS}], got {self.trials}")
        if not (1 <= self.dim_min <= self.dim_max <= MAX_DIM):
            raise ParameterError(f"need 1 <= dim_min <= dim_max <= {MAX_DIM}, got {self.dim_min}..{self.dim_max}")
        if not (0 <= self.seed < 2**64):
            raise ParameterError(f"seed must be an unsigned 64-bit integer, got {self.seed}")
        if not (self.tol_rel > 0.0 and math.isfinite(self.tol_rel)):
            raise ParameterError(f"tol_rel must be positive, got {self.tol_rel}")
        grids = {"theta": list(theta_grid()), "t": list(T_GRID), "mu": list(MU_GRID)}
        if {k: list(v) for k, v in self.parameter_grids.items()} != grids:
            # the suites read their grids from the versioned config
            raise ParameterError("custom parameter grids are not supported; bump GRID_VERSION instead")

    def context(self) -> EvalContext:
        return EvalContext(self.tol_rel, tuple(self.norm_family) if self.norm_family else None)

    def to_dict(self) -> dict:
        return {
            "suites": list(self.suites),
            "trials": self.trials,
            "dim_min": self.dim_min,
            "dim_max": self.dim_max,
            "seed": self.seed,
            "tol_rel": self.tol_rel,
            "norm_family": [s.label for s in self.norm_family] if self.norm_family else "default",
            "parameter_grids": dict(self.parameter_grids),
            "grid_version": GRID_VERSION,
        }


@dataclass
class SuiteRecord:
    suite_id: str
    anchor: str
    trials: int
    violations: int
    worst_trial: int
    worst_case: InequalityCase
    worst_result: CheckResult
    recorded_not_asserted: bool
    shrunk_case: Optional[InequalityCase] = None
    shrunk_result: Optional[CheckResult] = None

    @property
    def failed(self) -> bool:
        return self.violations > 0 and not self.recorded_not_asserted

    def to_dict(self) -> dict:
        shrunk = None
        if self.shrunk_case is not None:
            shrunk = {"case": self.shrunk_case.to_dict(), "result": self.shrunk_result.to_dict()}
        return {
            "id": self.suite_id,
            "anchor": self.anchor,
            "trials": self.trials,
            "violations": self.violations,
            "worst_trial": self.worst_trial,
            "worst_slack": self.worst_result.slack,
            "worst_rel_slack": self.worst_result.rel_slack,
            "worst_case": self.worst_case.to_dict(),
            "worst_result": _summary(self.worst_result),
            "recorded_not_asserted": self.recorded_not_asserted,
            "shrunk": shrunk,
        }


@dataclass
class CampaignReport:
    config: CampaignConfig
    records: list
    wall_time: float = 0.0

    @property
    def failed(self) -> bool:
        return any(r.failed for r in self.records)

    def record(self, suite_id: str) -> SuiteRecord:
        for r in self.records:
            if r.suite_id == suite_id:
                return r
        raise KeyError(suite_id)

    def to_dict(self) -> dict:
        # wall time stays out of the document so reports can be diffed
        return {
            "version": {"report": REPORT_VERSION, "heinzlab": __version__, "grid": GRID_VERSION},
            "config": self.config.to_dict(),
            "suites": [r.to_dict() for r in self.records],
        }


def _summary(res: CheckResult) -> dict:
    d = res.to_dict()
    d.pop("parts", None)
    d["parts"] = len(res.parts)
    return d


# ---------------------------------------------------------------------------
# campaign
# ---------------------------------------------------------------------------

def trial_case(suite: Suite, cfg: CampaignConfig, trial: int) -> InequalityCase:
    seed = trial_seed(cfg.seed, suite.id, trial)
    return suite.make_case(seed, trial_dim(seed, cfg.dim_min, cfg.dim_max))


def _run_chunk(args):
    suite_id, cfg, start, stop = args
    suite = get_suite(suite_id)
    ctx = cfg.context()
    out = []
    for i in range(start, stop):
        res = suite.evaluate(trial_case(suite, cfg, i), ctx)
        out.append((i, res.rel_slack, res.passed))
    return suite_id, out


def _chunks(suites: Sequence[Suite], cfg: CampaignConfig, workers: int):
    size = cfg.trials if workers <= 1 else max(1, min(250, math.ceil(cfg.trials / (2 * workers))))
    for s in suites:
        for start in range(0, cfg.trials, size):
            yield s.id, cfg, start, min(cfg.trials, start + size)


def _rank(rel_slack: float) -> float:
    return -math.inf if math.isnan(rel_slack) else rel_slack


def run_campaign(cfg: CampaignConfig, workers: int = 1) -> CampaignReport:
    """Evaluate every selected suite and fold the results per suite.

    The worst case of a suite is the trial with the smallest relative slack
    (lowest trial index on ties); it is regenerated and re-evaluated here so
    the reported numbers come from the stored case.  Suites with violations
    get a shrunk counterexample when ``cfg.shrink`` is set.
    """
    started = time.perf_counter()
    suites = resolve_suites(cfg.suites)
    jobs = list(_chunks(suites, cfg, workers))
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_run_chunk, jobs))
    else:
        results = [_run_chunk(j) for j in jobs]

    per_suite: dict[str, list] = {s.id: [] for s in suites}
    for sid, rows in results:
        per_suite[sid].extend(rows)

    ctx = cfg.context()
    records = []
    for suite in suites:
        rows = sorted(per_suite[suite.id])
        violations = sum(1 for _, _, ok in rows if not ok)
        worst_trial = min(rows, key=lambda r: (_rank(r[1]), r[0]))[0]
        case = trial_case(suite, cfg, worst_trial)
        res = suite.evaluate(case, ctx)
        rec = SuiteRecord(suite.id, suite.anchor, len(rows), violations, worst_trial, case, res, not suite.asserted)
        if violations and cfg.shrink and not res.passed:
            rec.shrunk_case, rec.shrunk_result = shrink(suite, case, ctx)
        records.append(rec)
    return CampaignReport(cfg, records, time.perf_counter() - started)


# ---------------------------------------------------------------------------
# shrinking
# ---------------------------------------------------------------------------

def _try(suite: Suite, case: InequalityCase, ctx: EvalContext) -> Optional[CheckResult]:
    try:
        return suite.evaluate(case, ctx)
    except (HeinzLabError, ArithmeticError, ValueError):
        return None


def _round_sig(x: float, digits: int) -> float:
    return float(f"{x:.{digits}g}") if x != 0.0 and math.isfinite(x) else x


def _round_matrix(a: np.ndarray, digits: int) -> np.ndarray:
    rnd = np.vectorize(lambda v: _round_sig(float(v), digits))
    return rnd(a.real) + 1j * rnd(a.imag)


def _with_operands(case: InequalityCase, ops) -> InequalityCase:
    ops = tuple(np.asarray(a, dtype=complex) for a in ops)
    return replace(case, operands=ops, dim=int(ops[0].shape[0]) if ops else case.dim)


def _with_param(case: InequalityCase, name: str, value) -> InequalityCase:
    params = case.params.with_(**{name: value})
    if name == "p" and case.params.q is not None and value > 1.0:
        params = params.with_(q=value / (value - 1.0))
    return replace(case, params=params)


def _targets(suite: Suite, case: InequalityCase):
    for name, target in suite.targets.items():
        value = getattr(case.params, name)
        if value is None:
            continue
        goal = target(case.params) if callable(target) else target
        yield name, value, goal


def _candidates(suite: Suite, case: InequalityCase):
    ops = case.operands
    n = case.dim
    # 1. principal submatrices
    if n > 1 and not suite.scalar_only:
        for i in range(n):
            keep = [j for j in range(n) if j != i]
            yield _with_operands(case, [a[np.ix_(keep, keep)] for a in ops])
    # 2. parameters straight to their targets
    for name, value, goal in _targets(suite, case):
        if value != goal:
            yield _with_param(case, name, type(value)(goal))
    # 3. off-diagonal entries to zero, one operand at a time
    if n > 1:
        for k, a in enumerate(ops):
            if np.any(a - np.diag(a.diagonal())):
                new = list(ops)
                new[k] = np.diag(a.diagonal())
                yield _with_operands(case, new)
    # 4. fewer significant digits
    for digits in (1, 2, 3):
        rounded = [_round_matrix(a, digits) for a in ops]
        if any(not np.array_equal(a, b) for a, b in zip(ops, rounded)):
            yield _with_operands(case, rounded)
        for name, value, _ in _targets(suite, case):
            if isinstance(value, float) and _round_sig(value, digits) != value:
                yield _with_param(case, name, _round_sig(value, digits))
    # 5. halve off-diagonal entries and pull parameters half way
    if n > 1:
        for k, a in enumerate(ops):
            off = a - np.diag(a.diagonal())
            if np.max(np.abs(off)) > 1e-3 * max(1.0, float(np.max(np.abs(a)))):
                new = list(ops)
                new[k] = np.diag(a.diagonal()) + 0.5 * off
                yield _with_operands(case, new)
    for name, value, goal in _targets(suite, case):
        if isinstance(value, float) and abs(value - goal) > 1e-3:
            yield _with_param(case, name, 0.5 * (value + goal))


def shrink(suite: Suite, case: InequalityCase, ctx: EvalContext = EvalContext(),
           max_steps: int = SHRINK_MAX_STEPS) -> tuple[InequalityCase, CheckResult]:
    """Greedily simplify a violating case while it keeps violating.

    Candidates are tried in order: drop a row/column from every operand,
    move parameters to their shrink targets, zero the off-diagonal part of
    one operand, round entries and parameters to 1..3 significant digits,
    then halve off-diagonal parts and move parameters half way.  The first
    candidate that still violates is accepted and the scan restarts.
    """
    res = _try(suite, case, ctx)
    if res is None or res.passed:
        raise ContractError(f"case for {case.suite_id} does not violate; nothing to shrink")
    for _ in range(max_steps):
        for cand in _candidates(suite, case):
            r = _try(suite, cand, ctx)
            if r is not None and not r.passed:
                case, res = cand, r
                break
        else:
            break
    return case, res


# ---------------------------------------------------------------------------
# unitary conjugation
# ---------------------------------------------------------------------------

def random_monomial(rng: np.random.Generator, dim: int) -> np.ndarray:
    perm = rng.permutation(dim)
    phases = np.exp(2j * np.pi * rng.random(dim))
    w = np.zeros((dim, dim), dtype=complex)
    w[np.arange(dim), perm] = phases
    return w


def conjugate_case(suite: Suite, case: InequalityCase, rng: np.random.Generator) -> InequalityCase:
    """Apply one random simultaneous unitary conjugation following the suite roles."""
    n = case.dim
    u = random_unitary(rng, n)
    v = u if suite.same_unitary else random_unitary(rng, n)
    w = random_monomial(rng, n)
    new = []
    for a, role in zip(case.operands, suite.roles + ("-",) * len(case.operands)):
        hermitian = np.array_equal(a, a.conj().T)
        if role == "L":
            a = u @ a @ u.conj().T
        elif role == "R":
            a = v @ a @ v.conj().T
        elif role == "X":
            a = u @ a @ v.conj().T
        elif role == "P":
            a = w @ a @ w.conj().T
        if hermitian and role != "X":
            a = 0.5 * (a + a.conj().T)
        new.append(a)
    return _with_operands(case, new)


def replay_case(case: InequalityCase, ctx: EvalContext = EvalContext()) -> CheckResult:
    return get_suite(case.suite_id).evaluate(case, ctx)


def norm_family_from_labels(labels: Sequence[str]) -> tuple:
    return tuple(NormSelector.parse(t) for t in labels)
