"""Command-line front end: ``heinzlab {list, verify, eval, shrink}``.

Exit codes: 0 success, 1 violation of an asserted suite, 2 usage or input
error, 3 eigensolver non-convergence.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

import numpy as np

from . import scalar
from .cases import InequalityCase
from .config import DEFAULT_DIM_MAX, DEFAULT_DIM_MIN, DEFAULT_TRIALS, SEED_ENV, TOL_REL
from .errors import ConvergenceError, HeinzLabError, NotHermitianError, NotPositiveError, ParameterError
from .harness import CampaignConfig, norm_family_from_labels, run_campaign, shrink
from .linalg import (
    NormSelector,
    check_hermitian,
    check_positive,
    eig_hermitian,
    fractional_power,
    norm_family,
    singular_values,
    ui_norms,
)
from .matio import load_matrix, save_matrix
from .means import (
    BUILTIN_FUNCTIONS,
    corollary_functional,
    op_arith_mean,
    op_geom_mean,
    op_heinz_mean,
    phi_interpolant,
    psi_interpolant,
)
from .registry import EvalContext, get_suite, suite_ids

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2
EXIT_NUMERICAL = 3


class UsageError(HeinzLabError):
    pass


def fmt(x) -> str:
    z = complex(x)
    if z.imag == 0.0:
        return f"{z.real:.15g}"
    return f"{z.real:.15g}{z.imag:+.15g}j"


def _print_matrix(name, m, out):
    print(f"{name} =", file=out)
    for row in np.atleast_2d(m):
        print("  " + "  ".join(fmt(v) for v in row), file=out)


def _write_json(path, doc):
    Path(path).write_text(json.dumps(doc, indent=2) + "\n")


# ---------------------------------------------------------------------------
# list
# ---------------------------------------------------------------------------

def cmd_list(args, out) -> int:
    rows = [(sid, get_suite(sid)) for sid in suite_ids()]
    width = max(len(sid) for sid, _ in rows)
    for sid, s in rows:
        status = "asserted" if s.asserted else "recorded"
        print(f"{sid:<{width}}  {status:<8}  {s.anchor}", file=out)
    return EXIT_OK


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------

def _seed(flag):
    raw = flag if flag is not None else os.environ.get(SEED_ENV)
    if raw is None:
        return 0
    try:
        return int(str(raw), 0)
    except ValueError:
        raise UsageError(f"seed must be an integer, got {raw!r}") from None


def _counterexample_path(out_path, suite_id):
    base = Path(out_path).parent if out_path else Path(".")
    return base / f"counterexample-{suite_id}.json"


def _replay(args, out) -> int:
    case = load_case(args.case)
    suite = get_suite(case.suite_id)
    ctx = EvalContext(args.tol, norm_family_from_labels(args.norms) if args.norms else None)
    res = suite.evaluate(case, ctx)
    doc = {"case": case.to_dict(), "result": res.to_dict()}
    if args.out:
        _write_json(args.out, doc)
    status = "asserted" if suite.asserted else "recorded"
    print(f"{suite.id} ({status}): {res.verdict}  lhs={fmt(res.lhs)}  rhs={fmt(res.rhs)}  "
          f"rel_slack={res.rel_slack:.3e}  [{res.label}]", file=out)
    return EXIT_VIOLATION if (suite.asserted and not res.passed) else EXIT_OK


def cmd_verify(args, out) -> int:
    if args.case:
        return _replay(args, out)
    cfg = CampaignConfig(
        suites=tuple(args.suite or ["all"]),
        trials=args.trials,
        dim_min=args.dim_min,
        dim_max=args.dim_max,
        seed=_seed(args.seed),
        tol_rel=args.tol,
        norm_family=norm_family_from_labels(args.norms) if args.norms else None,
    )
    report = run_campaign(cfg, workers=args.workers)
    if args.out:
        _write_json(args.out, report.to_dict())

    width = max(len(r.suite_id) for r in report.records)
    print(f"{'suite':<{width}}  {'status':<8}  {'trials':>7}  {'viol':>6}  {'worst rel slack':>16}", file=out)
    for r in report.records:
        status = "recorded" if r.recorded_not_asserted else "asserted"
        print(f"{r.suite_id:<{width}}  {status:<8}  {r.trials:>7}  {r.violations:>6}  "
              f"{r.worst_result.rel_slack:>16.6e}", file=out)
    failed = [r for r in report.records if r.failed]
    for r in failed:
        path = _counterexample_path(args.out, r.suite_id)
        _write_json(path, (r.shrunk_case or r.worst_case).to_dict())
        print(f"VIOLATION {r.suite_id}: counterexample written to {path}", file=out)
    print(f"{len(report.records)} suites, {report.wall_time:.1f}s", file=out)
    return EXIT_VIOLATION if failed else EXIT_OK


# ---------------------------------------------------------------------------
# eval
# ---------------------------------------------------------------------------

def _parse_params(items):
    params = {}
    for item in items or []:
        key, sep, value = item.partition("=")
        if not sep:
            raise UsageError(f"parameter {item!r} is not of the form k=v")
        params[key.strip()] = value.strip()
    return params


def _parse_matrices(items):
    mats = {}
    for item in items or []:
        name, sep, path = item.partition("=")
        if not sep:
            raise UsageError(f"matrix {item!r} is not of the form NAME=path")
        mats[name.strip().upper()] = load_matrix(path.strip())
    return mats


class _Inputs:
    def __init__(self, params, mats):
        self.params = params
        self.mats = mats
        self.used = set()

    def num(self, key, default=None):
        self.used.add(key)
        if key not in self.params:
            if default is None:
                raise UsageError(f"missing parameter {key}=...")
            return default
        try:
            return float(self.params[key])
        except ValueError:
            raise UsageError(f"parameter {key} must be a number, got {self.params[key]!r}") from None

    def mat(self, name, kind="any"):
        if name not in self.mats:
            raise UsageError(f"missing matrix --matrix {name}=path")
        m = self.mats[name]
        if kind == "hermitian":
            return check_hermitian(m)
        if kind == "positive":
            return check_positive(m, definite=True)[0]
        return m

    def norms(self, dim):
        if "norm" in self.params:
            self.used.add("norm")
            return [NormSelector.parse(t) for t in self.params["norm"].split(",")]
        return norm_family(dim)


def _eval_kantorovich(inp, out):
    print(fmt(scalar.kantorovich(inp.num("t"))), file=out)


def _scalar_pair(inp):
    rho, sigma = inp.num("rho"), inp.num("sigma")
    scalar._positive(rho, sigma)
    return rho, sigma


def _kappa(inp, default=None):
    k = inp.num("kappa", default)
    if not (0.0 <= k <= 1.0):
        raise ParameterError(f"kappa must lie in [0, 1], got {k}")
    return k


def _eval_heinz(inp, out):
    if inp.mats:
        _print_matrix("H", op_heinz_mean(inp.mat("T", "positive"), inp.mat("S", "positive"), _kappa(inp)), out)
    else:
        rho, sigma = _scalar_pair(inp)
        print(fmt(scalar.heinz_mean(rho, sigma, _kappa(inp))), file=out)


def _eval_geom(inp, out):
    if inp.mats:
        _print_matrix("G", op_geom_mean(inp.mat("T", "positive"), inp.mat("S", "positive"), _kappa(inp, 0.5)), out)
    else:
        rho, sigma = _scalar_pair(inp)
        print(fmt(scalar.sharp(rho, sigma, _kappa(inp, 0.5))), file=out)


def _eval_arith(inp, out):
    if inp.mats:
        _print_matrix("A", op_arith_mean(inp.mat("T", "positive"), inp.mat("S", "positive"), _kappa(inp, 0.5)), out)
    else:
        rho, sigma = _scalar_pair(inp)
        print(fmt(scalar.nabla(rho, sigma, _kappa(inp, 0.5))), file=out)


def _eval_means(inp, out):
    if inp.mats:
        t, s = inp.mat("T", "positive"), inp.mat("S", "positive")
        k = _kappa(inp, 0.5)
        _print_matrix("arith", op_arith_mean(t, s, k), out)
        _print_matrix("geom", op_geom_mean(t, s, k), out)
        _print_matrix("heinz", op_heinz_mean(t, s, k), out)
        return
    rho, sigma = _scalar_pair(inp)
    means = scalar.scalar_means(rho, sigma, _kappa(inp, 0.5), inp.num("theta", 0.5))
    for name, value in means._asdict().items():
        print(f"{name} = {fmt(value)}", file=out)


def _eval_norms(inp, out):
    a = inp.mat("A")
    sels = inp.norms(a.shape[0])
    for sel, v in zip(sels, ui_norms(a, sels)):
        print(f"{sel.label} = {fmt(v)}", file=out)


def _eval_singular(inp, out):
    print("  ".join(fmt(v) for v in singular_values(inp.mat("A"))), file=out)


def _eval_eig(inp, out):
    dec = eig_hermitian(inp.mat("A", "hermitian"))
    print("  ".join(fmt(v) for v in dec.values), file=out)


def _eval_power(inp, out):
    _print_matrix("A^k", fractional_power(inp.mat("A", "positive"), inp.num("kappa")), out)


def _interp(inp, out, fn):
    t, s, x = inp.mat("T", "positive"), inp.mat("S", "positive"), inp.mat("X")
    k, theta = _kappa(inp), inp.num("theta")
    for sel in inp.norms(t.shape[0]):
        print(f"{sel.label} = {fmt(fn(t, s, x, k, theta, sel))}", file=out)


def _eval_corollary(inp, out):
    t, s, x = inp.mat("T", "positive"), inp.mat("S", "positive"), inp.mat("X")
    inp.used.update({"f", "variant"})
    fname = inp.params.get("f", "sqrt")
    if fname not in BUILTIN_FUNCTIONS:
        raise UsageError(f"unknown f={fname}; choose from {sorted(BUILTIN_FUNCTIONS)}")
    variant = inp.params.get("variant", "rahma2")
    mu = inp.num("mu")
    for sel in inp.norms(t.shape[0]):
        v = corollary_functional(t, s, x, mu, BUILTIN_FUNCTIONS[fname], variant, sel)
        print(f"{sel.label} = {fmt(v)}", file=out)


EVAL_OPS = {
    "kantorovich": _eval_kantorovich,
    "heinz": _eval_heinz,
    "geom": _eval_geom,
    "arith": _eval_arith,
    "means": _eval_means,
    "norms": _eval_norms,
    "singular": _eval_singular,
    "eig": _eval_eig,
    "power": _eval_power,
    "psi": lambda inp, out: _interp(inp, out, psi_interpolant),
    "phi": lambda inp, out: _interp(inp, out, phi_interpolant),
    "corollary": _eval_corollary,
}


def cmd_eval(args, out) -> int:
    if args.op not in EVAL_OPS:
        raise UsageError(f"unknown op {args.op!r}; choose from {', '.join(sorted(EVAL_OPS))}")
    inp = _Inputs(_parse_params(args.params), _parse_matrices(args.matrix))
    EVAL_OPS[args.op](inp, out)
    unused = set(inp.params) - inp.used
    if unused:
        print(f"warning: unused parameters {sorted(unused)}", file=sys.stderr)
    return EXIT_OK


# ---------------------------------------------------------------------------
# shrink
# ---------------------------------------------------------------------------

def load_case(path) -> InequalityCase:
    try:
        doc = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read case file {path}: {exc}") from None
    if isinstance(doc, dict) and "case" in doc and "suite_id" not in doc:
        doc = doc["case"]
    return InequalityCase.from_dict(doc)


def cmd_shrink(args, out) -> int:
    case = load_case(args.case)
    suite = get_suite(case.suite_id)
    small, res = shrink(suite, case, EvalContext(args.tol))
    doc = small.to_dict()
    if args.out:
        _write_json(args.out, doc)
        print(f"{suite.id}: dim {case.dim} -> {small.dim}, rel_slack {res.rel_slack:.3e}; wrote {args.out}", file=out)
    else:
        print(json.dumps(doc, indent=2), file=out)
    return EXIT_OK


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="heinzlab", description="Randomized checks of Heinz and Young type inequalities.")
    sub = p.add_subparsers(dest="command", required=True)

    sub.add_parser("list", help="list registered suites")

    v = sub.add_parser("verify", help="run a verification campaign")
    v.add_argument("--suite", action="append", help="suite id, prefix*, or 'all' (repeatable)")
    v.add_argument("--trials", type=int, default=DEFAULT_TRIALS)
    v.add_argument("--dim-min", type=int, default=DEFAULT_DIM_MIN)
    v.add_argument("--dim-max", type=int, default=DEFAULT_DIM_MAX)
    v.add_argument("--seed", default=None, help=f"campaign seed (default: ${SEED_ENV} or 0)")
    v.add_argument("--tol", type=float, default=TOL_REL)
    v.add_argument("--norms", nargs="+", help="norm selectors such as ky_fan:2 schatten:inf")
    v.add_argument("--out", help="write the JSON report here")
    v.add_argument("--workers", type=int, default=1)
    v.add_argument("--case", help="evaluate a single stored case instead of sampling")

    e = sub.add_parser("eval", help="evaluate one quantity")
    e.add_argument("--op", required=True, help=", ".join(sorted(EVAL_OPS)))
    e.add_argument("--params", nargs="*", default=[], metavar="K=V")
    e.add_argument("--matrix", action="append", default=[], metavar="NAME=PATH")

    s = sub.add_parser("shrink", help="shrink a stored violating case")
    s.add_argument("--case", required=True)
    s.add_argument("--out")
    s.add_argument("--tol", type=float, default=TOL_REL)
    return p


COMMANDS = {"list": cmd_list, "verify": cmd_verify, "eval": cmd_eval, "shrink": cmd_shrink}


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args, out)
    except ConvergenceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL
    except NotHermitianError as exc:
        print(f"error: {exc}; hermiticity defect = {exc.defect:.15g}", file=sys.stderr)
        return EXIT_USAGE
    except NotPositiveError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except HeinzLabError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
