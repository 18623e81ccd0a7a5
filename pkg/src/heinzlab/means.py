"""Matrix means and the norm functionals built from them.

Operator convention: ``T nabla_k S = (1-k) T + k S`` and
``T sharp_k S = T^{1/2} (T^{-1/2} S T^{-1/2})^k T^{1/2}``, so the weight
``k`` sits on the second operand.  (The scalar helpers in
:mod:`heinzlab.scalar` weight the first operand instead.)
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .errors import DomainError, ParameterError
from .linalg import (
    EigenDecomposition,
    NormSelector,
    _same_dims,
    as_matrix,
    check_positive,
    eig_hermitian,
    fractional_power,
    hermitize,
    ui_norms,
)


def _definite(a):
    return check_positive(a, definite=True)


def _unit(name, v):
    if not (0.0 <= v <= 1.0):
        raise ParameterError(f"{name} must lie in [0, 1], got {v}")


def op_arith_mean(t, s, kappa: float) -> np.ndarray:
    _unit("kappa", kappa)
    t, _ = _definite(t)
    s, _ = _definite(s)
    _same_dims(t, s)
    return hermitize((1.0 - kappa) * t + kappa * s)


class _GeomMeanBase:
    """Shared factorisation for several geometric means of one pair.

    ``Z = T^{-1/2} S T^{-1/2}`` is decomposed once; each mean is then
    ``T^{1/2} Z^k T^{1/2}``.
    """

    def __init__(self, t, s):
        t, tdec = _definite(t)
        s, _ = _definite(s)
        _same_dims(t, s)
        self.root = fractional_power(tdec, 0.5)
        inv_root = fractional_power(tdec, -0.5)
        self.inner = eig_hermitian(hermitize(inv_root @ s @ inv_root))
        self.dim = t.shape[0]
        self._t = t
        self._s = s

    def sharp(self, kappa: float) -> np.ndarray:
        _unit("kappa", kappa)
        if kappa == 0.0:
            return self._t.copy()
        if kappa == 1.0:
            return self._s.copy()
        return hermitize(self.root @ fractional_power(self.inner, kappa) @ self.root)

    def heinz(self, kappa: float) -> np.ndarray:
        _unit("kappa", kappa)
        # the pair {k, 1-k} is built the same way from either end so that
        # H_k and H_{1-k} are bit-identical
        hi = kappa if kappa >= 0.5 else 1.0 - kappa
        return hermitize(0.5 * (self.sharp(hi) + self.sharp(1.0 - hi)))


def op_geom_mean(t, s, kappa: float) -> np.ndarray:
    return _GeomMeanBase(t, s).sharp(kappa)


def op_heinz_mean(t, s, kappa: float) -> np.ndarray:
    return _GeomMeanBase(t, s).heinz(kappa)


# ---------------------------------------------------------------------------
# interpolants
# ---------------------------------------------------------------------------

@dataclass
class InterpolantTerms:
    """Matrix products shared by the interpolating functionals.

    ``geo = T^k X S^{1-k}``, ``geo_swap = T^{1-k} X S^k`` and
    ``arith = (TX + XS) / 2``.
    """

    geo: np.ndarray
    geo_swap: np.ndarray
    arith: np.ndarray
    tx: np.ndarray
    xs: np.ndarray

    @classmethod
    def build(cls, t, s, x, kappa: float) -> "InterpolantTerms":
        _unit("kappa", kappa)
        t, tdec = _definite(t)
        s, sdec = _definite(s)
        x = as_matrix(x)
        _same_dims(t, s, x)
        tk, tk1 = fractional_power(tdec, kappa), fractional_power(tdec, 1.0 - kappa)
        sk, sk1 = fractional_power(sdec, kappa), fractional_power(sdec, 1.0 - kappa)
        tx, xs = t @ x, x @ s
        return cls(tk @ x @ sk1, tk1 @ x @ sk, 0.5 * (tx + xs), tx, xs)

    def psi_matrix(self, theta: float) -> np.ndarray:
        return (1.0 - theta) * self.geo + theta * self.arith

    def phi_matrix(self, theta: float) -> np.ndarray:
        return (1.0 - theta / 2.0) * (self.geo + self.geo_swap) + theta * self.arith


def _check_theta(theta):
    if not (theta >= 0.0) or not math.isfinite(theta):
        raise ParameterError(f"theta must be finite and >= 0, got {theta}")


def psi_interpolant(t, s, x, kappa: float, theta: float, sel: NormSelector) -> float:
    """``|||(1-theta) T^k X S^{1-k} + theta (TX + XS)/2|||``."""
    _check_theta(theta)
    return float(ui_norms(InterpolantTerms.build(t, s, x, kappa).psi_matrix(theta), [sel])[0])


def phi_interpolant(t, s, x, kappa: float, theta: float, sel: NormSelector) -> float:
    """``|||(1-theta/2)(T^k X S^{1-k} + T^{1-k} X S^k) + theta (TX + XS)/2|||``."""
    _check_theta(theta)
    return float(ui_norms(InterpolantTerms.build(t, s, x, kappa).phi_matrix(theta), [sel])[0])


# ---------------------------------------------------------------------------
# corollary functionals
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class MonotoneFunctionSpec:
    """A positive operator monotone function and its companion ``x / f(x)``."""

    name: str
    f: Callable[[np.ndarray], np.ndarray]

    def f_star(self, x):
        return x / self.f(x)

    def validate(self, grid: Sequence[float] = tuple(np.geomspace(1e-3, 1e3, 61))) -> None:
        x = np.asarray(grid, dtype=float)
        fx = self.f(x)
        if np.any(fx <= 0.0) or np.any(np.diff(fx) < 0.0):
            raise ParameterError(f"{self.name} is not positive and non-decreasing on the grid")
        if np.max(np.abs(self.f_star(x) * fx - x) / x) > 1e-12:
            raise ParameterError(f"{self.name}: f_star(x) f(x) != x")


SQRT = MonotoneFunctionSpec("sqrt", np.sqrt)
LOG1P = MonotoneFunctionSpec("log1p", np.log1p)
BUILTIN_FUNCTIONS = {fn.name: fn for fn in (SQRT, LOG1P)}

COROLLARY_VARIANTS = ("rahma2", "boshra1")


def corollary_matrix(t, s, x, mu: float, fn: MonotoneFunctionSpec, variant: str) -> tuple[np.ndarray, float]:
    """Return ``(M, c)`` such that the functional is ``c * |||M|||``.

    ``rahma2``:  ``M = T^{mu/2} (f(T^mu) X f*(S^mu) + f*(T^mu) X f(S^mu)) S^{mu/2}``, ``c = 1/2``.
    ``boshra1``: ``M = T^{mu/2} (f(T^mu) X + X f(S^mu)) S^{mu/2}``,
    ``c = eta / (2 f(eta))`` with ``eta`` the least eigenvalue of ``T`` and ``S``.
    """
    _unit("mu", mu)
    t, tdec = _definite(t)
    s, sdec = _definite(s)
    x = as_matrix(x)
    _same_dims(t, s, x)
    # T^mu shares eigenvectors with T, so f(T^mu) is f applied to lambda^mu
    t_mu = EigenDecomposition(tdec.values**mu, tdec.vectors)
    s_mu = EigenDecomposition(sdec.values**mu, sdec.vectors)
    left = fractional_power(tdec, mu / 2.0)
    right = fractional_power(sdec, mu / 2.0)
    f_t, f_s = t_mu.apply(fn.f), s_mu.apply(fn.f)
    if variant == "rahma2":
        inner = f_t @ x @ s_mu.apply(fn.f_star) + t_mu.apply(fn.f_star) @ x @ f_s
        return left @ inner @ right, 0.5
    if variant == "boshra1":
        eta = float(min(tdec.values[-1], sdec.values[-1]))
        f_eta = float(fn.f(np.array([eta]))[0])
        if not (f_eta > 0.0):
            raise DomainError(f"{fn.name}({eta}) is not positive")
        return left @ (f_t @ x + x @ f_s) @ right, eta / (2.0 * f_eta)
    raise ParameterError(f"unknown variant {variant!r}; expected one of {COROLLARY_VARIANTS}")


def corollary_functional(t, s, x, mu: float, fn: MonotoneFunctionSpec, variant: str, sel: NormSelector) -> float:
    m, c = corollary_matrix(t, s, x, mu, fn, variant)
    return c * float(ui_norms(m, [sel])[0])


def heinz_pair_functional(t, s, x, mu: float, sel: NormSelector) -> float:
    """``(1/2) |||T^mu X S^{1-mu} + T^{1-mu} X S^mu|||``."""
    terms = InterpolantTerms.build(t, s, x, mu)
    return 0.5 * float(ui_norms(terms.geo + terms.geo_swap, [sel])[0])
