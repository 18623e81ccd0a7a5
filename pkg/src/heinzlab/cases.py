"""Sampled inequality instances and the generators that produce them.

Randomness comes from numpy's counter-based Philox generator.  Each
(suite, trial) pair gets its own 64-bit key, derived by hashing the suite
id and trial index and mixing in the campaign seed, so any single case can
be regenerated without replaying the others.
"""
from __future__ import annotations

import hashlib
import math
from dataclasses import dataclass, field, fields, replace
from typing import Optional

import numpy as np

from .config import CONDITION_HI, CONDITION_LO
from .errors import ParameterError
from .linalg import eig_hermitian, hermitize
from .matio import matrix_from_dict, matrix_to_dict
from .suites import SpectralCondition

MASK64 = (1 << 64) - 1
_DIM_SALT = 0x9E3779B97F4A7C15


def trial_seed(seed: int, suite_id: str, trial: int) -> int:
    digest = hashlib.blake2b(f"{suite_id}:{trial}".encode(), digest_size=8).digest()
    return (int.from_bytes(digest, "little") ^ seed) & MASK64


def rng_for(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.Philox(key=seed & MASK64))


def trial_dim(seed: int, dim_min: int, dim_max: int) -> int:
    return int(rng_for(seed ^ _DIM_SALT).integers(dim_min, dim_max + 1))


@dataclass(frozen=True)
class WeightParams:
    """Scalar parameters of one instance; unused fields stay ``None``."""

    kappa: Optional[float] = None
    nu: Optional[float] = None
    m: Optional[int] = None
    r_exp: Optional[float] = None
    p: Optional[float] = None
    q: Optional[float] = None
    theta: Optional[float] = None
    varrho: Optional[float] = None
    mu: Optional[float] = None
    t: Optional[float] = None
    hhm_r: Optional[float] = None
    weights: Optional[tuple] = None
    gammas: Optional[tuple] = None

    def to_dict(self) -> dict:
        out = {}
        for f in fields(self):
            v = getattr(self, f.name)
            if v is not None:
                out[f.name] = list(v) if isinstance(v, tuple) else v
        return out

    @classmethod
    def from_dict(cls, doc: dict) -> "WeightParams":
        known = {f.name for f in fields(cls)}
        unknown = set(doc) - known
        if unknown:
            raise ParameterError(f"unknown parameters {sorted(unknown)}")
        kw = {}
        for k, v in doc.items():
            if k in ("weights", "gammas"):
                kw[k] = tuple(float(x) for x in v)
            elif k == "m":
                kw[k] = int(v)
            else:
                kw[k] = float(v)
        return cls(**kw)

    def with_(self, **changes) -> "WeightParams":
        return replace(self, **changes)


@dataclass(frozen=True)
class InequalityCase:
    suite_id: str
    dim: int
    seed: int
    params: WeightParams
    condition: Optional[SpectralCondition] = None
    operands: tuple = field(default=(), repr=False)

    def to_dict(self) -> dict:
        return {
            "suite_id": self.suite_id,
            "dim": self.dim,
            "seed": self.seed,
            "params": self.params.to_dict(),
            "condition": self.condition.to_dict() if self.condition else None,
            "operands": [matrix_to_dict(a) for a in self.operands],
        }

    @classmethod
    def from_dict(cls, doc: dict) -> "InequalityCase":
        try:
            cond = doc.get("condition")
            return cls(
                suite_id=str(doc["suite_id"]),
                dim=int(doc["dim"]),
                seed=int(doc["seed"]),
                params=WeightParams.from_dict(doc.get("params", {})),
                condition=SpectralCondition(**cond) if cond else None,
                operands=tuple(matrix_from_dict(m) for m in doc["operands"]),
            )
        except (KeyError, TypeError) as exc:
            raise ParameterError(f"malformed case document: {exc}") from None


# ---------------------------------------------------------------------------
# generators
# ---------------------------------------------------------------------------

def log_uniform(rng: np.random.Generator, lo: float, hi: float, size=None):
    return np.exp(rng.uniform(math.log(lo), math.log(hi), size))


def random_complex(rng: np.random.Generator, dim: int) -> np.ndarray:
    return rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))


def random_unitary(rng: np.random.Generator, dim: int) -> np.ndarray:
    """Eigenvectors of a random Hermitian matrix with independent entries."""
    return eig_hermitian(hermitize(random_complex(rng, dim))).vectors


def gen_positive(dim: int, spectrum_lo: float, spectrum_hi: float, rng: np.random.Generator) -> np.ndarray:
    """Positive definite matrix with a log-uniform spectrum in ``[lo, hi]``."""
    if not (0.0 < spectrum_lo <= spectrum_hi) or not math.isfinite(spectrum_hi):
        raise ParameterError(f"invalid spectrum interval [{spectrum_lo}, {spectrum_hi}]")
    if spectrum_lo == spectrum_hi:
        return spectrum_lo * np.eye(dim, dtype=complex)
    lam = log_uniform(rng, spectrum_lo, spectrum_hi, dim)
    if dim == 1:
        return np.array([[lam[0]]], dtype=complex)
    u = random_unitary(rng, dim)
    return hermitize((u * lam) @ u.conj().T)


def sample_condition(rng: np.random.Generator, variant: str) -> SpectralCondition:
    """Sorted log-uniform endpoints in the configured window; ``m' < M'`` by rejection."""
    while True:
        q = np.sort(log_uniform(rng, CONDITION_LO, CONDITION_HI, 4))
        if variant == "a":
            if q[1] < q[2]:
                return SpectralCondition(float(q[0]), float(q[1]), float(q[2]), float(q[3]), "a")
        else:
            return SpectralCondition(float(q[0]), float(q[1]), float(q[1]), float(q[3]), "b")


def gen_conditioned_pair(dim: int, cond: SpectralCondition, rng: np.random.Generator):
    """``(T, S)`` with spectra inside the intervals required by ``cond``."""
    t = gen_positive(dim, *cond.t_interval(), rng)
    s = gen_positive(dim, *cond.s_interval(), rng)
    cond.validate(t, s)
    return t, s
