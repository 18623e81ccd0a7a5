"""JSON matrix files: ``{"dim": n, "entries": [[re, im], ...]}`` in row-major order."""
from __future__ import annotations

import json
from pathlib import Path

import numpy as np

from .errors import HeinzLabError
from .linalg import as_matrix, check_hermitian, check_positive


class MatrixFormatError(HeinzLabError, ValueError):
    """A matrix document does not follow the file format."""


def matrix_to_dict(a) -> dict:
    m = as_matrix(a)
    flat = m.reshape(-1)
    return {"dim": int(m.shape[0]), "entries": [[float(z.real), float(z.imag)] for z in flat]}


def matrix_from_dict(doc) -> np.ndarray:
    try:
        n = doc["dim"]
        entries = doc["entries"]
    except (TypeError, KeyError) as exc:
        raise MatrixFormatError(f"matrix document needs 'dim' and 'entries': {exc}") from None
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise MatrixFormatError(f"'dim' must be a positive integer, got {n!r}")
    if not isinstance(entries, list) or len(entries) != n * n:
        raise MatrixFormatError(f"expected {n * n} entries")
    values = []
    for e in entries:
        if isinstance(e, (int, float)) and not isinstance(e, bool):
            values.append(complex(e))
        elif isinstance(e, list) and len(e) == 2 and all(isinstance(v, (int, float)) for v in e):
            values.append(complex(e[0], e[1]))
        else:
            raise MatrixFormatError(f"bad entry {e!r}; expected [re, im]")
    try:
        return as_matrix(np.array(values, dtype=complex).reshape(n, n))
    except ValueError as exc:
        raise MatrixFormatError(str(exc)) from None


def load_matrix(path, hermitian: bool = False, positive: bool = False) -> np.ndarray:
    try:
        doc = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise MatrixFormatError(f"cannot read matrix file {path}: {exc}") from None
    m = matrix_from_dict(doc)
    if positive:
        return check_positive(m)[0]
    if hermitian:
        return check_hermitian(m)
    return m


def save_matrix(path, a) -> None:
    Path(path).write_text(json.dumps(matrix_to_dict(a)) + "\n")
