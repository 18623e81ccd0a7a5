"""Random instances and small numeric oracles shared by the tests."""
import numpy as np


def rand_complex(rng, n):
    return rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))


def rand_hermitian(rng, n):
    a = rand_complex(rng, n)
    return 0.5 * (a + a.conj().T)


def rand_unitary(rng, n):
    q, r = np.linalg.qr(rand_complex(rng, n))
    return q * (np.diag(r) / np.abs(np.diag(r)))


def rand_pd(rng, n, lo=0.1, hi=10.0):
    lam = np.exp(rng.uniform(np.log(lo), np.log(hi), n))
    u = rand_unitary(rng, n)
    a = (u * lam) @ u.conj().T
    return 0.5 * (a + a.conj().T)


def rel_err(a, b):
    a, b = np.asarray(a), np.asarray(b)
    return float(np.max(np.abs(a - b)) / max(1.0, float(np.max(np.abs(b)))))


def count_below(a, x):
    """Number of eigenvalues of Hermitian ``a`` below ``x``, by Sylvester inertia of an LDL* sweep."""
    m = np.array(a, dtype=complex) - x * np.eye(a.shape[0])
    n = m.shape[0]
    neg = 0
    for k in range(n):
        d = m[k, k].real
        if d == 0.0:
            d = -1e-300
        if d < 0:
            neg += 1
        if k + 1 < n:
            col = m[k + 1:, k] / d
            m[k + 1:, k + 1:] -= np.outer(col, m[k, k + 1:])
    return neg


def bisect_eigenvalues(a, tol=1e-13):
    """All eigenvalues of Hermitian ``a`` (non-increasing) by bisection on the inertia count."""
    n = a.shape[0]
    bound = float(np.max(np.sum(np.abs(a), axis=1))) + 1.0
    out = []
    for j in range(n):
        # the (j+1)-th smallest eigenvalue is the least x with count_below(x) > j
        lo, hi = -bound, bound
        while hi - lo > tol * max(1.0, abs(lo), abs(hi)):
            mid = 0.5 * (lo + hi)
            if count_below(a, mid) > j:
                hi = mid
            else:
                lo = mid
        out.append(0.5 * (lo + hi))
    return np.array(out[::-1])


def cofactor_det3(a):
    return (
        a[0, 0] * (a[1, 1] * a[2, 2] - a[1, 2] * a[2, 1])
        - a[0, 1] * (a[1, 0] * a[2, 2] - a[1, 2] * a[2, 0])
        + a[0, 2] * (a[1, 0] * a[2, 1] - a[1, 1] * a[2, 0])
    )
