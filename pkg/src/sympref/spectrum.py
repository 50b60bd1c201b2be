"""Symplectic eigenvalues of an antisymmetric 2-form, numerically.

Given an antisymmetric matrix theta and a Hermitian positive-definite
metric h on the same space, there is a basis orthonormal for h in which
theta becomes block-diagonal with blocks lambda_i [[0, 1], [-1, 0]],
lambda_i >= 0.  The lambda_i are computed by transporting theta to an
h-orthonormal frame (Cholesky) and reading off the singular values,
which come in equal pairs; a pairing failure beyond tolerance is
reported rather than silently averaged away.

This module is deliberately floating point: the eigenvalues are
generally irrational even for rational input.
"""

from __future__ import annotations

import numpy as np

DEFAULT_INPUT_TOL = 1e-12
DEFAULT_PAIR_TOL = 1e-8


class BadInput(ValueError):
    """Input matrix is not of the promised shape or symmetry class."""


class ToleranceViolation(ArithmeticError):
    """Singular values failed to pair up within tolerance."""


def _as_square(matrix, name):
    a = np.asarray(matrix, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise BadInput("%s must be a square matrix" % name)
    return a


def pfaffian(matrix) -> complex:
    """Pfaffian of an antisymmetric matrix.

    Uses direct expansion along the first row up to dimension 8 and
    skew-symmetric tridiagonalization with pivoting beyond that.  The
    input is trusted to be antisymmetric; only the shape is checked.
    """
    a = _as_square(matrix, "matrix")
    n = a.shape[0]
    if n % 2:
        return 0.0 + 0.0j
    if n == 0:
        return 1.0 + 0.0j
    if n <= 8:
        return _pfaffian_expansion(a, tuple(range(n)))
    return _pfaffian_tridiagonal(a)


def _pfaffian_expansion(a, idxs):
    if not idxs:
        return 1.0 + 0.0j
    i0 = idxs[0]
    rest = idxs[1:]
    total = 0.0 + 0.0j
    for t, j in enumerate(rest):
        entry = a[i0, j]
        if entry != 0:
            remaining = rest[:t] + rest[t + 1 :]
            total += (-1) ** t * entry * _pfaffian_expansion(a, remaining)
    return total


def _pfaffian_tridiagonal(a):
    # Parlett-Reid style elimination: congruence transformations bring
    # the matrix to skew tridiagonal form; each row/column swap flips
    # the sign, and congruence by unit triangular matrices leaves the
    # pfaffian unchanged.
    a = a.copy()
    n = a.shape[0]
    value = 1.0 + 0.0j
    for k in range(0, n - 1, 2):
        pivot = k + 1 + int(np.argmax(np.abs(a[k + 1 :, k])))
        if pivot != k + 1:
            a[[k + 1, pivot], :] = a[[pivot, k + 1], :]
            a[:, [k + 1, pivot]] = a[:, [pivot, k + 1]]
            value = -value
        if a[k + 1, k] == 0:
            return 0.0 + 0.0j
        value *= a[k, k + 1]
        if k + 2 < n:
            tau = a[k, k + 2 :] / a[k, k + 1]
            col = a[k + 2 :, k + 1]
            a[k + 2 :, k + 2 :] += np.outer(tau, col) - np.outer(col, tau)
    return value


def symplectic_eigenvalues(
    theta,
    metric=None,
    input_tol: float = DEFAULT_INPUT_TOL,
    pair_tol: float = DEFAULT_PAIR_TOL,
) -> np.ndarray:
    """The n/2 symplectic eigenvalues of theta, ascending.

    theta must be antisymmetric and metric (identity when omitted)
    Hermitian positive definite, both to input_tol relative.  The
    paired singular values must agree to pair_tol relative to the
    largest one, else ToleranceViolation.
    """
    t = _as_square(theta, "theta")
    n = t.shape[0]
    if n == 0 or n % 2:
        raise BadInput("theta needs even positive dimension, got %d" % n)
    scale = max(float(np.max(np.abs(t))), 1.0)
    if float(np.max(np.abs(t + t.T))) > input_tol * scale:
        raise BadInput("theta is not antisymmetric to tolerance")

    if metric is None:
        frame = np.eye(n, dtype=complex)
    else:
        h = _as_square(metric, "metric")
        if h.shape[0] != n:
            raise BadInput("metric dimension differs from theta")
        hscale = max(float(np.max(np.abs(h))), 1.0)
        if float(np.max(np.abs(h - h.conj().T))) > input_tol * hscale:
            raise BadInput("metric is not Hermitian to tolerance")
        try:
            chol = np.linalg.cholesky(h)
        except np.linalg.LinAlgError:
            raise BadInput("metric is not positive definite") from None
        # columns of frame are an h-orthonormal basis
        frame = np.linalg.inv(chol.conj().T)

    transported = frame.T @ t @ frame
    singular = np.linalg.svd(transported, compute_uv=False)  # descending
    top = float(singular[0]) if n else 0.0
    threshold = pair_tol * max(top, np.finfo(float).tiny)
    pairs = []
    for k in range(0, n, 2):
        a, b = float(singular[k]), float(singular[k + 1])
        if abs(a - b) > threshold:
            raise ToleranceViolation(
                "singular values %.17g and %.17g do not pair" % (a, b)
            )
        pairs.append((a + b) / 2.0)
    return np.array(sorted(pairs))
