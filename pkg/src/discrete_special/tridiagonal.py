"""Symmetric tridiagonal eigenpairs by Sturm-sequence bisection and inverse iteration.

Sized for the truncated Mathieu matrices (a few hundred rows at most).  Only
selected eigenpairs are computed; everything is plain Python/numpy and
deterministic.
"""
from __future__ import annotations

import numpy as np

_EPS = np.finfo(float).eps
_TINY = np.finfo(float).tiny


def _check(diagonal, offdiagonal):
    d = np.asarray(diagonal, dtype=float)
    e = np.asarray(offdiagonal, dtype=float)
    if d.ndim != 1 or e.shape != (max(d.size - 1, 0),):
        raise ValueError("need n diagonal and n-1 off-diagonal entries")
    return d, e


def sturm_count(diagonal, offdiagonal, x: float) -> int:
    """Number of eigenvalues strictly less than ``x``.

    Counts negative pivots of the LDL^T factorisation of ``T - x I``.
    """
    d, e = _check(diagonal, offdiagonal)
    e2 = e * e
    count = 0
    pivot = d[0] - x
    pivot_floor = _EPS * (np.max(np.abs(d)) + 2.0 * (np.max(np.abs(e)) if e.size else 0.0)) + _TINY
    for i in range(d.size):
        if i > 0:
            pivot = d[i] - x - e2[i - 1] / pivot
        if pivot == 0.0:
            pivot = -pivot_floor
        if pivot < 0.0:
            count += 1
    return count


def gershgorin_bounds(diagonal, offdiagonal) -> tuple[float, float]:
    d, e = _check(diagonal, offdiagonal)
    radius = np.zeros_like(d)
    radius[:-1] += np.abs(e)
    radius[1:] += np.abs(e)
    lo = float(np.min(d - radius))
    hi = float(np.max(d + radius))
    pad = 2.0 * _EPS * max(abs(lo), abs(hi), 1.0)
    return lo - pad, hi + pad


def eigenvalue(diagonal, offdiagonal, index: int) -> float:
    """The ``index``-th smallest eigenvalue (0-based) by bisection to full precision."""
    d, e = _check(diagonal, offdiagonal)
    if not 0 <= index < d.size:
        raise IndexError(f"eigenvalue index {index} out of range for size {d.size}")
    lo, hi = gershgorin_bounds(d, e)
    while True:
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        if hi - lo <= 2.0 * _EPS * max(abs(lo), abs(hi)) + _TINY:
            break
        if sturm_count(d, e, mid) > index:
            hi = mid
        else:
            lo = mid
    return 0.5 * (lo + hi)


def _guard(pivot, floor):
    if abs(pivot) >= floor:
        return pivot
    return floor if pivot >= 0.0 else -floor


def _solve_shifted(d, e, shift, rhs):
    """Solve ``(T - shift I) x = rhs`` by Gaussian elimination with partial pivoting."""
    n = d.size
    diag = d - shift
    floor = _EPS * (np.max(np.abs(d)) + abs(shift) + (np.max(np.abs(e)) if e.size else 0.0)) + _TINY
    # rows of U: u0 (diagonal), u1, u2 (super-diagonals)
    u0 = np.zeros(n)
    u1 = np.zeros(n)
    u2 = np.zeros(n)
    b = rhs.astype(float).copy()
    cur_d, cur_u = diag[0], (e[0] if n > 1 else 0.0)
    cur_u2 = 0.0
    for i in range(n - 1):
        below_l, below_d = e[i], diag[i + 1]
        below_u = e[i + 1] if i + 1 < n - 1 else 0.0
        if abs(cur_d) >= abs(below_l) or abs(below_l) < floor:
            piv_d, piv_u, piv_u2 = _guard(cur_d, floor), cur_u, cur_u2
            m = below_l / piv_d
            cur_d = below_d - m * piv_u
            cur_u = below_u - m * piv_u2
            cur_u2 = 0.0
            b[i + 1] -= m * b[i]
        else:
            piv_d, piv_u, piv_u2 = below_l, below_d, below_u
            m = cur_d / below_l
            cur_d = cur_u - m * below_d
            cur_u = cur_u2 - m * below_u
            cur_u2 = 0.0
            b[i], b[i + 1] = b[i + 1], b[i] - m * b[i + 1]
        u0[i], u1[i], u2[i] = piv_d, piv_u, piv_u2
    u0[n - 1] = _guard(cur_d, floor)
    x = np.zeros(n)
    for i in range(n - 1, -1, -1):
        acc = b[i]
        if i + 1 < n:
            acc -= u1[i] * x[i + 1]
        if i + 2 < n:
            acc -= u2[i] * x[i + 2]
        x[i] = acc / u0[i]
    return x


def eigenvector(diagonal, offdiagonal, value: float, iterations: int = 3) -> np.ndarray:
    """Unit eigenvector for an (accurate) eigenvalue by inverse iteration."""
    d, e = _check(diagonal, offdiagonal)
    n = d.size
    if n == 1:
        return np.ones(1)
    # deterministic start with no special alignment to the coordinate axes
    v = 1.0 + 0.5 * np.sin(np.arange(1, n + 1) * 1.2345)
    v /= np.linalg.norm(v)
    for _ in range(iterations):
        w = _solve_shifted(d, e, value, v)
        norm = np.linalg.norm(w)
        if not np.isfinite(norm) or norm == 0.0:
            raise ArithmeticError("inverse iteration broke down")
        v = w / norm
    return v


def eigenpair(diagonal, offdiagonal, index: int) -> tuple[float, np.ndarray]:
    """The ``index``-th smallest eigenvalue and its unit eigenvector."""
    value = eigenvalue(diagonal, offdiagonal, index)
    return value, eigenvector(diagonal, offdiagonal, value)
