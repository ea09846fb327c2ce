"""Discrete Bessel functions on the odd N-point circle and the continuous J_n oracle.

The discrete function is the lattice average

    B_n(rho) = (1/N) sum_m exp(i rho sin phi_m) * (cos n phi_m      n even
                                                   -i sin n phi_m   n odd)

on the offset-free lattice ``phi_m = 2 pi m / N``.  Pairing ``m`` with
``N - m`` cancels the imaginary part, so the real form is used directly.

Index conventions
-----------------
The parity split makes ``B_n`` exactly equal to the 2N-point DFT coefficient
of ``exp(i rho sin theta)``, so the sequence has period ``2N`` in ``n``:
``B_{-n} = (-1)**n B_n`` and ``B_n(-rho) = (-1)**n B_n(rho)`` hold for every
integer ``n``, and ``B_{n+2N} = B_n``.  Shifting by an odd ``N`` swaps the
even and odd formulas, so ``B_{n+N}`` is *not* ``B_n``.  (For odd N no
non-zero sequence can be both N-periodic and satisfy the ``(-1)**n`` parity
rule.)  The Helmholtz mode :func:`helmholtz_polar_mode` is N-periodic in its
label and reduces it to the symmetric range ``[-j, j]`` first.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .circle import DiscreteCircle, phase_basis
from .errors import UnsupportedConfigurationError

__all__ = [
    "BesselEvaluator",
    "bessel_j_sequence",
    "continuous_bessel_j",
    "discrete_bessel",
    "discrete_bessel_complex",
    "discrete_bessel_period",
    "graf_sum",
    "helmholtz_polar_direct",
    "helmholtz_polar_mode",
    "linear_relation_residuals",
    "plane_wave_expand",
    "require_odd",
]


def require_odd(n_points: int) -> DiscreteCircle:
    if int(n_points) != n_points or n_points < 3 or n_points % 2 == 0:
        raise UnsupportedConfigurationError(
            f"N must be an odd integer >= 3, got {n_points!r}")
    return DiscreteCircle(int(n_points))


# ---------------------------------------------------------------------------
# discrete functions

def _kernels(circle: DiscreteCircle, rho):
    rho = np.asarray(rho, dtype=float)
    arg = np.multiply.outer(rho, circle.sin_table())
    return rho, np.cos(arg), np.sin(arg)


def discrete_bessel(N: int, n: int, rho):
    """``B_n^(N)(rho)`` for odd ``N``; ``rho`` may be a scalar or an array."""
    circle = require_odd(N)
    rho, c, s = _kernels(circle, rho)
    if n % 2 == 0:
        out = c @ circle.cos_mult(n)
    else:
        out = s @ circle.sin_mult(n)
    out = out / N
    return float(out) if out.ndim == 0 else out


def discrete_bessel_complex(N: int, n: int, rho):
    """The defining complex sum, before the reality of ``B_n`` is used."""
    circle = require_odd(N)
    rho = np.asarray(rho, dtype=float)
    wave = np.exp(1j * np.multiply.outer(rho, circle.sin_table()))
    if n % 2 == 0:
        weight = circle.cos_mult(n).astype(complex)
    else:
        weight = -1j * circle.sin_mult(n)
    out = wave @ weight / N
    return complex(out) if out.ndim == 0 else out


def discrete_bessel_period(N: int, rho: float) -> np.ndarray:
    """``B_k^(N)(rho)`` for ``k = 0 .. 2N-1``, one full period of the sequence."""
    circle = require_odd(N)
    _, c, s = _kernels(circle, float(rho))
    out = np.empty(2 * N)
    for k in range(2 * N):
        out[k] = (c @ circle.cos_mult(k)) if k % 2 == 0 else (s @ circle.sin_mult(k))
    return out / N


# ---------------------------------------------------------------------------
# continuous oracle

_SERIES_LIMIT = 2.0


def _series_j(k: int, x: float) -> float:
    half = 0.5 * x
    log_lead = k * math.log(half) - math.lgamma(k + 1)
    if log_lead < -745.0:
        return 0.0
    term = math.exp(log_lead)
    total = term
    j = 0
    while True:
        j += 1
        term *= -half * half / (j * (j + k))
        total += term
        if abs(term) <= 1e-18 * abs(total):
            return total


def _miller(nmax: int, x: float) -> np.ndarray:
    top = max(nmax, x)
    start = int(top) + 40 + int(10.0 * top ** (1.0 / 3.0))
    start += start % 2
    vals = np.zeros(start + 2)
    vals[start] = 1e-30
    for k in range(start, 0, -1):
        vals[k - 1] = (2.0 * k / x) * vals[k] - vals[k + 1]
        if abs(vals[k - 1]) > 1e250:
            vals[k - 1:] *= 1e-250
    norm = math.fsum([vals[0]] + [2.0 * v for v in vals[2:start + 1:2]])
    return vals[:nmax + 1] / norm


def bessel_j_sequence(nmax: int, x: float) -> np.ndarray:
    """``[J_0(x), ..., J_nmax(x)]`` for real ``x``.

    Ascending series for ``|x| <= 2``; otherwise Miller's backward recurrence
    normalised with ``J_0 + 2 sum_k J_2k = 1``.
    """
    if nmax < 0:
        raise ValueError("nmax must be non-negative")
    x = float(x)
    ax = abs(x)
    if ax == 0.0:
        out = np.zeros(nmax + 1)
        out[0] = 1.0
        return out
    if ax <= _SERIES_LIMIT:
        out = np.array([_series_j(k, ax) for k in range(nmax + 1)])
    else:
        out = _miller(nmax, ax)
    if x < 0:
        out[1::2] *= -1.0
    return out


def continuous_bessel_j(n: int, rho):
    """``J_n(rho)`` for integer ``n`` (negative orders via ``J_-n = (-1)^n J_n``)."""
    sign = -1.0 if (n < 0 and n % 2) else 1.0
    k = abs(int(n))
    rho_arr = np.asarray(rho, dtype=float)
    out = np.array([bessel_j_sequence(k, x)[k] for x in rho_arr.ravel()]).reshape(rho_arr.shape)
    out = sign * out
    return float(out) if out.ndim == 0 else out


@dataclass(frozen=True)
class BesselEvaluator:
    """Evaluates ``B_n^(N)`` and ``J_n`` on a shared (order, argument) convention."""

    n_points: int

    def __post_init__(self):
        require_odd(self.n_points)

    def discrete(self, n: int, rho):
        return discrete_bessel(self.n_points, n, rho)

    def continuous(self, n: int, rho):
        return continuous_bessel_j(n, rho)

    def difference(self, n: int, rho):
        return np.abs(np.asarray(self.discrete(n, rho)) - np.asarray(self.continuous(n, rho)))


# ---------------------------------------------------------------------------
# identities

def plane_wave_expand(N: int, rho: float, m: int) -> complex:
    """Rebuild ``exp(i rho sin phi_m)`` from discrete Bessel functions.

    The cosine and sine sums run to ``j = (N-1)/2``; together with the
    factor 2 this is the lattice analogue of the Jacobi-Anger expansion.
    """
    circle = require_odd(N)
    j = (N - 1) // 2
    period = discrete_bessel_period(N, rho)
    cos_t, sin_t = circle.cos_table(), circle.sin_table()
    even = period[0] + 2.0 * sum(period[2 * n] * cos_t[(2 * n * m) % N] for n in range(1, j + 1))
    odd = 2.0 * sum(period[2 * n + 1] * sin_t[((2 * n + 1) * m) % N] for n in range(0, j + 1))
    return complex(even, odd)


def linear_relation_residuals(N: int, rho: float) -> tuple[float, float]:
    """Max lattice residuals of the even and odd linear relations.

    even: ``B_0 + 2 sum_{n=1}^{j} B_2n cos(2n phi_m) - cos(rho sin phi_m)``
    odd:  ``sum_{n=0}^{j} B_{2n+1} sin((2n+1) phi_m) - sin(rho sin phi_m)/2``
    """
    circle = require_odd(N)
    j = (N - 1) // 2
    period = discrete_bessel_period(N, rho)
    s = circle.sin_table()
    even = period[0] + 2.0 * sum(period[2 * n] * circle.cos_mult(2 * n) for n in range(1, j + 1))
    odd = sum(period[2 * n + 1] * circle.sin_mult(2 * n + 1) for n in range(0, j + 1))
    even_res = np.max(np.abs(even - np.cos(rho * s)))
    odd_res = np.max(np.abs(odd - 0.5 * np.sin(rho * s)))
    return float(even_res), float(odd_res)


def graf_sum(N: int, n_prime: int, rho: float, rho_prime: float) -> float:
    """``sum_{n=-2j}^{2j} B_n(rho) B_{n'-n}(rho')``; equals ``B_{n'}(rho + rho')``.

    The range covers 2N - 1 consecutive orders; the one order it omits,
    ``n = N`` (mod 2N), has ``B_N = 0`` identically, so the sum is the full
    cyclic convolution over one period.
    """
    require_odd(N)
    j = (N - 1) // 2
    first = discrete_bessel_period(N, rho)
    second = discrete_bessel_period(N, rho_prime)
    period = 2 * N
    terms = [first[n % period] * second[(n_prime - n) % period] for n in range(-2 * j, 2 * j + 1)]
    return math.fsum(terms)


def _symmetric_label(N: int, n: int) -> int:
    r = n % N
    return r - N if r > (N - 1) // 2 else r


def helmholtz_polar_mode(N: int, n: int, rho: float, k: int) -> complex:
    """``i^n sqrt(N) B_n(rho) Phi_n(theta_k)`` with the label reduced to ``[-j, j]``.

    This agrees with :func:`helmholtz_polar_direct` up to aliased terms
    ``J_{n+sN}(rho)``, ``s != 0``: a quarter turn is not a lattice shift when
    N is odd, so the phase ``i^n`` cannot be extracted exactly.  Inside the
    region ``|n| + rho`` well below N the gap is at rounding level.
    """
    circle = require_odd(N)
    r = _symmetric_label(N, n)
    return (1j ** r) * math.sqrt(N) * discrete_bessel(N, r, rho) * phase_basis(circle, r, k)


def helmholtz_polar_direct(N: int, n: int, rho: float, k: int) -> complex:
    """Plane-wave superposition over the N lattice directions, evaluated at ``(rho, theta_k)``."""
    circle = require_odd(N)
    cos_t, sin_t = circle.cos_table(), circle.sin_table()
    ck, sk = cos_t[k % N], sin_t[k % N]
    phase = np.exp(1j * rho * (ck * cos_t + sk * sin_t))
    basis = (circle.cos_mult(n) + 1j * circle.sin_mult(n)) / math.sqrt(N)
    return complex(np.sum(phase * basis) / math.sqrt(N))
