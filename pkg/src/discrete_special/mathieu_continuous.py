"""Continuous Mathieu functions from truncated tridiagonal eigenproblems.

The angular equation is written as an eigenproblem

    psi'' - 2 q cos(2 psi) psi = nu psi,

so the eigenvalue stored here is ``nu = -a`` with ``a`` the characteristic
value found in the usual tables (``a_n(0) = n**2``, hence ``nu = -n**2`` at
``q = 0``).  Each of the four symmetry classes has its own frequency ladder:

==========  ============  =================
class       orders        frequencies
==========  ============  =================
CE_EVEN     0, 2, 4, ...  0, 2, 4, ...
CE_ODD      1, 3, 5, ...  1, 3, 5, ...
SE_ODD      1, 3, 5, ...  1, 3, 5, ...
SE_EVEN     2, 4, 6, ...  2, 4, 6, ...
==========  ============  =================

Functions are normalised so that ``int_0^{2pi} f**2 = pi`` and the
coefficient at the frequency equal to the order is positive.

The radial functions ``Ce_n(r) = ce_n(i r)`` and ``Se_n(r) = -i se_n(i r)``
are called "of the second kind" in some of the discrete-lattice literature;
most tables call them modified Mathieu functions of the first kind.  They are
evaluated either from the hyperbolic series (small ``r``) or from the
Bessel-product expansion, which stays well conditioned where the hyperbolic
series cancels catastrophically.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import tridiagonal
from .bessel import bessel_j_sequence
from .errors import (DegenerateEigenvalueError, MathieuConvergenceError,
                     SeriesRangeError)

__all__ = [
    "BoundaryValues",
    "MathieuSolution",
    "SymmetryClass",
    "angular",
    "boundary_derivatives",
    "ce",
    "fourier_coefficient",
    "radial",
    "radial_ce",
    "radial_se",
    "se",
    "solve_mathieu",
]

TAIL_TOLERANCE = 1e-14
MAX_TRUNCATION = 512
DEGENERACY_GAP = 1e-12


class SymmetryClass(enum.Enum):
    """The four parity classes of periodic Mathieu functions."""

    CE_EVEN = ("ce", 0)
    CE_ODD = ("ce", 1)
    SE_ODD = ("se", 1)
    SE_EVEN = ("se", 0)

    @property
    def kind(self) -> str:
        return self.value[0]

    @property
    def parity(self) -> int:
        """``p`` in the order decomposition ``2n + p``."""
        return self.value[1]

    @property
    def first_frequency(self) -> int:
        return 2 if self is SymmetryClass.SE_EVEN else self.parity

    def ladder(self, size: int) -> np.ndarray:
        return self.first_frequency + 2 * np.arange(size)

    def index_of(self, order: int) -> int:
        """Position of ``order`` in the class's ascending eigenvalue list."""
        return (order - self.first_frequency) // 2

    @classmethod
    def of(cls, kind: str, order: int) -> "SymmetryClass":
        if kind not in ("ce", "se"):
            raise ValueError(f"kind must be 'ce' or 'se', got {kind!r}")
        if order < 0 or int(order) != order:
            raise ValueError(f"order must be a non-negative integer, got {order!r}")
        if kind == "se" and order == 0:
            raise ValueError("se has no order 0 (it vanishes identically)")
        if kind == "ce":
            return cls.CE_EVEN if order % 2 == 0 else cls.CE_ODD
        return cls.SE_ODD if order % 2 == 1 else cls.SE_EVEN


@dataclass(frozen=True)
class MathieuSolution:
    """One eigenpair of the angular Mathieu equation."""

    symmetry: SymmetryClass
    order: int
    q: float
    nu: float
    frequencies: np.ndarray
    coefficients: np.ndarray
    tail_magnitude: float

    @property
    def kind(self) -> str:
        return self.symmetry.kind

    @property
    def truncation(self) -> int:
        return self.coefficients.size

    @property
    def characteristic_value(self) -> float:
        """The conventional ``a`` (or ``b``) value, ``-nu``."""
        return -self.nu


# ---------------------------------------------------------------------------
# eigenproblem

def _class_matrix(symmetry: SymmetryClass, q: float, size: int):
    freqs = symmetry.ladder(size)
    diag = freqs.astype(float) ** 2
    off = np.full(size - 1, q, dtype=float)
    if symmetry is SymmetryClass.CE_EVEN and size > 1:
        off[0] *= math.sqrt(2.0)
    elif symmetry is SymmetryClass.CE_ODD:
        diag[0] += q
    elif symmetry is SymmetryClass.SE_ODD:
        diag[0] -= q
    return freqs, diag, off


def _refine_tail(diag, off, value, vec, index, q):
    """Rebuild the decaying tail of ``vec`` from backward continued-fraction ratios.

    Inverse iteration leaves absolute noise of order 1e-17 in coefficients
    that should be far smaller; the hyperbolic series multiplies those by
    ``cosh(f r)``.  Past the turning point the ratios ``x[r+1]/x[r]`` are
    stable when computed from the bottom up.
    """
    n = diag.size
    start = index + 1
    while start < n - 1 and diag[start] - value < 4.0 * abs(q):
        start += 1
    if start >= n - 1:
        return vec
    ratio = np.zeros(n)
    for r in range(n - 2, start - 1, -1):
        below = off[r + 1] * ratio[r + 1] if r + 1 < n - 1 else 0.0
        ratio[r] = -off[r] / ((diag[r + 1] - value) + below)
    out = vec.copy()
    for r in range(start, n - 1):
        out[r + 1] = ratio[r] * out[r]
    return out / np.linalg.norm(out)


def _solve_once(symmetry: SymmetryClass, order: int, q: float, size: int):
    freqs, diag, off = _class_matrix(symmetry, q, size)
    index = symmetry.index_of(order)
    if q == 0.0:
        # the matrix is diagonal: a single pure harmonic, exactly
        vec = np.zeros(size)
        vec[index] = 1.0 / math.sqrt(2.0) if freqs[index] == 0 else 1.0
        return freqs, float(diag[index]), vec
    value = tridiagonal.eigenvalue(diag, off, index)
    for other in (index - 1, index + 1):
        if 0 <= other < size:
            gap = abs(tridiagonal.eigenvalue(diag, off, other) - value)
            if gap < DEGENERACY_GAP:
                raise DegenerateEigenvalueError(
                    f"{symmetry.name} order {order}: eigenvalue gap {gap:.3g} at q={q}")
    vec = tridiagonal.eigenvector(diag, off, value)
    vec = _refine_tail(diag, off, value, vec, index, q)
    if symmetry is SymmetryClass.CE_EVEN:
        vec = vec.copy()
        vec[0] /= math.sqrt(2.0)
    if vec[index] < 0:
        vec = -vec
    return freqs, value, vec


@lru_cache(maxsize=512)
def _solve_cached(symmetry: SymmetryClass, order: int, q: float, truncation):
    size = truncation or max(symmetry.index_of(order) + 15, math.ceil(3.0 * math.sqrt(abs(q))) + 25)
    while True:
        if size > MAX_TRUNCATION:
            raise MathieuConvergenceError(
                f"{symmetry.name} order {order} at q={q}: tail still above "
                f"{TAIL_TOLERANCE} with {MAX_TRUNCATION} terms")
        freqs, value, vec = _solve_once(symmetry, order, q, size)
        tail = float(abs(vec[-1]))
        if tail < TAIL_TOLERANCE:
            break
        size *= 2
    freqs.setflags(write=False)
    vec.setflags(write=False)
    nu = -float(value)
    return MathieuSolution(symmetry, order, q, 0.0 if nu == 0.0 else nu, freqs, vec, tail)


def solve_mathieu(kind: str | SymmetryClass, order: int, q: float,
                  truncation: int | None = None) -> MathieuSolution:
    """Characteristic value and Fourier coefficients of ``ce_order`` or ``se_order``.

    ``kind`` is ``"ce"``/``"se"`` or a :class:`SymmetryClass` (which must then
    match the order's parity).  ``truncation`` is the starting number of
    ladder terms; it is doubled until the last coefficient is below 1e-14.
    """
    if isinstance(kind, SymmetryClass):
        symmetry = kind
        if SymmetryClass.of(symmetry.kind, order) is not symmetry:
            raise ValueError(f"order {order} does not belong to class {symmetry.name}")
    else:
        symmetry = SymmetryClass.of(kind, order)
    if truncation is not None and truncation < symmetry.index_of(order) + 1:
        raise ValueError("truncation too small to contain the requested order")
    return _solve_cached(symmetry, int(order), float(q), truncation)


# ---------------------------------------------------------------------------
# angular functions

def angular(solution: MathieuSolution, psi, derivative: int = 0):
    """``ce``/``se`` or one of its derivatives, summed termwise."""
    psi = np.asarray(psi, dtype=float)
    f = solution.frequencies.astype(float)
    arg = np.multiply.outer(psi, f)
    if solution.kind == "ce":
        trig = (np.cos, lambda x: -np.sin(x), lambda x: -np.cos(x))[derivative](arg)
    else:
        trig = (np.sin, np.cos, lambda x: -np.sin(x))[derivative](arg)
    out = trig @ (solution.coefficients * f ** derivative)
    return float(out) if out.ndim == 0 else out


def ce(solution: MathieuSolution, psi):
    if solution.kind != "ce":
        raise ValueError("ce called with an se solution")
    return angular(solution, psi)


def se(solution: MathieuSolution, psi):
    if solution.kind != "se":
        raise ValueError("se called with a ce solution")
    return angular(solution, psi)


def fourier_coefficient(solution: MathieuSolution, s: int) -> float:
    """``A_s`` or ``B_s``; zero off the class ladder or beyond the truncation."""
    k, rem = divmod(s - solution.symmetry.first_frequency, 2)
    if rem or k < 0 or k >= solution.truncation:
        return 0.0
    return float(solution.coefficients[k])


@dataclass(frozen=True)
class BoundaryValues:
    """Values entering the discrete radial constants; ``None`` where not applicable."""

    ce_at_0: float | None = None
    ce_prime_at_half_pi: float | None = None
    se_prime_at_0: float | None = None


def boundary_derivatives(solution: MathieuSolution) -> BoundaryValues:
    c = solution.coefficients
    f = solution.frequencies
    if solution.kind == "se":
        return BoundaryValues(se_prime_at_0=math.fsum(f * c))
    ce0 = math.fsum(c)
    if solution.symmetry is SymmetryClass.CE_EVEN:
        return BoundaryValues(ce_at_0=ce0)
    # d/dpsi cos(f psi) at pi/2 with f = 2s+1 is (2s+1)(-1)**(s+1)
    signs = np.where(np.arange(c.size) % 2 == 0, -1.0, 1.0)
    return BoundaryValues(ce_at_0=ce0, ce_prime_at_half_pi=math.fsum(signs * f * c))


# ---------------------------------------------------------------------------
# radial functions

_LOG_MAX = math.log(np.finfo(float).max)
_SERIES_SWITCH = 4.0


def _hyperbolic(solution: MathieuSolution, varrho: float) -> float:
    top = float(solution.frequencies[-1]) * varrho
    if top > _LOG_MAX - 40.0:
        raise SeriesRangeError(
            f"hyperbolic series overflows at varrho={varrho}", varrho=varrho)
    f = solution.frequencies * varrho
    basis = np.cosh(f) if solution.kind == "ce" else np.sinh(f)
    return math.fsum(solution.coefficients * basis)


def _product(solution: MathieuSolution, varrho: float) -> float:
    """Bessel-product expansion (valid for ``q > 0``)."""
    q = solution.q
    sq = math.sqrt(q)
    c = solution.coefficients
    size = c.size
    j1 = bessel_j_sequence(size + 2, sq * math.exp(-varrho))
    j2 = bessel_j_sequence(size + 2, sq * math.exp(varrho))
    k = np.arange(size)
    signs = np.where(k % 2 == 0, 1.0, -1.0)
    sym = solution.symmetry
    half = np.pi / 2
    if sym is SymmetryClass.CE_EVEN:
        terms = j1[k] * j2[k]
        scale = angular(solution, 0.0) * angular(solution, half) / c[0] ** 2
    elif sym is SymmetryClass.CE_ODD:
        terms = j1[k] * j2[k + 1] + j1[k + 1] * j2[k]
        scale = -angular(solution, 0.0) * angular(solution, half, 1) / (sq * c[0] ** 2)
    elif sym is SymmetryClass.SE_ODD:
        terms = j1[k] * j2[k + 1] - j1[k + 1] * j2[k]
        scale = angular(solution, 0.0, 1) * angular(solution, half) / (sq * c[0] ** 2)
    else:
        terms = j1[k] * j2[k + 2] - j1[k + 2] * j2[k]
        scale = -angular(solution, 0.0, 1) * angular(solution, half, 1) / (q * c[0] ** 2)
    return scale * math.fsum(signs * c * terms)


def radial(solution: MathieuSolution, varrho, method: str = "auto"):
    """``Ce_n(varrho, q)`` or ``Se_n(varrho, q)`` for ``varrho >= 0``.

    ``method="series"`` sums the hyperbolic series directly (raising
    :class:`SeriesRangeError` where it would overflow), ``"product"`` uses the
    Bessel-product expansion, and ``"auto"`` takes the series only while
    ``sqrt(q) * exp(varrho) <= 4``, beyond which the series loses digits to
    cancellation.
    """
    if method not in ("auto", "series", "product"):
        raise ValueError(f"unknown method {method!r}")
    values = np.asarray(varrho, dtype=float)
    if np.any(values < 0):
        raise ValueError("varrho must be non-negative")
    q = solution.q
    if method == "product" and q <= 0:
        raise ValueError("the product expansion needs q > 0")
    out = np.empty(values.shape)
    for idx, r in np.ndenumerate(values):
        use_series = method == "series" or (
            method == "auto" and (q <= 0 or math.sqrt(q) * math.exp(r) <= _SERIES_SWITCH))
        out[idx] = _hyperbolic(solution, r) if use_series else _product(solution, r)
    return float(out) if out.ndim == 0 else out


def radial_ce(solution: MathieuSolution, varrho, method: str = "auto"):
    if solution.kind != "ce":
        raise ValueError("radial_ce called with an se solution")
    return radial(solution, varrho, method)


def radial_se(solution: MathieuSolution, varrho, method: str = "auto"):
    if solution.kind != "se":
        raise ValueError("radial_se called with a ce solution")
    return radial(solution, varrho, method)
