"""The N-point circle: lattice angles, phase basis, inner product, finite Fourier transform.

Every other module samples on this lattice.  Trigonometric tables are built
from the integer residue ``k = (n*m) mod N`` and mirrored so that the lattice
reflection ``m -> N - m`` is exact in floating point: ``sin`` flips sign and
``cos`` is unchanged bit-for-bit.  The reality and parity properties of the
discrete special functions rely on that symmetry.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .errors import DimensionError


@lru_cache(maxsize=64)
def _tables(n_points: int) -> tuple[np.ndarray, np.ndarray]:
    k = np.arange(n_points)
    # fold residues k > N/2 onto N - k and fix the sign afterwards
    folded = np.minimum(k, n_points - k)
    angle = 2.0 * np.pi * folded / n_points
    cos = np.cos(angle)
    sin = np.sin(angle)
    sin[k > n_points - k] *= -1.0
    # exact zeros at the half and quarter turns
    sin[2 * k == n_points] = 0.0
    cos[(4 * k == n_points) | (4 * k == 3 * n_points)] = 0.0
    cos.setflags(write=False)
    sin.setflags(write=False)
    return cos, sin


@dataclass(frozen=True)
class DiscreteCircle:
    """The lattice ``theta_m = 2*pi*m/N`` with indices counted modulo N."""

    n_points: int
    angles: np.ndarray = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if int(self.n_points) != self.n_points or self.n_points < 1:
            raise ValueError(f"n_points must be a positive integer, got {self.n_points!r}")
        object.__setattr__(self, "n_points", int(self.n_points))
        angles = 2.0 * np.pi * np.arange(self.n_points) / self.n_points
        angles.setflags(write=False)
        object.__setattr__(self, "angles", angles)

    @property
    def is_odd(self) -> bool:
        return self.n_points % 2 == 1

    @property
    def nyquist(self) -> int:
        """Largest frequency resolved by the lattice, ``(N-1)//2``."""
        return (self.n_points - 1) // 2

    def angle(self, m: int) -> float:
        return 2.0 * np.pi * (m % self.n_points) / self.n_points

    def cos_table(self) -> np.ndarray:
        """``cos(2*pi*k/N)`` for ``k = 0..N-1``, mirror-symmetric."""
        return _tables(self.n_points)[0]

    def sin_table(self) -> np.ndarray:
        return _tables(self.n_points)[1]

    def cos_mult(self, n: int) -> np.ndarray:
        """``cos(n * theta_m)`` for all m, computed from the residue ``n*m mod N``."""
        idx = (n * np.arange(self.n_points)) % self.n_points
        return self.cos_table()[idx]

    def sin_mult(self, n: int) -> np.ndarray:
        idx = (n * np.arange(self.n_points)) % self.n_points
        return self.sin_table()[idx]


@dataclass(frozen=True)
class CyclicSignal:
    """N complex values attached to a circle; indexing wraps modulo N."""

    circle: DiscreteCircle
    values: np.ndarray

    def __post_init__(self):
        values = np.array(self.values, dtype=complex)
        if values.shape != (self.circle.n_points,):
            raise DimensionError(
                f"expected {self.circle.n_points} values, got shape {values.shape}")
        values.setflags(write=False)
        object.__setattr__(self, "values", values)

    def __getitem__(self, m: int) -> complex:
        return self.values[m % self.circle.n_points]

    def __len__(self) -> int:
        return self.circle.n_points


def phase_basis(circle: DiscreteCircle, n: int, m: int) -> complex:
    """``Phi_n(theta_m) = N**-0.5 * exp(2*pi*i*n*m/N)``; cyclic in both n and m."""
    k = (n * m) % circle.n_points
    return complex(circle.cos_table()[k], circle.sin_table()[k]) / np.sqrt(circle.n_points)


def phase_vector(circle: DiscreteCircle, n: int) -> CyclicSignal:
    """``Phi_n`` sampled on the whole lattice."""
    values = (circle.cos_mult(n) + 1j * circle.sin_mult(n)) / np.sqrt(circle.n_points)
    return CyclicSignal(circle, values)


def inner_product(f: CyclicSignal, g: CyclicSignal) -> complex:
    """``sum_m conj(f_m) * g_m``."""
    if f.circle.n_points != g.circle.n_points:
        raise DimensionError(
            f"signals live on different circles: N={f.circle.n_points} vs N={g.circle.n_points}")
    return complex(np.vdot(f.values, g.values))


def _kernel(circle: DiscreteCircle) -> np.ndarray:
    n = circle.n_points
    idx = np.outer(np.arange(n), np.arange(n)) % n
    return (circle.cos_table()[idx] + 1j * circle.sin_table()[idx]) / np.sqrt(n)


def dft(f: CyclicSignal) -> CyclicSignal:
    """Coefficients ``F_n = <Phi_n, f>`` by direct O(N^2) summation."""
    kernel = _kernel(f.circle)
    return CyclicSignal(f.circle, kernel.conj() @ f.values)


def idft(F: CyclicSignal) -> CyclicSignal:
    """Inverse of :func:`dft`: ``f_m = sum_n F_n Phi_n(theta_m)``."""
    kernel = _kernel(F.circle)
    return CyclicSignal(F.circle, kernel @ F.values)
