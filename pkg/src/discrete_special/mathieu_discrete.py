"""Discrete Mathieu functions on the odd N-point lattice and their radial partners.

Angular functions
-----------------
``ce^(N)_n`` and ``se^(N)_n`` are the continuous functions sampled at
``psi_m = 2 pi m / N``.  The full Fourier series is sampled, not a copy
truncated at the lattice Nyquist frequency: coefficients above ``(N-1)/2``
are exactly what the lattice folds back (aliases) onto the resolved ones,
and sampling keeps the lattice values equal to the continuous ones at
machine precision.  The size of the folded part is reported as
``alias_tail`` for diagnosis.  Orders above ``(N-1)/2`` are rejected.

The discrete coefficients are lattice projections,

    a_s = (1/N) sum_m cos(s psi_m) ce^(N)(psi_m),
    b_s = (1/N) sum_m sin(s psi_m) se^(N)(psi_m),

periodic in ``s`` with period N.  Summing ``a_{2s+p} cos((2s+p) psi)`` over
``s = 0 .. N-1`` reproduces the samples exactly on the lattice; off the
lattice it is a different curve (see :func:`continued_angular`).

Radial functions
----------------
A Helmholtz field is built by superposing N plane waves with the angular
samples as weights; in elliptic coordinates

    f(r, psi) = sum_m g(psi_m) exp(2i sqrt(q) (cosh r cos psi cos psi_m
                                              + sinh r sin psi sin psi_m)).

Fixing ``psi`` at ``pi/2``, ``0`` or ``pi/4`` leaves a function of ``r``
alone.  Multiplied by the class's constant ``K`` it approximates
``Ce_n(r)`` or ``Se_n(r)``:

============  ===============  ==============================================
class         fixed angle      constant K
============  ===============  ==============================================
ce, 2n        pi/2             ce(0) / (a_0 N)
se, 2n+1      pi/2             -i se'(0) / (2 b_1 N sqrt q)
ce, 2n+1      0                i ce'(pi/2) / (2 a_1 N sqrt q)
se, 2n+2      pi/4             matched to Se(1) (no closed form is known)
============  ===============  ==============================================

The lattice sum equals the continuous Bessel-series integral representation
up to aliased Bessel terms ``J_{2N-f}(2 sqrt(q) sinh r)``; these grow with
``r`` and eventually destroy the agreement.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .bessel import require_odd
from .circle import DiscreteCircle
from .errors import (DimensionError, DomainError, InsufficientResolutionError,
                     RadialConsistencyError)
from .mathieu_continuous import (MathieuSolution, SymmetryClass, angular,
                                 boundary_derivatives, radial, solve_mathieu)

__all__ = [
    "DiscreteMathieu",
    "EllipticLattice",
    "ImaginaryArgumentReport",
    "RadialConstants",
    "coefficient_halving_check",
    "continued_angular",
    "discrete_angular",
    "discrete_orthogonality",
    "discrete_radial",
    "discrete_radial_complex",
    "elliptic_lattice",
    "helmholtz_field",
    "hyperbolic_continuation",
    "imaginary_argument_checks",
    "radial_constants",
    "separability_check",
]

REFERENCE_VARRHO = 1.0
ANGULAR_GUARD = 1e-6


def _frozen(a):
    a = np.array(a)
    a.setflags(write=False)
    return a


# ---------------------------------------------------------------------------
# geometry

@dataclass(frozen=True)
class EllipticLattice:
    """Lattice points ``(cosh r cos psi_m, sinh r sin psi_m)`` on confocal ellipses.

    ``x`` and ``y`` have shape ``(len(varrho_values), N)``; the foci sit at
    ``(+-1, 0)`` for every ellipse.
    """

    circle: DiscreteCircle
    varrho_values: np.ndarray
    x: np.ndarray
    y: np.ndarray

    foci = ((-1.0, 0.0), (1.0, 0.0))

    def points(self):
        """Rows ``(varrho, m, x, y)`` in lattice order."""
        for i, r in enumerate(self.varrho_values):
            for m in range(self.circle.n_points):
                yield float(r), m, float(self.x[i, m]), float(self.y[i, m])


def elliptic_lattice(N: int, varrho_values) -> EllipticLattice:
    circle = require_odd(N)
    r = np.atleast_1d(np.asarray(varrho_values, dtype=float))
    if np.any(r < 0):
        raise ValueError("varrho values must be non-negative")
    x = np.outer(np.cosh(r), circle.cos_table())
    y = np.outer(np.sinh(r), circle.sin_table())
    return EllipticLattice(circle, _frozen(r), _frozen(x), _frozen(y))


# ---------------------------------------------------------------------------
# angular functions

@dataclass(frozen=True)
class DiscreteMathieu:
    """Lattice samples of ``ce_n`` or ``se_n`` with their discrete coefficients.

    ``disc_coeffs[s]`` holds ``a_s`` (or ``b_s``) for ``s = 0 .. N-1``.
    ``solution`` is ``None`` for the identically zero ``se_0``.
    """

    kind: str
    order: int
    q: float
    circle: DiscreteCircle
    samples: np.ndarray
    disc_coeffs: np.ndarray
    solution: MathieuSolution | None
    alias_tail: float

    @property
    def n_points(self) -> int:
        return self.circle.n_points

    @property
    def parity(self) -> int:
        return self.order % 2

    @property
    def is_zero(self) -> bool:
        return self.solution is None

    def coefficient(self, s: int) -> float:
        """``a_s`` or ``b_s`` with the index read modulo N."""
        return float(self.disc_coeffs[s % self.n_points])


def _lattice_basis(circle: DiscreteCircle, kind: str, freq: int) -> np.ndarray:
    return circle.cos_mult(freq) if kind == "ce" else circle.sin_mult(freq)


@lru_cache(maxsize=256)
def discrete_angular(kind: str, order: int, q: float, N: int) -> DiscreteMathieu:
    """Sample ``ce_order`` / ``se_order`` on the N-point lattice.

    Raises :class:`InsufficientResolutionError` when ``order > (N-1)/2``; the
    exception carries the smallest admissible lattice size.
    """
    circle = require_odd(N)
    if kind not in ("ce", "se"):
        raise ValueError(f"kind must be 'ce' or 'se', got {kind!r}")
    if order > circle.nyquist:
        need = 2 * order + 1
        raise InsufficientResolutionError(
            f"{kind}_{order} needs at least N={need} lattice points (got N={N})",
            min_points=need)
    if kind == "se" and order == 0:
        zeros = np.zeros(N)
        return DiscreteMathieu(kind, 0, float(q), circle, _frozen(zeros), _frozen(zeros), None, 0.0)

    sol = solve_mathieu(kind, order, q)
    samples = np.zeros(N)
    for f, c in zip(sol.frequencies, sol.coefficients):
        samples += c * _lattice_basis(circle, kind, int(f))
    coeffs = np.array([_lattice_basis(circle, kind, s) @ samples for s in range(N)]) / N
    folded = sol.frequencies > circle.nyquist
    alias_tail = float(np.sum(np.abs(sol.coefficients[folded])))
    return DiscreteMathieu(kind, int(order), float(q), circle, _frozen(samples),
                           _frozen(coeffs), sol, alias_tail)


def coefficient_halving_check(d: DiscreteMathieu) -> float:
    """Largest deviation of the lattice coefficients from half the continuous ones.

    Compares ``a_s`` with ``A_s / 2`` for ladder frequencies ``1 <= s <= (N-1)/2``
    and ``a_0`` with ``A_0`` (``b_0`` with 0).  Off-ladder entries are not
    compared: by periodicity they carry the aliased image ``A_{N-s}/2``.
    """
    if d.is_zero:
        return float(np.max(np.abs(d.disc_coeffs)))
    sol = d.solution
    devs = []
    a0 = d.coefficient(0)
    target0 = float(sol.coefficients[0]) if sol.frequencies[0] == 0 else 0.0
    devs.append(abs(a0 - target0))
    for f, c in zip(sol.frequencies, sol.coefficients):
        if 1 <= f <= d.circle.nyquist:
            devs.append(abs(d.coefficient(int(f)) - 0.5 * c))
    return float(max(devs))


def discrete_orthogonality(d1: DiscreteMathieu, d2: DiscreteMathieu) -> float:
    """Discrete inner product ``sum_m f_m g_m`` of two real lattice functions."""
    if d1.n_points != d2.n_points:
        raise DimensionError(f"lattices differ: N={d1.n_points} vs N={d2.n_points}")
    if d1.q != d2.q:
        raise ValueError(f"parameters differ: q={d1.q} vs q={d2.q}")
    return math.fsum(d1.samples * d2.samples)


def continued_angular(d: DiscreteMathieu, psi, form: str = "ladder"):
    """Evaluate the discrete function away from the lattice.

    ``form="ladder"`` sums ``a_{2s+p} cos((2s+p) psi)`` (or the sine version)
    for ``s = 0 .. N-1`` with the coefficient index read modulo N, exactly as
    the lattice definition is written.  Frequencies reach ``2N - 2 + p``, so
    between lattice points the curve departs from the continuous function.

    ``form="interpolant"`` is the lowest-frequency trigonometric interpolant
    ``a_0 + 2 sum_{s=1}^{(N-1)/2} a_s cos(s psi)``; at ``q = 0`` it returns
    ``cos(n psi)`` itself.  Both forms agree on the lattice.
    """
    psi = np.asarray(psi, dtype=float)
    N = d.n_points
    if form == "ladder":
        freqs = 2 * np.arange(N) + d.parity
        weights = d.disc_coeffs[freqs % N]
    elif form == "interpolant":
        freqs = np.arange(d.circle.nyquist + 1)
        weights = 2.0 * d.disc_coeffs[: freqs.size]
        if d.kind == "ce":
            weights[0] = d.disc_coeffs[0]
    else:
        raise ValueError(f"unknown form {form!r}")
    trig = np.cos if d.kind == "ce" else np.sin
    out = trig(np.multiply.outer(psi, freqs.astype(float))) @ weights
    return float(out) if out.ndim == 0 else out


# ---------------------------------------------------------------------------
# radial functions

_FORMS = {
    SymmetryClass.CE_EVEN: "sinh",
    SymmetryClass.SE_ODD: "sinh",
    SymmetryClass.CE_ODD: "cosh",
    SymmetryClass.SE_EVEN: "quarter",
}
_FIXED_ANGLE = {"sinh": math.pi / 2, "cosh": 0.0, "quarter": math.pi / 4}


@dataclass(frozen=True)
class RadialConstants:
    """Normalisation constant ``K`` turning a lattice plane-wave sum into ``Ce``/``Se``."""

    kind: str
    order: int
    q: float
    n_points: int
    K: complex
    form: str

    @property
    def fixed_angle(self) -> float:
        return _FIXED_ANGLE[self.form]


def _phases(circle: DiscreteCircle, q: float, form: str, varrho):
    """Plane-wave phases ``exp(i ...)`` of shape ``varrho.shape + (N,)``."""
    r = np.asarray(varrho, dtype=float)
    sq = math.sqrt(q)
    c, s = circle.cos_table(), circle.sin_table()
    if form == "sinh":
        arg = 2.0 * sq * np.multiply.outer(np.sinh(r), s)
    elif form == "cosh":
        arg = 2.0 * sq * np.multiply.outer(np.cosh(r), c)
    else:
        arg = math.sqrt(2.0 * q) * (np.multiply.outer(np.cosh(r), c) + np.multiply.outer(np.sinh(r), s))
    return np.exp(1j * arg)


def _raw_sum(d: DiscreteMathieu, form: str, varrho):
    # pair m with N - m so the lattice parity of the samples is used exactly
    phases = _phases(d.circle, d.q, form, varrho)
    j = d.circle.nyquist
    head, tail = phases[..., 1:j + 1], phases[..., :j:-1]
    paired = head + tail if d.kind == "ce" else head - tail
    out = paired @ d.samples[1:j + 1].astype(complex) + phases[..., 0] * d.samples[0]
    return complex(out) if np.ndim(out) == 0 else out


@lru_cache(maxsize=256)
def radial_constants(kind: str, order: int, q: float, N: int) -> RadialConstants:
    d = discrete_angular(kind, order, q, N)
    if d.is_zero:
        raise ValueError("se_0 has no radial partner")
    sym = d.solution.symmetry
    form = _FORMS[sym]
    if q <= 0 and sym is not SymmetryClass.CE_EVEN:
        raise DomainError(f"the constant for {kind}_{order} needs q > 0 (got q={q})")
    bv = boundary_derivatives(d.solution)
    if sym is SymmetryClass.CE_EVEN:
        K = complex(bv.ce_at_0 / (d.coefficient(0) * N))
    elif sym is SymmetryClass.SE_ODD:
        K = -1j * bv.se_prime_at_0 / (2.0 * d.coefficient(1) * N * math.sqrt(q))
    elif sym is SymmetryClass.CE_ODD:
        K = 1j * bv.ce_prime_at_half_pi / (2.0 * d.coefficient(1) * N * math.sqrt(q))
    else:
        target = radial(d.solution, REFERENCE_VARRHO)
        K = target / _raw_sum(d, form, REFERENCE_VARRHO)
    return RadialConstants(kind, int(order), float(q), int(N), complex(K), form)


def discrete_radial_complex(kind: str, order: int, q: float, N: int, varrho):
    """``K * sum_m g(psi_m) exp(...)`` before the imaginary part is discarded."""
    r = np.asarray(varrho, dtype=float)
    if np.any(r < 0):
        raise ValueError("varrho must be non-negative")
    if kind == "se" and order == 0:
        return 0j if r.ndim == 0 else np.zeros(r.shape, dtype=complex)
    consts = radial_constants(kind, order, q, N)
    d = discrete_angular(kind, order, q, N)
    return consts.K * _raw_sum(d, consts.form, r)


def discrete_radial(kind: str, order: int, q: float, N: int, varrho, imag_tol: float = 1e-8):
    """Real discrete radial Mathieu function ``Ce^(N)`` / ``Se^(N)``.

    Raises :class:`RadialConsistencyError` if the discarded imaginary part
    exceeds ``imag_tol`` anywhere; pass ``imag_tol=None`` to skip the check.
    On odd lattices the cosine-type sums push their aliasing error into the
    imaginary part, so it grows with ``varrho`` even where the real part is
    still accurate.
    """
    z = np.asarray(discrete_radial_complex(kind, order, q, N, varrho))
    if imag_tol is not None:
        worst = float(np.max(np.abs(z.imag))) if z.size else 0.0
        if worst > imag_tol:
            raise RadialConsistencyError(
                f"{kind}_{order}: imaginary residue {worst:.3g} exceeds {imag_tol:g} "
                f"(q={q}, N={N})")
    out = z.real
    return float(out) if out.ndim == 0 else out


def hyperbolic_continuation(d: DiscreteMathieu, varrho):
    """``sum_{s=0}^{N-1} a_{2s+p} cosh((2s+p) r)`` (``b`` and ``sinh`` for se).

    The lattice definition with the angle replaced by an imaginary one.  For
    se of even order the result tracks the discrete radial function; for odd
    orders it does not.
    """
    r = np.asarray(varrho, dtype=float)
    N = d.n_points
    freqs = 2 * np.arange(N) + d.parity
    weights = d.disc_coeffs[freqs % N]
    hyp = np.cosh if d.kind == "ce" else np.sinh
    out = hyp(np.multiply.outer(r, freqs.astype(float))) @ weights
    return float(out) if out.ndim == 0 else out


@dataclass(frozen=True)
class ImaginaryArgumentReport:
    """Largest gaps found by :func:`imaginary_argument_checks` over a grid."""

    se_even_match: float
    se_odd_mismatch: float
    even_order: int
    odd_order: int


def imaginary_argument_checks(n: int, q: float, N: int, varrho_grid) -> ImaginaryArgumentReport:
    """Compare the discrete radial ``Se`` with its continuous and hyperbolic partners.

    ``se_even_match`` is ``max |Se^(N)_{2n+2} - Se_{2n+2}|`` over the grid and
    should be small.  ``se_odd_mismatch`` is the largest gap between
    ``Se^(N)_{2n+1}`` and :func:`hyperbolic_continuation` of ``se^(N)_{2n+1}``,
    which is expected to be large: the two are not the same function.
    """
    grid = np.asarray(varrho_grid, dtype=float)
    even_order, odd_order = 2 * n + 2, 2 * n + 1
    disc_even = discrete_radial_complex("se", even_order, q, N, grid).real
    cont_even = radial(solve_mathieu("se", even_order, q), grid)
    disc_odd = discrete_radial_complex("se", odd_order, q, N, grid).real
    hyper = hyperbolic_continuation(discrete_angular("se", odd_order, q, N), grid)
    return ImaginaryArgumentReport(
        se_even_match=float(np.max(np.abs(disc_even - cont_even))),
        se_odd_mismatch=float(np.max(np.abs(disc_odd - hyper))),
        even_order=even_order,
        odd_order=odd_order,
    )


# ---------------------------------------------------------------------------
# separation of variables

def helmholtz_field(d: DiscreteMathieu, varrho, psi) -> complex:
    """Superpose N plane waves weighted by the lattice samples, at ``(varrho, psi)``.

    ``x = cosh(varrho) cos(psi)`` and ``y = sinh(varrho) sin(psi)``; the
    wavenumber is ``2 sqrt(q)``.
    """
    if d.q < 0:
        raise DomainError("the plane-wave field needs q >= 0")
    x = math.cosh(varrho) * math.cos(psi)
    y = math.sinh(varrho) * math.sin(psi)
    arg = 2.0 * math.sqrt(d.q) * (x * d.circle.cos_table() + y * d.circle.sin_table())
    return complex(np.exp(1j * arg) @ d.samples.astype(complex))


def separability_check(kind: str, order: int, q: float, N: int, varrho_grid, k_indices) -> float:
    """How far the field is from ``R(varrho) * g(psi_k)`` on a grid.

    Divides ``f(varrho, psi_k)`` by the product of the unnormalised radial sum
    and the lattice sample ``g(psi_k)``, and returns the largest relative
    deviation of these quotients from their mean.  Lattice points with
    ``|g(psi_k)| < 1e-6`` are skipped.
    """
    d = discrete_angular(kind, order, q, N)
    if d.is_zero:
        raise ValueError("se_0 vanishes identically")
    form = _FORMS[d.solution.symmetry]
    quotients = []
    for r in np.atleast_1d(np.asarray(varrho_grid, dtype=float)):
        radial_part = _raw_sum(d, form, float(r))
        for k in k_indices:
            g = d.samples[k % N]
            if abs(g) < ANGULAR_GUARD:
                continue
            psi = d.circle.angle(k)
            quotients.append(helmholtz_field(d, float(r), psi) / (radial_part * g))
    if not quotients:
        raise ValueError("every requested lattice point sits on a zero of the angular factor")
    quotients = np.array(quotients)
    mean = quotients.mean()
    return float(np.max(np.abs(quotients - mean)) / abs(mean))
