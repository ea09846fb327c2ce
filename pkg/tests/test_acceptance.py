"""The fifteen acceptance criteria, each at its stated tolerance.

Under pytest every criterion prints one ``PASS``/``FAIL`` line to the
terminal and fails the test when the criterion fails.  Running the file as a
script prints the same lines without pytest:

    python3 tests/test_acceptance.py
"""
import subprocess
import sys

import numpy as np
import pytest

from discrete_special.bessel import (continuous_bessel_j, discrete_bessel,
                                     graf_sum, linear_relation_residuals,
                                     plane_wave_expand)
from discrete_special.mathieu_continuous import angular, radial, solve_mathieu
from discrete_special.mathieu_discrete import (coefficient_halving_check,
                                               discrete_angular,
                                               discrete_orthogonality,
                                               discrete_radial_complex,
                                               imaginary_argument_checks,
                                               separability_check)

Q = 2.0


def bessel_agreement():
    worst = 0.0
    for N in (21, 61, 101):
        for n in (0, 10, 30, 50):
            if n >= N:
                continue
            rho = np.arange(0.0, 0.8 * N - n + 1e-9, 0.25)
            if rho.size:
                worst = max(worst, float(np.max(np.abs(discrete_bessel(N, n, rho) - continuous_bessel_j(n, rho)))))
    return worst < 1e-12, f"max |B - J| = {worst:.3g} (< 1e-12)"


def bessel_at_origin():
    worst = max(abs(discrete_bessel(N, n, 0.0) - (n == 0)) for N in (3, 21, 101) for n in range(N))
    return worst < 1e-14, f"max |B_n(0) - delta| = {worst:.3g} (< 1e-14)"


def linear_relations():
    worst = max(max(linear_relation_residuals(N, r)) for N in (21, 61) for r in (0.5, 5.0, 20.0, 40.0))
    return worst < 1e-13, f"max residual = {worst:.3g} (< 1e-13)"


def graf_addition():
    worst = max(abs(graf_sum(21, n, a, b) - discrete_bessel(21, n, a + b))
                for n in (0, 3, 10) for a, b in ((1.0, 2.0), (0.5, 0.5), (5.0, 7.0)))
    return worst < 1e-12, f"max Graf residual = {worst:.3g} (< 1e-12)"


def plane_wave():
    phi = 2 * np.pi * np.arange(21) / 21
    worst = max(abs(plane_wave_expand(21, r, m) - np.exp(1j * r * np.sin(phi[m])))
                for r in (0.0, 1.0, 3.7, 10.0) for m in range(21))
    return worst < 1e-12, f"max reconstruction error = {worst:.3g} (< 1e-12)"


def mathieu_eigenvalues():
    cases = [(k, n) for k in ("ce", "se") for n in range(11) if not (k == "se" and n == 0)]
    limit = max(abs(solve_mathieu(k, n, 0.0).nu + n * n) for k, n in cases)
    doubling = 0.0
    for k, n in cases:
        a = solve_mathieu(k, n, Q)
        b = solve_mathieu(k, n, Q, truncation=2 * a.truncation)
        doubling = max(doubling, abs(a.nu - b.nu))
    ok = limit < 1e-12 and doubling < 1e-13
    return ok, f"|nu(q=0) + n^2| = {limit:.3g} (< 1e-12), doubling change = {doubling:.3g} (< 1e-13)"


def continuous_orthogonality():
    psi = 2 * np.pi * np.arange(4096) / 4096
    values = np.array([angular(solve_mathieu("ce", n, Q), psi) for n in range(7)])
    gram = values @ values.T * (2 * np.pi / 4096)
    worst = float(np.max(np.abs(gram - np.pi * np.eye(7))))
    return worst < 1e-9, f"max |(ce_m, ce_n) - pi delta| = {worst:.3g} (< 1e-9)"


def _angular_set(N, top):
    return [discrete_angular(k, n, Q, N) for k in ("ce", "se") for n in range(top + 1)]


def angular_agreement():
    worst = max(float(np.max(np.abs(d.samples - angular(d.solution, d.circle.angles))))
                for d in _angular_set(41, 5) if not d.is_zero)
    return worst < 1e-12, f"max lattice difference = {worst:.3g} (< 1e-12)"


def discrete_orthogonality_check():
    fs = _angular_set(41, 6)
    worst = 0.0
    for a in fs:
        for b in fs:
            same = a.kind == b.kind and a.order == b.order and not a.is_zero
            worst = max(worst, abs(discrete_orthogonality(a, b) - (20.5 if same else 0.0)))
    return worst < 1e-10, f"max |<f, g> - N/2 delta| = {worst:.3g} (< 1e-10)"


def coefficient_halving():
    worst = max(coefficient_halving_check(d) for d in _angular_set(41, 6))
    return worst < 1e-12, f"max halving deviation = {worst:.3g} (< 1e-12)"


def radial_agreement():
    grid = np.round(np.arange(0.0, 3.0 + 1e-9, 0.05), 12)
    grid = grid[grid < np.pi]
    worst, where = 0.0, None
    for kind, n in (("ce", 0), ("ce", 1), ("ce", 2), ("se", 1), ("se", 2)):
        disc = discrete_radial_complex(kind, n, Q, 21, grid).real
        cont = radial(solve_mathieu(kind, n, Q), grid)
        diff = np.abs(disc - cont)
        bad = grid[diff >= 1e-9]
        if diff.max() > worst:
            worst = float(diff.max())
        if bad.size and (where is None or bad[0] < where[1]):
            where = (f"{kind}_{n}", float(bad[0]))
    detail = f"max |discrete - continuous| on [0, 3] = {worst:.3g} (< 1e-9)"
    if where:
        detail += f"; first failure {where[0]} at varrho = {where[1]}"
    return worst < 1e-9, detail


def se_even_match():
    grid = np.linspace(0.02, 1.98, 99)
    worst = max(imaginary_argument_checks(n, Q, 41, grid).se_even_match for n in (0, 1))
    return worst < 1e-9, f"max |Se^(N)_(2n+2) - Se_(2n+2)| = {worst:.3g} (< 1e-9)"


def se_odd_mismatch():
    grid = np.linspace(0.02, 2.0, 100)
    gap = imaginary_argument_checks(0, Q, 41, grid).se_odd_mismatch
    return gap > 1e-3, f"max gap to hyperbolic sum = {gap:.3g} (> 1e-3)"


def separability():
    dev = separability_check("ce", 0, Q, 21, (0.3, 0.6, 0.9), (1, 2, 3))
    return dev < 1e-8, f"quotient deviation = {dev:.3g} (< 1e-8)"


def determinism():
    cmd = [sys.executable, "-m", "discrete_special", "identity-suite", "--n-points", "21", "--q", "2"]
    first = subprocess.run(cmd, capture_output=True).stdout
    second = subprocess.run(cmd, capture_output=True).stdout
    same = first == second and len(first) > 0
    return same, f"two identity-suite runs byte-identical: {same} ({len(first)} bytes)"


CRITERIA = [
    (1, "Bessel agreement", bessel_agreement),
    (2, "B_n(0) = delta_n0", bessel_at_origin),
    (3, "linear relations", linear_relations),
    (4, "Graf addition", graf_addition),
    (5, "plane-wave reconstruction", plane_wave),
    (6, "Mathieu eigenvalues", mathieu_eigenvalues),
    (7, "continuous orthogonality", continuous_orthogonality),
    (8, "discrete angular agreement", angular_agreement),
    (9, "discrete orthogonality", discrete_orthogonality_check),
    (10, "coefficient halving", coefficient_halving),
    (11, "radial agreement N=21", radial_agreement),
    (12, "even se imaginary-argument match", se_even_match),
    (13, "odd se imaginary-argument mismatch", se_odd_mismatch),
    (14, "separability", separability),
    (15, "determinism", determinism),
]


def _line(number, name, passed, detail):
    return f"criterion {number:2d} {'PASS' if passed else 'FAIL'}  {name}: {detail}"


@pytest.mark.parametrize("number, name, check", CRITERIA, ids=[f"c{n:02d}" for n, _, _ in CRITERIA])
def test_criterion(number, name, check, capsys):
    passed, detail = check()
    with capsys.disabled():
        print("\n" + _line(number, name, passed, detail))
    assert passed, detail


if __name__ == "__main__":
    results = [(n, name, *check()) for n, name, check in CRITERIA]
    for row in results:
        print(_line(*row))
    sys.exit(0 if all(r[2] for r in results) else 1)
