"""
Discrete Bessel functions on an odd lattice
===========================================

Averaging a plane wave over N equally spaced directions gives a lattice
version of the Bessel function.  For small arguments it is
indistinguishable from ``J_n``; once ``rho`` grows towards ``N - n`` the
higher orders fold back in and the two curves part ways.
"""
import numpy as np

from discrete_special import continuous_bessel_j, discrete_bessel, graf_sum

N = 21

# %%
# Agreement inside the resolved region, departure outside it.
for n in (0, 3, 8):
    for rho in (1.0, 5.0, 12.0, 20.0, 30.0):
        gap = abs(discrete_bessel(N, n, rho) - continuous_bessel_j(n, rho))
        print(f"n={n:2d} rho={rho:5.1f}  |B - J| = {gap:.2e}")

# %%
# The lattice functions keep the addition theorem exactly, not approximately.
for n, a, b in ((0, 1.0, 2.0), (5, 3.5, 9.0)):
    residual = graf_sum(N, n, a, b) - discrete_bessel(N, n, a + b)
    print(f"Graf residual n={n}, {a}+{b}: {residual:.1e}")

# %%
# The order index is 2N-periodic and B_N vanishes identically.
rho = np.linspace(0, 40, 9)
print("max |B_N| =", np.max(np.abs(discrete_bessel(N, N, rho))))
print("max |B_{n+2N} - B_n| =",
      np.max(np.abs(discrete_bessel(N, 3 + 2 * N, rho) - discrete_bessel(N, 3, rho))))
