"""Discrete Bessel and Mathieu functions on the odd N-point circle.

The lattice functions live in :mod:`~discrete_special.bessel` and
:mod:`~discrete_special.mathieu_discrete`; their continuous counterparts,
used as oracles, in :mod:`~discrete_special.bessel` and
:mod:`~discrete_special.mathieu_continuous`.
"""
from .bessel import (BesselEvaluator, continuous_bessel_j, discrete_bessel,
                     graf_sum, helmholtz_polar_mode, linear_relation_residuals,
                     plane_wave_expand)
from .circle import CyclicSignal, DiscreteCircle, dft, idft, inner_product, phase_basis
from .errors import (DegenerateEigenvalueError, DimensionError, DomainError,
                     InsufficientResolutionError, MathieuConvergenceError,
                     RadialConsistencyError, SeriesRangeError,
                     UnsupportedConfigurationError)
from .mathieu_continuous import (MathieuSolution, SymmetryClass, boundary_derivatives,
                                 ce, fourier_coefficient, radial_ce, radial_se, se,
                                 solve_mathieu)
from .mathieu_discrete import (DiscreteMathieu, EllipticLattice, RadialConstants,
                               coefficient_halving_check, continued_angular,
                               discrete_angular, discrete_orthogonality,
                               discrete_radial, elliptic_lattice,
                               imaginary_argument_checks, radial_constants,
                               separability_check)

__version__ = "0.1.0"
