"""Kernel energy, variance and order-2 entropies of positive linear operators."""
from .basis import (ConvergenceError, DomainError, EntropyPoint, OperatorParams, basis_weight,
                    renyi_entropy, s_series, tsallis_entropy, variance)
from .quadrature import QuadratureSpec, bessel_i0, bessel_identity_residual, s_integral
from .legendre import f_via_legendre, legendre_p, x_to_t, t_to_x, crossover_t
from .ode import SDerivatives, Envelope, s_derivatives, envelope, logconvexity_margin

__version__ = "0.1.0"

__all__ = [
    "ConvergenceError", "DomainError", "EntropyPoint", "OperatorParams", "basis_weight",
    "renyi_entropy", "s_series", "tsallis_entropy", "variance", "QuadratureSpec", "bessel_i0",
    "bessel_identity_residual", "s_integral", "f_via_legendre", "legendre_p", "x_to_t", "t_to_x",
    "crossover_t", "SDerivatives", "Envelope", "s_derivatives", "envelope", "logconvexity_margin",
]
