"""Fourier analysis on bounded Vilenkin groups.

Submodules: group (mixed-radix arithmetic), characters, spectral (grid
functions and the fast transform), weights, kernels, means, hardy
(martingales and atoms), verify (claim suites), io (file formats), cli.
"""

from .group import (
    GroupSpec,
    NatDigits,
    Point,
    digits_of,
    group_add,
    group_sub,
    make_group,
    nat_hat_add,
    nat_hat_sub,
    point_norm,
    variation_v,
    variation_vstar,
)
from .spectral import (
    GridFunction,
    Spectrum,
    convolve,
    fourier_coeff,
    lp_norm,
    partial_sum,
    random_grid_function,
    transform_forward,
    transform_inverse,
    weak_lp,
)

__all__ = [
    "GroupSpec", "NatDigits", "Point", "digits_of", "group_add", "group_sub",
    "make_group", "nat_hat_add", "nat_hat_sub", "point_norm", "variation_v",
    "variation_vstar", "GridFunction", "Spectrum", "convolve", "fourier_coeff",
    "lp_norm", "partial_sum", "random_grid_function", "transform_forward",
    "transform_inverse", "weak_lp",
]

__version__ = "0.1.0"
