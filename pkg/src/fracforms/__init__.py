"""fracforms: two-route numerical verification of fractional-operator forms.

Quadratic forms of |p|^a, of the Jordan product
J = (|p|^a |q|^b + |q|^b |p|^a)/2, and of the ground-state-transformed
Hardy operator are each computed along two independent routes (singular
double integrals in radial coordinates vs. the spectral/Hankel route)
and compared against the sharp closed-form constants.
"""

from .specialfn import (
    ExponentTriple,
    alpha_const,
    b_const,
    gamma,
    hardy_const,
    li_const,
    rgamma,
    sphere_surface,
)
from .testfuncs import CutoffShape, GaussianPoly, PowerCutoff, profile_from_json, profile_to_json
from .quadforms import FormResult, QuadratureSpec

__version__ = "0.1.0"

__all__ = [
    "ExponentTriple",
    "alpha_const",
    "b_const",
    "gamma",
    "hardy_const",
    "li_const",
    "rgamma",
    "sphere_surface",
    "CutoffShape",
    "GaussianPoly",
    "PowerCutoff",
    "profile_from_json",
    "profile_to_json",
    "FormResult",
    "QuadratureSpec",
    "__version__",
]
