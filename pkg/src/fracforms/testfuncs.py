"""Closed-form radial test functions and their exact local operations.

Two families:

* GaussianPoly -- psi(r) = p(r) exp(-r^2/2) with p a polynomial. Smooth,
  superexponentially decaying; polynomial coefficient algebra gives the
  radial Laplacian and Gamma-moment norms exactly.
* PowerCutoff -- psi(r) = r^(-gamma_exp) * eta(ln r / ln R), a power law
  under a fixed C^2 bump in logarithmic radius. eta is 1 on [-1,1] and 0
  outside [-2,2], so the profile equals the pure power on [1/R, R] and
  vanishes outside [R^-2, R^2]. This is the trial family that drives
  Rayleigh quotients toward the sharp constants as R grows.

Weighted norms int |psi|^2 |x|^s dx are reduced to 1D integrals in
log-radius and evaluated by adaptive composite Gauss-Legendre.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ._quad import fsum, knot_edges, panel_nodes, uniform_edges
from .errors import DivergenceError, DomainError, UnsupportedProfileError
from .specialfn import gamma, sphere_surface

__all__ = [
    "CutoffShape",
    "GaussianPoly",
    "PowerCutoff",
    "eval_profile",
    "weighted_norm",
    "weighted_norm_closed",
    "radial_laplacian",
    "gradient_form",
    "profile_to_json",
    "profile_from_json",
]

# Profiles are numerically zero wherever exp(-r^2/2) underflows; beyond
# this radius GaussianPoly evaluation short-circuits to 0 so polynomial
# overflow can never produce inf * 0.
_GAUSS_RMAX = 50.0


class CutoffShape:
    """Fixed C^2 transition of the log-radius bump.

    eta(x) = 1 on |x| <= 1, 0 on |x| >= 2, and the quintic smoothstep
    s(t) = t^3 (10 - 15 t + 6 t^2) bridges the gap:  eta(x) = s(2 - |x|)
    for 1 < |x| < 2. s has vanishing first and second derivatives at
    both ends, so eta is C^2 everywhere.
    """

    # coefficients of s(t) in ascending powers of t
    coeffs = (0.0, 0.0, 0.0, 10.0, -15.0, 6.0)

    @staticmethod
    def eval(x):
        x = np.abs(np.asarray(x, dtype=float))
        out = np.zeros_like(x)
        out[x <= 1.0] = 1.0
        mid = (x > 1.0) & (x < 2.0)
        t = 2.0 - x[mid]
        out[mid] = t**3 * (10.0 + t * (-15.0 + 6.0 * t))
        return out

    @staticmethod
    def eval_derivative(x):
        """d eta / dx (odd function, nonzero only on 1 < |x| < 2)."""
        x = np.asarray(x, dtype=float)
        ax = np.abs(x)
        out = np.zeros_like(ax)
        mid = (ax > 1.0) & (ax < 2.0)
        t = 2.0 - ax[mid]
        # d/dx s(2-|x|) = -sign(x) s'(2-|x|);  s'(t) = 30 t^2 (1-t)^2
        out[mid] = -np.sign(x[mid]) * 30.0 * t**2 * (1.0 - t) ** 2
        return out


@dataclass(frozen=True)
class GaussianPoly:
    """psi(r) = (c0 + c1 r + ... + ck r^k) exp(-r^2/2)."""

    coeffs: tuple

    def __post_init__(self):
        c = tuple(float(v) for v in self.coeffs)
        if not c or all(v == 0.0 for v in c):
            raise DomainError("GaussianPoly: need at least one nonzero coefficient")
        object.__setattr__(self, "coeffs", c)

    @property
    def family(self) -> str:
        return "GaussianPoly"

    @property
    def leading_order(self) -> int:
        """Index of the lowest nonzero coefficient (behavior at r=0)."""
        return next(i for i, v in enumerate(self.coeffs) if v != 0.0)

    def values(self, r):
        r = np.asarray(r, dtype=float)
        out = np.zeros_like(r)
        m = r < _GAUSS_RMAX
        rm = r[m]
        out[m] = _polyval(self.coeffs, rm) * np.exp(-0.5 * rm * rm)
        return out

    def derivative_values(self, r):
        """d psi / dr = (p'(r) - r p(r)) exp(-r^2/2), exact algebra."""
        dp = _poly_sub(_poly_diff(self.coeffs), _poly_shift_up(self.coeffs))
        r = np.asarray(r, dtype=float)
        out = np.zeros_like(r)
        m = r < _GAUSS_RMAX
        rm = r[m]
        out[m] = _polyval(dp, rm) * np.exp(-0.5 * rm * rm)
        return out

    def log_support(self):
        """Log-radius interval outside of which the profile is negligible."""
        return (-math.inf, math.log(_GAUSS_RMAX))

    def describe(self) -> str:
        return f"GaussianPoly{list(self.coeffs)}"


@dataclass(frozen=True)
class PowerCutoff:
    """psi(r) = r^(-gamma_exp) * eta(ln r / ln cutoff_scale)."""

    gamma_exp: float
    cutoff_scale: float

    def __post_init__(self):
        object.__setattr__(self, "gamma_exp", float(self.gamma_exp))
        object.__setattr__(self, "cutoff_scale", float(self.cutoff_scale))
        if self.cutoff_scale <= 1.0:
            raise DomainError(f"PowerCutoff: cutoff_scale must exceed 1, got {self.cutoff_scale:g}")

    @property
    def family(self) -> str:
        return "PowerCutoff"

    @property
    def log_scale(self) -> float:
        return math.log(self.cutoff_scale)

    def values(self, r):
        r = np.asarray(r, dtype=float)
        out = np.zeros_like(r)
        lam = self.log_scale
        with np.errstate(divide="ignore"):
            u = np.log(r)
        m = (np.abs(u) < 2.0 * lam) & (r > 0.0)
        out[m] = np.exp(-self.gamma_exp * u[m]) * CutoffShape.eval(u[m] / lam)
        return out

    def derivative_values(self, r):
        """d psi / dr = r^(-gamma-1) (-gamma eta + eta'(u/L)/L), u = ln r."""
        r = np.asarray(r, dtype=float)
        out = np.zeros_like(r)
        lam = self.log_scale
        with np.errstate(divide="ignore"):
            u = np.log(r)
        m = (np.abs(u) < 2.0 * lam) & (r > 0.0)
        um = u[m]
        x = um / lam
        val = -self.gamma_exp * CutoffShape.eval(x) + CutoffShape.eval_derivative(x) / lam
        out[m] = np.exp(-(self.gamma_exp + 1.0) * um) * val
        return out

    def log_support(self):
        lam = self.log_scale
        return (-2.0 * lam, 2.0 * lam)

    def log_knots(self):
        """Log-radius break points of the piecewise C^2 definition."""
        lam = self.log_scale
        return (-2.0 * lam, -lam, lam, 2.0 * lam)

    def describe(self) -> str:
        return f"PowerCutoff(gamma={self.gamma_exp:g}, R={self.cutoff_scale:g})"


def eval_profile(profile, r):
    """psi(r) for scalar or array r (zero-filled outside the support)."""
    return profile.values(r)


# ----------------------------------------------------------------------
# polynomial coefficient algebra (ascending-power tuples)

def _polyval(coeffs, r):
    acc = np.zeros_like(r)
    for c in reversed(coeffs):
        acc = acc * r + c
    return acc


def _poly_diff(coeffs):
    return tuple(j * coeffs[j] for j in range(1, len(coeffs))) or (0.0,)

def _poly_shift_up(coeffs):
    """r * p(r)."""
    return (0.0,) + tuple(coeffs)


def _poly_add(p, q):
    m = max(len(p), len(q))
    return tuple((p[j] if j < len(p) else 0.0) + (q[j] if j < len(q) else 0.0) for j in range(m))


def _poly_sub(p, q):
    return _poly_add(p, tuple(-v for v in q))


def _poly_scale(p, c):
    return tuple(c * v for v in p)


def _poly_mul(p, q):
    out = [0.0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] += a * b
    return tuple(out)


def _poly_trim(p):
    k = len(p)
    while k > 1 and p[k - 1] == 0.0:
        k -= 1
    return tuple(p[:k])


def radial_laplacian(profile: GaussianPoly, n: int) -> GaussianPoly:
    """-Delta psi for a GaussianPoly profile, by exact coefficient algebra.

    With psi = p(r) exp(-r^2/2),

        -Delta psi = [ -p'' - (n-1) p'/r + 2 r p' + n p - r^2 p ] exp(-r^2/2).

    p'/r is polynomial only when the linear coefficient vanishes; a
    nonzero c1 makes psi non-smooth at the origin and the result leaves
    the family, so that case is rejected.
    """
    if not isinstance(profile, GaussianPoly):
        raise UnsupportedProfileError(
            f"radial_laplacian supports GaussianPoly only, got {type(profile).__name__}"
        )
    c = profile.coeffs
    if len(c) > 1 and c[1] != 0.0:
        raise UnsupportedProfileError(
            "radial_laplacian: a nonzero linear coefficient puts -Delta psi outside "
            "the GaussianPoly family (cusp at the origin)"
        )
    dp = _poly_diff(c)
    ddp = _poly_diff(dp)
    # p'/r: drop the (zero) constant term of p' and shift down
    dp_over_r = tuple(dp[1:]) or (0.0,)
    out = _poly_scale(ddp, -1.0)
    out = _poly_add(out, _poly_scale(dp_over_r, -(n - 1.0)))
    out = _poly_add(out, _poly_scale(_poly_shift_up(dp), 2.0))
    out = _poly_add(out, _poly_scale(c, float(n)))
    out = _poly_sub(out, _poly_shift_up(_poly_shift_up(c)))
    return GaussianPoly(_poly_trim(out))


# ----------------------------------------------------------------------
# weighted norms

def _norm_integrand(profile, s, n):
    """Integrand of the log-radius reduction: psi(e^u)^2 e^{(s+n) u}."""
    sn = s + n

    def f(u):
        r = np.exp(u)
        v = profile.values(r)
        return v * v * np.exp(sn * u)

    return f


def _gaussian_norm_exponent(profile: GaussianPoly, s: float, n: int) -> float:
    """Small-r growth exponent of |psi|^2 r^{s+n-1} dr in log coordinates."""
    return 2.0 * profile.leading_order + s + n


def weighted_norm(profile, s: float, n: int, rel_tol: float = 1e-11) -> float:
    """int_{R^n} |psi(|x|)|^2 |x|^s dx by adaptive 1D quadrature.

    Reduces to S_{n-1} int psi(e^u)^2 e^{(s+n)u} du and integrates on
    knot-aligned composite Gauss-Legendre panels, doubling the panel
    count until two resolutions agree to rel_tol.

    Raises DivergenceError when the small-r behavior makes the integral
    infinite.
    """
    if isinstance(profile, GaussianPoly):
        kappa = _gaussian_norm_exponent(profile, s, n)
        if kappa <= 0.0:
            raise DivergenceError(
                f"weighted_norm diverges at the origin: growth exponent {kappa:g} <= 0 "
                f"for s={s:g}, n={n}"
            )
        u_hi = math.log(_GAUSS_RMAX)
        u_lo = min(-46.0 / kappa, -6.0)
        knots = (0.0,)
    elif isinstance(profile, PowerCutoff):
        u_lo, u_hi = profile.log_support()
        knots = profile.log_knots()
    else:
        # generic radial profile with finite log support
        u_lo, u_hi = profile.log_support()
        knots = getattr(profile, "log_knots", tuple)()
    f = _norm_integrand(profile, s, n)
    per_unit = max(2.0, 64.0 / (u_hi - u_lo))
    prev = None
    for _ in range(6):
        edges = knot_edges(u_lo, u_hi, knots, per_unit, min_per_span=4)
        nodes, weights = panel_nodes(edges, 16)
        val = fsum(f(nodes) * weights)
        if prev is not None and abs(val - prev) <= rel_tol * max(abs(val), 1e-300):
            return sphere_surface(n) * val
        prev = val
        per_unit *= 2.0
    return sphere_surface(n) * val


def weighted_norm_closed(profile: GaussianPoly, s: float, n: int) -> float:
    """Exact Gamma-moment value of weighted_norm for GaussianPoly.

    |psi|^2 = p(r)^2 e^{-r^2}, and int_0^inf r^m e^{-r^2} dr
    = Gamma((m+1)/2)/2, so the norm is an exact finite sum. Serves as
    the independent oracle for the quadrature route.
    """
    if not isinstance(profile, GaussianPoly):
        raise UnsupportedProfileError("weighted_norm_closed requires a GaussianPoly profile")
    q = _poly_mul(profile.coeffs, profile.coeffs)
    if 2.0 * profile.leading_order + s + n <= 0.0:
        raise DivergenceError(f"moment diverges for s={s:g}, n={n}")
    terms = [
        qk * 0.5 * gamma(0.5 * (k + s + n))
        for k, qk in enumerate(q)
        if qk != 0.0
    ]
    return sphere_surface(n) * math.fsum(terms)


def gradient_form(profile, n: int, power_shift: float = 0.0, rel_tol: float = 1e-11) -> float:
    """Dirichlet integral of phi = r^c psi:  S_{n-1} int |phi'(r)|^2 r^{n-1} dr.

    With c = power_shift >= 0 this equals (phi, -Delta phi) whenever the
    boundary terms vanish, which holds for both profile families. Used
    as the local route for quadratic forms of |p|^2.
    """
    c = float(power_shift)
    if c < 0.0:
        raise DomainError(f"gradient_form: power_shift must be >= 0, got {c:g}")

    def f(u):
        r = np.exp(u)
        core = r * profile.derivative_values(r) + c * profile.values(r)
        return core * core * np.exp((2.0 * c + n - 2.0) * u)

    if isinstance(profile, GaussianPoly):
        ell = profile.leading_order
        lead = ell if (ell + c) != 0.0 else ell + 2
        kappa = 2.0 * c + n - 2.0 + 2.0 * lead
        if kappa <= 0.0:
            raise DivergenceError(
                f"gradient_form diverges at the origin (growth exponent {kappa:g})"
            )
        u_hi = math.log(_GAUSS_RMAX)
        u_lo = min(-46.0 / kappa, -6.0)
        knots = (0.0,)
    else:
        u_lo, u_hi = profile.log_support()
        knots = getattr(profile, "log_knots", tuple)()
    per_unit = max(2.0, 64.0 / (u_hi - u_lo))
    prev = None
    for _ in range(6):
        edges = knot_edges(u_lo, u_hi, knots, per_unit, min_per_span=4)
        nodes, weights = panel_nodes(edges, 16)
        val = fsum(f(nodes) * weights)
        if prev is not None and abs(val - prev) <= rel_tol * max(abs(val), 1e-300):
            return sphere_surface(n) * val
        prev = val
        per_unit *= 2.0
    return sphere_surface(n) * val


# ----------------------------------------------------------------------
# serialization

def profile_to_json(profile) -> dict:
    """JSON-ready descriptor: {family, coeffs | gamma_exp, cutoff_scale}."""
    if isinstance(profile, GaussianPoly):
        return {"family": "GaussianPoly", "coeffs": list(profile.coeffs)}
    if isinstance(profile, PowerCutoff):
        return {
            "family": "PowerCutoff",
            "gamma_exp": profile.gamma_exp,
            "cutoff_scale": profile.cutoff_scale,
        }
    raise UnsupportedProfileError(f"cannot serialize {type(profile).__name__}")


def profile_from_json(obj) -> GaussianPoly | PowerCutoff:
    """Inverse of profile_to_json; accepts a dict."""
    try:
        family = obj["family"]
    except (TypeError, KeyError):
        raise DomainError(f"profile descriptor needs a 'family' key, got {obj!r}") from None
    if family == "GaussianPoly":
        return GaussianPoly(tuple(obj["coeffs"]))
    if family == "PowerCutoff":
        return PowerCutoff(obj["gamma_exp"], obj["cutoff_scale"])
    raise DomainError(f"unknown profile family {family!r}")
