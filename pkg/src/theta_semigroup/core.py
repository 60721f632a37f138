"""Parameter representation of the semigroup Theta on R x Z(2).

A distribution in Theta is described by its characteristic function

    f(s, 0) = exp(-sigma s^2 + i beta s)
    f(s, 1) = kappa exp(-sigma' s^2 + i beta' s)

and is a probability measure exactly when either 0 < sigma' < sigma and
|kappa| is at most ``boundary_bound`` or sigma = sigma', beta = beta' and
|kappa| <= 1.  Convolution is parameter arithmetic: variances and shifts add,
the kappas multiply.

Magnitudes of kappa are compared in the log domain because the bound mixes a
square root with an exponential that underflows long before the comparison
stops being meaningful.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass, replace
from typing import Union

import numpy as np

from .errors import DomainError

__all__ = [
    "BoundaryMultiple",
    "Classification",
    "GroupElement",
    "ThetaParams",
    "Tolerance",
    "DEFAULT_TOLERANCE",
    "boundary_bound",
    "canonicalize",
    "char_fn",
    "classify",
    "convolve",
    "is_valid",
    "log_boundary_bound",
    "log_slack",
    "negate_kappa",
    "point_mass",
    "shift",
]


@dataclass(frozen=True)
class Tolerance:
    """Tolerance policy for boundary decisions.

    ``rtol`` bounds ``|log|kappa| - log bound|`` for a tuple to count as lying
    on the boundary.  ``atol`` is the smallest ``sigma - sigma'`` that is
    still treated as a genuine gap rather than sigma = sigma'.
    """

    rtol: float = 1e-9
    atol: float = 1e-300


DEFAULT_TOLERANCE = Tolerance()


@dataclass(frozen=True)
class BoundaryMultiple:
    """kappa given as ``sign * ratio * boundary_bound(params)``.

    Lets boundary distributions be written down exactly, without rounding the
    bound to a float first.
    """

    ratio: float = 1.0
    sign: int = 1

    def __post_init__(self):
        if not (0.0 < self.ratio <= 1.0):
            raise DomainError(f"boundary ratio must lie in (0, 1], got {self.ratio!r}")
        if self.sign not in (1, -1):
            raise DomainError(f"sign must be +1 or -1, got {self.sign!r}")


Kappa = Union[float, BoundaryMultiple]


class Classification(enum.Enum):
    INVALID = "invalid"
    DEGENERATE_ATOM = "degenerate_atom"
    GAUSS_Z2 = "gauss_z2"
    GAUSS_HAAR_LINE = "gauss_haar_line"
    INTERIOR = "interior"
    BOUNDARY = "boundary"

    @property
    def is_valid(self) -> bool:
        return self is not Classification.INVALID


@dataclass(frozen=True)
class GroupElement:
    """An element (t, k) of R x Z(2)."""

    t: float
    k: int = 0

    def __post_init__(self):
        if self.k not in (0, 1):
            raise DomainError(f"k must be 0 or 1, got {self.k!r}")
        object.__setattr__(self, "t", float(self.t))

    def __add__(self, other: GroupElement) -> GroupElement:
        return GroupElement(self.t + other.t, (self.k + other.k) % 2)

    def __neg__(self) -> GroupElement:
        return GroupElement(-self.t, self.k)


@dataclass(frozen=True)
class ThetaParams:
    """The five parameters (sigma, sigma', beta, beta', kappa).

    ``kappa`` is either a float in [-1, 1] or a :class:`BoundaryMultiple`.
    Construction checks only the type-level invariants; whether the tuple is
    a probability distribution is decided by :func:`classify`.
    """

    sigma: float
    sigma_prime: float
    beta: float
    beta_prime: float
    kappa: Kappa

    def __post_init__(self):
        for name in ("sigma", "sigma_prime", "beta", "beta_prime"):
            value = float(getattr(self, name))
            if not math.isfinite(value):
                raise DomainError(f"{name} must be finite, got {value!r}")
            object.__setattr__(self, name, value)
        if self.sigma < 0 or self.sigma_prime < 0:
            raise DomainError("sigma and sigma_prime must be nonnegative")
        if isinstance(self.kappa, BoundaryMultiple):
            if not (0.0 < self.sigma_prime < self.sigma):
                raise DomainError("BoundaryMultiple requires 0 < sigma_prime < sigma")
        else:
            kappa = float(self.kappa)
            if not math.isfinite(kappa) or abs(kappa) > 1.0:
                raise DomainError(f"kappa must lie in [-1, 1], got {kappa!r}")
            object.__setattr__(self, "kappa", kappa)

    @classmethod
    def at_boundary(cls, sigma, sigma_prime, beta=0.0, beta_prime=0.0, sign=1, ratio=1.0):
        return cls(sigma, sigma_prime, beta, beta_prime, BoundaryMultiple(ratio, sign))

    @property
    def kappa_sign(self) -> int:
        if isinstance(self.kappa, BoundaryMultiple):
            return self.kappa.sign
        return (self.kappa > 0) - (self.kappa < 0)

    @property
    def log_abs_kappa(self) -> float:
        if isinstance(self.kappa, BoundaryMultiple):
            return math.log(self.kappa.ratio) + log_boundary_bound(self)
        if self.kappa == 0:
            return -math.inf
        return math.log(abs(self.kappa))

    @property
    def kappa_value(self) -> float:
        if isinstance(self.kappa, BoundaryMultiple):
            return self.kappa_sign * math.exp(self.log_abs_kappa)
        return self.kappa

    def as_tuple(self) -> tuple[float, float, float, float, float]:
        return (self.sigma, self.sigma_prime, self.beta, self.beta_prime, self.kappa_value)


def log_boundary_bound(p: ThetaParams) -> float:
    """log of sqrt(s'/s) * exp(-(b - b')^2 / (4 (s - s')))."""
    if not (0.0 < p.sigma_prime < p.sigma):
        raise DomainError("boundary_bound requires 0 < sigma_prime < sigma")
    gap = p.sigma - p.sigma_prime
    return 0.5 * (math.log(p.sigma_prime) - math.log(p.sigma)) - (p.beta - p.beta_prime) ** 2 / (4.0 * gap)


def boundary_bound(p: ThetaParams) -> float:
    """Largest |kappa| for which the tuple is still a probability measure.

    It is the minimum over t of the ratio of the two Gaussian densities
    rho_sigma(t - beta) / rho_sigma'(t - beta'), attained at
    t0 = (sigma beta' - sigma' beta) / (sigma - sigma').
    """
    return math.exp(log_boundary_bound(p))


def canonicalize(p: ThetaParams) -> ThetaParams:
    """Make the representation unique: with kappa = 0 the l=1 branch vanishes,
    so sigma' and beta' are reset to sigma and beta."""
    if not isinstance(p.kappa, BoundaryMultiple) and p.kappa == 0:
        if p.sigma_prime != p.sigma or p.beta_prime != p.beta:
            return ThetaParams(p.sigma, p.sigma, p.beta, p.beta, 0.0)
    return p


def log_slack(p: ThetaParams) -> float:
    """``log bound - log|kappa|`` for 0 < sigma' < sigma (positive inside)."""
    if isinstance(p.kappa, BoundaryMultiple):
        return -math.log(p.kappa.ratio)
    return log_boundary_bound(p) - p.log_abs_kappa


def classify(p: ThetaParams, tol: Tolerance = DEFAULT_TOLERANCE) -> Classification:
    p = canonicalize(p)
    C = Classification
    if not isinstance(p.kappa, BoundaryMultiple) and p.kappa == 0:
        return C.GAUSS_HAAR_LINE

    sigma, sigma_prime = p.sigma, p.sigma_prime
    if sigma_prime < sigma and sigma - sigma_prime < tol.atol:
        sigma_prime = sigma

    if sigma == sigma_prime:
        if p.beta != p.beta_prime:
            return C.INVALID
        if sigma == 0 and abs(p.kappa_value) == 1.0:
            return C.DEGENERATE_ATOM
        return C.GAUSS_Z2
    if sigma_prime > sigma or sigma_prime == 0:
        return C.INVALID

    slack = log_slack(p)
    if abs(slack) <= tol.rtol:
        return C.BOUNDARY
    return C.INTERIOR if slack > 0 else C.INVALID


def is_valid(p: ThetaParams, tol: Tolerance = DEFAULT_TOLERANCE) -> bool:
    return classify(p, tol).is_valid


def _require_valid(p: ThetaParams, tol: Tolerance = DEFAULT_TOLERANCE) -> Classification:
    c = classify(p, tol)
    if not c.is_valid:
        raise DomainError(f"parameters do not define a probability distribution: {p}")
    return c


def point_mass(x: GroupElement) -> ThetaParams:
    """The degenerate distribution E_x as a parameter tuple."""
    return ThetaParams(0.0, 0.0, x.t, x.t, -1.0 if x.k else 1.0)


def convolve(p: ThetaParams, q: ThetaParams, tol: Tolerance = DEFAULT_TOLERANCE) -> ThetaParams:
    cp = _require_valid(p, tol)
    cq = _require_valid(q, tol)
    sigma = p.sigma + q.sigma
    sigma_prime = p.sigma_prime + q.sigma_prime
    beta = p.beta + q.beta
    beta_prime = p.beta_prime + q.beta_prime

    atom = Classification.DEGENERATE_ATOM
    if isinstance(p.kappa, BoundaryMultiple) and cq is atom:
        kappa: Kappa = BoundaryMultiple(p.kappa.ratio, p.kappa.sign * q.kappa_sign)
    elif isinstance(q.kappa, BoundaryMultiple) and cp is atom:
        kappa = BoundaryMultiple(q.kappa.ratio, q.kappa.sign * p.kappa_sign)
    else:
        sign = p.kappa_sign * q.kappa_sign
        kappa = 0.0 if sign == 0 else sign * math.exp(p.log_abs_kappa + q.log_abs_kappa)
    return canonicalize(ThetaParams(sigma, sigma_prime, beta, beta_prime, kappa))


def shift(p: ThetaParams, x: GroupElement) -> ThetaParams:
    """p * E_x."""
    return convolve(p, point_mass(x))


def negate_kappa(p: ThetaParams) -> ThetaParams:
    """Convolution with E_(0,1): flips the sign of kappa and nothing else."""
    if isinstance(p.kappa, BoundaryMultiple):
        return replace(p, kappa=BoundaryMultiple(p.kappa.ratio, -p.kappa.sign))
    return replace(p, kappa=-p.kappa if p.kappa else 0.0)


def char_fn(p: ThetaParams, s, l: int, tol: Tolerance = DEFAULT_TOLERANCE):
    """Characteristic function at the character (s, l); ``s`` may be an array."""
    _require_valid(p, tol)
    if l not in (0, 1):
        raise DomainError(f"l must be 0 or 1, got {l!r}")
    s_arr = np.asarray(s, dtype=float)
    if l == 0:
        out = np.exp(-p.sigma * s_arr**2 + 1j * p.beta * s_arr)
    elif p.kappa_sign == 0:
        out = np.zeros_like(s_arr, dtype=complex)
    else:
        out = p.kappa_sign * np.exp(p.log_abs_kappa - p.sigma_prime * s_arr**2 + 1j * p.beta_prime * s_arr)
    return complex(out) if out.ndim == 0 else out
