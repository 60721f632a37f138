"""Theta parameters realised as measures on R x Z(2).

For a tuple with sigma > 0 the measure has a density on each coset
R x {k}:

    p(t, k) = rho_sigma(t - beta) / 2 + (-1)^k kappa rho_sigma'(t - beta') / 2

where ``rho_a`` is the centred Gaussian density with characteristic function
exp(-a s^2) (variance 2a).  The two kappa terms cancel in the marginal over R,
which is therefore exactly the sigma-Gaussian; sampling draws t from that
marginal and then k from the conditional probability of the coset.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple, Union

import numpy as np
from scipy import integrate

from .core import (
    DEFAULT_TOLERANCE,
    Classification,
    ThetaParams,
    Tolerance,
    canonicalize,
    classify,
)
from .errors import DomainError, EmptyInput, InternalError

__all__ = [
    "SamplePoint",
    "SampleSet",
    "Z2Distribution",
    "component_mass",
    "density",
    "empirical_char_fn",
    "gaussian_density",
    "quadrature_mass",
    "sample",
]

QUAD_WINDOW = 14.0
CLAMP = 1e-12

_DENSITY_CLASSES = {
    Classification.GAUSS_Z2,
    Classification.GAUSS_HAAR_LINE,
    Classification.INTERIOR,
    Classification.BOUNDARY,
}


class SamplePoint(NamedTuple):
    t: float
    k: int


@dataclass(frozen=True)
class SampleSet:
    """Draws from a Theta distribution stored column-wise."""

    t: np.ndarray
    k: np.ndarray

    def __len__(self) -> int:
        return len(self.t)

    def __iter__(self) -> Iterator[SamplePoint]:
        for t, k in zip(self.t.tolist(), self.k.tolist()):
            yield SamplePoint(t, k)

    @classmethod
    def from_points(cls, points: Iterable) -> SampleSet:
        pts = list(points)
        t = np.array([pt[0] for pt in pts], dtype=float)
        k = np.array([pt[1] for pt in pts], dtype=np.int8)
        return cls(t, k)

    def __add__(self, other: SampleSet) -> SampleSet:
        """Pointwise group addition of two equally long samples."""
        if len(self) != len(other):
            raise ValueError("sample sets must have equal length")
        return SampleSet(self.t + other.t, (self.k + other.k) % 2)

    def to_csv(self) -> str:
        lines = ["t,k"]
        lines.extend(f"{t!r},{k}" for t, k in zip(self.t.tolist(), self.k.tolist()))
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class Z2Distribution:
    """A probability distribution on Z(2) with masses at 0 and 1."""

    mass0: float
    mass1: float

    def __post_init__(self):
        if not (0.0 <= self.mass0 <= 1.0 and 0.0 <= self.mass1 <= 1.0):
            raise DomainError("masses must lie in [0, 1]")
        if abs(self.mass0 + self.mass1 - 1.0) > 1e-12:
            raise DomainError("masses must sum to 1")

    @classmethod
    def from_kappa(cls, kappa: float) -> Z2Distribution:
        return cls((1.0 + kappa) / 2.0, (1.0 - kappa) / 2.0)

    @property
    def kappa(self) -> float:
        return self.mass0 - self.mass1

    def as_theta(self) -> ThetaParams:
        return ThetaParams(0.0, 0.0, 0.0, 0.0, self.kappa)

    def char_fn(self, s, l: int):
        s = np.asarray(s, dtype=float)
        out = np.ones_like(s, dtype=complex) * (1.0 if l == 0 else self.kappa)
        return complex(out) if out.ndim == 0 else out


def gaussian_density(a: float, t):
    """rho_a(t) = exp(-t^2 / (4a)) / (2 sqrt(pi a))."""
    t = np.asarray(t, dtype=float)
    return np.exp(-(t**2) / (4.0 * a)) / (2.0 * math.sqrt(math.pi * a))


def _log_density_ratio(p: ThetaParams, t):
    """log(rho_sigma'(t - beta') / rho_sigma(t - beta))."""
    return (
        0.5 * (math.log(p.sigma) - math.log(p.sigma_prime))
        - (t - p.beta_prime) ** 2 / (4.0 * p.sigma_prime)
        + (t - p.beta) ** 2 / (4.0 * p.sigma)
    )


def _relative_component(p: ThetaParams, t, k: int):
    """p(t, k) divided by rho_sigma(t - beta) / 2, i.e. 1 + (-1)^k kappa ratio."""
    sign = p.kappa_sign * (1 if k == 0 else -1)
    if sign == 0:
        return np.ones_like(t)
    if p.sigma == p.sigma_prime and p.beta == p.beta_prime:
        return np.full_like(t, 1.0 + sign * abs(p.kappa_value))
    x = p.log_abs_kappa + _log_density_ratio(p, t)
    return 1.0 + np.exp(x) if sign > 0 else -np.expm1(x)


def density(p: ThetaParams, t, k: int, tol: Tolerance = DEFAULT_TOLERANCE):
    """Density of the measure on the coset R x {k}; ``t`` may be an array."""
    c = classify(p, tol)
    if c not in _DENSITY_CLASSES or p.sigma == 0:
        raise DomainError(f"no density for a {c.value} distribution")
    if k not in (0, 1):
        raise DomainError(f"k must be 0 or 1, got {k!r}")
    p = canonicalize(p)
    t_arr = np.asarray(t, dtype=float)
    rel = _relative_component(p, t_arr, k)
    # Within the classification tolerance a boundary tuple may dip a hair
    # below zero at its minimiser.
    floor = -max(2.0 * tol.rtol, 1e-15)
    if np.any(rel < floor):
        raise InternalError("negative density for a tuple classified as valid")
    rel = np.maximum(rel, 0.0)
    out = 0.5 * gaussian_density(p.sigma, t_arr - p.beta) * rel
    return float(out) if out.ndim == 0 else out


def component_mass(p: ThetaParams, k: int, tol: Tolerance = DEFAULT_TOLERANCE) -> float:
    """Mass (1 + (-1)^k kappa) / 2 of the coset R x {k}."""
    if not classify(p, tol).is_valid:
        raise DomainError("component_mass needs a valid distribution")
    kappa = p.kappa_value
    return (1.0 + kappa) / 2.0 if k == 0 else (1.0 - kappa) / 2.0


def _quadrature_windows(p: ThetaParams):
    lo0, hi0 = p.beta - QUAD_WINDOW * math.sqrt(p.sigma), p.beta + QUAD_WINDOW * math.sqrt(p.sigma)
    lo1 = p.beta_prime - QUAD_WINDOW * math.sqrt(p.sigma_prime)
    hi1 = p.beta_prime + QUAD_WINDOW * math.sqrt(p.sigma_prime)
    if hi1 < lo0 or hi0 < lo1:
        return [(lo0, hi0), (lo1, hi1)]
    return [(min(lo0, lo1), max(hi0, hi1))]


def quadrature_mass(p: ThetaParams, k: int, tol: Tolerance = DEFAULT_TOLERANCE) -> float:
    """Coset mass by adaptive quadrature of :func:`density` (oracle for
    :func:`component_mass`)."""
    if p.sigma <= 0:
        raise DomainError("quadrature_mass requires sigma > 0")
    p = canonicalize(p)
    total = 0.0
    for lo, hi in _quadrature_windows(p):
        inner = sorted({x for x in (p.beta, p.beta_prime) if lo < x < hi})
        value, _ = integrate.quad(
            lambda x: density(p, x, k, tol), lo, hi,
            points=inner or None, epsabs=1e-14, epsrel=1e-12, limit=500,
        )
        total += value
    return total


def sample(p: ThetaParams, n: int, seed=0, tol: Tolerance = DEFAULT_TOLERANCE) -> SampleSet:
    """Draw ``n`` i.i.d. points; deterministic for a given seed."""
    c = classify(p, tol)
    if not c.is_valid:
        raise DomainError("cannot sample from an invalid tuple")
    p = canonicalize(p)
    rng = np.random.default_rng(seed)
    if c is Classification.DEGENERATE_ATOM:
        k = 0 if p.kappa_sign > 0 else 1
        return SampleSet(np.full(n, p.beta), np.full(n, k, dtype=np.int8))

    t = p.beta + math.sqrt(2.0 * p.sigma) * rng.standard_normal(n)
    u = rng.random(n)
    if p.sigma == 0:
        rel = np.full(n, 1.0 - p.kappa_value)
    else:
        rel = _relative_component(p, t, 1)
    prob1 = 0.5 * rel
    if np.any(prob1 < -CLAMP) or np.any(prob1 > 1.0 + CLAMP):
        raise InternalError("conditional coset probability outside [0, 1]")
    prob1 = np.clip(prob1, 0.0, 1.0)
    return SampleSet(t, (u < prob1).astype(np.int8))


SampleLike = Union[SampleSet, Iterable]


def empirical_char_fn(samples: SampleLike, s, l: int):
    """Monte-Carlo average of exp(i t s) (-1)^(k l); ``s`` may be an array."""
    if not isinstance(samples, SampleSet):
        samples = SampleSet.from_points(samples)
    if len(samples) == 0:
        raise EmptyInput("empirical_char_fn needs at least one sample")
    s_arr = np.asarray(s, dtype=float)
    sign = 1.0 - 2.0 * (samples.k.astype(float) * l % 2)
    phases = np.exp(1j * np.multiply.outer(s_arr, samples.t)) * sign
    out = phases.mean(axis=-1)
    return complex(out) if out.ndim == 0 else out
