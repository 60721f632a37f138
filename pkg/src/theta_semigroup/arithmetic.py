"""Arithmetic of Theta: infinite divisibility, indecomposability and
constructive factorizations.

The classes are decided from the classification alone:

* infinitely divisible  <=>  sigma = sigma', beta = beta' (a Gaussian times a
  distribution on Z(2)),
* indecomposable        <=>  0 < sigma' < sigma and |kappa| on the bound,
* no indecomposable factor <=> infinitely divisible and not a nondegenerate
  Gaussian convolved with the Haar distribution of Z(2).

Everything strictly inside the bound splits as (boundary factor) * (Gaussian),
and the Gaussian can be made maximal.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional

from .core import (
    DEFAULT_TOLERANCE,
    BoundaryMultiple,
    Classification,
    GroupElement,
    ThetaParams,
    Tolerance,
    canonicalize,
    classify,
    convolve,
    log_boundary_bound,
    log_slack,
    point_mass,
)
from .errors import ConstructionFailure, DomainError, NotInfinitelyDivisible, NotInterior
from .measure import Z2Distribution

__all__ = [
    "Factorization",
    "GaussianFactor",
    "divisibility_witness",
    "factor_chain",
    "has_indecomposable_factor",
    "is_indecomposable",
    "is_infinitely_divisible",
    "lambda_pi_decomposition",
    "max_gaussian_factor",
    "nth_root",
]

C = Classification
_ID_CLASSES = {C.GAUSS_Z2, C.GAUSS_HAAR_LINE, C.DEGENERATE_ATOM}
MAX_HALVINGS = 200


@dataclass(frozen=True)
class GaussianFactor:
    """Gaussian on R with characteristic function exp(-a s^2 + i shift s)."""

    a: float
    shift: float = 0.0

    def __post_init__(self):
        if not (self.a >= 0 and math.isfinite(self.a)):
            raise DomainError(f"Gaussian variance parameter must be >= 0, got {self.a!r}")

    def as_theta(self) -> ThetaParams:
        return ThetaParams(self.a, self.a, self.shift, self.shift, 1.0)


@dataclass(frozen=True)
class Factorization:
    factors: list[ThetaParams] = field(default_factory=list)
    gaussian: Optional[GaussianFactor] = None
    z2: Optional[Z2Distribution] = None

    def parts(self) -> list[ThetaParams]:
        out = list(self.factors)
        if self.gaussian is not None:
            out.append(self.gaussian.as_theta())
        if self.z2 is not None:
            out.append(self.z2.as_theta())
        return out

    def reconvolve(self) -> ThetaParams:
        parts = self.parts()
        if not parts:
            return point_mass(GroupElement(0.0, 0))
        acc = parts[0]
        for q in parts[1:]:
            acc = convolve(acc, q)
        return acc


def _classify_valid(p: ThetaParams, tol: Tolerance) -> Classification:
    c = classify(p, tol)
    if not c.is_valid:
        raise DomainError("parameters do not define a probability distribution")
    return c


def is_infinitely_divisible(p: ThetaParams, tol: Tolerance = DEFAULT_TOLERANCE) -> bool:
    return _classify_valid(p, tol) in _ID_CLASSES


def divisibility_witness(p: ThetaParams) -> int:
    """Smallest n with |kappa|^(1/n) > sqrt(sigma'/sigma).

    An n-th root inside Theta needs |kappa|^(1/n) <= sqrt(sigma'/sigma), so
    this n shows that a tuple with 0 < sigma' < sigma has no n-th root.
    """
    if not (0.0 < p.sigma_prime < p.sigma) or p.kappa_sign == 0:
        raise DomainError("witness only defined for 0 < sigma' < sigma, kappa != 0")
    log_r = 0.5 * (math.log(p.sigma_prime) - math.log(p.sigma))
    n = math.floor(p.log_abs_kappa / log_r) + 1
    # guard the floor against rounding at integer ratios
    while p.log_abs_kappa / n <= log_r:
        n += 1
    while n > 1 and p.log_abs_kappa / (n - 1) > log_r:
        n -= 1
    return n


def nth_root(p: ThetaParams, n: int, tol: Tolerance = DEFAULT_TOLERANCE) -> tuple[ThetaParams, GroupElement]:
    """Return (mu_n, x_n) with p = mu_n^{*n} * E_{x_n}."""
    if n < 1:
        raise ValueError("n must be a positive integer")
    c = _classify_valid(p, tol)
    if c not in _ID_CLASSES:
        raise NotInfinitelyDivisible(
            f"{c.value} distribution is not infinitely divisible "
            f"(no root of order {divisibility_witness(p)} exists)"
        )
    p = canonicalize(p)
    kappa = p.kappa_value
    magnitude = abs(kappa) ** (1.0 / n)
    root = ThetaParams(p.sigma / n, p.sigma / n, p.beta / n, p.beta / n, magnitude)
    return root, GroupElement(0.0, 0 if kappa >= 0 else 1)


def is_indecomposable(p: ThetaParams, tol: Tolerance = DEFAULT_TOLERANCE) -> bool:
    return _classify_valid(p, tol) is C.BOUNDARY


def has_indecomposable_factor(p: ThetaParams, tol: Tolerance = DEFAULT_TOLERANCE) -> bool:
    c = _classify_valid(p, tol)
    if c in (C.INTERIOR, C.BOUNDARY):
        return True
    if c is C.GAUSS_HAAR_LINE:
        return p.sigma > 0
    return False


def _require_interior(p: ThetaParams, tol: Tolerance) -> None:
    c = classify(p, tol)
    if c is not C.INTERIOR:
        raise NotInterior(f"expected an interior distribution, got {c.value}")


def gaussian_split(p: ThetaParams, a: float) -> ThetaParams:
    """Remove a centred Gaussian with variance parameter ``a`` from ``p``.

    Both variances drop by ``a``; kappa is kept as an explicit value.  The
    result may or may not be a valid tuple.
    """
    return ThetaParams(p.sigma - a, p.sigma_prime - a, p.beta, p.beta_prime, p.kappa_value)


def max_gaussian_factor(p: ThetaParams, tol: Tolerance = DEFAULT_TOLERANCE) -> Factorization:
    """Split an interior tuple into a boundary factor and its largest
    Gaussian factor exp(-a s^2)."""
    _require_interior(p, tol)
    # q = (kappa / b)^2 with b = exp(-(beta - beta')^2 / (4 (sigma - sigma')))
    log_b = log_boundary_bound(p) - 0.5 * (math.log(p.sigma_prime) - math.log(p.sigma))
    q = math.exp(2.0 * (p.log_abs_kappa - log_b))
    a = (p.sigma_prime - p.sigma * q) / (1.0 - q)
    if not (0.0 < a < p.sigma_prime):
        raise ConstructionFailure(f"maximal Gaussian variance {a!r} outside (0, sigma')")
    nu = ThetaParams(
        p.sigma - a, p.sigma_prime - a, p.beta, p.beta_prime, BoundaryMultiple(1.0, p.kappa_sign)
    )
    return Factorization(factors=[nu], gaussian=GaussianFactor(a, 0.0))


def factor_chain(p: ThetaParams, n: int, tol: Tolerance = DEFAULT_TOLERANCE) -> Factorization:
    """Write an interior tuple as n boundary factors times a nondegenerate
    Gaussian.

    The first n-1 factors are centred boundary tuples (s1, s1', 0, 0,
    sqrt(s1'/s1)) peeled off the residual; their size starts at a quarter of
    the residual's maximal Gaussian variance with s1' = s1 (1 - eta), eta = 1/8,
    and both s1 and eta are halved until the residual stays interior with some
    slack.  The last factor and the Gaussian come from
    :func:`max_gaussian_factor`.
    """
    if n < 1:
        raise ValueError("n must be a positive integer")
    _require_interior(p, tol)
    residual = canonicalize(p)
    factors: list[ThetaParams] = []
    for _ in range(n - 1):
        margin = max_gaussian_factor(residual, tol).gaussian.a
        s1, eta = margin / 4.0, 0.125
        for _ in range(MAX_HALVINGS):
            s1p = s1 * (1.0 - eta)
            split = _peel(residual, s1, s1p)
            if split is not None and log_slack(split) >= 10.0 * tol.rtol:
                break
            s1, eta = s1 / 2.0, eta / 2.0
        else:
            raise ConstructionFailure("shrink schedule exhausted")
        factors.append(ThetaParams.at_boundary(s1, s1p))
        residual = split
    last = max_gaussian_factor(residual, tol)
    return Factorization(factors=factors + last.factors, gaussian=last.gaussian)


def _peel(p: ThetaParams, s1: float, s1p: float) -> Optional[ThetaParams]:
    tau, tau_p = p.sigma - s1, p.sigma_prime - s1p
    if not (0.0 < tau_p < tau):
        return None
    log_k1 = 0.5 * (math.log(s1p) - math.log(s1))
    log_rest = p.log_abs_kappa - log_k1
    if log_rest >= 0.0:
        return None
    return ThetaParams(tau, tau_p, p.beta, p.beta_prime, p.kappa_sign * math.exp(log_rest))


def lambda_pi_decomposition(p: ThetaParams, tol: Tolerance = DEFAULT_TOLERANCE) -> Factorization:
    """Write an interior tuple as (boundary tuple) * (distribution on Z(2)).

    The boundary tuple keeps all of sigma, sigma', beta, beta'; the Z(2)
    factor carries kappa_pi = |kappa| / bound.
    """
    _require_interior(p, tol)
    lam = ThetaParams(p.sigma, p.sigma_prime, p.beta, p.beta_prime, BoundaryMultiple(1.0, p.kappa_sign))
    kappa_pi = math.exp(p.log_abs_kappa - log_boundary_bound(p))
    return Factorization(factors=[lam], z2=Z2Distribution.from_kappa(kappa_pi))
