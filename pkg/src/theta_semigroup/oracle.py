"""Brute-force checks of the analytic decisions.

Nothing here uses the closed-form bound to reach a verdict.  Positivity is
checked by scanning the binding coset density on a grid and polishing the
grid minimum with golden-section search; convolution is checked by adding
samples in the group; indecomposability by drawing random parameter splits
and testing whether the product of the two attainable kappas can reach
|kappa|.
"""
from __future__ import annotations

import math
from dataclasses import asdict, dataclass, field
from typing import Optional

import numpy as np

from ._optimize import expand_bracket, golden_section
from .core import (
    DEFAULT_TOLERANCE,
    Classification,
    ThetaParams,
    Tolerance,
    canonicalize,
    char_fn,
    classify,
    convolve,
)
from .errors import DomainError
from .measure import QUAD_WINDOW, empirical_char_fn, sample

__all__ = [
    "CHARFN_GRID",
    "VerificationReport",
    "binding_slack",
    "minimize_log_ratio",
    "minimize_slack",
    "verify_convolution_mc",
    "verify_indecomposability_search",
    "verify_measure_grid",
]

CONSISTENT = "consistent"
INCONSISTENT = "inconsistent"

# Fixed 16-point (s, l) grid used by every char-fn comparison.
CHARFN_S = (0.1, 0.25, 0.5, 0.75, 1.0, 1.5, 2.0, 3.0)
CHARFN_GRID = tuple((s, l) for l in (0, 1) for s in CHARFN_S)


@dataclass
class VerificationReport:
    verdict: str
    min_slack: Optional[float] = None
    argmin_t: Optional[float] = None
    t0_analytic: Optional[float] = None
    mass_error: Optional[float] = None
    max_charfn_dev: Optional[float] = None
    seed: Optional[int] = None
    grid_points: Optional[int] = None
    samples: Optional[int] = None
    trials: Optional[int] = None
    notes: dict = field(default_factory=dict)

    @property
    def consistent(self) -> bool:
        return self.verdict == CONSISTENT

    def to_dict(self) -> dict:
        return asdict(self)


def _log_gauss(a, t):
    return -math.log(2.0 * math.sqrt(math.pi * a)) - t**2 / (4.0 * a)


def binding_slack(p: ThetaParams, t):
    """Binding coset density divided by the marginal density / 2.

    Equals 1 - |kappa| rho_sigma'(t - beta') / rho_sigma(t - beta); negative
    somewhere exactly when the tuple is not a measure.
    """
    if p.kappa_sign == 0:
        return np.ones_like(np.asarray(t, dtype=float))
    log_ratio = _log_gauss(p.sigma_prime, t - p.beta_prime) - _log_gauss(p.sigma, t - p.beta)
    return -np.expm1(p.log_abs_kappa + log_ratio)


def _window(p: ThetaParams):
    w0 = QUAD_WINDOW * math.sqrt(p.sigma)
    w1 = QUAD_WINDOW * math.sqrt(p.sigma_prime)
    return min(p.beta - w0, p.beta_prime - w1), max(p.beta + w0, p.beta_prime + w1)


def minimize_log_ratio(p: ThetaParams, grid_points: int = 4096, stop_below: float = -math.inf):
    """Minimise g(t) = -log(|kappa| rho_sigma'(t - beta') / rho_sigma(t - beta)).

    Grid scan over the quadrature window, bracket expansion when the grid
    minimum sits on the window edge, golden-section refinement and, when
    0 < sigma' < sigma, a stationarity polish.  With kappa = +-1 the minimum
    is the log of the boundary bound.  Returns ``(argmin, g_min, spacing)``
    where ``spacing`` is the grid step around the returned point.  The
    search stops early once g drops under ``stop_below``.
    """
    lo, hi = _window(p)
    spacing = (hi - lo) / (grid_points - 1)
    bounded = 0.0 < p.sigma_prime < p.sigma
    log_k = p.log_abs_kappa

    def g(x):
        ratio = _log_gauss(p.sigma_prime, x - p.beta_prime) - _log_gauss(p.sigma, x - p.beta)
        return -(log_k + ratio)

    grid = np.linspace(lo, hi, grid_points)
    f = lambda x: float(g(x))
    values = g(grid)
    i = int(np.argmin(values))
    if i == 0 or i == grid_points - 1:
        step = -spacing if i == 0 else spacing
        a, b, c = expand_bracket(f, float(grid[i]), step, float(values[i]), stop_below=stop_below)
        spacing = max(spacing, abs(c - a) / 2.0)
    else:
        a, b, c = grid[i - 1], grid[i], grid[i + 1]
    best_t, best = float(b), f(b)
    if best >= stop_below:
        xtol = 1e-12 * max(1.0, abs(best_t))
        t, v = golden_section(f, min(a, c), max(a, c), xtol=xtol)
        if v <= best:
            best_t, best = t, v
        if bounded:
            best_t = _polish_stationary(p, best_t, math.sqrt(p.sigma_prime))
            best = min(best, f(best_t))
    return best_t, best, spacing


def minimize_slack(p: ThetaParams, grid_points: int = 4096):
    """Minimum of :func:`binding_slack`, found through
    :func:`minimize_log_ratio` (monotone in the slack, but it does not
    saturate at 1 when the minimiser is far outside the window).

    Returns ``(argmin, min_slack, spacing)``.  When sigma' >= sigma the
    slack is unbounded below and the search stops once it is under -1.
    """
    if p.kappa_sign == 0:
        lo, hi = _window(p)
        return lo, 1.0, (hi - lo) / (grid_points - 1)
    bounded = 0.0 < p.sigma_prime < p.sigma
    stop_below = -math.inf if bounded else -math.log(2.0)
    t, best, spacing = minimize_log_ratio(p, grid_points, stop_below)
    with np.errstate(over="ignore"):
        slack = float(-np.expm1(-best))
    return t, slack, spacing


def _polish_stationary(p: ThetaParams, t: float, h: float) -> float:
    """Refine an arg-min to the zero of the log-ratio derivative.

    Near its minimum the slack is flat to rounding, which caps how well the
    value alone pins the abscissa.  The derivative of the log density ratio,
    (t - beta) / (2 sigma) - (t - beta') / (2 sigma'), is written in the
    difference-of-squares form so that far-out minimisers do not lose
    digits to cancellation; Brent's method then brackets its sign change.
    """
    from scipy.optimize import brentq

    def slope(x):
        return (x - p.beta) / (2.0 * p.sigma) - (x - p.beta_prime) / (2.0 * p.sigma_prime)

    lo, hi = t - h, t + h
    for _ in range(200):
        if slope(lo) * slope(hi) <= 0.0:
            break
        lo, hi = lo - (hi - lo), hi + (hi - lo)
    else:
        return t
    return brentq(slope, lo, hi, xtol=1e-300, rtol=4 * np.finfo(float).eps, maxiter=500)


def verify_measure_grid(
    p: ThetaParams,
    grid_points: int = 4096,
    tol: Tolerance = DEFAULT_TOLERANCE,
    check_mass: bool = False,
) -> VerificationReport:
    """Decide positivity on a grid and compare with :func:`classify`."""
    p = canonicalize(p)
    if p.sigma <= 0 or p.sigma_prime <= 0:
        raise DomainError("grid verification needs sigma > 0 and sigma' > 0; atoms are checked symbolically")
    argmin, min_slack, spacing = minimize_slack(p, grid_points)
    oracle_valid = min_slack >= -tol.rtol
    classified = classify(p, tol)
    ok = oracle_valid == classified.is_valid

    t0 = None
    if 0.0 < p.sigma_prime < p.sigma and p.kappa_sign != 0:
        t0 = (p.sigma * p.beta_prime - p.sigma_prime * p.beta) / (p.sigma - p.sigma_prime)
        ok = ok and abs(argmin - t0) <= 2.0 * spacing

    mass_error = None
    if check_mass and classified.is_valid:
        mass_error = _mass_error(p)
        ok = ok and mass_error <= 2e-8

    return VerificationReport(
        verdict=CONSISTENT if ok else INCONSISTENT,
        min_slack=float(min_slack),
        argmin_t=float(argmin) if p.kappa_sign != 0 else None,
        t0_analytic=t0,
        mass_error=mass_error,
        grid_points=grid_points,
        notes={"classification": classified.value, "oracle_valid": bool(oracle_valid)},
    )


def _mass_error(p: ThetaParams) -> float:
    from scipy import integrate

    lo, hi = _window(p)
    kappa = p.kappa_value

    def coset(x, k):
        sign = 1.0 if k == 0 else -1.0
        return 0.5 * math.exp(_log_gauss(p.sigma, x - p.beta)) + sign * 0.5 * kappa * math.exp(
            _log_gauss(p.sigma_prime, x - p.beta_prime)
        )

    pts = sorted({x for x in (p.beta, p.beta_prime) if lo < x < hi}) or None
    masses = [
        integrate.quad(coset, lo, hi, args=(k,), points=pts, epsabs=1e-14, epsrel=1e-12, limit=500)[0]
        for k in (0, 1)
    ]
    return max(abs(masses[0] + masses[1] - 1.0), abs(masses[1] - (1.0 - kappa) / 2.0))


def verify_convolution_mc(
    p: ThetaParams, q: ThetaParams, n: int = 100_000, seed: int = 0
) -> VerificationReport:
    """Add independent samples of p and q in the group and compare their
    empirical characteristic function with that of ``convolve(p, q)``."""
    seed_p, seed_q = np.random.SeedSequence(seed).spawn(2)
    summed = sample(p, n, seed_p) + sample(q, n, seed_q)
    pq = convolve(p, q)
    s = np.array(CHARFN_S)
    dev = 0.0
    for l in (0, 1):
        diff = np.abs(empirical_char_fn(summed, s, l) - char_fn(pq, s, l))
        dev = max(dev, float(diff.max()))
    bound = 6.0 / math.sqrt(n)
    return VerificationReport(
        verdict=CONSISTENT if dev <= bound else INCONSISTENT,
        max_charfn_dev=dev,
        seed=seed,
        samples=n,
        notes={"envelope": bound},
    )


def _log_bound_arrays(s, sp, b, bp):
    return 0.5 * (np.log(sp) - np.log(s)) - (b - bp) ** 2 / (4.0 * (s - sp))


def verify_indecomposability_search(
    p: ThetaParams, trials: int = 10_000, seed: int = 0, tol: Tolerance = DEFAULT_TOLERANCE
) -> VerificationReport:
    """Random search for a nondegenerate split of a boundary tuple.

    Even trials take the second factor Gaussian times Z(2) (sigma2 = sigma2',
    beta2 = beta2'), odd trials take both factors with sigma_i' < sigma_i.
    A split is certified impossible when the largest attainable |kappa1 kappa2|
    is strictly below |kappa|.
    """
    if classify(p, tol) is not Classification.BOUNDARY:
        raise DomainError("indecomposability search needs a boundary tuple")
    rng = np.random.default_rng(seed)
    s, sp, b, bp = p.sigma, p.sigma_prime, p.beta, p.beta_prime
    target = p.log_abs_kappa

    n_gauss = (trials + 1) // 2
    n_mixed = trials - n_gauss

    # Gaussian * Z(2) second factor: its kappa can reach 1.
    s2 = rng.uniform(0.0, 1.0, n_gauss) * sp
    b2 = rng.uniform(b - 3 * math.sqrt(s), b + 3 * math.sqrt(s), n_gauss)
    ok_g = (s2 > 0) & (s2 < sp)
    margin_g = target - _log_bound_arrays(s - s2[ok_g], sp - s2[ok_g], b - b2[ok_g], bp - b2[ok_g])

    # Both factors strictly inside 0 < sigma_i' < sigma_i.
    margins = [margin_g]
    drawn = int(ok_g.sum())
    remaining = n_mixed
    while remaining > 0:
        m = 2 * remaining + 16
        s1 = rng.uniform(0.0, 1.0, m) * s
        s1p = rng.uniform(0.0, 1.0, m) * sp
        b1 = rng.uniform(b - 3 * math.sqrt(s), b + 3 * math.sqrt(s), m)
        b1p = rng.uniform(bp - 3 * math.sqrt(sp), bp + 3 * math.sqrt(sp), m)
        s2, s2p = s - s1, sp - s1p
        keep = (s1p > 0) & (s1p < s1) & (s2p > 0) & (s2p < s2)
        idx = np.flatnonzero(keep)[:remaining]
        lb1 = _log_bound_arrays(s1[idx], s1p[idx], b1[idx], b1p[idx])
        lb2 = _log_bound_arrays(s2[idx], s2p[idx], b - b1[idx], bp - b1p[idx])
        margins.append(target - (lb1 + lb2))
        remaining -= len(idx)
        drawn += len(idx)

    margin = np.concatenate(margins)
    certified = bool(np.all(margin > 0.0))
    return VerificationReport(
        verdict=CONSISTENT if certified else INCONSISTENT,
        min_slack=float(margin.min()),
        seed=seed,
        trials=drawn,
        notes={"gaussian_z2_trials": int(ok_g.sum()), "mixed_trials": n_mixed},
    )
