"""Random parameter generators shared by the test modules."""
import math

import numpy as np

from theta_semigroup import BoundaryMultiple, ThetaParams

# Keep |kappa| comfortably representable as a double.
MIN_LOG_BOUND = -300.0


def log_bound(s, sp, b, bp):
    return 0.5 * math.log(sp / s) - (b - bp) ** 2 / (4 * (s - sp))


def random_tuple(rng):
    """Unconstrained draw from the acceptance ranges (mostly invalid)."""
    s = rng.uniform(0, 10) or 10.0
    sp = rng.uniform(0, s + 1) or s
    b, bp = rng.uniform(-5, 5, 2)
    kappa = rng.uniform(-1, 1)
    return ThetaParams(s, sp, b, bp, kappa)


def random_gap(rng):
    """(sigma, sigma', beta, beta') with 0 < sigma' < sigma and a usable bound."""
    while True:
        s = rng.uniform(0, 10)
        sp = rng.uniform(0, s)
        b, bp = rng.uniform(-5, 5, 2)
        if 0 < sp < s and log_bound(s, sp, b, bp) > MIN_LOG_BOUND:
            return s, sp, b, bp


def random_near_boundary(rng, rel=1e-6):
    """A tuple at relative distance +-rel from the boundary."""
    while True:
        s, sp, b, bp = random_gap(rng)
        side = 1.0 if rng.random() < 0.5 else -1.0
        magnitude = math.exp(log_bound(s, sp, b, bp)) * (1.0 + side * rel)
        if magnitude <= 1.0:
            sign = 1.0 if rng.random() < 0.5 else -1.0
            return ThetaParams(s, sp, b, bp, sign * magnitude)


def random_interior(rng):
    s, sp, b, bp = random_gap(rng)
    ratio = rng.uniform(0.001, 0.999)
    sign = 1.0 if rng.random() < 0.5 else -1.0
    return ThetaParams(s, sp, b, bp, sign * ratio * math.exp(log_bound(s, sp, b, bp)))


def random_boundary(rng):
    s, sp, b, bp = random_gap(rng)
    return ThetaParams(s, sp, b, bp, BoundaryMultiple(1.0, 1 if rng.random() < 0.5 else -1))


def random_gauss_z2(rng):
    s = rng.uniform(0, 10)
    b = rng.uniform(-5, 5)
    kappa = rng.uniform(-1, 1)
    return ThetaParams(s, s, b, b, kappa)


def random_valid(rng):
    kind = rng.integers(0, 5)
    if kind == 0:
        return random_interior(rng)
    if kind == 1:
        return random_boundary(rng)
    if kind == 2:
        return random_gauss_z2(rng)
    if kind == 3:
        s, b = rng.uniform(0, 10), rng.uniform(-5, 5)
        return ThetaParams(s, s, b, b, 0.0)
    if rng.random() < 0.5:
        b = rng.uniform(-5, 5)
        return ThetaParams(0, 0, b, b, 0.0)
    return _atom(rng)


def _atom(rng):
    t = rng.uniform(-5, 5)
    return ThetaParams(0, 0, t, t, 1.0 if rng.random() < 0.5 else -1.0)


def max_param_error(p, q):
    return max(abs(x - y) for x, y in zip(p.as_tuple(), q.as_tuple()))
