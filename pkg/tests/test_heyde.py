import numpy as np
import pytest
from scipy.linalg import null_space
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import random_gauss_z2, random_interior
from theta_semigroup import DomainError, HeydeConfig, ThetaParams as P, symmetry_defect
from theta_semigroup.heyde import default_grid


def test_symmetric_pair():
    p = P(2, 1, 0, 0, 0.5)
    cfg = HeydeConfig([p, p], [1, 1], [1, -1])
    assert symmetry_defect(cfg) <= 1e-12
    assert cfg.hypothesis_ok is False


def test_unequal_gaussians():
    cfg = HeydeConfig([P(1, 1, 0, 0, 1.0), P(2, 2, 0, 0, 1.0)], [1, 1], [1, -1])
    # the sides differ by exp(+-2 (sigma_1 - sigma_2) s1 s2); on the diagonal s1 = s2 = s
    s = 0.5
    expected = abs(np.exp(-(1 + 2) * 2 * s**2) * (np.exp(-(1 - 2) * 2 * s * s) - np.exp((1 - 2) * 2 * s * s)))
    assert symmetry_defect(cfg, [s]) == pytest.approx(expected, rel=1e-12)
    assert symmetry_defect(cfg) > 1e-3


def test_point_masses():
    e = P(0, 0, 0, 0, 1.0)
    assert symmetry_defect(HeydeConfig([e, e], [1, 1], [1, 1])) == 0


def test_validation():
    p = P(1, 1, 0, 0, 0.5)
    with pytest.raises(DomainError):
        HeydeConfig([p], [1], [1])
    with pytest.raises(DomainError):
        HeydeConfig([p, p], [1, 0], [1, 1])
    with pytest.raises(DomainError):
        HeydeConfig([p, p], [1], [1, 1])
    with pytest.raises(DomainError):
        symmetry_defect(HeydeConfig([p, P(1, 2, 0, 0, 0.5)], [1, 1], [1, 1]))


def test_hypothesis_flags():
    p = P(1, 1, 0, 0, 0.5)
    cfg = HeydeConfig([p, p, p], [1, 2, 1], [1, 1, 3])
    assert cfg.hypothesis_ok and cfg.hypothesis_ok_with_diagonal and cfg.nonvanishing


def test_default_grid():
    cfg = HeydeConfig([P(4, 1, 0, 0, 0.1), P(9, 9, 0, 0, 1.0)], [1, 1], [1, 1])
    grid = default_grid(cfg)
    assert len(grid) == 17
    assert grid[0] == -4.0 and grid[-1] == 4.0


seeds = st.integers(min_value=0, max_value=2**32 - 1)


@settings(max_examples=100, deadline=None)
@given(seeds, st.floats(0.2, 5.0), st.booleans())
def test_scaling_a_coefficients(seed, c, flip):
    rng = np.random.default_rng(seed)
    c = -c if flip else c
    dists = [random_interior(rng), random_gauss_z2(rng)]
    a = list(rng.uniform(0.5, 2, 2))
    b = list(rng.uniform(0.5, 2, 2) * np.where(rng.random(2) < 0.5, -1, 1))
    grid = np.linspace(-2, 2, 9)
    base = symmetry_defect(HeydeConfig(dists, a, b), grid)
    scaled = symmetry_defect(HeydeConfig(dists, [c * x for x in a], b), grid / c, grid)
    assert scaled == pytest.approx(base, rel=1e-9, abs=1e-14)


@settings(max_examples=100, deadline=None)
@given(seeds)
def test_zero_defect_by_construction(seed):
    """b in the null space of the four linear conditions
    sum sigma_j a_j b_j = sum sigma'_j a_j b_j = sum beta_j b_j = sum beta'_j b_j = 0
    makes both sides agree identically."""
    rng = np.random.default_rng(seed)
    dists = [random_interior(rng) for _ in range(5)]
    a = rng.uniform(0.5, 2, 5)
    m = np.array([
        [d.sigma * x for d, x in zip(dists, a)],
        [d.sigma_prime * x for d, x in zip(dists, a)],
        [d.beta for d in dists],
        [d.beta_prime for d in dists],
    ])
    b = null_space(m)[:, 0]
    if np.min(np.abs(b)) < 1e-6:
        return
    cfg = HeydeConfig(dists, list(a), list(b / np.max(np.abs(b))))
    assert symmetry_defect(cfg) <= 1e-12
