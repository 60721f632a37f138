"""Characteristic-function test for a symmetric conditional distribution.

For independent xi_j with distributions mu_j and automorphisms acting as
(t, k) -> (c t, k), the conditional distribution of L2 = sum b_j xi_j given
L1 = sum a_j xi_j is symmetric iff (L1, L2) and (L1, -L2) are equal in law,
i.e. iff

    prod_j f_j(a_j s1 + b_j s2, l)  ==  prod_j f_j(a_j s1 - b_j s2, l)

for every s1, s2 and l = l1 + l2 mod 2.  :func:`symmetry_defect` reports the
largest violation of that identity on a grid; it says nothing about the
converse characterization.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .core import ThetaParams, char_fn, classify
from .errors import DomainError

__all__ = ["HeydeConfig", "default_grid", "symmetry_defect"]


@dataclass(frozen=True)
class HeydeConfig:
    dists: tuple[ThetaParams, ...]
    a_coeffs: tuple[float, ...]
    b_coeffs: tuple[float, ...]

    def __post_init__(self):
        object.__setattr__(self, "dists", tuple(self.dists))
        object.__setattr__(self, "a_coeffs", tuple(float(x) for x in self.a_coeffs))
        object.__setattr__(self, "b_coeffs", tuple(float(x) for x in self.b_coeffs))
        n = len(self.dists)
        if n < 2:
            raise DomainError("need at least two distributions")
        if len(self.a_coeffs) != n or len(self.b_coeffs) != n:
            raise DomainError("coefficient lists must match the number of distributions")
        if any(c == 0 for c in self.a_coeffs + self.b_coeffs):
            raise DomainError("automorphism coefficients must be nonzero")

    def _ratios(self):
        return [b / a for a, b in zip(self.a_coeffs, self.b_coeffs)]

    @property
    def hypothesis_ok(self) -> bool:
        """b_i/a_i + b_j/a_j != 0 for all pairs i != j."""
        r = self._ratios()
        return all(r[i] + r[j] != 0 for i in range(len(r)) for j in range(i + 1, len(r)))

    @property
    def hypothesis_ok_with_diagonal(self) -> bool:
        """Same condition read with i = j allowed as well."""
        return self.hypothesis_ok and all(x != 0 for x in self._ratios())

    @property
    def nonvanishing(self) -> bool:
        return all(p.kappa_sign != 0 for p in self.dists)


def default_grid(cfg: HeydeConfig, points: int = 17) -> np.ndarray:
    """``points`` equispaced values in [-4/sqrt(m), 4/sqrt(m)], m the smallest
    positive variance parameter among the distributions."""
    positive = [x for p in cfg.dists for x in (p.sigma, p.sigma_prime) if x > 0]
    half = 4.0 / math.sqrt(min(positive)) if positive else 4.0
    return np.linspace(-half, half, points)


def symmetry_defect(
    cfg: HeydeConfig,
    s_grid: Optional[Sequence[float]] = None,
    s2_grid: Optional[Sequence[float]] = None,
) -> float:
    """max |LHS - RHS| over s1 in ``s_grid``, s2 in ``s2_grid`` (defaults to
    ``s_grid``) and l in {0, 1}."""
    for p in cfg.dists:
        if not classify(p).is_valid:
            raise DomainError(f"invalid distribution in configuration: {p}")
    s1 = default_grid(cfg) if s_grid is None else np.asarray(s_grid, dtype=float)
    s2 = s1 if s2_grid is None else np.asarray(s2_grid, dtype=float)
    S1, S2 = np.meshgrid(s1, s2, indexing="ij")
    defect = 0.0
    for l in (0, 1):
        lhs = np.ones_like(S1, dtype=complex)
        rhs = np.ones_like(S1, dtype=complex)
        for p, a, b in zip(cfg.dists, cfg.a_coeffs, cfg.b_coeffs):
            lhs *= char_fn(p, a * S1 + b * S2, l)
            rhs *= char_fn(p, a * S1 - b * S2, l)
        defect = max(defect, float(np.abs(lhs - rhs).max()))
    return defect
