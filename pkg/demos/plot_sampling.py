"""
Exact sampling and the empirical characteristic function
========================================================

Draw t from the Gaussian marginal, then k from its conditional law given t.
The empirical characteristic function should match the analytic one to
within a few 1/sqrt(n).
"""

import numpy as np

from theta_semigroup import ThetaParams, char_fn, convolve, empirical_char_fn, sample

p = ThetaParams(2.0, 1.0, 0.3, -0.4, 0.35)
n = 100_000
s = sample(p, n, seed=0)
print("mean t:", s.t.mean(), "expected", p.beta)
print("var t:", s.t.var(), "expected", 2 * p.sigma)
print("P(k=1):", s.k.mean(), "expected", (1 - p.kappa) / 2)

grid = np.array([0.1, 0.5, 1.0, 2.0])
for l in (0, 1):
    dev = np.abs(empirical_char_fn(s, grid, l) - char_fn(p, grid, l))
    print(f"l={l} max deviation {dev.max():.4f}  (1/sqrt(n) = {1 / np.sqrt(n):.4f})")

###############################################################################
# Sums of independent samples follow the convolution.

q = ThetaParams(1.0, 1.0, 1.0, 1.0, -0.6)
both = sample(p, n, seed=1) + sample(q, n, seed=2)
pq = convolve(p, q)
dev = np.abs(empirical_char_fn(both, grid, 1) - char_fn(pq, grid, 1))
print("convolution, l=1 max deviation:", dev.max())
