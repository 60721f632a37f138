"""
Which parameter tuples are distributions
========================================

A tuple (sigma, sigma', beta, beta', kappa) fixes a characteristic function
on R x Z(2).  It is a probability distribution only when |kappa| stays under
a bound that depends on the other four numbers.  This walks through the
classes and checks one decision against the numerical oracle.
"""

import numpy as np

from theta_semigroup import ThetaParams, boundary_bound, classify, density, verify_measure_grid

# the bound for sigma = 2, sigma' = 1, centred
p = ThetaParams(2.0, 1.0, 0.0, 0.0, 0.5)
print("bound:", boundary_bound(p))

###############################################################################
# Move kappa across the bound and watch the class change.

for kappa in (0.0, 0.3, 0.5, boundary_bound(p), 0.8):
    q = ThetaParams(2.0, 1.0, 0.0, 0.0, kappa)
    print(f"kappa = {kappa:.6f}  ->  {classify(q).value}")

###############################################################################
# On the boundary the k = 1 density touches zero at a single point; past it
# the density goes negative there.

on = ThetaParams.at_boundary(2.0, 1.0)
t = np.linspace(-1, 1, 5)
print("boundary density, k=1:", density(on, t, 1))

report = verify_measure_grid(ThetaParams(2.0, 1.0, 0.0, 0.0, 0.8))
print("oracle min slack:", report.min_slack, "at t =", report.argmin_t, "->", report.verdict)

###############################################################################
# Equal variances: kappa is free in [-1, 1] but the shifts must agree.

print(classify(ThetaParams(1.0, 1.0, 0.5, 0.5, -0.9)).value)
print(classify(ThetaParams(1.0, 1.0, 0.5, 0.7, -0.9)).value)
