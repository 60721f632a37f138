"""
Factoring interior distributions
================================

Boundary tuples are indecomposable.  Anything strictly inside the bound
splits off a Gaussian, and the split can be repeated to get as many
indecomposable factors as wanted.
"""

from theta_semigroup import (
    ThetaParams,
    classify,
    factor_chain,
    lambda_pi_decomposition,
    max_gaussian_factor,
    nth_root,
    NotInfinitelyDivisible,
)

mu = ThetaParams(2.0, 1.0, 0.0, 0.0, 0.5)

###############################################################################
# Largest Gaussian factor.  For this tuple a = 2/3.

f = max_gaussian_factor(mu)
print("a =", f.gaussian.a)
print("nu =", f.factors[0].as_tuple(), classify(f.factors[0]).value)
print("reconvolved:", f.reconvolve().as_tuple())

###############################################################################
# Five indecomposable factors and a leftover Gaussian.

chain = factor_chain(mu, 5)
for nu in chain.factors:
    print(f"  {nu.sigma:.6f} {nu.sigma_prime:.6f}  {classify(nu).value}")
print("gaussian a =", chain.gaussian.a)

###############################################################################
# Or one boundary factor times a distribution on Z(2).

lp = lambda_pi_decomposition(mu)
print("Z(2) masses:", lp.z2.mass0, lp.z2.mass1)

###############################################################################
# None of this is infinitely divisible; the error names the first order
# for which no root exists.

try:
    nth_root(mu, 4)
except NotInfinitelyDivisible as exc:
    print(exc)

root, x = nth_root(ThetaParams(1.0, 1.0, 0.0, 0.0, -0.25), 2)
print("square root:", root.as_tuple(), "shift:", x)
