"""
Conditional symmetry of linear forms
====================================

For independent xi_j with distributions in the class, L2 given L1 is
symmetric exactly when the characteristic functions satisfy a two-variable
identity.  The checker reports the largest violation on a grid.
"""

from theta_semigroup import HeydeConfig, ThetaParams, symmetry_defect

p = ThetaParams(2.0, 1.0, 0.0, 0.0, 0.5)
sym = HeydeConfig([p, p], [1.0, 1.0], [1.0, -1.0])
print("identical summands:", symmetry_defect(sym))

# perturb one variance by 10%
bent = HeydeConfig([ThetaParams(2.2, 1.0, 0.0, 0.0, 0.5), p], [1.0, 1.0], [1.0, -1.0])
print("perturbed:", symmetry_defect(bent))

# b_1/a_1 + b_2/a_2 = 0 here, which the pairwise ratio condition excludes
print("hypothesis (i != j):", sym.hypothesis_ok, " with diagonal:", sym.hypothesis_ok_with_diagonal)
