"""
Evaluating at roots of unity
============================

With xi a primitive (d+1)-th root of unity, symmetric functions evaluated at
(xi, xi^2, ..., xi^d) are computed exactly in the cyclotomic field.
"""

from truncsym import CycNum
from truncsym import cyclotomic, petrie
from truncsym.partition import conjugate, enumerate_partitions

print(cyclotomic.cyclotomic_polynomial(12))

# xi^3 = 1 in Q(xi), xi of order 3
xi = CycNum.root(3)
print(xi, xi**2, xi**3, 1 + xi + xi**2)

# power sums: d when (d+1) | n, -1 otherwise
d = 4
print([str(cyclotomic.power_sum_at_roots(d, n).to_fraction()) for n in range(1, 11)])

# Schur functions at the roots give back the Petrie coefficients up to sign
d = 2
for lam in enumerate_partitions(4):
    s = cyclotomic.schur_at_roots(d, conjugate(lam)) * (-1) ** sum(lam)
    print(lam, s.to_fraction(), petrie.petrie_coefficient_det(d, lam))

# both sides of the refinement identity for mu = (1^6), d = 2, d' = 3
print(cyclotomic.identity_sides(2, 3, (1,) * 6))
