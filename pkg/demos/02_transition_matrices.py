"""
Changing basis
==============

Every h^[d] transition matrix factors through power sums.  Here we compare
the factored form with direct polynomial expansion and look at the Schur
expansion of h_n^[d].
"""

from truncsym import SymFunc, bases, petrie
from truncsym.bases import HD, P, S, convert

n, d = 4, 2

# M(h^[d], p): diagonal scaling of the transpose of M(p, m)
Tp = bases.transition_hd(n, d, P)
print(Tp.to_json())
print("rank", bases.rank(Tp), "of", len(Tp.order))

# factored M(h^[d], m) against brute force multiplication of polynomials
print(bases.transition_hd(n, d, bases.M).entries == bases.brute_hd_to_m(n, d).entries)

# h_3^[2] = s_21 - s_111
print(convert(SymFunc.element(HD(2), (3,)), S))

# coefficients of sum_n h_n^[d] in the Schur basis are -1, 0 or 1
for lam in bases.enumerate_partitions(6):
    c = petrie.petrie_coefficient_det(3, lam)
    if c:
        print(f"s_{lam}: {c:+d}  rule: {petrie.petrie_coefficient_rule(3, lam):+d}")
