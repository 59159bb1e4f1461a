"""
The involution omega and its truncated cousins
==============================================

omega^[d] scales p_lam by eps_lam * D^[d]_lam and sends e_n to h_n^[d].
"""

from truncsym import SymFunc, omega, petrie
from truncsym.bases import P

# eigenvalues on power sums
for lam in [(1, 1, 1), (2, 1), (3,)]:
    print(lam, omega.omega_d(2, SymFunc.element(P, lam)))

# e_4 is sent to h_4^[2]
print(omega.omega_d_of_e(2, 4) == petrie.hd_n(2, 4))

# omega and the generating series: sum_k (-1)^(n-k) omega(h_k^[d]) h_(n-k)^[d] = 0
print(omega.verify_main2(2, 5))

# for odd d, omega(h_lam^[d]) counts matrices with entries 0 or 1 mod d+1
print(omega.omega_of_hd(3, (2, 2)))
print(petrie.count_mod_matrices(3, (2, 2), (1, 1, 1, 1)))

# the maps commute
print(omega.verify_commutation(2, 3, 5))
