"""
Truncated homogeneous functions and matrix counts
=================================================

h_lam^[d] keeps only monomials with exponents at most d.  Its coefficients
in the monomial basis count integer matrices with entries in [0, d].
"""

from truncsym import Partition, enumerate_partitions
from truncsym import bases, petrie

# h_4^[2] is the sum of m_lam over partitions of 4 with no part above 2
print(petrie.hd_n(2, 4))

# the full transition matrix M(h^[2], m) for n = 4
T = bases.transition_hd(4, 2, bases.M)
print("rows/cols:", [str(lam) for lam in T.order])
for lam in T.order:
    print(f"{str(lam):>8}", [int(c) for c in T.entries[T.order.index(lam)]])

# each entry is a count of [0,2]-matrices with row sums lam and column sums mu
lam, mu = Partition((2, 1, 1)), Partition((1, 1, 1, 1))
print("count:", petrie.count_bounded_matrices(2, lam, mu), "matrix:", T[lam, mu])

# the table is symmetric
print(all(T[a, b] == T[b, a] for a in T.order for b in T.order))

# d = 1 recovers e_lam, d = inf recovers h_lam
for lam in enumerate_partitions(3):
    print(lam, petrie.hd_lambda(1, lam), "|", petrie.hd_lambda("inf", lam))
