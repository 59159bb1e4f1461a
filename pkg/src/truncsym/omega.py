"""The involution omega and the endomorphisms omega^[d] (e_n -> h_n^[d]).

Both act diagonally on power sums: omega(p_lam) = eps_lam p_lam and
omega^[d](p_lam) = eps_lam D^[d]_lam p_lam.
"""

from __future__ import annotations

from .bases import E, HD, M, P, SymFunc, convert, sym_product
from .partition import (
    Partition,
    TruncationLike,
    d_coefficient,
    enumerate_partitions,
    epsilon,
    truncation,
)
from .petrie import hd_n


def _diagonal_on_p(f: SymFunc, eigenvalue) -> SymFunc:
    fp = convert(f, P)
    scaled = SymFunc(P, f.degree, {lam: eigenvalue(lam) * c for lam, c in fp.coeffs.items()})
    return convert(scaled, f.basis)


def omega(f: SymFunc) -> SymFunc:
    return _diagonal_on_p(f, epsilon)


def omega_d(d: TruncationLike, f: SymFunc) -> SymFunc:
    d = truncation(d)
    return _diagonal_on_p(f, lambda lam: epsilon(lam) * d_coefficient(lam, d))


def verify_main2(d: TruncationLike, n_max: int) -> bool:
    """Check omega(H^[d](t)) H^[d](-t) = 1 degree by degree:
    sum_k (-1)^(n-k) omega(h_k^[d]) h_{n-k}^[d] vanishes for 1 <= n <= n_max.
    Products are multiplied out as polynomials."""
    d = truncation(d)
    if d.is_infinite:
        raise ValueError("verify_main2 needs a finite d")
    for n in range(n_max + 1):
        total = SymFunc(M, n)
        for k in range(n + 1):
            term = sym_product(omega(hd_n(d, k)), hd_n(d, n - k))
            total = total + (term if (n - k) % 2 == 0 else -term)
        expected = SymFunc(M, 0, {Partition(()): 1}) if n == 0 else SymFunc(M, n)
        if total != expected:
            return False
    return True


def verify_commutation(d: TruncationLike, dp: TruncationLike, n_max: int) -> bool:
    """omega^[d] omega^[d'] = omega^[d'] omega^[d] on every p_lam with |lam| <= n_max."""
    for n in range(n_max + 1):
        for lam in enumerate_partitions(n):
            p = SymFunc.element(P, lam)
            if omega_d(d, omega_d(dp, p)) != omega_d(dp, omega_d(d, p)):
                return False
    return True


def omega_of_hd(d: TruncationLike, lam) -> SymFunc:
    """omega(h_lam^[d]) in the m-basis; for odd d its coefficients count
    matrices with entries congruent to 0 or 1 mod d+1."""
    d = truncation(d)
    if d.is_infinite or d.value % 2 == 0:
        raise ValueError(f"omega_of_hd needs an odd finite d, got {d}")
    return convert(omega(SymFunc.element(HD(d), lam)), M)


def omega_d_of_e(d: TruncationLike, n: int) -> SymFunc:
    """omega^[d](e_n) in the m-basis; equals h_n^[d]."""
    return convert(omega_d(d, SymFunc.element(E, (n,) if n else ())), M)
