"""Truncated homogeneous (Petrie) symmetric functions h^[d].

Includes the two matrix-counting interpretations (entries bounded by d, and
entries congruent to 0 or 1 mod d+1) and the Schur coefficients s^F_lambda
of the generating series sum_n h_n^[d].
"""

from __future__ import annotations

from fractions import Fraction
from functools import cache
from typing import Callable

from . import polyring
from .bases import (
    M,
    P,
    S,
    SymFunc,
    determinant,
    hd_lambda_monomial_coeffs,
    matrix_p_to_m,
)
from .partition import (
    Partition,
    TruncationLike,
    conjugate,
    d_coefficient,
    enumerate_partitions,
    truncation,
    z,
)

BOUNDED = "bounded"
CONGRUENT = "congruent"


def hd_n(d: TruncationLike, n: int) -> SymFunc:
    """h_n^[d] in the m-basis: the sum of m_lambda over lambda |- n with lambda_1 <= d.

    The table is also read off the degree-n slice of the generating product
    and the two must agree.
    """
    d = truncation(d)
    direct = {lam: 1 for lam in enumerate_partitions(n) if not lam or d.is_infinite or lam[0] <= d.value}
    gen = polyring.product_generating(d, max(n, 1), n)
    sliced = polyring.extract_monomial_coeffs(gen, n)
    if sliced != direct:
        raise AssertionError(f"h_{n}^[{d}] disagrees between enumeration and generating product")
    return SymFunc(M, n, direct)


def hd_lambda(d: TruncationLike, lam) -> SymFunc:
    """h_lam^[d] in the m-basis, multiplied out in |lam| variables."""
    lam = Partition(lam)
    return SymFunc(M, sum(lam), hd_lambda_monomial_coeffs(d, lam))


def hd_via_p(d: TruncationLike, lam) -> SymFunc:
    """h_lam^[d] = sum_mu z_mu^-1 D^[d]_mu R_{mu,lam} p_mu."""
    d = truncation(d)
    lam = Partition(lam)
    n = sum(lam)
    R = matrix_p_to_m(n)
    return SymFunc(P, n, {mu: Fraction(d_coefficient(mu, d), z(mu)) * R[mu, lam] for mu in enumerate_partitions(n)})


def _count_matrices(rows: tuple[int, ...], cols: tuple[int, ...], allowed: Callable[[int], bool]) -> int:
    """Number of nonnegative integer matrices with the given margins whose
    entries all satisfy ``allowed``."""
    if sum(rows) != sum(cols):
        return 0
    ncols = len(cols)

    @cache
    def fill_rows(i: int, residual: tuple[int, ...]) -> int:
        if i == len(rows):
            return int(not any(residual))
        total = 0
        for new in _fill_row(rows[i], residual):
            total += fill_rows(i + 1, tuple(sorted(new, reverse=True)))
        return total

    def _fill_row(target: int, residual: tuple[int, ...]):
        out = list(residual)

        def rec(j: int, left: int):
            if j == ncols:
                if left == 0:
                    yield tuple(out)
                return
            # remaining cells cannot absorb what is left of the row
            if left > sum(residual[j:]):
                return
            for v in range(min(left, residual[j]) + 1):
                if allowed(v):
                    out[j] = residual[j] - v
                    yield from rec(j + 1, left - v)
            out[j] = residual[j]

        yield from rec(0, target)

    return fill_rows(0, tuple(sorted(cols, reverse=True)))


def count_bounded_matrices(d: TruncationLike, lam, mu) -> int:
    """M^[d]_{lam,mu}: matrices with entries in [0, d], row sums lam, column sums mu."""
    d = truncation(d)
    lam, mu = Partition(lam), Partition(mu)
    if d.is_infinite:
        return _count_matrices(tuple(lam), tuple(mu), lambda v: True)
    return _count_matrices(tuple(lam), tuple(mu), lambda v: v <= d.value)


def count_mod_matrices(d: TruncationLike, lam, mu) -> int:
    """N^[d]_{lam,mu}: nonnegative matrices with entries = 0 or 1 mod (d+1)."""
    d = truncation(d)
    if d.is_infinite:
        raise ValueError("congruence counting needs a finite d")
    m = d.value + 1
    return _count_matrices(tuple(Partition(lam)), tuple(Partition(mu)), lambda v: v % m in (0, 1))


def count_matrices(d: TruncationLike, row, col, mode: str = BOUNDED) -> int:
    if mode == BOUNDED:
        return count_bounded_matrices(d, row, col)
    if mode == CONGRUENT:
        return count_mod_matrices(d, row, col)
    raise ValueError(f"unknown mode {mode!r}")


def _finite(d: TruncationLike) -> int:
    d = truncation(d)
    if d.is_infinite:
        raise ValueError("Petrie coefficients need a finite d")
    return d.value


def petrie_coefficient_det(d: TruncationLike, lam) -> int:
    """s^F_lam = det(f_{lam_i - i + j}) with f_k = 1 for 0 <= k <= d and 0 otherwise."""
    d = _finite(d)
    lam = Partition(lam)
    k = len(lam)

    def f(i: int) -> int:
        return int(0 <= i <= d)

    value = determinant([[f(lam[i] - i + j) for j in range(k)] for i in range(k)])
    if value not in (-1, 0, 1):
        raise AssertionError(f"Petrie coefficient {value} of {lam} at d={d} is not in {{-1,0,1}}")
    return int(value)


def petrie_coefficient_rule(d: TruncationLike, lam) -> int:
    """s^F_lam from the residues of lam' + delta_d modulo d+1.

    Returns 0 when lam_1 > d or the residues collide.  Otherwise the residues
    are a rearrangement sigma of (d, d-1, ..., 0) with one value r missing and
    the coefficient is (-1)^|lam| (-1)^(d+r) sign(sigma).
    """
    d = _finite(d)
    lam = Partition(lam)
    if lam and lam[0] > d:
        return 0
    lc = tuple(conjugate(lam)) + (0,) * (d - lam[0] if lam else d)
    residues = [(lc[i] + d - 1 - i) % (d + 1) for i in range(d)]
    if len(set(residues)) < d:
        return 0
    (r,) = set(range(d + 1)) - set(residues)
    # sign of the permutation sorting the residues into decreasing order
    inversions = sum(1 for i in range(d) for j in range(i + 1, d) if residues[i] < residues[j])
    sign = -1 if inversions % 2 else 1
    return (-1) ** (sum(lam) % 2) * (-1) ** ((d + r) % 2) * sign


def petrie_schur_expansion(d: TruncationLike, n: int) -> SymFunc:
    """Degree-n part of sum_lam s^F_lam s_lam, from the determinants."""
    return SymFunc(S, n, {lam: petrie_coefficient_det(d, lam) for lam in enumerate_partitions(n)})


def verify_kernel(d: TruncationLike, vx: int, vy: int, cap: int) -> bool:
    """Check prod_{i,j}(1 + x_i y_j + ... + (x_i y_j)^d) against
    sum_lam h^[d]_lam(x) m_lam(y) and sum_lam h^[d]_lam(y) m_lam(x)
    on every bidegree (k, k) with k <= cap."""
    d = truncation(d)
    v = vx + vy
    top = 2 * cap
    width = d.bound(cap)

    lhs = polyring.SparsePoly.constant(v, top)
    for i in range(vx):
        for j in range(vy):
            terms = {}
            for a in range(width + 1):
                exp = [0] * v
                exp[i] = exp[vx + j] = a
                terms[tuple(exp)] = 1
            lhs = polyring.mul_truncated(lhs, polyring.SparsePoly(v, top, terms), top)

    def hd_poly(lam: Partition, nv: int) -> polyring.SparsePoly:
        gen = polyring.product_generating(d, nv, cap)
        slices = [gen.homogeneous_part(k) for k in range(cap + 1)]
        return polyring.product((slices[k] for k in lam), nv, cap)

    def kernel_sum(h_first: bool) -> polyring.SparsePoly:
        out = polyring.SparsePoly(v, top)
        for n in range(cap + 1):
            for lam in enumerate_partitions(n):
                if h_first:
                    a = hd_poly(lam, vx).embed(v, 0, top)
                    b = polyring.monomial_symmetric(lam, vy, cap).embed(v, vx, top)
                else:
                    a = polyring.monomial_symmetric(lam, vx, cap).embed(v, 0, top)
                    b = hd_poly(lam, vy).embed(v, vx, top)
                out = out + polyring.mul_truncated(a, b, top)
        return out

    def bidiagonal(p: polyring.SparsePoly) -> dict:
        return {e: c for e, c in p.terms.items() if sum(e[:vx]) == sum(e[vx:]) <= cap}

    target = bidiagonal(lhs)
    return target == bidiagonal(kernel_sum(True)) and target == bidiagonal(kernel_sum(False))
