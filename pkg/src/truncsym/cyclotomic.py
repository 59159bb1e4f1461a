"""Exact arithmetic in Q(xi), xi a primitive m-th root of unity, and evaluation
of symmetric functions at the point (xi, xi^2, ..., xi^d) with m = d+1.

Elements are stored in the power basis 1, X, ..., X^(phi(m)-1) of
Q[X]/(Phi_m).  Nothing is ever evaluated in floating point.
"""

from __future__ import annotations

import itertools
from collections import Counter
from fractions import Fraction
from functools import cache
from math import lcm
from typing import Sequence, Union

from .partition import Partition, distinct_permutations, enumerate_partitions, refinement_tuples

Rational = Union[int, Fraction]


def _poly_divmod(num: list[int], den: list[int]) -> tuple[list[int], list[int]]:
    """Exact division of integer polynomials (low-to-high coefficients), ``den`` monic."""
    num = list(num)
    q = [0] * max(len(num) - len(den) + 1, 1)
    for k in range(len(num) - len(den), -1, -1):
        c = num[k + len(den) - 1]
        if c:
            q[k] = c
            for i, b in enumerate(den):
                num[k + i] -= c * b
    return q, num[: len(den) - 1]


@cache
def cyclotomic_polynomial(m: int) -> tuple[int, ...]:
    """Coefficients of Phi_m, lowest degree first.

    >>> cyclotomic_polynomial(6)
    (1, -1, 1)
    """
    if m < 1:
        raise ValueError("order must be positive")
    poly = [-1] + [0] * (m - 1) + [1]
    for k in range(1, m):
        if m % k == 0:
            poly, rem = _poly_divmod(poly, list(cyclotomic_polynomial(k)))
            if any(rem):
                raise AssertionError(f"Phi_{k} does not divide X^{m}-1")
    while len(poly) > 1 and poly[-1] == 0:
        poly.pop()
    return tuple(poly)


def _reduce(coeffs: list, m: int) -> tuple[Fraction, ...]:
    phi = cyclotomic_polynomial(m)
    deg = len(phi) - 1
    a = [Fraction(c) for c in coeffs] + [Fraction(0)] * max(0, deg - len(coeffs))
    for k in range(len(a) - 1, deg - 1, -1):
        c = a[k]
        if c:
            for i, b in enumerate(phi):
                a[k - deg + i] -= c * b
    return tuple(a[:deg])


class CycNum:
    """Element of Q(xi) for xi a primitive ``order``-th root of unity."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs: Sequence[Rational] = ()):
        if order < 2:
            raise ValueError("order must be at least 2")
        self.order = order
        self.coeffs = _reduce(list(coeffs), order)

    @classmethod
    def rational(cls, order: int, q: Rational) -> "CycNum":
        return cls(order, [q])

    @classmethod
    def root(cls, order: int, k: int = 1) -> "CycNum":
        """xi^k."""
        k %= order
        return cls(order, [0] * k + [1])

    @classmethod
    def from_power_counts(cls, order: int, counts: dict[int, Rational]) -> "CycNum":
        """sum_k counts[k] * xi^k, exponents taken mod ``order``."""
        vec = [Fraction(0)] * order
        for k, c in counts.items():
            vec[k % order] += c
        return cls(order, vec)

    def _coerce(self, other) -> "CycNum":
        if isinstance(other, CycNum):
            if other.order != self.order:
                raise ValueError(f"modulus mismatch: {self.order} vs {other.order}")
            return other
        if isinstance(other, (int, Fraction)):
            return CycNum.rational(self.order, other)
        return NotImplemented

    def __add__(self, other) -> "CycNum":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CycNum(self.order, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __neg__(self) -> "CycNum":
        return CycNum(self.order, [-a for a in self.coeffs])

    def __sub__(self, other) -> "CycNum":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> "CycNum":
        return (-self) + other

    def __mul__(self, other) -> "CycNum":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        prod = [Fraction(0)] * (2 * len(self.coeffs))
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        prod[i + j] += a * b
        return CycNum(self.order, prod)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "CycNum":
        if k < 0:
            raise ValueError("negative powers are not supported")
        out = CycNum.rational(self.order, 1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coeffs[0] == other
        if not isinstance(other, CycNum):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.order, self.coeffs))

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self!r} is not rational")
        return self.coeffs[0]

    def __repr__(self) -> str:
        parts = [f"{c}*xi^{k}" for k, c in enumerate(self.coeffs) if c]
        return f"CycNum({self.order}: {' + '.join(parts) or '0'})"

    def to_json(self) -> dict:
        def fmt(q: Fraction) -> str:
            return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"

        return {"order": self.order, "coeffs": [fmt(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, data: dict) -> "CycNum":
        return cls(int(data["order"]), [Fraction(c) for c in data["coeffs"]])


def cyc_add(a: CycNum, b: CycNum) -> CycNum:
    return a + b


def cyc_mul(a: CycNum, b: CycNum) -> CycNum:
    return a * b


def cyc_pow(a: CycNum, k: int) -> CycNum:
    return a**k


# ---------------------------------------------------------------------------
# evaluation at (xi, ..., xi^d), optionally inside a larger cyclotomic field


def _field_order(d: int, order: int | None) -> int:
    if d < 1:
        raise ValueError("d must be a positive integer")
    order = d + 1 if order is None else order
    if order % (d + 1):
        raise ValueError(f"Q(zeta_{order}) does not contain a primitive {d + 1}-th root of unity")
    return order


def power_sum_at_roots(d: int, n: int, order: int | None = None) -> CycNum:
    """p_n(xi, ..., xi^d): equals d when (d+1) | n and -1 otherwise."""
    L = _field_order(d, order)
    step = L // (d + 1)
    value = CycNum.from_power_counts(L, Counter(step * k * n for k in range(1, d + 1)))
    expected = d if n % (d + 1) == 0 else -1
    if value != expected:
        raise AssertionError(f"p_{n} at the {d + 1}-th roots of unity is {value!r}, expected {expected}")
    return value


def monomial_at_roots(d: int, lam, order: int | None = None) -> CycNum:
    """m_lam(xi, ..., xi^d), summed over distinct rearrangements of the exponents."""
    L = _field_order(d, order)
    step = L // (d + 1)
    lam = Partition(lam)
    if len(lam) > d:
        return CycNum.rational(L, 0)
    padded = tuple(lam) + (0,) * (d - len(lam))
    counts: Counter = Counter()
    for alpha in distinct_permutations(padded):
        counts[step * sum(i * a for i, a in enumerate(alpha, start=1))] += 1
    return CycNum.from_power_counts(L, counts)


@cache
def complete_at_roots(d: int, k: int) -> CycNum:
    """h_k(xi, ..., xi^d) through Newton's identity k h_k = sum_i p_i h_{k-i}."""
    m = d + 1
    if k == 0:
        return CycNum.rational(m, 1)
    total = CycNum.rational(m, 0)
    for i in range(1, k + 1):
        total = total + power_sum_at_roots(d, i) * complete_at_roots(d, k - i)
    return total * Fraction(1, k)


def complete_at_roots_direct(d: int, k: int) -> CycNum:
    """h_k(xi, ..., xi^d) as the plain sum of all degree-k monomials."""
    counts: Counter = Counter()
    for combo in itertools.combinations_with_replacement(range(1, d + 1), k):
        counts[sum(combo)] += 1
    return CycNum.from_power_counts(d + 1, counts)


def schur_at_roots(d: int, lam) -> CycNum:
    """s_lam(xi, ..., xi^d) as the Jacobi-Trudi determinant det(h_{lam_i - i + j})."""
    lam = Partition(lam)
    m = d + 1
    if len(lam) > d:
        return CycNum.rational(m, 0)
    k = len(lam)

    def h(j: int) -> CycNum | None:
        return complete_at_roots(d, j) if j >= 0 else None

    mat = [[h(lam[i] - i + j) for j in range(k)] for i in range(k)]
    total = CycNum.rational(m, 0)
    for perm in itertools.permutations(range(k)):
        entries = [mat[i][perm[i]] for i in range(k)]
        if any(e is None for e in entries):
            continue
        inversions = sum(1 for a in range(k) for b in range(a + 1, k) if perm[a] > perm[b])
        term = CycNum.rational(m, -1 if inversions % 2 else 1)
        for e in entries:
            term = term * e
        total = total + term
    if total not in (-1, 0, 1):
        raise AssertionError(f"s_{lam} at the {m}-th roots of unity is {total!r}")
    return total


def identity_sides(d: int, dp: int, mu) -> tuple[CycNum, CycNum]:
    """Both sides of the refinement identity, as elements of Q(zeta_L), L = lcm(d+1, d'+1).

    Left: sum over lam |- |mu| and ordered refinements (mu^1, ...) of mu
    of m_lam(xi) prod_i m_{mu^i}(eta); right: the same with xi and eta swapped.
    """
    mu = Partition(mu)
    if len(mu) > d * dp:
        raise ValueError(f"need l(mu) <= d*d' = {d * dp}, got {len(mu)}")
    L = lcm(d + 1, dp + 1)

    def side(a: int, b: int) -> CycNum:
        total = CycNum.rational(L, 0)
        for lam in enumerate_partitions(sum(mu)):
            outer = monomial_at_roots(a, lam, L)
            if outer == 0:
                continue
            for pieces in refinement_tuples(lam, mu):
                term = outer
                for piece in pieces:
                    term = term * monomial_at_roots(b, piece, L)
                total = total + term
        return total

    return side(d, dp), side(dp, d)


def identity_check(d: int, dp: int, mu) -> bool:
    lhs, rhs = identity_sides(d, dp, mu)
    return lhs == rhs
