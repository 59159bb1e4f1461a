"""Sparse multivariate polynomials over Q with a total-degree cap.

This is the brute-force layer: every generating-function identity is checked
by literally multiplying out finitely many variables.
"""

from __future__ import annotations

from collections import defaultdict
from fractions import Fraction
from math import factorial, prod
from typing import Iterable, Mapping

from .partition import (
    Partition,
    TruncationLike,
    distinct_permutations,
    enumerate_partitions,
    epsilon,
    truncation,
    z,
)

Exponent = tuple[int, ...]


class SparsePoly:
    """Polynomial in ``num_vars`` variables, terms of total degree above
    ``degree_cap`` are dropped on construction."""

    __slots__ = ("num_vars", "degree_cap", "terms")

    def __init__(self, num_vars: int, degree_cap: int, terms: Mapping[Exponent, object] | None = None):
        if num_vars < 1:
            raise ValueError("num_vars must be positive")
        if degree_cap < 0:
            raise ValueError("degree_cap must be nonnegative")
        self.num_vars = num_vars
        self.degree_cap = degree_cap
        clean: dict[Exponent, Fraction] = {}
        for exp, c in (terms or {}).items():
            exp = tuple(exp)
            if len(exp) != num_vars:
                raise ValueError(f"exponent {exp} has wrong length for {num_vars} variables")
            if sum(exp) > degree_cap:
                continue
            c = Fraction(c)
            if c:
                clean[exp] = c
        self.terms = clean

    # constructors

    @classmethod
    def constant(cls, num_vars: int, degree_cap: int, c=1) -> "SparsePoly":
        return cls(num_vars, degree_cap, {(0,) * num_vars: c})

    @classmethod
    def variable(cls, num_vars: int, degree_cap: int, i: int) -> "SparsePoly":
        exp = [0] * num_vars
        exp[i] = 1
        return cls(num_vars, degree_cap, {tuple(exp): 1})

    # arithmetic

    def _check(self, other: "SparsePoly"):
        if self.num_vars != other.num_vars:
            raise ValueError(f"variable-count mismatch: {self.num_vars} vs {other.num_vars}")

    def __add__(self, other: "SparsePoly") -> "SparsePoly":
        self._check(other)
        cap = min(self.degree_cap, other.degree_cap)
        out = defaultdict(Fraction, self.terms)
        for exp, c in other.terms.items():
            out[exp] += c
        return SparsePoly(self.num_vars, cap, out)

    def __neg__(self) -> "SparsePoly":
        return SparsePoly(self.num_vars, self.degree_cap, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "SparsePoly") -> "SparsePoly":
        return self + (-other)

    def scale(self, c) -> "SparsePoly":
        c = Fraction(c)
        return SparsePoly(self.num_vars, self.degree_cap, {e: c * v for e, v in self.terms.items()})

    def __mul__(self, other: "SparsePoly") -> "SparsePoly":
        return mul_truncated(self, other, min(self.degree_cap, other.degree_cap))

    def __eq__(self, other) -> bool:
        if not isinstance(other, SparsePoly):
            return NotImplemented
        return self.num_vars == other.num_vars and self.terms == other.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __repr__(self) -> str:
        if not self.terms:
            return "SparsePoly(0)"
        return "SparsePoly(" + " + ".join(f"{c}*x^{e}" for e, c in self.items()) + ")"

    # structure

    def items(self) -> list[tuple[Exponent, Fraction]]:
        """Terms in graded lexicographic order (degree first, then lex descending)."""
        return sorted(self.terms.items(), key=lambda t: (sum(t[0]), tuple(-a for a in t[0])))

    def homogeneous_part(self, n: int) -> "SparsePoly":
        return SparsePoly(self.num_vars, self.degree_cap, {e: c for e, c in self.terms.items() if sum(e) == n})

    def truncate(self, cap: int) -> "SparsePoly":
        return SparsePoly(self.num_vars, cap, self.terms)

    def embed(self, num_vars: int, offset: int, degree_cap: int | None = None) -> "SparsePoly":
        """Rename variable i to i+offset inside a ring with ``num_vars`` variables."""
        if offset + self.num_vars > num_vars:
            raise ValueError("embedding does not fit")
        cap = self.degree_cap if degree_cap is None else degree_cap
        pad_l, pad_r = (0,) * offset, (0,) * (num_vars - offset - self.num_vars)
        return SparsePoly(num_vars, cap, {pad_l + e + pad_r: c for e, c in self.terms.items()})

    def is_symmetric(self) -> bool:
        groups: dict[Exponent, list[Fraction]] = defaultdict(list)
        for exp, c in self.terms.items():
            groups[tuple(sorted(exp, reverse=True))].append(c)
        for key, coeffs in groups.items():
            if len(coeffs) != _orbit_size(key) or len(set(coeffs)) != 1:
                return False
        return True


def _orbit_size(exp: Exponent) -> int:
    counts: dict[int, int] = defaultdict(int)
    for a in exp:
        counts[a] += 1
    return factorial(len(exp)) // prod(factorial(m) for m in counts.values())


def mul_truncated(a: SparsePoly, b: SparsePoly, cap: int) -> SparsePoly:
    """Product of ``a`` and ``b`` with every term of total degree > ``cap`` dropped."""
    a._check(b)
    out: dict[Exponent, Fraction] = defaultdict(Fraction)
    bt = [(e, sum(e), c) for e, c in b.terms.items()]
    for ea, ca in a.terms.items():
        da = sum(ea)
        if da > cap:
            continue
        for eb, db, cb in bt:
            if da + db <= cap:
                out[tuple(x + y for x, y in zip(ea, eb))] += ca * cb
    return SparsePoly(a.num_vars, cap, out)


def product(polys: Iterable[SparsePoly], num_vars: int, cap: int) -> SparsePoly:
    acc = SparsePoly.constant(num_vars, cap)
    for p in polys:
        acc = mul_truncated(acc, p, cap)
    return acc


def product_generating(d: TruncationLike, v: int, cap: int) -> SparsePoly:
    """prod_{k<=v} (1 + x_k + ... + x_k^min(d,cap)) truncated at total degree ``cap``.

    The degree-n slice is h_n^[d](x_1, ..., x_v).
    """
    if v < 1 or cap < 0:
        raise ValueError("need v >= 1 and cap >= 0")
    top = truncation(d).bound(cap)
    factors = []
    for k in range(v):
        terms = {}
        for a in range(top + 1):
            exp = [0] * v
            exp[k] = a
            terms[tuple(exp)] = 1
        factors.append(SparsePoly(v, cap, terms))
    return product(factors, v, cap)


def monomial_symmetric(lam: Partition, v: int, cap: int | None = None) -> SparsePoly:
    """m_lam(x_1, ..., x_v); zero when lam has more than v parts."""
    cap = sum(lam) if cap is None else cap
    if len(lam) > v:
        return SparsePoly(v, cap)
    padded = tuple(lam) + (0,) * (v - len(lam))
    return SparsePoly(v, cap, {e: 1 for e in distinct_permutations(padded)})


def power_sum(k: int, v: int, cap: int) -> SparsePoly:
    terms = {}
    for i in range(v):
        exp = [0] * v
        exp[i] = k
        terms[tuple(exp)] = 1
    return SparsePoly(v, cap, terms)


def power_sum_lambda(lam: Partition, v: int, cap: int) -> SparsePoly:
    return product((power_sum(k, v, cap) for k in lam), v, cap)


def extract_monomial_coeffs(p: SparsePoly, n: int) -> dict[Partition, Fraction]:
    """m-basis coefficients of the degree-``n`` slice of a symmetric polynomial."""
    if n > p.degree_cap:
        raise ValueError(f"degree {n} exceeds the cap {p.degree_cap}")
    if p.num_vars < n:
        raise ValueError(f"{p.num_vars} variables cannot represent degree {n} faithfully")
    slice_ = p.homogeneous_part(n)
    if not slice_.is_symmetric():
        raise ValueError("polynomial is not symmetric")
    out = {}
    for lam in enumerate_partitions(n):
        exp = tuple(lam) + (0,) * (p.num_vars - len(lam))
        c = slice_.terms.get(exp)
        if c:
            out[lam] = c
    return out


def verify_triple_product(vx: int, vy: int, vz: int, cap: int) -> bool:
    """Check prod_{i,j,k}(1 + x_i y_j z_k) = sum_lam eps z^-1 p_lam(x) p_lam(y) p_lam(z)
    on all terms whose x-, y- and z-degrees are equal and at most ``cap``."""
    v = vx + vy + vz
    top = 3 * cap
    lhs = SparsePoly.constant(v, top)
    for i in range(vx):
        for j in range(vy):
            for k in range(vz):
                exp = [0] * v
                exp[i] = exp[vx + j] = exp[vx + vy + k] = 1
                factor = SparsePoly(v, top, {(0,) * v: 1, tuple(exp): 1})
                lhs = mul_truncated(lhs, factor, top)

    rhs = SparsePoly(v, top)
    for n in range(cap + 1):
        for lam in enumerate_partitions(n):
            px = power_sum_lambda(lam, vx, n).embed(v, 0, top)
            py = power_sum_lambda(lam, vy, n).embed(v, vx, top)
            pz = power_sum_lambda(lam, vz, n).embed(v, vx + vy, top)
            term = mul_truncated(mul_truncated(px, py, top), pz, top)
            rhs = rhs + term.scale(Fraction(epsilon(lam), z(lam)))

    def keep(exp: Exponent) -> bool:
        dx, dy, dz = sum(exp[:vx]), sum(exp[vx:vx + vy]), sum(exp[vx + vy:])
        return dx == dy == dz <= cap

    lhs_terms = {e: c for e, c in lhs.terms.items() if keep(e)}
    rhs_terms = {e: c for e, c in rhs.terms.items() if keep(e)}
    return lhs_terms == rhs_terms
