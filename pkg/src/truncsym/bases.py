"""Classical bases of the degree-n symmetric functions and transition matrices.

Row lambda of ``M(A, B)`` is the expansion of ``A_lambda`` in the basis B, with
rows and columns in the canonical partition order.  The independent
ground truth for every basis is its expansion into monomials, computed by
brute-force polynomial multiplication (``polyring``) or tableau enumeration;
the h^[d] matrices are then built from the closed-form factorizations
R' z^-1 D R and friends, so the two can be compared.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cache
from typing import Mapping, Sequence

from . import polyring
from .partition import (
    INFINITY,
    Partition,
    Truncation,
    TruncationLike,
    d_coefficient,
    enumerate_partitions,
    epsilon,
    partition_index,
    truncation,
    z,
)

Matrix = tuple[tuple[Fraction, ...], ...]


class SingularMatrixError(ArithmeticError):
    pass


@dataclass(frozen=True)
class Basis:
    kind: str
    d: Truncation | None = None

    def __post_init__(self):
        if self.kind not in ("m", "e", "h", "p", "s", "hd"):
            raise ValueError(f"unknown basis {self.kind!r}")
        if (self.kind == "hd") != (self.d is not None):
            raise ValueError("only the hd basis carries a truncation")

    def __str__(self) -> str:
        return f"hd({self.d})" if self.kind == "hd" else self.kind

    @classmethod
    def parse(cls, text: str) -> "Basis":
        text = text.strip().lower()
        if text.startswith("hd(") and text.endswith(")"):
            return HD(text[3:-1])
        return cls(text)


M = Basis("m")
E = Basis("e")
H = Basis("h")
P = Basis("p")
S = Basis("s")
CLASSICAL = (M, E, H, P, S)


def HD(d: TruncationLike) -> Basis:
    return Basis("hd", truncation(d))


# ---------------------------------------------------------------------------
# exact matrix algebra on tuples of Fractions


def _frozen(rows) -> Matrix:
    return tuple(tuple(Fraction(x) for x in row) for row in rows)


def _identity(k: int) -> Matrix:
    return tuple(tuple(Fraction(int(i == j)) for j in range(k)) for i in range(k))


def _mat_mul(a: Matrix, b: Matrix) -> Matrix:
    if a and len(a[0]) != len(b):
        raise ValueError("shape mismatch")
    cols = list(zip(*b)) if b else []
    return tuple(tuple(sum((x * y for x, y in zip(row, col) if x and y), Fraction(0)) for col in cols) for row in a)


def _mat_transpose(a: Matrix) -> Matrix:
    return tuple(zip(*a)) if a else ()


def _row_reduce(a: Matrix, augment: Matrix | None = None):
    """Gauss-Jordan elimination, pivot = first nonzero entry in the column.

    Returns (reduced rows, augmented rows, rank).
    """
    rows = [list(r) for r in a]
    aug = [list(r) for r in augment] if augment is not None else None
    n_rows = len(rows)
    n_cols = len(rows[0]) if rows else 0
    rank = 0
    for col in range(n_cols):
        pivot = next((r for r in range(rank, n_rows) if rows[r][col] != 0), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        if aug is not None:
            aug[rank], aug[pivot] = aug[pivot], aug[rank]
        inv = 1 / rows[rank][col]
        rows[rank] = [x * inv for x in rows[rank]]
        if aug is not None:
            aug[rank] = [x * inv for x in aug[rank]]
        for r in range(n_rows):
            f = rows[r][col]
            if r != rank and f:
                rows[r] = [x - f * y for x, y in zip(rows[r], rows[rank])]
                if aug is not None:
                    aug[r] = [x - f * y for x, y in zip(aug[r], aug[rank])]
        rank += 1
    return rows, aug, rank


def _mat_inverse(a: Matrix) -> Matrix:
    k = len(a)
    _, aug, rank = _row_reduce(a, _identity(k))
    if rank < k:
        raise SingularMatrixError(f"matrix of size {k} has rank {rank}")
    return _frozen(aug)


def rank(a: Matrix | "TransitionMatrix") -> int:
    if isinstance(a, TransitionMatrix):
        a = a.entries
    return _row_reduce(a)[2]


def determinant(a: Sequence[Sequence]) -> Fraction:
    """Exact determinant by elimination over Q."""
    rows = [[Fraction(x) for x in r] for r in a]
    k = len(rows)
    det = Fraction(1)
    for col in range(k):
        pivot = next((r for r in range(col, k) if rows[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            rows[col], rows[pivot] = rows[pivot], rows[col]
            det = -det
        det *= rows[col][col]
        for r in range(col + 1, k):
            f = rows[r][col] / rows[col][col]
            if f:
                rows[r] = [x - f * y for x, y in zip(rows[r], rows[col])]
    return det


# ---------------------------------------------------------------------------


def _fmt(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


@dataclass(frozen=True)
class TransitionMatrix:
    n: int
    source: Basis | None
    target: Basis | None
    entries: Matrix

    @property
    def order(self) -> tuple[Partition, ...]:
        return enumerate_partitions(self.n)

    def __getitem__(self, key: tuple[Partition, Partition]) -> Fraction:
        lam, mu = key
        idx = partition_index(self.n)
        return self.entries[idx[Partition(lam)]][idx[Partition(mu)]]

    def row(self, lam: Partition) -> dict[Partition, Fraction]:
        r = self.entries[partition_index(self.n)[Partition(lam)]]
        return {mu: c for mu, c in zip(self.order, r) if c}

    def is_diagonal(self) -> bool:
        return all(not c for i, r in enumerate(self.entries) for j, c in enumerate(r) if i != j)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "source": str(self.source) if self.source else None,
            "target": str(self.target) if self.target else None,
            "order": [str(lam) for lam in self.order],
            "entries": [[_fmt(c) for c in r] for r in self.entries],
        }


def transpose(a: TransitionMatrix) -> TransitionMatrix:
    return TransitionMatrix(a.n, a.target, a.source, _mat_transpose(a.entries))


def inverse(a: TransitionMatrix) -> TransitionMatrix:
    return TransitionMatrix(a.n, a.target, a.source, _mat_inverse(a.entries))


def multiply(a: TransitionMatrix, b: TransitionMatrix) -> TransitionMatrix:
    if a.n != b.n:
        raise ValueError(f"degree mismatch: {a.n} vs {b.n}")
    return TransitionMatrix(a.n, a.source, b.target, _mat_mul(a.entries, b.entries))


def chain(*mats: TransitionMatrix) -> TransitionMatrix:
    out = mats[0]
    for m in mats[1:]:
        out = multiply(out, m)
    return out


def identity(n: int, basis: Basis | None = None) -> TransitionMatrix:
    return TransitionMatrix(n, basis, basis, _identity(len(enumerate_partitions(n))))


def _diagonal(n: int, values) -> TransitionMatrix:
    k = len(values)
    return TransitionMatrix(n, None, None, _frozen([[values[i] if i == j else 0 for j in range(k)] for i in range(k)]))


@cache
def diagonal_z(n: int) -> TransitionMatrix:
    return _diagonal(n, [z(lam) for lam in enumerate_partitions(n)])


@cache
def diagonal_z_inverse(n: int) -> TransitionMatrix:
    return _diagonal(n, [Fraction(1, z(lam)) for lam in enumerate_partitions(n)])


@cache
def diagonal_eps(n: int) -> TransitionMatrix:
    return _diagonal(n, [epsilon(lam) for lam in enumerate_partitions(n)])


@cache
def diagonal_D(n: int, d: TruncationLike) -> TransitionMatrix:
    d = truncation(d)
    return _diagonal(n, [d_coefficient(lam, d) for lam in enumerate_partitions(n)])


# ---------------------------------------------------------------------------
# monomial expansions of the classical bases


def _from_rows(n: int, source: Basis, rows: Sequence[Mapping[Partition, Fraction]]) -> TransitionMatrix:
    order = enumerate_partitions(n)
    return TransitionMatrix(n, source, M, _frozen([[row.get(mu, 0) for mu in order] for row in rows]))


@cache
def matrix_p_to_m(n: int) -> TransitionMatrix:
    """R = M(p, m), by expanding each p_lambda in n variables."""
    v = max(n, 1)
    rows = [polyring.extract_monomial_coeffs(polyring.power_sum_lambda(lam, v, n), n) for lam in enumerate_partitions(n)]
    return _from_rows(n, P, rows)


@cache
def _hd_slices(d: Truncation, n: int) -> tuple[polyring.SparsePoly, ...]:
    """h_k^[d](x_1..x_n) for k = 0..n as polynomials in n variables."""
    v = max(n, 1)
    gen = polyring.product_generating(d, v, n)
    return tuple(gen.homogeneous_part(k) for k in range(n + 1))


def hd_lambda_monomial_coeffs(d: TruncationLike, lam: Partition) -> dict[Partition, Fraction]:
    """Brute-force m-expansion of h_lam^[d]: multiply the slices of the generating product."""
    d = truncation(d)
    n = sum(lam)
    slices = _hd_slices(d, n)
    poly = polyring.product((slices[k] for k in lam), max(n, 1), n)
    return polyring.extract_monomial_coeffs(poly, n)


@cache
def brute_hd_to_m(n: int, d: TruncationLike) -> TransitionMatrix:
    d = truncation(d)
    rows = [hd_lambda_monomial_coeffs(d, lam) for lam in enumerate_partitions(n)]
    return _from_rows(n, HD(d), rows)


def semistandard_tableaux(shape: Partition, content: Partition):
    """Yield every SSYT of ``shape`` and ``content`` as a tuple of rows."""
    if sum(shape) != sum(content):
        return
    cells = [(i, j) for i, r in enumerate(shape) for j in range(r)]
    remaining = list(content)
    grid = [[0] * r for r in shape]

    def rec(k: int):
        if k == len(cells):
            yield tuple(tuple(r) for r in grid)
            return
        i, j = cells[k]
        lo = 1
        if j > 0:
            lo = max(lo, grid[i][j - 1])
        if i > 0:
            lo = max(lo, grid[i - 1][j] + 1)
        for v in range(lo, len(remaining) + 1):
            if remaining[v - 1]:
                remaining[v - 1] -= 1
                grid[i][j] = v
                yield from rec(k + 1)
                remaining[v - 1] += 1
        grid[i][j] = 0

    yield from rec(0)


def _jacobi_trudi_h_expansion(lam: Partition) -> dict[Partition, int]:
    """det(h_{lam_i - i + j}) expanded into products h_nu."""
    k = len(lam)
    out: dict[Partition, int] = {}
    for perm in itertools.permutations(range(k)):
        idx = [lam[i] - i + perm[i] for i in range(k)]
        if any(a < 0 for a in idx):
            continue
        inversions = sum(1 for a in range(k) for b in range(a + 1, k) if perm[a] > perm[b])
        nu = Partition.from_multiset(idx)
        out[nu] = out.get(nu, 0) + (-1) ** inversions
    return {nu: c for nu, c in out.items() if c}


@cache
def kostka_matrix(n: int) -> TransitionMatrix:
    """K = M(s, m) by SSYT enumeration, cross-checked against Jacobi-Trudi."""
    order = enumerate_partitions(n)
    rows = []
    for lam in order:
        rows.append({mu: sum(1 for _ in semistandard_tableaux(lam, mu)) for mu in order})
    K = _from_rows(n, S, rows)

    h_to_m = brute_hd_to_m(n, INFINITY)
    for lam in order:
        expected: dict[Partition, Fraction] = {}
        for nu, c in _jacobi_trudi_h_expansion(lam).items():
            for mu, v in h_to_m.row(nu).items():
                expected[mu] = expected.get(mu, 0) + c * v
        expected = {mu: v for mu, v in expected.items() if v}
        if expected != K.row(lam):
            raise AssertionError(f"Kostka row {lam} disagrees with Jacobi-Trudi: {K.row(lam)} vs {expected}")
    return K


@cache
def to_monomial(n: int, basis: Basis) -> TransitionMatrix:
    """M(basis, m)."""
    if basis == M:
        return identity(n, M)
    if basis == P:
        return matrix_p_to_m(n)
    if basis == H:
        m = brute_hd_to_m(n, INFINITY)
        return TransitionMatrix(n, H, M, m.entries)
    if basis == E:
        m = brute_hd_to_m(n, 1)
        return TransitionMatrix(n, E, M, m.entries)
    if basis == S:
        return kostka_matrix(n)
    return transition_hd(n, basis.d, M)


@cache
def transition(n: int, source: Basis, target: Basis) -> TransitionMatrix:
    """M(source, target) for any two bases, including hd(d)."""
    if source == target:
        return identity(n, source)
    if source.kind == "hd" and target.kind != "hd":
        return transition_hd(n, source.d, target)
    if target == M:
        return to_monomial(n, source)
    return multiply(to_monomial(n, source), inverse(to_monomial(n, target)))


@cache
def transition_hd(n: int, d: TruncationLike, target: Basis) -> TransitionMatrix:
    """M(h^[d], target) from the closed-form factorizations.

    With R = M(p, m), R* its transposed inverse and K = M(s, m):
    to p: R' z^-1 D;  to m: R' z^-1 D R;  to h: R' D R*;  to e: R' D eps R*;
    to s: R' z^-1 D R K^-1.
    """
    d = truncation(d)
    R = matrix_p_to_m(n)
    Rt = transpose(R)
    D = diagonal_D(n, d)
    zi = diagonal_z_inverse(n)
    if target == P:
        out = chain(Rt, zi, D)
    elif target == M:
        out = chain(Rt, zi, D, R)
    elif target == H:
        out = chain(Rt, D, transpose(inverse(R)))
    elif target == E:
        out = chain(Rt, D, diagonal_eps(n), transpose(inverse(R)))
    elif target == S:
        out = chain(Rt, zi, D, R, inverse(kostka_matrix(n)))
    elif target.kind == "hd":
        out = multiply(transition_hd(n, d, M), inverse(transition_hd(n, target.d, M)))
    else:
        raise ValueError(f"unsupported target {target}")
    return TransitionMatrix(n, HD(d), target, out.entries)


# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SymFunc:
    """Homogeneous symmetric function of degree ``degree`` in one basis."""

    basis: Basis
    degree: int
    coeffs: Mapping[Partition, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for lam, c in self.coeffs.items():
            lam = Partition(lam)
            if sum(lam) != self.degree:
                raise ValueError(f"{lam} is not a partition of {self.degree}")
            c = Fraction(c)
            if c:
                clean[lam] = c
        object.__setattr__(self, "coeffs", clean)

    @classmethod
    def element(cls, basis: Basis, lam) -> "SymFunc":
        lam = Partition(lam)
        return cls(basis, sum(lam), {lam: 1})

    @classmethod
    def from_vector(cls, basis: Basis, n: int, vec: Sequence) -> "SymFunc":
        return cls(basis, n, dict(zip(enumerate_partitions(n), vec)))

    def vector(self) -> tuple[Fraction, ...]:
        return tuple(self.coeffs.get(lam, Fraction(0)) for lam in enumerate_partitions(self.degree))

    def __add__(self, other: "SymFunc") -> "SymFunc":
        if (self.basis, self.degree) != (other.basis, other.degree):
            raise ValueError("can only add functions in the same basis and degree")
        out = dict(self.coeffs)
        for lam, c in other.coeffs.items():
            out[lam] = out.get(lam, 0) + c
        return SymFunc(self.basis, self.degree, out)

    def scale(self, c) -> "SymFunc":
        return SymFunc(self.basis, self.degree, {lam: c * v for lam, v in self.coeffs.items()})

    def __neg__(self) -> "SymFunc":
        return self.scale(-1)

    def __sub__(self, other: "SymFunc") -> "SymFunc":
        return self + (-other)

    def __str__(self) -> str:
        terms = []
        for lam, c in self.to_json().items():
            sign = "-" if c.startswith("-") else "+"
            c = c.lstrip("-")
            terms.append(f"{sign} {'' if c == '1' else c + ' '}{self.basis}[{lam}]")
        text = " ".join(terms) or "0"
        return text[2:] if text.startswith("+ ") else "-" + text[2:] if text.startswith("- ") else text

    def to_json(self) -> dict[str, str]:
        return {str(lam): _fmt(self.coeffs[lam]) for lam in enumerate_partitions(self.degree) if lam in self.coeffs}


def convert(f: SymFunc, target: Basis) -> SymFunc:
    if f.basis == target:
        return f
    T = transition(f.degree, f.basis, target)
    vec = _mat_mul((f.vector(),), T.entries)[0]
    return SymFunc.from_vector(target, f.degree, vec)


def to_polynomial(f: SymFunc, num_vars: int, cap: int | None = None) -> polyring.SparsePoly:
    f = convert(f, M)
    cap = f.degree if cap is None else cap
    out = polyring.SparsePoly(num_vars, cap)
    for lam, c in f.coeffs.items():
        out = out + polyring.monomial_symmetric(lam, num_vars, cap).scale(c)
    return out


def sym_product(f: SymFunc, g: SymFunc) -> SymFunc:
    """f*g in the m-basis, multiplied out in deg(f)+deg(g) variables."""
    n = f.degree + g.degree
    v = max(n, 1)
    poly = polyring.mul_truncated(to_polynomial(f, v, n), to_polynomial(g, v, n), n)
    return SymFunc(M, n, polyring.extract_monomial_coeffs(poly, n))
