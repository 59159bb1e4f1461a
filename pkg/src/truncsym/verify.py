"""Verification suites: each check compares two independent computations."""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Callable, Iterator

from . import bases, cyclotomic, omega, petrie, polyring
from .bases import CLASSICAL, E, H, M, P, S, SymFunc, convert
from .partition import INFINITY, Partition, Truncation, conjugate, enumerate_partitions, epsilon, d_coefficient

# rows of h^[2]_lam for lam |- 4 in the m-basis, the classical worked example
REFERENCE_TABLE_D2_N4 = {
    "1,1,1,1": [1, 4, 6, 12, 24],
    "2,1,1": [1, 3, 4, 7, 12],
    "2,2": [1, 2, 3, 4, 6],
    "3,1": [0, 1, 2, 3, 4],
    "4": [0, 0, 1, 1, 1],
}

SUITES = (
    "table",
    "symmetry",
    "factorization",
    "petrie",
    "main2",
    "commute",
    "nmatrix",
    "kernel",
    "triple",
    "rootsofunity",
    "identity",
)


@dataclass
class Check:
    name: str
    passed: bool
    elapsed_ms: float

    def to_json(self) -> dict:
        return {"name": self.name, "passed": self.passed, "elapsed_ms": round(self.elapsed_ms, 3)}


def _run(name: str, fn: Callable[[], bool]) -> Check:
    start = time.perf_counter()
    passed = bool(fn())
    return Check(name, passed, (time.perf_counter() - start) * 1000)


def _truncations(max_d: int, infinite: bool = True) -> list[Truncation]:
    out = [Truncation(d) for d in range(1, max_d + 1)]
    return out + [INFINITY] if infinite else out


def _pairs(n: int) -> Iterator[tuple[Partition, Partition]]:
    for lam in enumerate_partitions(n):
        for mu in enumerate_partitions(n):
            yield lam, mu


def table_reproduced() -> bool:
    T = bases.transition_hd(4, 2, M)
    return all([int(c) for c in T.entries[bases.partition_index(4)[Partition.parse(k)]]] == v
               for k, v in REFERENCE_TABLE_D2_N4.items())


def counts_symmetric(n: int, d: Truncation) -> bool:
    return all(petrie.count_bounded_matrices(d, lam, mu) == petrie.count_bounded_matrices(d, mu, lam)
               for lam, mu in _pairs(n))


def factorization_matches_counts(n: int, d: Truncation) -> bool:
    T = bases.transition_hd(n, d, M)
    return all(T[lam, mu] == petrie.count_bounded_matrices(d, lam, mu) for lam, mu in _pairs(n))


def factorization_matches_polynomials(n: int, d: Truncation) -> bool:
    return bases.transition_hd(n, d, M).entries == bases.brute_hd_to_m(n, d).entries


def hd_via_p_matches(n: int, d: Truncation) -> bool:
    return all(convert(petrie.hd_via_p(d, lam), M) == petrie.hd_lambda(d, lam) for lam in enumerate_partitions(n))


def classical_degenerations(n: int) -> bool:
    for target in CLASSICAL:
        if bases.transition_hd(n, 1, target).entries != bases.transition(n, E, target).entries:
            return False
        if bases.transition_hd(n, INFINITY, target).entries != bases.transition(n, H, target).entries:
            return False
    return True


def is_basis(n: int, d: Truncation) -> bool:
    T = bases.transition_hd(n, d, P)
    return bases.rank(T) == len(T.entries)


def petrie_rule_agrees(n: int, d: int) -> bool:
    return all(petrie.petrie_coefficient_det(d, lam) == petrie.petrie_coefficient_rule(d, lam)
               for lam in enumerate_partitions(n))


def petrie_schur_resolution(n: int, d: int) -> bool:
    from_dets = petrie.petrie_schur_expansion(d, n)
    from_factorization = SymFunc(S, n, bases.transition_hd(n, d, S).row(Partition((n,) if n else ())))
    from_kostka = convert(petrie.hd_n(d, n), S)
    return from_dets == from_factorization == from_kostka


def nmatrix_matches(n: int, d: int) -> bool:
    R = bases.matrix_p_to_m(n)
    N = bases.chain(bases.transpose(R), bases.diagonal_eps(n), bases.diagonal_z_inverse(n), bases.diagonal_D(n, d), R)
    if bases.rank(N) != len(N.entries):
        return False
    for lam in enumerate_partitions(n):
        via_omega = omega.omega_of_hd(d, lam)
        for mu in enumerate_partitions(n):
            count = petrie.count_mod_matrices(d, lam, mu)
            if N[lam, mu] != count or via_omega.coeffs.get(mu, 0) != count:
                return False
            if d == 1 and count != petrie.count_bounded_matrices(INFINITY, lam, mu):
                return False
    return True


def omega_properties(n: int, d: Truncation) -> bool:
    for lam in enumerate_partitions(n):
        p = SymFunc.element(P, lam)
        if omega.omega_d(d, p) != p.scale(epsilon(lam) * d_coefficient(lam, d)):
            return False
    return omega.omega_d_of_e(d, n) == petrie.hd_n(d, n)


def omega_involution(n: int) -> bool:
    for basis in CLASSICAL:
        for lam in enumerate_partitions(n):
            f = SymFunc.element(basis, lam)
            if omega.omega(omega.omega(f)) != f:
                return False
            if omega.omega_d(1, f) != f or omega.omega_d(INFINITY, f) != omega.omega(f):
                return False
    return True


def power_sums_at_roots(d: int, n_max: int) -> bool:
    for n in range(1, n_max + 1):
        expected = d if n % (d + 1) == 0 else -1
        if cyclotomic.power_sum_at_roots(d, n) != expected:
            return False
    zeta_sum = sum((cyclotomic.CycNum.root(d + 1, k) for k in range(d + 1)), cyclotomic.CycNum.rational(d + 1, 0))
    return zeta_sum == 0


def schur_at_roots_matches_petrie(n: int, d: int) -> bool:
    for lam in enumerate_partitions(n):
        value = cyclotomic.schur_at_roots(d, conjugate(lam)) * (-1) ** n
        if value != petrie.petrie_coefficient_det(d, lam):
            return False
    return True


def newton_matches_direct(d: int, k_max: int) -> bool:
    return all(cyclotomic.complete_at_roots(d, k) == cyclotomic.complete_at_roots_direct(d, k)
               for k in range(k_max + 1))


def identity_holds(d: int, dp: int, n_max: int) -> bool:
    return all(cyclotomic.identity_check(d, dp, mu)
               for n in range(1, n_max + 1) for mu in enumerate_partitions(n) if len(mu) <= d * dp)


def identity_example() -> bool:
    lhs, rhs = cyclotomic.identity_sides(2, 3, (1,) * 6)
    return lhs == rhs == 1


def _identity_pairs(max_d: int) -> list[tuple[int, int]]:
    pairs = [(1, 2), (2, 3), (1, 3)]
    for a in range(1, max_d + 1):
        for b in range(a + 1, max_d + 1):
            if (a, b) not in pairs:
                pairs.append((a, b))
    return pairs


def checks_for(suite: str, max_n: int = 6, max_d: int = 3) -> list[tuple[str, Callable[[], bool]]]:
    """Named, deferred checks making up ``suite``."""
    out: list[tuple[str, Callable[[], bool]]] = []
    add = out.append
    if suite == "table":
        add(("reference table h^[2], n=4", table_reproduced))
        add(("table equals polynomial expansion", lambda: factorization_matches_polynomials(4, Truncation(2))))
    elif suite == "symmetry":
        for d in _truncations(max_d):
            for n in range(max_n + 1):
                add((f"M^[{d}] symmetric, n={n}", lambda n=n, d=d: counts_symmetric(n, d)))
    elif suite == "factorization":
        for d in _truncations(max_d):
            for n in range(max_n + 1):
                add((f"R'z^-1DR = [0,{d}]-counts, n={n}", lambda n=n, d=d: factorization_matches_counts(n, d)))
                add((f"R'z^-1DR = polynomial product, d={d}, n={n}",
                     lambda n=n, d=d: factorization_matches_polynomials(n, d)))
                add((f"p-expansion of h^[{d}], n={n}", lambda n=n, d=d: hd_via_p_matches(n, d)))
                add((f"M(h^[{d}],p) nonsingular, n={n}", lambda n=n, d=d: is_basis(n, d)))
        for n in range(max_n + 1):
            add((f"d=1 and d=inf degenerations, n={n}", lambda n=n: classical_degenerations(n)))
    elif suite == "petrie":
        for d in range(1, max_d + 1):
            for n in range(max_n + 1):
                add((f"det = rule, d={d}, |lam|={n}", lambda n=n, d=d: petrie_rule_agrees(n, d)))
        for d in range(1, min(max_d, 3) + 1):
            for n in range(min(max_n, 6) + 1):
                add((f"Schur expansion of h_{n}^[{d}]", lambda n=n, d=d: petrie_schur_resolution(n, d)))
    elif suite == "main2":
        for d in range(1, max_d + 1):
            add((f"omega(H^[{d}](t)) H^[{d}](-t) = 1 to degree {max_n}", lambda d=d: omega.verify_main2(d, max_n)))
    elif suite == "commute":
        for d in _truncations(max_d):
            for dp in _truncations(max_d):
                add((f"omega^[{d}] omega^[{dp}] commute", lambda d=d, dp=dp: omega.verify_commutation(d, dp, max_n)))
            for n in range(max_n + 1):
                add((f"eigenvalues and e_n -> h_n^[{d}], n={n}", lambda n=n, d=d: omega_properties(n, d)))
        for n in range(max_n + 1):
            add((f"omega involution, omega^[1]=id, omega^[inf]=omega, n={n}", lambda n=n: omega_involution(n)))
    elif suite == "nmatrix":
        for d in range(1, max_d + 1, 2):
            for n in range(min(max_n, 5) + 1):
                add((f"N^[{d}] = R'eps z^-1 D R, n={n}", lambda n=n, d=d: nmatrix_matches(n, d)))
    elif suite == "kernel":
        for d in range(1, min(max_d, 2) + 1):
            add((f"kernel expansion d={d}, 3+3 variables, cap 3", lambda d=d: petrie.verify_kernel(d, 3, 3, 3)))
    elif suite == "triple":
        add(("triple product, 3+3+3 variables, cap 3", lambda: polyring.verify_triple_product(3, 3, 3, 3)))
    elif suite == "rootsofunity":
        for d in range(1, 2 * max_d + 1):
            add((f"p_n at {d + 1}-th roots, n<={2 * max_n}", lambda d=d: power_sums_at_roots(d, 2 * max_n)))
        for d in range(1, max_d + 1):
            add((f"Newton vs direct h_k, d={d}", lambda d=d: newton_matches_direct(d, max_n)))
            for n in range(max_n + 1):
                add((f"(-1)^|lam| s_lam'(xi) = det, d={d}, n={n}", lambda n=n, d=d: schur_at_roots_matches_petrie(n, d)))
    elif suite == "identity":
        for d, dp in _identity_pairs(max_d):
            add((f"refinement identity (d,d')=({d},{dp}), n<={min(max_n, 6)}",
                 lambda d=d, dp=dp: identity_holds(d, dp, min(max_n, 6))))
        add(("closing example equals 1", identity_example))
    else:
        raise ValueError(f"unknown suite {suite!r}")
    return out


def run_suite(suite: str, max_n: int = 6, max_d: int = 3) -> dict:
    names = SUITES if suite == "all" else (suite,)
    if suite != "all" and suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}")
    checks = []
    for name in names:
        for label, fn in checks_for(name, max_n, max_d):
            checks.append((name, _run(label, fn)))
    return {
        "suite": suite,
        "max_n": max_n,
        "max_d": max_d,
        "passed": all(c.passed for _, c in checks),
        "checks": [dict(suite=name, **c.to_json()) for name, c in checks],
    }
