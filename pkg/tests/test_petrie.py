import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from truncsym import petrie
from truncsym.bases import M, S, convert
from truncsym.partition import INFINITY, Partition, enumerate_partitions

from conftest import brute_matrix_count

Pt = Partition
Q = Fraction


def test_hd_n_examples():
    assert petrie.hd_n(2, 3).coeffs == {Pt((2, 1)): 1, Pt((1, 1, 1)): 1}
    assert petrie.hd_n(1, 3).coeffs == {Pt((1, 1, 1)): 1}
    assert petrie.hd_n(2, 4).coeffs == {Pt((2, 2)): 1, Pt((2, 1, 1)): 1, Pt((1, 1, 1, 1)): 1}
    assert petrie.hd_n(2, 0).coeffs == {Pt(()): 1}


def test_hd_lambda_examples():
    assert petrie.hd_lambda(2, (2, 2)).coeffs == {
        Pt((4,)): 1, Pt((3, 1)): 2, Pt((2, 2)): 3, Pt((2, 1, 1)): 4, Pt((1, 1, 1, 1)): 6}
    assert petrie.hd_lambda(2, (1, 1, 1, 1)).coeffs == {
        Pt((4,)): 1, Pt((3, 1)): 4, Pt((2, 2)): 6, Pt((2, 1, 1)): 12, Pt((1, 1, 1, 1)): 24}
    assert petrie.hd_lambda(1, (2, 1)).coeffs == {Pt((2, 1)): 1, Pt((1, 1, 1)): 3}


def test_hd_via_p_examples():
    assert petrie.hd_via_p(2, (3,)).coeffs == {Pt((1, 1, 1)): Q(1, 6), Pt((2, 1)): Q(1, 2), Pt((3,)): Q(-2, 3)}
    assert petrie.hd_via_p(1, (2,)).coeffs == {Pt((1, 1)): Q(1, 2), Pt((2,)): Q(-1, 2)}
    assert petrie.hd_via_p(INFINITY, (2,)).coeffs == {Pt((1, 1)): Q(1, 2), Pt((2,)): Q(1, 2)}


@pytest.mark.parametrize("n", range(7))
@pytest.mark.parametrize("d", [1, 2, 3])
def test_hd_via_p_matches_polynomials(n, d):
    for lam in enumerate_partitions(n):
        assert convert(petrie.hd_via_p(d, lam), M) == petrie.hd_lambda(d, lam)


def test_count_examples():
    assert petrie.count_bounded_matrices(2, (2, 2), (2, 2)) == 3
    assert petrie.count_bounded_matrices(2, (2, 1), (2, 1)) == 2
    assert petrie.count_bounded_matrices(2, (2, 1), (3,)) == 1
    assert petrie.count_bounded_matrices(2, (2,), (1,)) == 0
    for n in range(1, 6):
        for d in (1, 2, INFINITY):
            assert petrie.count_bounded_matrices(d, (n,), (1,) * n) == 1


def test_count_mod_examples():
    # a single cell must equal 4, and 4 = 0 mod 4
    assert petrie.count_mod_matrices(3, (4,), (4,)) == 1
    assert petrie.count_mod_matrices(3, (1,), (1,)) == 1
    assert petrie.count_mod_matrices(3, (2,), (2,)) == 0
    with pytest.raises(ValueError):
        petrie.count_mod_matrices(INFINITY, (1,), (1,))


@pytest.mark.parametrize("n", range(5))
def test_counts_against_exhaustive_search(n):
    parts = enumerate_partitions(n)
    for lam, mu in itertools.product(parts, parts):
        if len(lam) * len(mu) > 9:
            continue
        for d in (1, 2, 3):
            assert petrie.count_bounded_matrices(d, lam, mu) == brute_matrix_count(lam, mu, lambda v: v <= d)
            assert petrie.count_mod_matrices(d, lam, mu) == brute_matrix_count(lam, mu, lambda v: v % (d + 1) < 2)
        assert petrie.count_bounded_matrices(INFINITY, lam, mu) == brute_matrix_count(lam, mu, lambda v: True)


@pytest.mark.parametrize("n", range(7))
@pytest.mark.parametrize("d", [1, 2, 3, INFINITY])
def test_counts_symmetric_and_match_expansion(n, d):
    for lam in enumerate_partitions(n):
        h = petrie.hd_lambda(d, lam)
        for mu in enumerate_partitions(n):
            c = petrie.count_bounded_matrices(d, lam, mu)
            assert c == petrie.count_bounded_matrices(d, mu, lam)
            assert h.coeffs.get(mu, 0) == c


@pytest.mark.parametrize("n", range(7))
def test_congruence_vacuous_for_d1(n):
    for lam in enumerate_partitions(n):
        for mu in enumerate_partitions(n):
            assert petrie.count_mod_matrices(1, lam, mu) == petrie.count_bounded_matrices(INFINITY, lam, mu)


def test_petrie_examples():
    assert petrie.petrie_coefficient_det(2, (2, 1)) == 1
    assert petrie.petrie_coefficient_det(2, (1, 1, 1)) == -1
    assert petrie.petrie_coefficient_det(2, (3,)) == 0
    assert petrie.petrie_coefficient_rule(2, (2, 1)) == 1
    assert petrie.petrie_coefficient_rule(2, (1, 1, 1)) == -1
    assert petrie.petrie_coefficient_rule(2, (2, 2, 2)) == petrie.petrie_coefficient_det(2, (2, 2, 2))
    assert petrie.petrie_coefficient_det(3, ()) == petrie.petrie_coefficient_rule(3, ()) == 1
    with pytest.raises(ValueError):
        petrie.petrie_coefficient_det(INFINITY, (1,))


@settings(max_examples=200, deadline=None)
@given(st.integers(1, 5), st.integers(0, 9).flatmap(lambda n: st.sampled_from(enumerate_partitions(n))))
def test_rule_agrees_with_determinant(d, lam):
    det = petrie.petrie_coefficient_det(d, lam)
    assert det in (-1, 0, 1)
    assert petrie.petrie_coefficient_rule(d, lam) == det


@pytest.mark.parametrize("n", range(7))
@pytest.mark.parametrize("d", [1, 2, 3])
def test_schur_expansion_of_hd_n(n, d):
    assert convert(petrie.hd_n(d, n), S) == petrie.petrie_schur_expansion(d, n)


@pytest.mark.parametrize("d, vx, vy, cap", [(1, 2, 2, 2), (2, 3, 3, 3), (3, 2, 2, 2), (2, 1, 1, 0)])
def test_kernel(d, vx, vy, cap):
    assert petrie.verify_kernel(d, vx, vy, cap)
