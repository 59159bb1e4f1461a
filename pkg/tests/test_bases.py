import random
from fractions import Fraction

import pytest

from truncsym import bases
from truncsym.bases import CLASSICAL, E, H, HD, M, P, S, Basis, SingularMatrixError, SymFunc, convert
from truncsym.partition import INFINITY, Partition, conjugate, enumerate_partitions

Q = Fraction
Pt = Partition


def test_p_to_m_small():
    assert bases.matrix_p_to_m(1).entries == ((1,),)
    assert bases.matrix_p_to_m(2).entries == ((1, 0), (1, 2))
    assert bases.matrix_p_to_m(4).entries[0] == (1, 0, 0, 0, 0)


def test_kostka_n3():
    assert bases.kostka_matrix(3).entries == ((1, 1, 1), (0, 1, 2), (0, 0, 1))


@pytest.mark.parametrize("n", range(7))
def test_kostka_diagonal_and_triangular(n):
    K = bases.kostka_matrix(n)
    for i, row in enumerate(K.entries):
        assert row[i] == 1
        assert all(c == 0 for c in row[:i])


def test_kostka_standard_tableaux():
    assert bases.kostka_matrix(3)[Pt((2, 1)), Pt((1, 1, 1))] == 2
    # number of standard tableaux: 1, 5, 9, 10, 5, 16, 10, 5, 9, 5, 1 for n=6
    K = bases.kostka_matrix(6)
    assert [K[lam, Pt((1,) * 6)] for lam in enumerate_partitions(6)] == [1, 5, 9, 10, 5, 16, 10, 5, 9, 5, 1]


def test_diagonals():
    assert bases.diagonal_eps(3).entries == ((1, 0, 0), (0, -1, 0), (0, 0, 1))
    assert bases.diagonal_z(2).entries == ((2, 0), (0, 2))
    assert bases.diagonal_D(3, 2).entries == ((-2, 0, 0), (0, 1, 0), (0, 0, 1))


def test_matrix_ops():
    R = bases.matrix_p_to_m(2)
    assert bases.inverse(R).entries == ((1, 0), (Q(-1, 2), Q(1, 2)))
    assert bases.inverse(bases.identity(4)).entries == bases.identity(4).entries
    A = bases.transition_hd(4, 2, M)
    assert bases.transpose(bases.transpose(A)) == A
    assert bases.multiply(bases.inverse(A), A).entries == bases.identity(4).entries
    with pytest.raises(SingularMatrixError):
        bases.inverse(bases.TransitionMatrix(2, None, None, ((Q(1), Q(1)), (Q(1), Q(1)))))
    with pytest.raises(ValueError):
        bases.multiply(A, R)


def test_determinant():
    assert bases.determinant([[0, 1], [1, -1]]) == -1
    assert bases.determinant([]) == 1


def test_transition_hd_reference_table():
    T = bases.transition_hd(4, 2, M)
    assert T.row(Pt((1, 1, 1, 1))) == {Pt((4,)): 1, Pt((3, 1)): 4, Pt((2, 2)): 6, Pt((2, 1, 1)): 12, Pt((1, 1, 1, 1)): 24}


def test_transition_hd_h3_schur_expansion():
    assert bases.transition_hd(3, 2, S).row(Pt((3,))) == {Pt((2, 1)): 1, Pt((1, 1, 1)): -1}


def test_transition_hd_d1_is_e():
    R = bases.matrix_p_to_m(3)
    classical = bases.chain(bases.transpose(R), bases.diagonal_eps(3), bases.transpose(bases.inverse(R)))
    assert bases.transition_hd(3, 1, H).entries == classical.entries
    assert bases.transition_hd(3, 1, H).entries == bases.transition(3, E, H).entries


@pytest.mark.parametrize("n", range(7))
@pytest.mark.parametrize("d", [1, 2, 3, INFINITY])
def test_factorization_equals_polynomial_expansion(n, d):
    assert bases.transition_hd(n, d, M).entries == bases.brute_hd_to_m(n, d).entries


@pytest.mark.parametrize("n", range(7))
def test_degenerate_cases(n):
    for target in CLASSICAL:
        assert bases.transition_hd(n, 1, target).entries == bases.transition(n, E, target).entries
        assert bases.transition_hd(n, INFINITY, target).entries == bases.transition(n, H, target).entries


@pytest.mark.parametrize("n", range(7))
def test_e_in_schur_is_transposed_kostka(n):
    K = bases.kostka_matrix(n)
    for mu in enumerate_partitions(n):
        e_mu = convert(SymFunc.element(E, mu), S)
        assert e_mu.coeffs == {lam: K[conjugate(lam), mu] for lam in enumerate_partitions(n) if K[conjugate(lam), mu]}


def test_convert_examples():
    assert convert(SymFunc.element(P, (2,)), M).coeffs == {Pt((2,)): 1}
    assert convert(SymFunc.element(E, (3,)), P).coeffs == {Pt((1, 1, 1)): Q(1, 6), Pt((2, 1)): Q(-1, 2), Pt((3,)): Q(1, 3)}
    assert convert(SymFunc.element(HD(2), (3,)), P).coeffs == {
        Pt((1, 1, 1)): Q(1, 6), Pt((2, 1)): Q(1, 2), Pt((3,)): Q(-2, 3)}


@pytest.mark.parametrize("n", range(1, 7))
def test_round_trips(n):
    rng = random.Random(n)
    all_bases = CLASSICAL + (HD(2), HD(3))
    for A in all_bases:
        f = SymFunc.from_vector(A, n, [rng.randint(-3, 3) for _ in enumerate_partitions(n)])
        for B in all_bases:
            assert convert(convert(f, B), A) == f


def test_symfunc_validation():
    with pytest.raises(ValueError):
        SymFunc(M, 3, {(2,): 1})
    assert SymFunc(M, 2, {(2,): 0}).coeffs == {}


def test_sym_product():
    e1 = SymFunc.element(E, (1,))
    assert bases.sym_product(e1, e1).coeffs == {Pt((2,)): 1, Pt((1, 1)): 2}


def test_basis_parse():
    assert Basis.parse("hd(2)") == HD(2)
    assert str(HD("inf")) == "hd(inf)"
    with pytest.raises(ValueError):
        Basis("q")


def test_matrix_json():
    # rows: e_2 = (p_11 - p_2)/2, e_1 e_1 = p_11
    assert bases.transition_hd(2, 1, P).to_json() == {
        "n": 2, "source": "hd(1)", "target": "p", "order": ["2", "1,1"],
        "entries": [["-1/2", "1/2"], ["0", "1"]]}


def test_symfunc_str():
    f = SymFunc(S, 3, {(2, 1): 1, (1, 1, 1): -1})
    assert str(f) == "s[2,1] - s[1,1,1]"
    assert str(SymFunc(M, 2, {(1, 1): Fraction(-1, 2)})) == "-1/2 m[1,1]"
    assert str(SymFunc(M, 2)) == "0"
