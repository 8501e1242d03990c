from fractions import Fraction

import pytest

from unipotent_flip.groups import GroupError, elementary_abelian_2, symmetric_group
from unipotent_flip.mgamma import MGamma
from unipotent_flip.weyl.exceptional_data import m_gamma


def _square_is_identity(S):
    n = len(S)
    for i in range(n):
        for j in range(n):
            if sum(S[i][k] * S[k][j] for k in range(n)) != int(i == j):
                return False
    return True


@pytest.mark.parametrize("name, size", [("S2", 4), ("S3", 8), ("S4", 21)])
def test_sizes_and_involutive_fourier(name, size):
    M = m_gamma(name)
    assert len(M.elements) == size
    S = M.pairing_matrix()
    assert all(S[i][j] == S[j][i] for i in range(size) for j in range(size))
    assert _square_is_identity(S)


def test_s5_pairing_is_irrational_but_involutive():
    M = MGamma(symmetric_group(5))
    assert len(M.elements) == 39
    bad = [m for m in M.elements if not M.pairing_exact(m, m).is_rational()]
    assert bad
    with pytest.raises(GroupError):
        M.pairing(bad[0], bad[0])
    S = M.pairing_matrix_exact()
    n = len(S)
    zero = S[0][0] * 0
    for i in range(n):
        for j in range(i, n):
            tot = zero
            for k in range(n):
                tot = tot + S[i][k] * S[k][j]
            assert tot == zero + int(i == j)


@pytest.mark.parametrize("gamma", [elementary_abelian_2(1), elementary_abelian_2(2), symmetric_group(3),
                                   symmetric_group(4), symmetric_group(5)], ids=["Z2", "Z2^2", "S3", "S4", "S5"])
def test_ring_hom_identity(gamma):
    assert MGamma(gamma).verify_ring_hom()


def test_unit_and_sign():
    M = m_gamma("S3")
    assert M.unit in M.invertibles
    assert len(M.invertibles) == 2
    sgn = M.sign_element()
    assert M.convolve_star(sgn, sgn) == M.unit
    assert M.weight(M.unit) == Fraction(1, 6)
    assert M.label(M.unit) == "(1,0)"


def test_convolution_requires_invertible():
    M = m_gamma("S3")
    non = next(m for m in M.elements if m not in M.invertibles)
    with pytest.raises(GroupError):
        M.convolve_star(non, M.unit)


def test_twist_is_one_on_the_unit():
    M = m_gamma("S4")
    assert M.twist(M.unit) == 1
