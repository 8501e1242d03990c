from fractions import Fraction
from itertools import combinations

import pytest

from unipotent_flip.groups import elementary_abelian_2
from unipotent_flip.mgamma import MGamma
from unipotent_flip.symbols import (
    ClassicalFamily, LambdaY, Symbol, SymbolError, b_prime_formula, b_prime_parity, closed_form_mc,
    compute_Zstar, odd_entry_swap_view,
)

FAMILIES = {
    "B1": ClassicalFamily("B", (), (0, 2), (1,)),
    "B2": ClassicalFamily("B", (), (0, 2, 4), (1, 3)),
    "B3": ClassicalFamily("B", (), (0, 2, 4, 6), (1, 3, 5)),
    "B2z": ClassicalFamily("B", (0,), (1, 3, 5), (2, 4)),
    "D1": ClassicalFamily("D", (), (2,), (0,)),
    "D2": ClassicalFamily("D", (), (1, 3), (0, 2)),
    "D3": ClassicalFamily("D", (), (1, 3, 6), (0, 2, 4)),
}


def matrix(fam):
    return [[fam.pairing(x, y) for y in fam.elements] for x in fam.elements]


@pytest.mark.parametrize("name", sorted(FAMILIES))
def test_fourier_matrix_squares_to_identity(name):
    S = matrix(FAMILIES[name])
    n = len(S)
    for i in range(n):
        for j in range(n):
            assert sum(S[i][k] * S[k][j] for k in range(n)) == int(i == j)


@pytest.mark.parametrize("name", sorted(FAMILIES))
def test_sizes(name):
    fam = FAMILIES[name]
    expect = 4 ** fam.d if fam.kind == "B" else 4 ** (fam.d - 1)
    assert len(fam.elements) == expect
    assert len(fam.members()) == (len(list(combinations(fam.Z1, fam.d))) // (1 if fam.kind == "B" else 2))


def _f2_rank(vectors, universe):
    rows = [sum(1 << universe.index(z) for z in v) for v in vectors]
    rank = 0
    for bit in range(len(universe)):
        piv = next((r for r in rows if r >> bit & 1), None)
        if piv is None:
            continue
        rows = [r ^ piv if (r >> bit & 1) else r for r in rows if r != piv]
        rank += 1
    return rank


@pytest.mark.parametrize("name", ["B1", "B2", "B3"])
def test_members_span(name):
    fam = FAMILIES[name]
    vecs = [x.vector() for x in fam.members()]
    # the vectors Y # B have even size; they span that whole subspace, of dimension 2d
    assert _f2_rank(vecs, list(fam.Z1)) == 2 * fam.d == len(fam.Z1) - 1


@pytest.mark.parametrize("name", sorted(FAMILIES))
def test_closed_form_matches_search(name):
    fam = FAMILIES[name]
    sols = [s for s in fam.invertibles
            if all(fam.pairing(x, s) == (-1) ** b_prime_parity(x) * fam.scale for x in fam.members())]
    assert sols == [closed_form_mc(fam)]


@pytest.mark.parametrize("name", sorted(FAMILIES))
def test_b_prime_parity_matches_integer_formula(name):
    fam = FAMILIES[name]
    for x in fam.members():
        assert b_prime_parity(x) == b_prime_formula(x) % 2


@pytest.mark.parametrize("name", ["D1", "D2", "D3"])
def test_type_d_sign_independent_of_representative(name):
    fam = FAMILIES[name]
    odd = fam.Z1_odd
    for x in fam.elements:
        assert (-1) ** len(x.Y & odd) == (-1) ** len(x.Y_tilde & odd)


def test_b2_example():
    fam = FAMILIES["B1"]
    assert fam.special_symbol == Symbol((0, 2), (1,))
    assert fam.rank == 2
    assert compute_Zstar(fam) == frozenset({0, 2})
    assert sorted(closed_form_mc(fam).Y) == [0, 1, 2]
    sp = fam.unit
    assert fam.pairing(sp, sp) == Fraction(1, 2)


def test_odd_entry_view_agrees_with_convolution():
    for name in ("B1", "B2", "B2z", "D2", "D3"):
        fam = FAMILIES[name]
        mc = closed_form_mc(fam)
        for x in fam.elements:
            got = odd_entry_swap_view(x)
            want = fam.convolve_star(mc, x).symbol()
            assert got.reduced() in (want.reduced(), want.swapped().reduced())


def test_symbol_text_round_trip():
    s = Symbol((0, 1, 4), (1, 2))
    assert str(s) == "(0,1,4|1,2)"
    assert Symbol.parse(str(s)) == s
    with pytest.raises(SymbolError):
        Symbol.parse("0,1|2")


def test_json_round_trip_and_rank_check():
    fam = FAMILIES["B2"]
    assert ClassicalFamily.from_json(fam.to_json()) == fam
    bad = dict(fam.to_json(), n=fam.rank + 1)
    with pytest.raises(SymbolError):
        ClassicalFamily.from_json(bad)


@pytest.mark.parametrize("data", [("B", (), (0, 1), (2,)), ("B", (0,), (0, 2), (1,)), ("D", (), (1,), (0,))])
def test_invalid_families(data):
    with pytest.raises(SymbolError):
        ClassicalFamily(*data)


def _isometric(S1, S2):
    """Search for a bijection carrying the matrix S1 onto S2."""
    n = len(S1)
    used = [False] * n
    phi = []

    def extend():
        i = len(phi)
        if i == n:
            return True
        for j in range(n):
            if used[j] or S1[i][i] != S2[j][j]:
                continue
            if all(S1[i][k] == S2[j][phi[k]] for k in range(i)):
                used[j] = True
                phi.append(j)
                if extend():
                    return True
                phi.pop()
                used[j] = False
        return False

    return extend()


@pytest.mark.parametrize("name, d", [("B1", 1), ("B2", 2), ("D2", 1), ("D3", 2)])
def test_symbol_pairing_agrees_with_group_model(name, d):
    M = MGamma(elementary_abelian_2(d))
    assert _isometric(matrix(FAMILIES[name]), M.pairing_matrix())


def test_lambda_validation():
    fam = FAMILIES["B1"]
    with pytest.raises(SymbolError):
        LambdaY(fam, frozenset({0, 1}))
    with pytest.raises(SymbolError):
        LambdaY(fam, frozenset({7}))
