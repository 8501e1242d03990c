from fractions import Fraction
from itertools import permutations, product

import pytest

from typelist import ALL_TYPES, type_id
from unipotent_flip.dl_expansion import (
    ScalarRelationError, VirtualUnip, check_scalar_relation, expansion_dump, hstar_expansion,
    hstar_expansion_class, multiplicity_R_E, r_e_expansion, section_5_4_sums, transport, ungrade,
    verify_section_5_4, verify_theorem_0_4, verify_theorem_4_3, verify_theorem_4_3_reflected,
    weight_shift_expansion, xi_E,
)
from unipotent_flip.exact_arith import RatPoly
from unipotent_flip.hecke import build_regular_rep, dihedral_characters
from unipotent_flip.involution import a_A
from unipotent_flip.weyl import SignedPerm, family_table


def test_multiplicity_examples(b2):
    W = b2.W
    fam = b2.find("1.1")
    assert multiplicity_R_E(b2, fam, fam.m[fam.special], fam.special) == Fraction(1, 2)
    triv = b2.family_containing(W.trivial_index())
    assert multiplicity_R_E(b2, triv, triv.model.unit, W.trivial_index()) == 1
    assert multiplicity_R_E(b2, fam, fam.model.unit, W.trivial_index()) == 0


@pytest.mark.parametrize("t", ALL_TYPES, ids=type_id)
def test_identity_gives_principal_series(t):
    T = family_table(*t)
    W = T.W
    got = hstar_expansion(T, W.identity)
    want = VirtualUnip({xi_E(T, e): E.dim for e, E in enumerate(W.irreducibles)})
    assert got == want


def _b2_elements():
    return [SignedPerm(p, s) for p in permutations(range(2)) for s in product((1, -1), repeat=2)]


def test_b2_elements_and_inversion(b2):
    W = b2.W
    elems = _b2_elements()
    by_class = {}
    for w in elems:
        by_class.setdefault(W.class_of(w), []).append(hstar_expansion(b2, w))
    assert all(all(x == xs[0] for x in xs) for xs in by_class.values())
    # R_E = |W|^-1 sum_w tr(w, E) H^*(X_w)
    for e in range(len(W.irreducibles)):
        acc = VirtualUnip()
        for w in elems:
            acc = acc + hstar_expansion(b2, w).scale(Fraction(W.trace(w, e), W.order))
        assert acc == r_e_expansion(b2, e)


def test_g2_inversion():
    T = family_table("G", 2)
    W = T.W
    for e in range(len(W.irreducibles)):
        acc = VirtualUnip()
        for w in W.group.elements:
            acc = acc + hstar_expansion(T, w).scale(Fraction(W.trace(w, e), W.order))
        assert acc == r_e_expansion(T, e)


@pytest.mark.parametrize("t", ALL_TYPES, ids=type_id)
def test_theorem_0_4(t):
    assert verify_theorem_0_4(family_table(*t)) == []


@pytest.mark.parametrize("t", ALL_TYPES, ids=type_id)
def test_section_5_4(t):
    assert verify_section_5_4(family_table(*t)) == []


def test_section_5_4_b2(b2):
    total, graded = section_5_4_sums(b2)
    assert total == ungrade(graded)
    fam = b2.find("1.1")
    cusp = f"{fam.id}:(|0,1,2)"
    assert abs(total[cusp]) == b2.W.irreducibles[fam.special].dim
    assert sorted(graded) == [0, 4, 8]
    triv = b2.family_containing(b2.W.trivial_index())
    assert total[f"{triv.id}:(2|)"] == (-1) ** a_A(b2, triv)[1]


def test_transport_is_involutive(b2):
    x = hstar_expansion_class(b2, 1)
    assert transport(b2, transport(b2, x)) == x


def test_zero_characters_give_zero(b2):
    assert weight_shift_expansion(b2, {}) == {}


def test_ungraded_identity_at_w1(b2):
    W = b2.W
    g = weight_shift_expansion(b2, {e: RatPoly.constant(E.dim) for e, E in enumerate(W.irreducibles)})
    assert list(g) == [0]
    assert g[0] == hstar_expansion(b2, W.identity)


def test_scalar_relation_error_names_E(b2):
    W = b2.W
    dims = {e: RatPoly.constant(E.dim) for e, E in enumerate(W.irreducibles)}
    with pytest.raises(ScalarRelationError) as info:
        check_scalar_relation(b2, dims, dims)
    assert info.value.E in {E.label for E in W.irreducibles}


@pytest.fixture(scope="module", params=[("B", 2), ("G", 2)], ids=type_id)
def dihedral(request):
    T = family_table(*request.param)
    H = build_regular_rep(T.W)
    return T, H, dihedral_characters(H)


def test_hecke_characters_specialise(dihedral):
    T, H, chars = dihedral
    for k, w in enumerate(H.elements):
        for e, p in chars[k].items():
            assert p(1) == T.W.trace(w, e)


def test_weight_pieces_sum_to_hstar(dihedral):
    # summing H^*_k(X_w) v^k at v = 1 gives H^*(X_w)
    T, H, chars = dihedral
    for k, w in enumerate(H.elements):
        graded = weight_shift_expansion(T, chars[k])
        at_one = {}
        for x in graded.values():
            for xi, c in x.coefficients.items():
                at_one[xi] = at_one.get(xi, 0) + c
        flat = {e: RatPoly.constant(p(1)) for e, p in chars[k].items()}
        assert VirtualUnip(at_one) == hstar_expansion(T, w) == ungrade(weight_shift_expansion(T, flat))


def test_theorem_4_3_at_identity(dihedral):
    T, H, chars = dihedral
    one = H.index[T.W.identity]
    w0 = H.index[T.W.w0]
    assert verify_theorem_4_3(T, chars[one], chars[w0]) == []


def test_theorem_4_3_reflected_form_all_w(dihedral):
    T, H, chars = dihedral
    for k, w in enumerate(H.elements):
        j = H.index[T.W.mul(w, T.W.w0)]
        assert verify_theorem_4_3_reflected(T, chars[k], chars[j]) == []


def test_literal_scalar_relation_fails_off_identity(dihedral):
    # tr(T_{w w0}) equals the T_{w0} scalar times tr(T_{w^-1}^-1), not tr(T_w); the two differ once l(w) > 0
    T, H, chars = dihedral
    for k, w in enumerate(H.elements):
        if w == T.W.identity:
            continue
        j = H.index[T.W.mul(w, T.W.w0)]
        with pytest.raises(ScalarRelationError):
            verify_theorem_4_3(T, chars[k], chars[j])


def test_expansion_dump_format(b2):
    dump = expansion_dump(b2)
    assert len(dump) == len(b2.W.classes)
    first = dump[0]
    assert set(first) == {"w", "coefficients"}
    assert all(isinstance(c, str) and "/" in c for _, c in first["coefficients"])
