from collections import Counter
from fractions import Fraction

import pytest

from typelist import ALL_TYPES, type_id
from unipotent_flip.cyclotomic import cyclotomic_factorization
from unipotent_flip.exact_arith import RatPoly
from unipotent_flip.involution import (
    AmbiguousBranch, McSolution, a_A, bang, closed_form_mc, degree_polynomial, delta, family_report,
    m_c, report_passes, solve_mc, unipotents, verify_prop_1_4, verify_theorem_2_2,
)
from unipotent_flip.weyl import family_table
from unipotent_flip.weyl.exceptional_data import m_gamma
from unipotent_flip.weyl.families import Family

u = RatPoly.monomial(1)


def test_b2_ground_truth(b2):
    fam = b2.find("1.1")
    D = {fam.label(m): degree_polynomial(b2, fam, m) for m in fam.model.elements}
    target = u * (u**2 + 1) / 2
    twins = sorted(k for k, p in D.items() if p == target)
    assert twins == ["(0,1|2)", "(1,2|0)"]
    assert D["(0,2|1)"] == u * (u + 1) ** 2 / 2
    assert D["(|0,1,2)"] == u * (u - 1) ** 2 / 2
    assert fam.label(m_c(fam)) == "(|0,1,2)"
    mb = {fam.label(m): fam.label(bang(fam, m)) for m in fam.model.elements}
    assert mb == {"(0,1|2)": "(1,2|0)", "(1,2|0)": "(0,1|2)", "(0,2|1)": "(|0,1,2)", "(|0,1,2)": "(0,2|1)"}
    assert a_A(b2, fam) == (1, 3)


def test_b2_all_degrees(b2):
    degs = sorted(str(degree_polynomial(b2, f, m)) for f in b2 for m in f.model.elements)
    assert Counter(degs) == Counter(sorted(map(str, [
        RatPoly.constant(1), u**4, u * (u + 1) ** 2 / 2, u * (u - 1) ** 2 / 2, u * (u**2 + 1) / 2,
        u * (u**2 + 1) / 2])))


# unipotent degrees of G2(q) as (constant, u-power, {d: multiplicity of Phi_d})
G2_DEGREES = Counter([
    (Fraction(1), 0, ()), (Fraction(1), 6, ()),
    (Fraction(1, 6), 1, ((2, 2), (3, 1))), (Fraction(1, 2), 1, ((2, 2), (6, 1))),
    (Fraction(1, 3), 1, ((3, 1), (6, 1))), (Fraction(1, 3), 1, ((3, 1), (6, 1))),
    (Fraction(1, 6), 1, ((1, 2), (6, 1))), (Fraction(1, 2), 1, ((1, 2), (3, 1))),
    (Fraction(1, 3), 1, ((1, 2), (2, 2))), (Fraction(1, 3), 1, ((1, 2), (2, 2))),
])


def test_g2_degrees_match_known_table():
    T = family_table("G", 2)
    got = Counter()
    for f in T:
        for m in f.model.elements:
            c, a, ks = cyclotomic_factorization(degree_polynomial(T, f, m))
            got[(c, a, tuple(sorted(ks.items())))] += 1
    assert got == G2_DEGREES


@pytest.mark.parametrize("t", ALL_TYPES, ids=type_id)
def test_mc_unique_and_closed_form(t):
    T = family_table(*t)
    for f in T:
        sol = solve_mc(f)
        assert len(sol) == 1
        assert sol.unique == closed_form_mc(f)


@pytest.mark.parametrize("t", ALL_TYPES, ids=type_id)
def test_bang_is_an_involution(t):
    T = family_table(*t)
    for f in T:
        for m in f.model.elements:
            assert bang(f, bang(f, m)) == m


@pytest.mark.parametrize("t", ALL_TYPES, ids=type_id)
def test_prop_1_4_and_theorem_2_2(t):
    T = family_table(*t)
    for f in T:
        assert verify_prop_1_4(f) == []
        assert verify_theorem_2_2(T, f) == []
        a, A = a_A(T, f)
        assert (a + A) % 2 == 0
        assert a == T.W.b(f.special)


@pytest.mark.parametrize("t", ALL_TYPES, ids=type_id)
def test_degrees_positive_at_prime_powers(t):
    T = family_table(*t)
    for f in T:
        for m in f.model.elements:
            D = degree_polynomial(T, f, m)
            assert all(D(q) > 0 and D(q).denominator == 1 for q in (2, 3, 4, 5, 7, 8, 9))


def test_singleton_family_degree_is_fake_degree():
    T = family_table("B", 3)
    for f in T:
        if len(f) == 1:
            (m,) = f.model.elements
            assert degree_polynomial(T, f, m) == T.W.fake_degree(f.special)
            assert bang(f, m) == m


def test_family_report_shape(b2):
    rep = family_report(b2, b2.find("1.1"))
    assert set(rep) - {"b_prime_formula_differs"} == {"family", "special", "gamma", "size", "m_c", "a", "A", "checks"}
    assert set(rep["checks"]) == {"thm1_3", "prop1_4", "thm2_2", "aA"}
    assert report_passes(rep)
    assert rep["gamma"] == "(Z/2)^1" and rep["size"] == 3


def test_ambiguous_branch():
    sol = McSolution(("x", "y"))
    with pytest.raises(AmbiguousBranch):
        sol.unique
    assert McSolution(("x",)).unique == "x"


def test_delta_on_two_member_family():
    M = m_gamma("S2")
    mem = {0: M.unit, 1: M.elements[1]}
    fam = Family(0, "S2", M, [0, 1], 0, mem)
    assert delta(fam, M.unit) == 1
    assert delta(fam, M.elements[1]) == 1
    outside = [m for m in M.elements if m not in mem.values()]
    assert [delta(fam, m) for m in outside] == [-1, -1]


def test_unipotent_ids_are_unique():
    T = family_table("F", 4)
    ids = [x.id for x in unipotents(T)]
    assert len(ids) == len(set(ids)) == 37


@pytest.mark.parametrize("t", [("G", 2), ("F", 4)], ids=type_id)
def test_every_admissible_m_E_choice_gives_same_verdicts(t):
    from unipotent_flip.weyl.exceptional_data import search_assignments
    from unipotent_flip.weyl.families import FamilyTable

    T = family_table(*t)
    W = T.W
    fds = {E.label: W.fake_degree(e) for e, E in enumerate(W.irreducibles)}
    for f in T:
        if f.gamma == "1":
            continue
        labels = [W.irreducibles[e].label for e in f.members]
        dims = {x: W.irreducibles[W.irr_index(x)].dim for x in labels}
        for a in search_assignments(f.model, W.irreducibles[f.special].label, dims, fds):
            g = Family(f.id, f.gamma, f.model, f.members, f.special,
                       {W.irr_index(x): a[x] for x in labels}, b_prime=f.b_prime)
            T2 = FamilyTable(W, [g if h.id == f.id else h for h in T], T.family_of)
            assert solve_mc(g).unique == closed_form_mc(g)
            assert verify_prop_1_4(g) == [] and verify_theorem_2_2(T2, g) == []
