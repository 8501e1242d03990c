from collections import Counter
from itertools import permutations, product

import pytest

from typelist import ALL_TYPES, CLASSICAL, type_id
from unipotent_flip.exact_arith import RatPoly
from unipotent_flip.weyl import SignedPerm, WeylError, family_table, parse_type, weyl_group
from unipotent_flip.weyl.exceptional_data import load_data, validate_all

COUNTS = {
    ("B", 2): (3, 6), ("B", 3): (6, 12), ("C", 4): (10, 25), ("B", 5): (16, 46), ("B", 6): (26, 86),
    ("D", 4): (11, 14), ("D", 6): (27, 42), ("G", 2): (3, 10), ("F", 4): (11, 37),
}


@pytest.mark.parametrize("t", sorted(COUNTS), ids=type_id)
def test_family_and_unipotent_counts(t):
    T = family_table(*t)
    assert (len(T), T.n_unipotent) == COUNTS[t]


@pytest.mark.parametrize("t", ALL_TYPES, ids=type_id)
def test_orthogonality(t):
    W = weyl_group(*t)
    X = W.char_table
    sizes = [c.size for c in W.classes]
    assert sum(sizes) == W.order
    for i in range(len(X)):
        for j in range(i, len(X)):
            assert sum(s * a * b for s, a, b in zip(sizes, X[i], X[j])) == W.order * (i == j)


@pytest.mark.parametrize("t", ALL_TYPES, ids=type_id)
def test_fake_degrees(t):
    W = weyl_group(*t)
    total = RatPoly()
    for e, E in enumerate(W.irreducibles):
        fd = W.fake_degree(e)
        assert fd.is_polynomial() and all(c >= 0 and c.denominator == 1 for c in fd.coeffs.values())
        assert fd(1) == E.dim
        assert fd.substitute_neg() == fd * (-1) ** W.b(e)
        total = total + fd * E.dim
    assert total == W.poincare()


@pytest.mark.parametrize("t", ALL_TYPES, ids=type_id)
def test_w0_acts_by_sign_b(t):
    W = weyl_group(*t)
    c = W.w0_class
    for e, E in enumerate(W.irreducibles):
        assert W.char(e, c) == (-1) ** W.b(e) * E.dim


def _brute_force_classes(W, elements):
    seen = Counter(W.class_of(w) for w in elements)
    return [seen[k] for k in range(len(W.classes))]


def test_type_d4_split_classes_by_enumeration():
    W = weyl_group("D", 4)
    elems = [SignedPerm(p, s) for p in permutations(range(4)) for s in product((1, -1), repeat=4)
             if s.count(-1) % 2 == 0]
    assert len(elems) == W.order
    assert _brute_force_classes(W, elems) == [c.size for c in W.classes]
    # class_of is constant on conjugacy classes
    for w in elems[::7]:
        for g in W.simple_reflections:
            assert W.class_of(g * w * g) == W.class_of(w)


def test_type_d_rejects_odd_elements():
    W = weyl_group("D", 4)
    with pytest.raises(WeylError):
        W.class_of(SignedPerm((0, 1, 2, 3), (-1, 1, 1, 1)))


@pytest.mark.parametrize("kind, n", [("B", 2), ("B", 3), ("D", 4)])
def test_lengths(kind, n):
    W = weyl_group(kind, n)
    assert W.length(W.w0) == W.nu
    assert all(W.length(s) == 1 for s in W.simple_reflections)


@pytest.mark.parametrize("n", range(1, 7))
def test_trivial_character_is_singleton_family(n):
    T = family_table("B", n)
    e = T.W.trivial_index()
    assert len(T.family_containing(e)) == 1
    assert T.W.b(e) == 0
    assert T.W.b(T.W.sign_index()) == T.W.nu


def test_exceptional_data_file_validates():
    assert validate_all() == {"G2": [], "F4": []}
    data = load_data()
    assert data["schema"] == 1
    assert {f["gamma"] for f in data["types"]["F4"]["families"]} == {"1", "S2", "S4"}


def test_exceptional_labels():
    W = weyl_group("F", 4)
    labels = [E.label for E in W.irreducibles]
    assert len(labels) == len(set(labels)) == 25
    for lab in ("phi1,0", "phi12,4", "phi6,6'", "phi6,6''", "phi1,24"):
        e = W.irr_index(lab)
        assert W.b(e) == int(lab.split(",")[1].rstrip("'"))
    G = weyl_group("G", 2)
    assert sorted(E.label for E in G.irreducibles) == sorted(
        ["phi1,0", "phi1,6", "phi1,3'", "phi1,3''", "phi2,1", "phi2,2"])


@pytest.mark.parametrize("t", CLASSICAL, ids=type_id)
def test_family_structure(t):
    T = family_table(*t)
    for f in T:
        assert f.b_prime[f.special] == 0
        assert len(set(f.m.values())) == len(f)
        assert f.m[f.special] == f.model.unit


def test_parse_type_and_errors():
    assert parse_type("b3") == ("B", 3)
    with pytest.raises(WeylError):
        parse_type("E6")
    with pytest.raises(WeylError):
        weyl_group("D", 5)
    with pytest.raises(WeylError):
        weyl_group("E", 6)


def test_integer_b_prime_formula_is_only_a_parity():
    from unipotent_flip.weyl.core import TypeB
    from unipotent_flip.weyl.families import BPrimeFormulaWarning, build_families

    with pytest.warns(BPrimeFormulaWarning):
        T = build_families(TypeB(3))
    diffs = [(f.b_prime_formula[e], f.b_prime[e]) for f in T if f.classical for e in f.members
             if f.b_prime_formula[e] != f.b_prime[e]]
    assert diffs and all((a - b) % 2 == 0 for a, b in diffs)
