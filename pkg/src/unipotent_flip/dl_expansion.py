"""Unipotent multiplicities of the virtual modules ``R_E`` and ``H^*(X_w)``.

Only the multiplicities are modelled:

    (xi_m : R_E)      = Delta(m) <m_E, m>               (E in the family of m)
    (xi_m : H^*(X_w)) = sum_E tr(w, E) (xi_m : R_E)

With Hecke characters ``tr(T_w, E(v))`` in place of ``tr(w, E)`` the same sum
gives the weight-graded pieces ``sum_k (xi : H^*_k(X_w)) v^k``.

>>> from unipotent_flip.weyl import family_table
>>> T = family_table("B", 2)
>>> hstar_expansion(T, T.W.identity).to_json()
[['0:(2|)', '1/1'], ['1:(0,1|2)', '1/1'], ['1:(0,2|1)', '2/1'], ['1:(1,2|0)', '1/1'], ['2:(0,1,2|1,2)', '1/1']]
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Mapping

from .exact_arith import RatPoly, format_rat
from .involution import a_A, bang, delta
from .weyl.families import Family, FamilyTable


class ScalarRelationError(ValueError):
    """Supplied Hecke characters violate the ``T_{w0}`` scalar relation."""

    def __init__(self, message: str, E: str):
        super().__init__(message)
        self.E = E


@dataclass
class VirtualUnip:
    """Rational combination of unipotent representations, keyed by id ``"family:label"``."""

    coefficients: dict[str, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        self.coefficients = {k: Fraction(v) for k, v in self.coefficients.items() if v}

    def __getitem__(self, key: str) -> Fraction:
        return self.coefficients.get(key, Fraction(0))

    def __add__(self, other: "VirtualUnip") -> "VirtualUnip":
        out = dict(self.coefficients)
        for k, v in other.coefficients.items():
            out[k] = out.get(k, 0) + v
        return VirtualUnip(out)

    def scale(self, c) -> "VirtualUnip":
        return VirtualUnip({k: v * c for k, v in self.coefficients.items()})

    def __eq__(self, other):
        return isinstance(other, VirtualUnip) and self.coefficients == other.coefficients

    def __bool__(self):
        return bool(self.coefficients)

    def to_json(self) -> list[list[str]]:
        return [[k, format_rat(v)] for k, v in sorted(self.coefficients.items())]


Graded = dict  # k -> VirtualUnip


def _xi_id(fam: Family, m) -> str:
    return f"{fam.id}:{fam.label(m)}"


def xi_E(table: FamilyTable, e: int) -> str:
    """Id of the principal-series representation attached to ``E``."""
    fam = table.family_containing(e)
    return _xi_id(fam, fam.m[e])


def multiplicity_R_E(table: FamilyTable, fam: Family, m, e: int) -> Fraction:
    if table.family_of[e] != fam.id:
        return Fraction(0)
    return Fraction(delta(fam, m) * fam.model.pairing(fam.m[e], m))


def _expand(table: FamilyTable, coeff: Callable[[int], object], zero, add) -> dict:
    """``xi -> sum_E coeff(E) (xi : R_E)``; ``coeff`` may return Rat or RatPoly."""
    out = {}
    for fam in table:
        vals = [(e, coeff(e)) for e in fam.members]
        vals = [(e, c) for e, c in vals if c]
        if not vals:
            continue
        for m in fam.model.elements:
            tot = zero
            for e, c in vals:
                r = multiplicity_R_E(table, fam, m, e)
                if r:
                    tot = add(tot, c * r)
            if tot:
                out[_xi_id(fam, m)] = tot
    return out


def hstar_expansion_class(table: FamilyTable, c: int) -> VirtualUnip:
    W = table.W
    return VirtualUnip(_expand(table, lambda e: W.char(e, c), Fraction(0), lambda a, b: a + b))


def hstar_expansion(table: FamilyTable, w) -> VirtualUnip:
    return hstar_expansion_class(table, table.W.class_of(w))


def r_e_expansion(table: FamilyTable, e: int) -> VirtualUnip:
    return VirtualUnip(_expand(table, lambda f: int(f == e), Fraction(0), lambda a, b: a + b))


# the involution on virtual characters


def _bang_map(table: FamilyTable) -> dict[str, tuple[str, int]]:
    """``xi -> (id of xi^!, A_c)``."""
    out = {}
    for fam in table:
        _a, A = a_A(table, fam)
        for m in fam.model.elements:
            out[_xi_id(fam, m)] = (_xi_id(fam, bang(fam, m)), A)
    return out


def transport(table: FamilyTable, x: VirtualUnip) -> VirtualUnip:
    """``sum (xi : x) xi  ->  sum (-1)^{A_xi} (xi : x) xi^!``."""
    bm = _bang_map(table)
    out = {}
    for k, v in x.coefficients.items():
        target, A = bm[k]
        out[target] = out.get(target, 0) + (-1) ** A * v
    return VirtualUnip(out)


def verify_theorem_0_4(table: FamilyTable) -> list[dict]:
    """Counterexamples to ``(xi : H^*(X_w)) = (-1)^{A_xi} (xi^! : H^*(X_{w w0}))``
    over all classes of ``w`` and all ``xi``.
    """
    W = table.W
    bm = _bang_map(table)
    bad = []
    for c in range(len(W.classes)):
        lhs = hstar_expansion_class(table, c)
        rhs = hstar_expansion_class(table, W.class_of_product_with_w0(c))
        for xi, (xb, A) in bm.items():
            if lhs[xi] != (-1) ** A * rhs[xb]:
                bad.append({"class": W.classes[c].label, "xi": xi, "lhs": format_rat(lhs[xi]),
                            "rhs": format_rat((-1) ** A * rhs[xb])})
    return bad


# weight gradings


def _poly_to_graded(expansion: Mapping[str, RatPoly]) -> Graded:
    out: dict[int, dict[str, Fraction]] = {}
    for xi, p in expansion.items():
        for k, c in p.coeffs.items():
            out.setdefault(k, {})[xi] = c
    return {k: VirtualUnip(v) for k, v in sorted(out.items())}


def weight_shift_expansion(table: FamilyTable, hecke_chars: Mapping[int, RatPoly]) -> Graded:
    """``k -> H^*_k(X_w)`` from the values ``tr(T_w, E(v))`` (keyed by E index)."""
    zero = RatPoly()
    exp = _expand(table, lambda e: RatPoly._coerce(hecke_chars.get(e, zero)), zero, lambda a, b: a + b)
    return _poly_to_graded(exp)


def ungrade(g: Graded) -> VirtualUnip:
    out = VirtualUnip()
    for x in g.values():
        out = out + x
    return out


def shift_exponent(table: FamilyTable, e: int) -> int:
    a, A = a_A(table, table.family_containing(e))
    return 2 * table.W.nu - a - A


def check_scalar_relation(table: FamilyTable, chars_w: Mapping[int, RatPoly],
                          chars_ww0: Mapping[int, RatPoly]) -> None:
    """Raise unless ``tr(T_{ww0}, E) = (-1)^{b_E} v^{2nu-a-A} tr(T_w, E)`` for every E."""
    W = table.W
    for e in range(len(W.irreducibles)):
        want = RatPoly._coerce(chars_w.get(e, RatPoly())).shift(shift_exponent(table, e)) * (-1) ** W.b(e)
        got = RatPoly._coerce(chars_ww0.get(e, RatPoly()))
        if got != want:
            label = W.irreducibles[e].label
            raise ScalarRelationError(f"scalar relation fails for E = {label}: {got} != {want}", label)


def _theorem_4_3_mismatches(table: FamilyTable, lhs: Graded, rhs_src: Graded, reflect: bool) -> list[dict]:
    bm = _bang_map(table)
    fam_of = {xi: int(xi.split(":", 1)[0]) for xi in bm}
    shift = {f.id: 2 * table.W.nu - sum(a_A(table, f)) for f in table}
    keys = set(lhs)
    for j in rhs_src:
        keys.update(s - j if reflect else j + s for s in set(shift.values()))
    bad = []
    for k in sorted(keys):
        got = lhs.get(k, VirtualUnip())
        for xi, (xb, A) in bm.items():
            j = shift[fam_of[xi]] - k if reflect else k - shift[fam_of[xi]]
            want = (-1) ** A * rhs_src.get(j, VirtualUnip())[xi]
            if got[xb] != want:
                bad.append({"k": k, "xi": xb, "lhs": format_rat(got[xb]), "rhs": format_rat(want)})
    return bad


def verify_theorem_4_3(table: FamilyTable, chars_w: Mapping[int, RatPoly],
                       chars_ww0: Mapping[int, RatPoly]) -> list[dict]:
    """Check ``(xi_{m^!} : H^*_k(X_{ww0})) = (-1)^{A} (xi_m : H^*_{k-2nu+a+A}(X_w))`` for all k.

    The scalar relation is checked first and raises :class:`ScalarRelationError`.
    """
    check_scalar_relation(table, chars_w, chars_ww0)
    return _theorem_4_3_mismatches(table, weight_shift_expansion(table, chars_ww0),
                                   weight_shift_expansion(table, chars_w), reflect=False)


def verify_theorem_4_3_reflected(table: FamilyTable, chars_w: Mapping[int, RatPoly],
                                 chars_ww0: Mapping[int, RatPoly]) -> list[dict]:
    """Form valid for all ``w``: ``(xi_{m^!} : H^*_k(X_{ww0})) = (-1)^{A} (xi_m : H^*_{2nu-a-A-k}(X_w))``.

    Agrees with :func:`verify_theorem_4_3` at ``w = 1``.
    """
    return _theorem_4_3_mismatches(table, weight_shift_expansion(table, chars_ww0),
                                   weight_shift_expansion(table, chars_w), reflect=True)


# formal sums for X_{w0}


def section_5_4_sums(table: FamilyTable) -> tuple[VirtualUnip, Graded]:
    """``sum_E (-1)^{A} dim(E) xi_E^!`` and its refinement by ``k = 2nu - a - A``."""
    W = table.W
    graded: dict[int, VirtualUnip] = {}
    for fam in table:
        a, A = a_A(table, fam)
        k = 2 * W.nu - a - A
        for e in fam.members:
            term = VirtualUnip({_xi_id(fam, bang(fam, fam.m[e])): (-1) ** A * W.irreducibles[e].dim})
            graded[k] = graded.get(k, VirtualUnip()) + term
    graded = {k: v for k, v in sorted(graded.items()) if v}
    return ungrade(graded), graded


def verify_section_5_4(table: FamilyTable) -> list[dict]:
    """Compare the formal sums with ``H^*(X_{w0})`` from characters at ``w0`` and
    with ``H^*(X_1)`` transported by the involution.
    """
    W = table.W
    total, graded = section_5_4_sums(table)
    bad = []
    direct = hstar_expansion(table, W.w0)
    moved = transport(table, hstar_expansion(table, W.identity))
    for name, other in (("hstar_w0", direct), ("transport_w1", moved)):
        if total != other:
            bad.append({"path": name, "sum": total.to_json(), "other": other.to_json()})
    if ungrade(graded) != total:
        bad.append({"path": "graded"})
    ones = {e: RatPoly.constant(W.irreducibles[e].dim) for e in range(len(W.irreducibles))}
    at_w0 = {e: ones[e].shift(shift_exponent(table, e)) * (-1) ** W.b(e) for e in ones}
    if weight_shift_expansion(table, at_w0) != graded:
        bad.append({"path": "weight_shift_w1"})
    return bad


def expansion_dump(table: FamilyTable, classes: Iterable[int] | None = None) -> list[dict]:
    W = table.W
    cs = range(len(W.classes)) if classes is None else classes
    return [{"w": W.classes[c].label, "coefficients": hstar_expansion_class(table, c).to_json()} for c in cs]


__all__ = [
    "VirtualUnip", "ScalarRelationError", "multiplicity_R_E", "hstar_expansion", "hstar_expansion_class",
    "r_e_expansion", "transport", "verify_theorem_0_4", "weight_shift_expansion", "ungrade",
    "check_scalar_relation", "verify_theorem_4_3", "verify_theorem_4_3_reflected",
    "section_5_4_sums", "verify_section_5_4", "expansion_dump", "xi_E",
]
