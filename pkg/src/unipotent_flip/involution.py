"""The element ``m(c)``, the involution ``m -> m^! = m(c) * m`` and the degree
polynomials ``D_m = sum_E Delta(m) <m_E, m> FD_E`` of a family.

>>> from unipotent_flip.weyl import family_table
>>> T = family_table("B", 2)
>>> fam = T.find("1.1")
>>> [str(degree_polynomial(T, fam, m)) for m in fam.model.elements]
['1/2*u^3 + 1/2*u', '1/2*u^3 + u^2 + 1/2*u', '1/2*u^3 + 1/2*u', '1/2*u^3 - u^2 + 1/2*u']
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from .exact_arith import RatPoly, format_rat
from .symbols import closed_form_mc as _symbol_closed_form
from .weyl.families import Family, FamilyTable


class IntegrityError(RuntimeError):
    """A statement that must hold for every family failed."""


class AmbiguousBranch(ValueError):
    pass


@dataclass(frozen=True)
class McSolution:
    solutions: tuple

    def __len__(self):
        return len(self.solutions)

    @property
    def unique(self):
        if len(self.solutions) != 1:
            raise AmbiguousBranch(f"{len(self.solutions)} solutions; supply a branch")
        return self.solutions[0]


@dataclass(frozen=True)
class UnipotentRep:
    family: int
    m: Any
    label: str

    @property
    def id(self) -> str:
        return f"{self.family}:{self.label}"


def delta(fam: Family, m) -> int:
    """1, except for two-member families where it is -1 off the image of the family."""
    if len(fam) != 2:
        return 1
    return 1 if fam.member_of(m) is not None else -1


# Theorem 1.3


def satisfies_1_3(fam: Family, s) -> bool:
    M = fam.model
    for e in fam.members:
        mE = fam.m[e]
        if M.pairing(mE, s) != (-1) ** fam.b_prime[e] * M.weight(mE):
            return False
    return True


def solve_mc(fam: Family) -> McSolution:
    """Every invertible ``s`` with ``<m_E, s> = (-1)^{b'_E} dim(rho)/|Z(g)|`` for all ``E``."""
    sols = tuple(s for s in fam.model.invertibles if satisfies_1_3(fam, s))
    if not sols:
        raise IntegrityError(f"family {fam.id}: no element satisfies the m(c) condition")
    return McSolution(sols)


def closed_form_mc(fam: Family):
    """``m(c)`` from its explicit description, without searching."""
    M = fam.model
    if fam.classical is not None:
        return _symbol_closed_form(fam.classical)
    if fam.gamma == "1":
        return M.unit
    odd = [e for e in fam.members if fam.b_prime[e] % 2]
    if fam.gamma in ("S3", "S4", "S5"):
        return M.sign_element() if odd else M.unit
    if fam.gamma == "S2":
        # M(Z/2) = F_2^2 with <(x, chi), (y, psi)> = (1/2)(-1)^{x psi + y chi}: the
        # linear form b' mod 2 on the basis {(g,1), (1,sgn)} is realised by (g^f(1,sgn), sgn^f(g,1)).
        nonspecial = {fam.m[e]: fam.b_prime[e] % 2 for e in fam.members if e != fam.special}
        g_one = next(m for m in nonspecial if m.g_class == 1)
        one_sgn = next(m for m in nonspecial if m.g_class == 0)
        return type(M.unit)(nonspecial[one_sgn], nonspecial[g_one])
    raise IntegrityError(f"no closed form for Gamma = {fam.gamma}")


def m_c(fam: Family, branch: int | None = None):
    sol = solve_mc(fam)
    if len(sol) == 1:
        return sol.solutions[0]
    if branch is None:
        raise AmbiguousBranch(f"family {fam.id} has {len(sol)} choices of m(c); supply a branch")
    return sol.solutions[branch]


def bang(fam: Family, m, branch: int | None = None):
    """``m^! = m(c) * m``."""
    return fam.model.convolve_star(m_c(fam, branch), m)


# Proposition 1.4


def verify_prop_1_4(fam: Family, branch: int | None = None) -> list[dict]:
    """Counterexamples to ``<m_E, m(c)*m> = (-1)^{b'_E} <m_E, m>`` (empty if it holds)."""
    M = fam.model
    mc = m_c(fam, branch)
    bad = []
    for e in fam.members:
        sign = (-1) ** fam.b_prime[e]
        for m in M.elements:
            lhs = M.pairing(fam.m[e], M.convolve_star(mc, m))
            rhs = sign * M.pairing(fam.m[e], m)
            if lhs != rhs:
                bad.append({"E": e, "m": M.label(m), "lhs": format_rat(lhs), "rhs": format_rat(rhs)})
    return bad


# degrees and Theorem 2.2


def degree_polynomial(table: FamilyTable, fam: Family, m) -> RatPoly:
    """``D_m(u)`` from the fake degrees of the family."""
    M = fam.model
    tot = RatPoly()
    d = delta(fam, m)
    for e in fam.members:
        c = M.pairing(fam.m[e], m)
        if c:
            tot = tot + table.W.fake_degree(e) * (d * c)
    return tot


def degree_polynomials(table: FamilyTable, fam: Family) -> dict:
    return {m: degree_polynomial(table, fam, m) for m in fam.model.elements}


def a_A(table: FamilyTable, fam: Family) -> tuple[int, int]:
    """``(a_c, A_c)``; raises if the members disagree."""
    pairs = {D.degree_and_valuation()[::-1] for D in degree_polynomials(table, fam).values()}
    if len(pairs) != 1:
        raise IntegrityError(f"family {fam.id}: (a, A) not constant: {sorted(pairs)}")
    return pairs.pop()


def a_A_well_defined(table: FamilyTable, fam: Family) -> bool:
    try:
        a_A(table, fam)
    except IntegrityError:
        return False
    return True


def verify_theorem_2_2(table: FamilyTable, fam: Family, branch: int | None = None) -> list[dict]:
    """Counterexamples to ``D_{m^!}(u) = (-1)^{A_c} D_m(-u)`` and to
    ``Delta(m^!) Delta(m) = (-1)^{a_c + A_c}``.

    The left side evaluates the degree formula at ``m^!``; the right side
    substitutes ``-u`` into the polynomial of ``m``.
    """
    M = fam.model
    a, A = a_A(table, fam)
    bad = []
    for m in M.elements:
        mb = bang(fam, m, branch)
        lhs = degree_polynomial(table, fam, mb)
        rhs = degree_polynomial(table, fam, m).substitute_neg() * (-1) ** A
        if lhs != rhs:
            bad.append({"m": M.label(m), "lhs": lhs.to_json(), "rhs": rhs.to_json()})
        if delta(fam, mb) * delta(fam, m) != (-1) ** (a + A):
            bad.append({"m": M.label(m), "delta": [delta(fam, mb), delta(fam, m)], "a": a, "A": A})
    return bad


# reports


def unipotents(table: FamilyTable) -> list[UnipotentRep]:
    return [UnipotentRep(f.id, m, f.label(m)) for f in table for m in f.model.elements]


def family_report(table: FamilyTable, fam: Family) -> dict:
    W = table.W
    sol = solve_mc(fam)
    closed = closed_form_mc(fam)
    thm13 = {"pass": len(sol) == 1 and sol.solutions[0] == closed,
             "solutions": [fam.label(s) for s in sol.solutions], "closed_form": fam.label(closed)}
    ok_aA = a_A_well_defined(table, fam)
    a, A = a_A(table, fam) if ok_aA else (None, None)
    p14 = verify_prop_1_4(fam) if len(sol) == 1 else []
    t22 = verify_theorem_2_2(table, fam) if (len(sol) == 1 and ok_aA) else [{"skipped": True}]
    out = {
        "family": fam.id,
        "special": W.irreducibles[fam.special].label,
        "gamma": fam.gamma,
        "size": len(fam),
        "m_c": fam.label(sol.solutions[0]),
        "a": a,
        "A": A,
        "checks": {
            "thm1_3": thm13,
            "prop1_4": {"pass": not p14, "counterexamples": p14},
            "thm2_2": {"pass": not t22, "counterexamples": t22},
            "aA": {"pass": ok_aA},
        },
    }
    # informational: the integer sum(B) - sum(Y) where it differs from b_E - b_special
    off = {W.irreducibles[e].label: [v, fam.b_prime[e]] for e, v in fam.b_prime_formula.items() if v != fam.b_prime[e]}
    if off:
        out["b_prime_formula_differs"] = off
    return out


def report_passes(rep: dict) -> bool:
    return all(v["pass"] for v in rep["checks"].values())
