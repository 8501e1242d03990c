"""Embedded family data for G2 and F4.

The data file ``data/exceptional.json`` has this schema::

    {
      "schema": 1,
      "label_rule": str,                 # how ' and '' are told apart
      "types": {
        "G2" | "F4": {
          "irreducibles": [
            {"label": "phi<d>,<b>[' | '']", "dim": int, "b": int,
             "fake_degree": [[exp, "num/den"], ...],
             "family": int, "m": [class, character], "b_prime_parity": 0 | 1}
          ],
          "families": [
            {"id": int, "gamma": "1" | "S2" | "S3" | "S4",
             "special": label, "members": [label, ...]}
          ]
        }
      }
    }

``m`` names an element of M(Gamma) as ``[class, character]``: the class is
``"1"`` or ``"g"`` followed by the nontrivial cycle lengths of a
representative (``"g2.2"``), and the character is the row index in the
deterministic character table of the centralizer of that representative.

Family membership is the standard one. The assignment ``E -> m_E`` was
produced by :func:`derive_type_data`, which searches for injections with the
special member at ``(1,1)`` and every ``m_E = (g, rho)`` with ``rho(g) = rho(1)``,
such that the dimension vector is fixed by the Fourier matrix and every degree ``sum_E <m_E, m> FD_E`` is a positive
multiple of a power of ``u`` times cyclotomic polynomials.
"""

from __future__ import annotations

import itertools
import json
import math
from fractions import Fraction
from functools import lru_cache
from importlib import resources
from typing import Any

from ..cyclotomic import Cyc, cyclotomic_factorization
from ..exact_arith import RatPoly
from ..groups import pmul, symmetric_group, trivial_group
from ..mgamma import MElt, MGamma
from .core import IrrW, WeylError

SCHEMA_VERSION = 1

LABEL_RULE = (
    "Characters sharing (dim, b) are told apart by their value on a long-root "
    "reflection, then by their value on s_a s_b with a long, b short and orthogonal; "
    "the larger value gets ' and the smaller gets ''."
)

# Families with nontrivial Gamma: (Gamma, special, members). Everything else is a singleton.
FAMILY_SEEDS: dict[str, list[tuple[str, str, list[str]]]] = {
    "G2": [("S3", "phi2,1", ["phi2,1", "phi2,2", "phi1,3'", "phi1,3''"])],
    "F4": [
        ("S2", "phi4,1", ["phi4,1", "phi2,4'", "phi2,4''"]),
        ("S2", "phi4,13", ["phi4,13", "phi2,16'", "phi2,16''"]),
        ("S4", "phi12,4", [
            "phi12,4", "phi16,5", "phi6,6'", "phi6,6''", "phi9,6'", "phi9,6''",
            "phi4,7'", "phi4,7''", "phi4,8", "phi1,12'", "phi1,12''",
        ]),
    ],
}


def gamma_group(name: str):
    if name == "1":
        return trivial_group()
    if name.startswith("S"):
        return symmetric_group(int(name[1:]))
    raise WeylError(f"unknown Gamma {name!r}")


@lru_cache(maxsize=None)
def m_gamma(name: str) -> MGamma:
    return MGamma(gamma_group(name))


def m_name(M: MGamma, m: MElt) -> list:
    g, rho = M.label(m)[1:-1].split(",")
    return [g, int(rho)]


def m_from_name(M: MGamma, name) -> MElt:
    for m in M.elements:
        if m_name(M, m) == [name[0], int(name[1])]:
            return m
    raise WeylError(f"no element {name!r} in M(Gamma)")


# labels


def _discriminators(W) -> list[int]:
    long_c = W.reflection_class(True)
    short_c = W.reflection_class(False)
    out = [long_c]
    for a in W.group.class_members(long_c):
        for b in W.group.class_members(short_c):
            ab = pmul(a, b)
            if ab == pmul(b, a):
                out.append(W.class_of(ab))
                return out
    return out


def attach_labels(W) -> None:
    """Give each irreducible of ``W`` its ``phi{d},{b}`` label (in place)."""
    disc = _discriminators(W)
    groups: dict[tuple[int, int], list[int]] = {}
    for e, E in enumerate(W.irreducibles):
        groups.setdefault((E.dim, W.b(e)), []).append(e)
    labels = {}
    for (d, b), idx in groups.items():
        base = f"phi{d},{b}"
        if len(idx) == 1:
            labels[idx[0]] = base
            continue
        if len(idx) != 2:
            raise WeylError(f"{W.name}: {len(idx)} characters share (dim, b) = ({d}, {b})")
        keys = [tuple(W.char(e, c) for c in disc) for e in idx]
        if keys[0] == keys[1]:
            raise WeylError(f"{W.name}: cannot tell apart the two characters {base}")
        first, second = idx if keys[0] > keys[1] else idx[::-1]
        labels[first], labels[second] = base + "'", base + "''"
    W.irreducibles = [IrrW(labels[e], E.key, E.dim) for e, E in enumerate(W.irreducibles)]
    order = sorted(range(len(W.irreducibles)), key=lambda e: (W.b(e), W.irreducibles[e].dim, W.irreducibles[e].label))
    W.reorder_irreducibles(order)


# derivation


def degree_polys(M: MGamma, assignment: dict[str, MElt], fds: dict[str, RatPoly]) -> dict[MElt, RatPoly]:
    """``D_m = sum_E <m_E, m> FD_E`` for every ``m``."""
    out = {}
    for m in M.elements:
        tot = RatPoly()
        for lab, mE in assignment.items():
            tot = tot + fds[lab] * M.pairing(mE, m)
        out[m] = tot
    return out


def degrees_acceptable(D: dict[MElt, RatPoly]) -> bool:
    aA = set()
    for p in D.values():
        f = cyclotomic_factorization(p)
        if f is None or f[0] <= 0:
            return False
        aA.add((p.valuation(), p.degree()))
    return len(aA) == 1


def _int_rows(M: MGamma) -> list[list[int]]:
    """A basis of the row space of ``I - S``, scaled to integers."""
    S = M.pairing_matrix()
    n = len(S)
    rows = [[Fraction(int(i == j)) - S[i][j] for j in range(n)] for i in range(n)]
    basis: list[list[Fraction]] = []
    pivots: list[int] = []
    kept = []
    for r in rows:
        v = list(r)
        for b, p in zip(basis, pivots):
            if v[p]:
                f = v[p] / b[p]
                v = [x - f * y for x, y in zip(v, b)]
        nz = [j for j, x in enumerate(v) if x]
        if nz:
            basis.append(v)
            pivots.append(nz[0])
            kept.append(r)
    out = []
    for r in kept:
        den = 1
        for x in r:
            den = math.lcm(den, x.denominator)
        out.append([int(x * den) for x in r])
    return out


def search_assignments(M: MGamma, special: str, dims: dict[str, int], fds: dict[str, RatPoly]) -> list[dict[str, MElt]]:
    """All injections ``E -> m_E`` (special to the unit) passing the degree tests."""
    rows = _int_rows(M)
    n = len(M.elements)
    unit = M.index(M.unit)
    one = Cyc.rational(M.conductor, 1)
    free = [j for j in range(n) if j != unit and M.twist(M.elements[j]) == one]
    by_dim: dict[int, list[str]] = {}
    for lab, d in dims.items():
        if lab != special:
            by_dim.setdefault(d, []).append(lab)
    groups = sorted(by_dim.items(), reverse=True)

    def contrib(d, pos):
        return tuple(d * sum(r[j] for j in pos) for r in rows)

    def enumerate_half(gs):
        out: dict[tuple, list] = {}

        def rec(k, used, key, chosen):
            if k == len(gs):
                out.setdefault(key, []).append(chosen)
                return
            d, labs = gs[k]
            for pos in itertools.combinations([j for j in free if j not in used], len(labs)):
                c = contrib(d, pos)
                rec(k + 1, used | set(pos), tuple(a + b for a, b in zip(key, c)), chosen + [pos])

        rec(0, frozenset(), tuple(0 for _ in rows), [])
        return out

    half = (len(groups) + 1) // 2
    left, right = enumerate_half(groups[:half]), enumerate_half(groups[half:])
    base = contrib(dims[special], (unit,))
    found = []
    for key, lchoices in left.items():
        need = tuple(-a - b for a, b in zip(key, base))
        for rchoice in right.get(need, ()):
            for lchoice in lchoices:
                pos_lists = lchoice + rchoice
                flat = [j for p in pos_lists for j in p]
                if len(set(flat)) == len(flat):
                    found.append(pos_lists)
    results = []
    for pos_lists in found:
        per_group = []
        for (d, labs), pos in zip(groups, pos_lists):
            per_group.append([dict(zip(perm, pos)) for perm in itertools.permutations(labs)])
        for combo in itertools.product(*per_group):
            assignment = {special: M.unit}
            for part in combo:
                assignment.update({lab: M.elements[j] for lab, j in part.items()})
            if degrees_acceptable(degree_polys(M, assignment, fds)):
                results.append(assignment)
    return results


def derive_type_data(W) -> dict[str, Any]:
    """Recompute the data-file entry for ``W`` from the family seeds."""
    labels = [E.label for E in W.irreducibles]
    fds = {E.label: W.fake_degree(e) for e, E in enumerate(W.irreducibles)}
    bs = {E.label: W.b(e) for e, E in enumerate(W.irreducibles)}
    dims = {E.label: E.dim for E in W.irreducibles}
    seeds = FAMILY_SEEDS[W.name]
    seen = {lab for _g, _s, mem in seeds for lab in mem}
    fams = []
    for lab in labels:
        if lab not in seen:
            fams.append(("1", lab, [lab]))
    fams += seeds
    fams.sort(key=lambda f: min(labels.index(x) for x in f[2]))
    irr_rows: dict[str, dict] = {}
    families = []
    for fid, (gname, special, members) in enumerate(fams):
        M = m_gamma(gname)
        sols = search_assignments(M, special, {x: dims[x] for x in members}, fds)
        if not sols:
            raise WeylError(f"{W.name}: no admissible assignment for family of {special}")
        sols.sort(key=lambda a: [M.index(a[x]) for x in members])
        chosen = sols[0]
        families.append({"id": fid, "gamma": gname, "special": special, "members": members,
                         "n_solutions": len(sols)})
        for x in members:
            irr_rows[x] = {
                "label": x, "dim": dims[x], "b": bs[x], "fake_degree": fds[x].to_json(),
                "family": fid, "m": m_name(M, chosen[x]), "b_prime_parity": (bs[x] - bs[special]) % 2,
            }
    return {"irreducibles": [irr_rows[x] for x in labels], "families": families}


# loading and validation


def load_data() -> dict[str, Any]:
    text = resources.files(__package__).joinpath("data/exceptional.json").read_text()
    return json.loads(text)


def validate_type(W, entry: dict[str, Any]) -> list[str]:
    """Problems found when checking ``entry`` against the computed group ``W``."""
    problems = []
    rows = {r["label"]: r for r in entry["irreducibles"]}
    computed = {E.label: e for e, E in enumerate(W.irreducibles)}
    if set(rows) != set(computed):
        problems.append(f"labels differ: file {sorted(set(rows) - set(computed))}, "
                        f"computed {sorted(set(computed) - set(rows))}")
        return problems
    for lab, r in rows.items():
        e = computed[lab]
        if r["dim"] != W.irreducibles[e].dim:
            problems.append(f"{lab}: dim {r['dim']} != {W.irreducibles[e].dim}")
        if r["b"] != W.b(e):
            problems.append(f"{lab}: b {r['b']} != {W.b(e)}")
        if RatPoly.from_json(r["fake_degree"]) != W.fake_degree(e):
            problems.append(f"{lab}: fake degree mismatch")
    member_count: dict[str, int] = {}
    for fam in entry["families"]:
        M = m_gamma(fam["gamma"])
        members = fam["members"]
        for x in members:
            member_count[x] = member_count.get(x, 0) + 1
            if rows[x]["family"] != fam["id"]:
                problems.append(f"{x}: family id {rows[x]['family']} != {fam['id']}")
        try:
            assignment = {x: m_from_name(M, rows[x]["m"]) for x in members}
        except WeylError as exc:
            problems.append(str(exc))
            continue
        if len(set(assignment.values())) != len(members):
            problems.append(f"family {fam['id']}: m_E is not injective")
        if assignment[fam["special"]] != M.unit:
            problems.append(f"family {fam['id']}: special member not at (1,1)")
        sq = sum(Fraction(rows[x]["dim"]) ** 2 for x in members)
        dims_vec = {m: 0 for m in M.elements}
        for x in members:
            dims_vec[assignment[x]] = rows[x]["dim"]
        for m in M.elements:
            s = sum(M.pairing(m, n) * dims_vec[n] for n in M.elements)
            if s != dims_vec[m]:
                problems.append(f"family {fam['id']}: dimension vector not Fourier-fixed at {M.label(m)}")
                break
        if sq <= 0:
            problems.append(f"family {fam['id']}: empty")
        bsp = rows[fam["special"]]["b"]
        for x in members:
            bp = rows[x]["b"] - bsp
            if bp < 0:
                problems.append(f"{x}: b' = {bp} < 0")
            if bp % 2 != rows[x]["b_prime_parity"]:
                problems.append(f"{x}: b' parity mismatch")
        fds = {x: RatPoly.from_json(rows[x]["fake_degree"]) for x in members}
        if not degrees_acceptable(degree_polys(M, assignment, fds)):
            problems.append(f"family {fam['id']}: degree polynomials not admissible")
    if set(member_count) != set(rows) or any(v != 1 for v in member_count.values()):
        problems.append("families do not partition Irr(W)")
    return problems


def validate_all(data: dict[str, Any] | None = None) -> dict[str, list[str]]:
    from .exceptional import Exceptional

    data = load_data() if data is None else data
    out = {}
    if data.get("schema") != SCHEMA_VERSION:
        out["schema"] = [f"schema {data.get('schema')!r} != {SCHEMA_VERSION}"]
    for name in ("G2", "F4"):
        if name not in data.get("types", {}):
            out[name] = ["missing"]
            continue
        out[name] = validate_type(Exceptional(name), data["types"][name])
    return out


def derive_all() -> dict[str, Any]:
    from .exceptional import Exceptional

    return {
        "schema": SCHEMA_VERSION,
        "label_rule": LABEL_RULE,
        "types": {name: derive_type_data(Exceptional(name)) for name in ("G2", "F4")},
    }
