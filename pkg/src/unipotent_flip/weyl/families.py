"""Partition of Irr(W) into families, with the injection ``E -> m_E``.

Each family carries a model of M(Gamma_c): the symbol model
(:class:`~unipotent_flip.symbols.ClassicalFamily`) in types B, C, D, and
:class:`~unipotent_flip.mgamma.MGamma` for G2/F4 and for singletons.
Both expose ``elements``, ``unit``, ``invertibles``, ``weight``,
``pairing``, ``convolve_star`` and ``label``.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Any

from ..groups import trivial_group
from ..mgamma import MGamma
from ..symbols import ClassicalFamily, LambdaY, b_prime_formula, b_prime_parity
from .core import TypeB, TypeD, WeylError, WeylGroup


@lru_cache(maxsize=None)
def _trivial_model() -> MGamma:
    return MGamma(trivial_group())


class BPrimeFormulaWarning(UserWarning):
    """The integer ``sum(B) - sum(Y)`` differs from ``b_E - b_special`` (the parities agree)."""


@dataclass
class Family:
    id: int
    gamma: str
    model: Any
    members: list[int]  # indices into W.irreducibles
    special: int
    m: dict[int, Any]  # E -> m_E
    classical: ClassicalFamily | None = None
    b_prime: dict[int, int] = field(default_factory=dict)
    b_prime_formula: dict[int, int] = field(default_factory=dict)  # classical only

    def __len__(self):
        return len(self.members)

    @property
    def size_M(self) -> int:
        return len(self.model.elements)

    def m_of(self, e: int):
        return self.m[e]

    def member_of(self, m) -> int | None:
        for e, x in self.m.items():
            if x == m:
                return e
        return None

    def label(self, m) -> str:
        return self.model.label(m)


@dataclass
class FamilyTable:
    W: WeylGroup
    families: list[Family]
    family_of: dict[int, int]

    def __iter__(self):
        return iter(self.families)

    def __len__(self):
        return len(self.families)

    def __getitem__(self, k) -> Family:
        return self.families[k]

    @property
    def n_unipotent(self) -> int:
        return sum(f.size_M for f in self.families)

    def family_containing(self, e: int) -> Family:
        return self.families[self.family_of[e]]

    def find(self, label: str) -> Family:
        """Family by id (``"3"``) or by the label of any member."""
        if label.isdigit() and int(label) < len(self.families):
            return self.families[int(label)]
        e = self.W.irr_index(label)
        return self.family_containing(e)


def lambda_of(W: WeylGroup, e: int) -> LambdaY | None:
    """``Lambda_Y`` attached to a classical irreducible (None for degenerate D symbols)."""
    sym = W.symbol(e)
    if W.kind == "D" and sym.top == sym.bottom:
        return None
    fam = ClassicalFamily.from_symbol(W.kind, sym)
    return LambdaY(fam, frozenset(sym.bottom) - frozenset(fam.Z2))


def _finish(W: WeylGroup, fams: list[Family]) -> FamilyTable:
    fams.sort(key=lambda f: (W.b(f.special), f.special))
    family_of = {}
    for k, f in enumerate(fams):
        f.id = k
        for e in f.members:
            if e in family_of:
                raise WeylError(f"{W.irreducibles[e].label} lies in two families")
            family_of[e] = k
            f.b_prime[e] = W.b(e) - W.b(f.special)
    if len(family_of) != len(W.irreducibles):
        raise WeylError("families do not cover Irr(W)")
    off = []
    for f in fams:
        if f.classical is None:
            continue
        f.b_prime_formula = {e: b_prime_formula(f.m[e]) for e in f.members}
        off += [W.irreducibles[e].label for e in f.members if f.b_prime_formula[e] != f.b_prime[e]]
    if off:
        warnings.warn(f"{W.name}: integer b' formula differs from b_E - b_special for {len(off)} "
                      f"irreducibles (e.g. {off[0]}); parities agree", BPrimeFormulaWarning, stacklevel=2)
    return FamilyTable(W, fams, family_of)


def _classical_families(W: WeylGroup) -> FamilyTable:
    groups: dict[Any, list[tuple[int, LambdaY | None]]] = {}
    for e in range(len(W.irreducibles)):
        lam = lambda_of(W, e)
        key = ("deg", e) if lam is None else lam.family.key()
        groups.setdefault(key, []).append((e, lam))
    fams = []
    for key, items in groups.items():
        if items[0][1] is None:
            (e, _), = items
            triv = _trivial_model()
            fams.append(Family(0, "1", triv, [e], e, {e: triv.unit}))
            continue
        cf = items[0][1].family
        if cf.rank != W.rank:
            raise WeylError(f"rank equation fails for {cf.special_symbol}")
        m = {e: lam for e, lam in items}
        if sorted(m.values()) != sorted(cf.members()):
            raise WeylError(f"family {cf.special_symbol}: members do not match |Y| = d")
        special = [e for e, lam in items if lam == cf.unit]
        if len(special) != 1:
            raise WeylError(f"family {cf.special_symbol}: no unique special member")
        for e, lam in items:
            if lam is not None and b_prime_parity(lam) != (W.b(e) - W.b(special[0])) % 2:
                raise WeylError(f"b' parity mismatch for {W.irreducibles[e].label}")
        name = "1" if cf.gamma_order == 1 else f"(Z/2)^{cf.gamma_order.bit_length() - 1}"
        fams.append(Family(0, name, cf, [e for e, _ in items], special[0], m, classical=cf))
    return _finish(W, fams)


def _exceptional_families(W) -> FamilyTable:
    from .exceptional_data import load_data, m_from_name, m_gamma

    entry = load_data()["types"][W.name]
    rows = {r["label"]: r for r in entry["irreducibles"]}
    fams = []
    for f in entry["families"]:
        M = m_gamma(f["gamma"])
        members = [W.irr_index(x) for x in f["members"]]
        m = {W.irr_index(x): m_from_name(M, rows[x]["m"]) for x in f["members"]}
        fams.append(Family(0, f["gamma"], M, members, W.irr_index(f["special"]), m))
    return _finish(W, fams)


def build_families(W: WeylGroup) -> FamilyTable:
    if isinstance(W, (TypeB, TypeD)):
        return _classical_families(W)
    if W.kind in ("G", "F"):
        return _exceptional_families(W)
    raise WeylError(f"no family data for {W.name}")
