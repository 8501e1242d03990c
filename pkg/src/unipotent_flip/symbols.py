"""Two-row symbols and the F_2-model of families in types B, C and D.

A family is recorded by the symbol of its special member,
``(Z2 + A | Z2 + B)``, where ``Z2`` are the entries occurring in both rows and
``Z1 = A + B`` the singles. The set M(Gamma_c) is modelled by symbols
``Lambda_Y = (Z2 + (Z1 - Y) | Z2 + Y)``; the map ``Lambda_Y -> Y # B`` turns
it into an F_2-vector space (taken modulo ``{0, Z1}`` in type D), with
convolution becoming addition.

>>> fam = ClassicalFamily("B", Z2=(), A=(0, 2), B=(1,))
>>> [sorted(x.Y) for x in fam.elements]
[[0], [1], [2], [0, 1, 2]]
>>> fam.pairing(LambdaY(fam, frozenset({0})), LambdaY(fam, frozenset({2})))
Fraction(-1, 2)
>>> sorted(closed_form_mc(fam).Y)
[0, 1, 2]
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

__all__ = [
    "Symbol", "ClassicalFamily", "LambdaY", "SymbolError",
    "symmetric_difference", "enumerate_MGamma_symbols", "symbol_pairing",
    "b_prime_parity", "b_prime_formula", "compute_Zstar", "closed_form_mc",
    "odd_entry_swap_view",
]


class SymbolError(ValueError):
    pass


def symmetric_difference(u: Iterable[int], v: Iterable[int]) -> frozenset[int]:
    return frozenset(u) ^ frozenset(v)


@dataclass(frozen=True)
class Symbol:
    """A two-row symbol with strictly increasing rows."""

    top: tuple[int, ...]
    bottom: tuple[int, ...]

    def __post_init__(self):
        for row in (self.top, self.bottom):
            if any(a >= b for a, b in zip(row, row[1:])) or any(a < 0 for a in row):
                raise SymbolError(f"rows must be strictly increasing naturals: {row}")

    @property
    def defect(self) -> int:
        return len(self.top) - len(self.bottom)

    def entries(self) -> list[int]:
        return sorted(self.top + self.bottom)

    def shift(self, k: int = 1) -> "Symbol":
        pre = tuple(range(k))
        return Symbol(pre + tuple(a + k for a in self.top), pre + tuple(b + k for b in self.bottom))

    def reduced(self) -> "Symbol":
        top, bot = self.top, self.bottom
        while top and bot and top[0] == 0 and bot[0] == 0:
            top = tuple(a - 1 for a in top[1:])
            bot = tuple(b - 1 for b in bot[1:])
        return Symbol(top, bot)

    def swapped(self) -> "Symbol":
        return Symbol(self.bottom, self.top)

    def rank(self) -> int:
        """Rank ``n`` from the entry-sum equation (defect 1 or 0)."""
        s = sum(self.top) + sum(self.bottom)
        m = min(len(self.top), len(self.bottom))
        if abs(self.defect) == 1:
            return s - m * m
        if self.defect == 0:
            return s - (m * m - m)
        raise SymbolError(f"no rank for defect {self.defect}")

    def __str__(self):
        return "(" + ",".join(map(str, self.top)) + "|" + ",".join(map(str, self.bottom)) + ")"

    @classmethod
    def parse(cls, text: str) -> "Symbol":
        text = text.strip()
        if not (text.startswith("(") and text.endswith(")") and "|" in text):
            raise SymbolError(f"bad symbol text: {text!r}")
        top, bot = text[1:-1].split("|")
        conv = lambda s: tuple(int(a) for a in s.split(",") if a.strip())
        return cls(conv(top), conv(bot))

    def pretty(self) -> str:
        """Two-row ASCII rendering with staggered rows."""
        w = max([len(str(a)) for a in self.top + self.bottom] + [1])
        fmt = lambda row: " ".join(str(a).rjust(w) for a in row)
        pad = " " * ((w + 1) // 2) if self.defect >= 1 else ""
        return f"{fmt(self.top)}\n{pad}{fmt(self.bottom)}"


@dataclass(frozen=True)
class ClassicalFamily:
    """Special symbol data of a family in type B/C (``kind="B"``) or D."""

    kind: str
    Z2: tuple[int, ...]
    A: tuple[int, ...]
    B: tuple[int, ...]
    elements: list = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        kind = "B" if self.kind in ("B", "C") else self.kind
        if kind not in ("B", "D"):
            raise SymbolError(f"unknown family kind {self.kind!r}")
        object.__setattr__(self, "kind", kind)
        for name in ("Z2", "A", "B"):
            object.__setattr__(self, name, tuple(sorted(getattr(self, name))))
        z2, a, b = set(self.Z2), set(self.A), set(self.B)
        if len(z2 | a | b) != len(self.Z2) + len(self.A) + len(self.B):
            raise SymbolError("Z2, A, B must be pairwise disjoint")
        d = len(self.B)
        singles = sorted(a | b)
        if kind == "B":
            if len(self.A) != d + 1:
                raise SymbolError("type B needs |A| = |B| + 1")
            pattern = [x in a for x in singles] == [i % 2 == 0 for i in range(2 * d + 1)]
        else:
            if len(self.A) != d or d == 0:
                raise SymbolError("type D needs |A| = |B| = d > 0")
            pattern = [x in b for x in singles] == [i % 2 == 0 for i in range(2 * d)]
            if sum(singles) % 2:
                raise SymbolError("type D needs an even sum of singles")
        if not pattern:
            raise SymbolError("singles of A and B do not interleave as in a special symbol")
        object.__setattr__(self, "elements", self._enumerate())

    # basic data

    @property
    def d(self) -> int:
        return len(self.B)

    @property
    def Z1(self) -> tuple[int, ...]:
        return tuple(sorted(self.A + self.B))

    @property
    def Z1_odd(self) -> frozenset[int]:
        return frozenset(z for z in self.Z1 if z % 2)

    @property
    def Z1_even(self) -> frozenset[int]:
        return frozenset(z for z in self.Z1 if z % 2 == 0)

    @property
    def rank(self) -> int:
        return self.special_symbol.rank()

    @property
    def special_symbol(self) -> Symbol:
        return Symbol(tuple(sorted(self.Z2 + self.A)), tuple(sorted(self.Z2 + self.B)))

    @property
    def scale(self) -> Fraction:
        """``dim(rho)/|Z(g)|``, the same for every element."""
        return Fraction(1, 2 ** self.d) if self.kind == "B" else Fraction(1, 2 ** (self.d - 1))

    @property
    def gamma_order(self) -> int:
        return 2 ** self.d if self.kind == "B" else 2 ** (self.d - 1)

    def key(self) -> tuple:
        return (self.kind, self.Z2, self.Z1)

    @classmethod
    def from_symbol(cls, kind: str, sym: Symbol) -> "ClassicalFamily":
        """Family of a (possibly non-special) symbol."""
        sym = sym.reduced()
        top, bot = set(sym.top), set(sym.bottom)
        z2 = top & bot
        singles = sorted(top ^ bot)
        if kind in ("B", "C"):
            A = singles[0::2]
            B = singles[1::2]
        else:
            B = singles[0::2]
            A = singles[1::2]
        return cls(kind, tuple(z2), tuple(A), tuple(B))

    def to_json(self) -> dict:
        return {"kind": self.kind, "n": self.rank, "Z2": list(self.Z2), "A": list(self.A), "B": list(self.B)}

    @classmethod
    def from_json(cls, data: dict) -> "ClassicalFamily":
        fam = cls(data["kind"], tuple(data["Z2"]), tuple(data["A"]), tuple(data["B"]))
        if "n" in data and data["n"] != fam.rank:
            raise SymbolError(f"rank mismatch: declared {data['n']}, entry sum gives {fam.rank}")
        return fam

    # M(Gamma_c) as a model

    def _enumerate(self) -> list["LambdaY"]:
        z1 = self.Z1
        out, seen = [], set()
        for r in range(len(z1) + 1):
            if (r - self.d) % 2:
                continue
            for ys in itertools.combinations(z1, r):
                x = LambdaY(self, frozenset(ys))
                if x not in seen:
                    seen.add(x)
                    out.append(x)
        return out

    @property
    def unit(self) -> "LambdaY":
        return LambdaY(self, frozenset(self.B))

    @property
    def invertibles(self) -> list["LambdaY"]:
        return list(self.elements)

    def members(self) -> list["LambdaY"]:
        """Image of the family: the ``Lambda_Y`` with ``|Y| = d``."""
        return [x for x in self.elements if x.is_member()]

    def weight(self, x: "LambdaY") -> Fraction:
        return self.scale

    def pairing(self, x: "LambdaY", y: "LambdaY") -> Fraction:
        return symbol_pairing(x, y)

    def convolve_star(self, s: "LambdaY", x: "LambdaY") -> "LambdaY":
        if s.family != self or x.family != self:
            raise SymbolError("elements from different families")
        return LambdaY(self, s.Y ^ x.Y ^ frozenset(self.B))

    def from_vector(self, v: Iterable[int]) -> "LambdaY":
        return LambdaY(self, frozenset(v) ^ frozenset(self.B))

    def label(self, x: "LambdaY") -> str:
        return str(x.symbol())


@dataclass(frozen=True, eq=False)
class LambdaY:
    """The element ``Lambda_Y`` of M(Gamma_c) for a classical family."""

    family: ClassicalFamily
    Y: frozenset

    def __post_init__(self):
        Y = frozenset(self.Y)
        z1 = set(self.family.Z1)
        if not Y <= z1:
            raise SymbolError(f"{sorted(Y)} is not a subset of Z1 = {sorted(z1)}")
        if (len(Y) - self.family.d) % 2:
            raise SymbolError(f"|Y| = {len(Y)} has the wrong parity (d = {self.family.d})")
        if self.family.kind == "D":
            other = frozenset(z1 - Y)
            Y = min(Y, other, key=lambda s: sorted(s))
        object.__setattr__(self, "Y", Y)

    def _key(self):
        return (self.family.key(), tuple(sorted(self.Y)))

    def __eq__(self, other):
        return isinstance(other, LambdaY) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __lt__(self, other):
        return self._key() < other._key()

    def __repr__(self):
        return f"LambdaY({sorted(self.Y)} in {self.family.special_symbol})"

    @property
    def Y_tilde(self) -> frozenset:
        return frozenset(self.family.Z1) - self.Y

    def vector(self) -> frozenset:
        """``Y # B``; in type D the representative avoiding the largest single."""
        v = self.Y ^ frozenset(self.family.B)
        if self.family.kind == "D":
            w = frozenset(self.family.Z1) - v
            v = min(v, w, key=lambda s: (max(self.family.Z1) in s, sorted(s)))
        return v

    def is_member(self) -> bool:
        return len(self.Y) == self.family.d

    def symbol(self) -> Symbol:
        fam = self.family
        z2 = set(fam.Z2)
        return Symbol(tuple(sorted(z2 | (set(fam.Z1) - self.Y))), tuple(sorted(z2 | self.Y)))


def enumerate_MGamma_symbols(f: ClassicalFamily) -> list[LambdaY]:
    return list(f.elements)


def symbol_pairing(x: LambdaY, y: LambdaY) -> Fraction:
    if x.family != y.family:
        raise SymbolError("symbols belong to different families")
    sign = (-1) ** len(x.vector() & y.vector())
    return x.family.scale * sign


def compute_Zstar(f: ClassicalFamily) -> frozenset[int]:
    if f.kind != "B":
        raise SymbolError("Z1_* is defined for type B/C families")
    odd_ok = len(f.Z1_odd) % 2 == 0
    even_ok = len(f.Z1_even) % 2 == 0
    assert odd_ok != even_ok, "exactly one of Z1_odd, Z1_ev has even size when |Z1| is odd"
    return f.Z1_odd if odd_ok else f.Z1_even


def b_prime_parity(x: LambdaY) -> int:
    if not x.is_member():
        raise SymbolError("not a family member: |Y| != d")
    fam = x.family
    B = frozenset(fam.B)
    if fam.kind == "B":
        return len((x.Y ^ B) & compute_Zstar(fam)) % 2
    return len((B ^ x.Y) & fam.Z1_odd) % 2


def b_prime_formula(x: LambdaY) -> int:
    """The integer ``sum(B) - sum(Y)`` (type D: minus the smaller of the two row sums)."""
    if not x.is_member():
        raise SymbolError("not a family member: |Y| != d")
    fam = x.family
    if fam.kind == "B":
        return sum(fam.B) - sum(x.Y)
    return sum(fam.B) - min(sum(x.Y), sum(x.Y_tilde))


def closed_form_mc(f: ClassicalFamily) -> LambdaY:
    B = frozenset(f.B)
    if f.kind == "B":
        return LambdaY(f, B ^ compute_Zstar(f))
    return LambdaY(f, B ^ f.Z1_odd)


def odd_entry_swap_view(x: LambdaY) -> Symbol:
    """Symbol of ``m(c) * x`` obtained by moving odd singles across the rows.

    In type B/C, when ``Z1_odd`` has odd size the move lands in the wrong
    parity class; the rows are then exchanged as well (``Y -> Z1 - Y``).
    """
    fam = x.family
    sym = x.symbol()
    odd = fam.Z1_odd
    top = (set(sym.top) - odd) | (odd & set(sym.bottom))
    bot = (set(sym.bottom) - odd) | (odd & set(sym.top))
    out = Symbol(tuple(sorted(top)), tuple(sorted(bot)))
    if fam.kind == "B" and len(odd) % 2:
        out = out.swapped()
    if fam.kind == "D":
        out = LambdaY(fam, frozenset(out.bottom) - frozenset(fam.Z2)).symbol()
    return out
