"""The set M(Gamma) of pairs (g, rho), its Fourier pairing and the action of
invertible objects by convolution.

An element is stored as ``MElt(g_class, rho)``: the index of the conjugacy
class of ``g`` in Gamma (with its lexicographically minimal representative)
and the index of ``rho`` in the character table of the centralizer of that
representative.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from .cyclotomic import Cyc
from .groups import CharTable, GroupError, Perm, PermGroup, cycle_type, parity, pinv, pmul


@dataclass(frozen=True, order=True)
class MElt:
    g_class: int
    rho: int


def _lift(v: Cyc, n: int) -> Cyc:
    if v.n == n:
        return v
    if n % v.n:
        raise ValueError(f"cannot embed Q(zeta_{v.n}) in Q(zeta_{n})")
    k = n // v.n
    return Cyc.from_powers(n, {j * k: Fraction(a, v.den) for j, a in enumerate(v.num) if a})


class MGamma:
    """M(Gamma) for a small permutation group Gamma."""

    def __init__(self, gamma: PermGroup):
        self.gamma = gamma
        self.conductor = gamma.exponent
        self.classes = gamma.conjugacy_classes()
        self.centralizers: list[PermGroup] = [gamma.centralizer(c.rep) for c in self.classes]
        self.tables: list[CharTable] = [z.character_table() for z in self.centralizers]
        self._values = [
            [[_lift(v, self.conductor) for v in row] for row in t.rows] for t in self.tables
        ]
        self.elements: list[MElt] = [
            MElt(i, r) for i, t in enumerate(self.tables) for r in range(len(t))
        ]
        self._pos = {m: k for k, m in enumerate(self.elements)}
        self._tally_cache: dict[tuple[int, int], Counter] = {}
        self._pair_cache: dict[tuple[MElt, MElt], Cyc] = {}

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def index(self, m: MElt) -> int:
        return self._pos[m]

    @property
    def unit(self) -> MElt:
        return MElt(0, 0)

    def rep(self, m: MElt) -> Perm:
        return self.classes[m.g_class].rep

    def dim(self, m: MElt) -> int:
        return self.tables[m.g_class].dims[m.rho]

    def centralizer_order(self, m: MElt) -> int:
        return self.centralizers[m.g_class].order

    def weight(self, m: MElt) -> Fraction:
        """``dim(rho) / |Z(g)|``."""
        return Fraction(self.dim(m), self.centralizer_order(m))

    def twist(self, m: MElt) -> Cyc:
        """``rho(g) / rho(1)``: the root of unity attached to ``(g, rho)``."""
        k = self.centralizers[m.g_class].class_index(self.rep(m))
        return self._values[m.g_class][m.rho][k] / self.dim(m)

    def label(self, m: MElt) -> str:
        ct = cycle_type(self.rep(m))
        g = "1" if all(k == 1 for k in ct) else "g" + ".".join(str(k) for k in ct if k > 1)
        return f"({g},{m.rho})"

    def find(self, g: Perm, values_on_centralizer_classes) -> MElt:
        i = self.gamma.class_index(g)
        return MElt(i, self.tables[i].find_row(values_on_centralizer_classes))

    # pairing

    def _tally(self, i: int, j: int) -> Counter:
        key = (i, j)
        if key not in self._tally_cache:
            g, gp = self.classes[i].rep, self.classes[j].rep
            Z, Zp = self.centralizers[i], self.centralizers[j]
            ginv = pinv(g)
            tally: Counter = Counter()
            for h in self.gamma.elements:
                hi = pinv(h)
                a = pmul(pmul(h, gp), hi)
                if pmul(a, g) != pmul(g, a):
                    continue
                b = pmul(pmul(hi, ginv), h)
                tally[(Z.class_index(a), Zp.class_index(b))] += 1
            self._tally_cache[key] = tally
        return self._tally_cache[key]

    def pairing_exact(self, x: MElt, y: MElt) -> Cyc:
        key = (x, y)
        if key not in self._pair_cache:
            rx = self._values[x.g_class][x.rho]
            ry = self._values[y.g_class][y.rho]
            tot = Cyc.rational(self.conductor, 0)
            for (ca, cb), n in self._tally(x.g_class, y.g_class).items():
                tot = tot + rx[ca] * ry[cb] * n
            self._pair_cache[key] = tot / (self.centralizer_order(x) * self.centralizer_order(y))
        return self._pair_cache[key]

    def pairing(self, x: MElt, y: MElt) -> Fraction:
        """Rational value of the pairing; raises if the value is irrational."""
        v = self.pairing_exact(x, y)
        if not v.is_rational():
            raise GroupError(f"pairing <{self.label(x)}, {self.label(y)}> = {v!r} is not rational")
        return v.to_fraction()

    def pairing_virtual(self, a: dict[MElt, Fraction], b: dict[MElt, Fraction]) -> Cyc:
        """Bilinear extension of the pairing to formal combinations."""
        tot = Cyc.rational(self.conductor, 0)
        for x, cx in a.items():
            for y, cy in b.items():
                tot = tot + self.pairing_exact(x, y) * (Fraction(cx) * Fraction(cy))
        return tot

    def pairing_matrix(self) -> list[list[Fraction]]:
        return [[self.pairing(x, y) for y in self.elements] for x in self.elements]

    def pairing_matrix_exact(self) -> list[list[Cyc]]:
        return [[self.pairing_exact(x, y) for y in self.elements] for x in self.elements]

    # invertible objects

    def is_invertible(self, m: MElt) -> bool:
        return self.classes[m.g_class].size == 1 and self.dim(m) == 1

    @cached_property
    def invertibles(self) -> list[MElt]:
        return [m for m in self.elements if self.is_invertible(m)]

    def convolve_star(self, s: MElt, x: MElt) -> MElt:
        """``s * x`` for an invertible object ``s = (z, lambda)``."""
        if not self.is_invertible(s):
            raise GroupError(f"{self.label(s)} is not invertible")
        z = self.rep(s)
        lam = self._values[s.g_class][s.rho]  # Z(z) = Gamma: a linear character of Gamma
        full = self.centralizers[s.g_class]
        g = self.rep(x)
        target = pmul(g, z)
        i = self.gamma.class_index(target)
        r = self.classes[i].rep
        c = self.gamma.conjugator(target, r)
        ci = pinv(c)
        Zg = self.centralizers[x.g_class]
        rho = self._values[x.g_class][x.rho]
        new_vals = []
        for cl in self.centralizers[i].conjugacy_classes():
            y = pmul(pmul(ci, cl.rep), c)  # back in Z(g)
            new_vals.append(rho[Zg.class_index(y)] * lam[full.class_index(y)])
        for k, row in enumerate(self._values[i]):
            if row == new_vals:
                return MElt(i, k)
        raise GroupError("convolution result is not an irreducible pair")

    def verify_ring_hom(self, z: MElt | None = None) -> bool:
        """Check ``<z, x*y> = |Z(g)|/dim(rho) <z,x><z,y>`` for ``y`` invertible."""
        zs = [z] if z is not None else self.elements
        for zz in zs:
            k = Fraction(self.centralizer_order(zz), self.dim(zz))
            for x in self.elements:
                for y in self.invertibles:
                    lhs = self.pairing_exact(zz, self.convolve_star(y, x))
                    rhs = self.pairing_exact(zz, x) * self.pairing_exact(zz, y) * k
                    if lhs != rhs:
                        return False
        return True

    def sign_element(self) -> MElt:
        """``(1, sgn)`` for a symmetric group Gamma."""
        if not self.gamma.is_symmetric_group():
            raise GroupError("sign element only defined for symmetric groups")
        sgn = [Cyc.rational(self.conductor, (-1) ** parity(c.rep)) for c in self.classes]
        return MElt(0, self._values[0].index(sgn))

    def to_json(self) -> dict:
        def enc(v: Cyc):
            if v.is_rational():
                f = v.to_fraction()
                return f"{f.numerator}/{f.denominator}"
            return {"conductor": v.n, "num": list(v.num), "den": v.den}

        return {
            "elements": [self.label(m) for m in self.elements],
            "pairing": [[enc(v) for v in row] for row in self.pairing_matrix_exact()],
        }


def enumerate_M(gamma: PermGroup) -> list[MElt]:
    return MGamma(gamma).elements


def verify_ring_hom(gamma: PermGroup, z: MElt | None = None) -> bool:
    return MGamma(gamma).verify_ring_hom(z)
