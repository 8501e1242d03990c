"""A small finite-group engine for permutation groups.

Enough group theory for the groups attached to families (trivial, elementary
abelian 2-groups, S_2 ... S_5) and their centralizers, and also for Weyl
groups of rank <= 4 given as permutations of their roots.

Permutations are tuples ``p`` of images of ``0..n-1``; the product ``g*h``
applies ``h`` first, i.e. ``(g*h)[i] = g[h[i]]``.
"""

from __future__ import annotations

import cmath
import itertools
import math
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from .cyclotomic import Cyc

Perm = tuple[int, ...]

MAX_ORDER = 10_000


def pmul(g: Perm, h: Perm) -> Perm:
    return tuple(g[i] for i in h)


def pinv(g: Perm) -> Perm:
    out = [0] * len(g)
    for i, j in enumerate(g):
        out[j] = i
    return tuple(out)


def parity(g: Perm) -> int:
    """0 for even permutations, 1 for odd ones."""
    seen = [False] * len(g)
    odd = 0
    for i in range(len(g)):
        if not seen[i]:
            j, length = i, 0
            while not seen[j]:
                seen[j] = True
                j = g[j]
                length += 1
            odd ^= (length - 1) & 1
    return odd


def cycle_type(g: Perm) -> tuple[int, ...]:
    seen = [False] * len(g)
    lengths = []
    for i in range(len(g)):
        if not seen[i]:
            j, length = i, 0
            while not seen[j]:
                seen[j] = True
                j = g[j]
                length += 1
            lengths.append(length)
    return tuple(sorted(lengths, reverse=True))


def from_cycles(n: int, *cycles: Sequence[int]) -> Perm:
    """Permutation of ``0..n-1`` from disjoint cycles given 0-based."""
    p = list(range(n))
    for cyc in cycles:
        for a, b in zip(cyc, list(cyc[1:]) + [cyc[0]]):
            p[a] = b
    return tuple(p)


class GroupError(ValueError):
    pass


@dataclass(frozen=True)
class ConjClass:
    rep: Perm
    size: int
    order: int


class PermGroup:
    """A finite permutation group with eagerly enumerated elements."""

    def __init__(self, generators: Iterable[Perm] = (), degree: int | None = None,
                 elements: Iterable[Perm] | None = None, name: str = ""):
        gens = [tuple(g) for g in generators]
        if degree is None:
            if gens:
                degree = len(gens[0])
            elif elements is not None:
                elements = list(elements)
                degree = len(elements[0])
            else:
                degree = 0
        self.degree = degree
        self.name = name
        self.identity: Perm = tuple(range(degree))
        for g in gens:
            if sorted(g) != list(self.identity):
                raise GroupError(f"not a permutation of degree {degree}: {g}")
        if elements is None:
            elements = self._closure(gens)
        self.elements: list[Perm] = sorted(set(elements))
        if len(self.elements) > MAX_ORDER:
            raise GroupError(f"group of order {len(self.elements)} exceeds engine limit {MAX_ORDER}")
        self.generators = gens or [self.identity]
        self._index = {g: i for i, g in enumerate(self.elements)}

    def _closure(self, gens: list[Perm]) -> list[Perm]:
        seen = {self.identity}
        frontier = [self.identity]
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = pmul(g, x)
                    if y not in seen:
                        if len(seen) >= MAX_ORDER:
                            raise GroupError(f"group exceeds engine limit {MAX_ORDER}")
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        return list(seen)

    def __len__(self):
        return len(self.elements)

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, g) -> bool:
        return tuple(g) in self._index

    def __repr__(self):
        return f"PermGroup({self.name or 'order=' + str(self.order)})"

    @staticmethod
    def element_order(g: Perm) -> int:
        return math.lcm(*cycle_type(g)) if g else 1

    @cached_property
    def exponent(self) -> int:
        return math.lcm(*(self.element_order(g) for g in self.elements)) if self.elements else 1

    def is_abelian(self) -> bool:
        return all(pmul(a, b) == pmul(b, a) for a in self.generators for b in self.generators)

    @cached_property
    def center(self) -> list[Perm]:
        return [z for z in self.elements if all(pmul(z, g) == pmul(g, z) for g in self.generators)]

    # conjugacy

    @cached_property
    def _class_data(self) -> tuple[list[ConjClass], dict[Perm, int], list[list[Perm]]]:
        label: dict[Perm, int] = {}
        members: list[list[Perm]] = []
        raw = []
        for x in self.elements:
            if x in label:
                continue
            orbit = {x}
            frontier = [x]
            while frontier:
                nxt = []
                for y in frontier:
                    for g in self.generators:
                        z = pmul(pmul(g, y), pinv(g))
                        if z not in orbit:
                            orbit.add(z)
                            nxt.append(z)
                frontier = nxt
            k = len(members)
            for y in orbit:
                label[y] = k
            members.append(sorted(orbit))
            raw.append(ConjClass(min(orbit), len(orbit), self.element_order(x)))
        # elements are scanned in sorted order, so class reps come out sorted
        return raw, label, members

    def conjugacy_classes(self) -> list[ConjClass]:
        return list(self._class_data[0])

    def class_index(self, g: Perm) -> int:
        try:
            return self._class_data[1][tuple(g)]
        except KeyError:
            raise GroupError(f"{g} is not an element of {self!r}") from None

    def class_members(self, k: int) -> list[Perm]:
        return self._class_data[2][k]

    def conjugator(self, g: Perm, target: Perm) -> Perm:
        """Some ``x`` with ``x g x^-1 = target``."""
        for x in self.elements:
            if pmul(pmul(x, g), pinv(x)) == target:
                return x
        raise GroupError(f"{g} and {target} are not conjugate")

    def centralizer(self, g: Perm) -> "PermGroup":
        g = tuple(g)
        if g not in self:
            raise GroupError(f"{g} is not an element of {self!r}")
        elems = [h for h in self.elements if pmul(h, g) == pmul(g, h)]
        return PermGroup(elements=elems, degree=self.degree, generators=_small_generating_set(elems))

    @cached_property
    def power_map(self) -> list[list[int]]:
        """``power_map[k][t]`` is the class of ``rep_k ** t`` for ``0 <= t < order``."""
        out = []
        for c in self.conjugacy_classes():
            row = []
            x = self.identity
            for _ in range(c.order):
                row.append(self.class_index(x))
                x = pmul(x, c.rep)
            out.append(row)
        return out

    @cached_property
    def _char_table(self) -> "CharTable":
        return _compute_character_table(self)

    def character_table(self) -> "CharTable":
        return self._char_table

    def is_symmetric_group(self) -> bool:
        return self.order == math.factorial(self.degree)


def _small_generating_set(elems: list[Perm]) -> list[Perm]:
    if not elems:
        return []
    ident = tuple(range(len(elems[0])))
    gens: list[Perm] = []
    span = {ident}
    for x in sorted(elems, key=lambda p: (-PermGroup.element_order(p), p)):
        if x not in span:
            gens.append(x)
            span = set(PermGroup(gens, degree=len(ident)).elements)
            if len(span) == len(elems):
                break
    return gens or [ident]


def symmetric_group(n: int) -> PermGroup:
    if n <= 1:
        return PermGroup([tuple(range(max(n, 1)))], name=f"S{n}")
    gens = [from_cycles(n, (0, 1))]
    if n > 2:
        gens.append(tuple(list(range(1, n)) + [0]))
    return PermGroup(gens, name=f"S{n}")


def trivial_group() -> PermGroup:
    return PermGroup([(0,)], name="1")


def elementary_abelian_2(d: int) -> PermGroup:
    """(Z/2)^d acting on 2d points."""
    if d == 0:
        return trivial_group()
    gens = [from_cycles(2 * d, (2 * i, 2 * i + 1)) for i in range(d)]
    return PermGroup(gens, name=f"(Z/2)^{d}")


def direct_product(*groups: PermGroup) -> PermGroup:
    offs, gens = 0, []
    total = sum(g.degree for g in groups)
    for grp in groups:
        for s in grp.generators:
            p = list(range(total))
            for i, j in enumerate(s):
                p[offs + i] = offs + j
            gens.append(tuple(p))
        offs += grp.degree
    return PermGroup(gens, degree=total, name=" x ".join(g.name for g in groups))


# character tables


@dataclass
class CharTable:
    """Irreducible characters of a :class:`PermGroup`, exact in Q(zeta_N)."""

    group: PermGroup
    conductor: int
    rows: list[list[Cyc]]

    @property
    def classes(self) -> list[ConjClass]:
        return self.group.conjugacy_classes()

    @property
    def dims(self) -> list[int]:
        return [int(r[0].to_fraction()) for r in self.rows]

    def __len__(self):
        return len(self.rows)

    def value(self, i: int, g: Perm) -> Cyc:
        return self.rows[i][self.group.class_index(g)]

    def is_integer_valued(self) -> bool:
        return all(v.is_rational() and v.to_fraction().denominator == 1 for r in self.rows for v in r)

    def integer_rows(self) -> list[list[int]]:
        if not self.is_integer_valued():
            raise GroupError("character table has non-integer values")
        return [[int(v.to_fraction()) for v in r] for r in self.rows]

    def find_row(self, values: Sequence[Cyc]) -> int:
        values = list(values)
        for i, r in enumerate(self.rows):
            if r == values:
                return i
        raise GroupError("class function is not an irreducible character")

    def inner(self, a: Sequence[Cyc], b: Sequence[Cyc]) -> Cyc:
        tot = Cyc.rational(self.conductor, 0)
        for c, x, y in zip(self.classes, a, b):
            tot = tot + x * y.conj() * c.size
        return tot / self.group.order

    def to_json(self) -> dict:
        def enc(v: Cyc):
            return str(v.to_fraction()) if v.is_rational() else {"conductor": v.n, "num": list(v.num), "den": v.den}
        return {
            "order": self.group.order,
            "classes": [{"rep": list(c.rep), "size": c.size, "order": c.order} for c in self.classes],
            "rows": [[enc(v) for v in r] for r in self.rows],
        }


def _class_matrices(G: PermGroup) -> np.ndarray:
    classes = G.conjugacy_classes()
    k = len(classes)
    coeff = np.zeros((k, k, k))
    for kk, c in enumerate(classes):
        z = c.rep
        for i in range(k):
            for x in G.class_members(i):
                j = G.class_index(pmul(pinv(x), z))
                coeff[i, j, kk] += 1
    return coeff


def _compute_character_table(G: PermGroup) -> CharTable:
    classes = G.conjugacy_classes()
    k = len(classes)
    sizes = np.array([c.size for c in classes], dtype=float)
    coeff = _class_matrices(G)
    N = G.exponent
    rng = np.random.default_rng(20240601)
    for _attempt in range(8):
        weights = rng.random(k)
        M = np.tensordot(weights, coeff, axes=1)
        _, vecs = np.linalg.eig(M)
        rows = []
        ok = True
        for col in range(k):
            v = vecs[:, col]
            if abs(v[0]) < 1e-9:
                ok = False
                break
            omega = v / v[0]
            dim2 = G.order / np.sum(np.abs(omega) ** 2 / sizes)
            chi = omega * math.sqrt(dim2.real) / sizes
            exact = _exact_character(G, chi, N)
            if exact is None:
                ok = False
                break
            rows.append(exact)
        if ok and _orthonormal(G, rows, N):
            rows.sort(key=_row_key)
            return CharTable(G, N, rows)
    raise GroupError(f"failed to compute an exact character table for {G!r}")


def _exact_character(G: PermGroup, chi: np.ndarray, N: int) -> list[Cyc] | None:
    out = []
    for kk, c in enumerate(G.conjugacy_classes()):
        n = c.order
        powers = G.power_map[kk]
        mults = {}
        for j in range(n):
            s = sum(chi[powers[t]] * cmath.exp(-2j * math.pi * j * t / n) for t in range(n)) / n
            m = round(s.real)
            if abs(s - m) > 1e-6 or m < 0:
                return None
            if m:
                mults[j * (N // n)] = m
        out.append(Cyc.from_powers(N, mults))
    return out


def _orthonormal(G: PermGroup, rows: list[list[Cyc]], N: int) -> bool:
    if sum(int(r[0].to_fraction()) ** 2 for r in rows) != G.order:
        return False
    classes = G.conjugacy_classes()
    conj = [[v.conj() for v in r] for r in rows]
    for a in range(len(rows)):
        for b in range(a, len(rows)):
            tot = Cyc.rational(N, 0)
            for c, x, y in zip(classes, rows[a], conj[b]):
                tot = tot + x * y * c.size
            if tot != (G.order if a == b else 0):
                return False
    return True


def _row_key(row: list[Cyc]):
    vals = [complex(v) for v in row]
    return (round(vals[0].real), tuple(-round(v.real, 9) for v in vals), tuple(round(v.imag, 9) for v in vals))


def conjugacy_classes(G: PermGroup) -> list[tuple[Perm, int]]:
    return [(c.rep, c.size) for c in G.conjugacy_classes()]


def centralizer(G: PermGroup, g: Perm) -> PermGroup:
    return G.centralizer(g)


def character_table(G: PermGroup) -> CharTable:
    return G.character_table()


def sign_character(G: PermGroup) -> list[int]:
    """Sign character of a full symmetric group, one value per class."""
    if not G.is_symmetric_group():
        raise GroupError(f"{G!r} is not a full symmetric group")
    return [(-1) ** parity(c.rep) for c in G.conjugacy_classes()]


def all_permutations(n: int) -> list[Perm]:
    return list(itertools.permutations(range(n)))
