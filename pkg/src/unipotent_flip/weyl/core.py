"""Weyl groups of types B/C, D (even rank), G2 and F4: classes, irreducible
characters, fake degrees and b-invariants.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Any, Hashable

from ..exact_arith import RatPoly, q_integer
from . import classical as cl
from .signed_perm import SignedPerm, length as _signed_length


class WeylError(ValueError):
    pass


@dataclass(frozen=True)
class IrrW:
    label: str
    key: Hashable
    dim: int


@dataclass(frozen=True)
class WClass:
    label: str
    size: int
    rep: Any
    det_poly: RatPoly = field(compare=False)  # det(1 - q w)


def _one_minus(k: int) -> RatPoly:
    return RatPoly({0: 1, k: -1})


def _one_plus(k: int) -> RatPoly:
    return RatPoly({0: 1, k: 1})


def part_str(p) -> str:
    sep = "," if any(x >= 10 for x in p) else ""
    return sep.join(str(x) for x in p)


def _transposition(n: int, i: int) -> SignedPerm:
    imgs = list(range(n))
    imgs[i], imgs[i + 1] = i + 1, i
    return SignedPerm(tuple(imgs), (1,) * n)


class WeylGroup:
    """Common interface; subclasses fill in classes, characters and group law."""

    kind: str
    rank: int
    degrees: tuple[int, ...]

    @property
    def name(self) -> str:
        return f"{self.kind}{self.rank}"

    def __repr__(self):
        return f"<Weyl group {self.name}>"

    @property
    def order(self) -> int:
        out = 1
        for d in self.degrees:
            out *= d
        return out

    @property
    def nu(self) -> int:
        """Length of ``w0``: the number of positive roots."""
        return sum(d - 1 for d in self.degrees)

    irreducibles: list[IrrW]
    classes: list[WClass]

    def char(self, e: int, c: int) -> int:
        return self.char_table[e][c]

    @cached_property
    def char_table(self) -> list[list[int]]:
        return [[self._char(e, c) for c in range(len(self.classes))] for e in range(len(self.irreducibles))]

    def _char(self, e: int, c: int) -> int:
        raise NotImplementedError

    def class_of(self, w) -> int:
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    @property
    def w0(self):
        raise NotImplementedError

    @property
    def identity(self):
        raise NotImplementedError

    def irr_index(self, label: str) -> int:
        for i, E in enumerate(self.irreducibles):
            if E.label == label:
                return i
        raise WeylError(f"no irreducible {label!r} in {self.name}")

    def trace(self, w, e: int) -> int:
        return self.char(e, self.class_of(w))

    @cached_property
    def _molien_factors(self) -> list[RatPoly]:
        top = RatPoly.constant(1)
        for d in self.degrees:
            top = top * _one_minus(d)
        return [top / c.det_poly for c in self.classes]

    def fake_degree(self, e: int) -> RatPoly:
        """Graded multiplicity of ``E`` in the coinvariant algebra (Molien sum)."""
        return self._fake_degrees[e]

    @cached_property
    def _fake_degrees(self) -> list[RatPoly]:
        out = []
        for e in range(len(self.irreducibles)):
            tot = RatPoly()
            for c, (cls_, fac) in enumerate(zip(self.classes, self._molien_factors)):
                x = self.char(e, c)
                if x:
                    tot = tot + fac * (cls_.size * x)
            out.append(tot / self.order)
        return out

    def b(self, e: int) -> int:
        return self.fake_degree(e).valuation()

    def poincare(self) -> RatPoly:
        out = RatPoly.constant(1)
        for d in self.degrees:
            out = out * q_integer(d)
        return out

    def sign_index(self) -> int:
        for i in range(len(self.irreducibles)):
            if self.irreducibles[i].dim == 1 and self.b(i) == self.nu:
                return i
        raise WeylError("no sign character")

    def trivial_index(self) -> int:
        for i in range(len(self.irreducibles)):
            if all(v == 1 for v in self.char_table[i]):
                return i
        raise WeylError("no trivial character")

    @cached_property
    def w0_class(self) -> int:
        return self.class_of(self.w0)

    def class_of_product_with_w0(self, c: int) -> int:
        return self.class_of(self.mul(self.classes[c].rep, self.w0))


class TypeB(WeylGroup):
    """W(B_n) = W(C_n) as signed permutations; ``kind`` only changes the name."""

    def __init__(self, n: int, kind: str = "B"):
        if n < 1:
            raise WeylError("rank must be >= 1")
        if kind not in ("B", "C"):
            raise WeylError(f"kind must be B or C, not {kind!r}")
        self.kind, self.rank = kind, n
        self.degrees = tuple(range(2, 2 * n + 1, 2))
        self.irreducibles = [
            IrrW(f"{part_str(a)}.{part_str(b)}", (a, b), cl.b_char(a, b, (1,) * n, ()))
            for a, b in cl.bipartitions(n)
        ]
        self.classes = []
        self._class_index = {}
        for lam, mu in cl.bipartitions(n):
            det = RatPoly.constant(1)
            for k in lam:
                det = det * _one_minus(k)
            for k in mu:
                det = det * _one_plus(k)
            size = cl.b_order(n) // cl.b_centralizer_order(lam, mu)
            self._class_index[(lam, mu)] = len(self.classes)
            self.classes.append(WClass(f"{part_str(lam)}.{part_str(mu)}", size, cl.class_rep(lam, mu), det))

    def _char(self, e, c):
        a, b = self.irreducibles[e].key
        lam, mu = self.classes[c].rep.signed_cycle_type
        return cl.b_char(a, b, lam, mu)

    def class_of(self, w: SignedPerm) -> int:
        return self._class_index[w.signed_cycle_type]

    def mul(self, a, b):
        return a * b

    @property
    def w0(self):
        return SignedPerm.longest(self.rank)

    @property
    def identity(self):
        return SignedPerm.identity(self.rank)

    def symbol(self, e: int):
        a, b = self.irreducibles[e].key
        return cl.symbol_of_bipartition(a, b, "B")

    @cached_property
    def simple_reflections(self) -> list[SignedPerm]:
        """Reflections in ``e_i - e_{i+1}`` and in ``e_{n-1}``."""
        n = self.rank
        out = [_transposition(n, i) for i in range(n - 1)]
        out.append(SignedPerm(tuple(range(n)), (1,) * (n - 1) + (-1,)))
        return out

    def length(self, w: SignedPerm) -> int:
        return _signed_length(w, "B")


class TypeD(WeylGroup):
    """W(D_n) for even ``n >= 4`` (where ``w0 = -1`` is central)."""

    kind = "D"

    def __init__(self, n: int):
        if n < 4 or n % 2:
            raise WeylError("type D is supported for even rank >= 4 only")
        self.rank = n
        self.degrees = tuple(sorted(list(range(2, 2 * n - 1, 2)) + [n]))
        self.irreducibles = []
        for a, b in cl.bipartitions(n):
            if a > b:
                self.irreducibles.append(IrrW(f"{part_str(a)}.{part_str(b)}", (a, b, 0), cl.b_char(a, b, (1,) * n, ())))
            elif a == b:
                half = cl.b_char(a, a, (1,) * n, ()) // 2
                for s, tag in ((1, "+"), (-1, "-")):
                    self.irreducibles.append(IrrW(f"{part_str(a)}.{tag}", (a, a, s), half))
        self.classes = []
        self._class_index = {}
        for lam, mu in cl.bipartitions(n):
            if len(mu) % 2:
                continue
            det = RatPoly.constant(1)
            for k in lam:
                det = det * _one_minus(k)
            for k in mu:
                det = det * _one_plus(k)
            size = cl.b_order(n) // cl.b_centralizer_order(lam, mu)
            rep = cl.class_rep(lam, mu)
            label = f"{part_str(lam)}.{part_str(mu)}"
            if cl.is_split_class(lam, mu):
                t = SignedPerm(tuple(range(n)), (-1,) + (1,) * (n - 1))
                for eps, r in ((1, rep), (-1, t * rep * t)):
                    self._class_index[(lam, mu, eps)] = len(self.classes)
                    self.classes.append(WClass(f"{label}{'+' if eps == 1 else '-'}", size // 2, r, det))
            else:
                self._class_index[(lam, mu, 0)] = len(self.classes)
                self.classes.append(WClass(label, size, rep, det))

    def class_of(self, w: SignedPerm) -> int:
        if not w.is_even():
            raise WeylError(f"{w} is not in W(D_{self.rank})")
        lam, mu = w.signed_cycle_type
        eps = cl.split_sign(w) if cl.is_split_class(lam, mu) else 0
        return self._class_index[(lam, mu, eps)]

    def _char(self, e, c):
        a, b, s = self.irreducibles[e].key
        w = self.classes[c].rep
        lam, mu = w.signed_cycle_type
        full = cl.b_char(a, b, lam, mu)
        if s == 0:
            return full
        if not cl.is_split_class(lam, mu):
            return full // 2
        nu = tuple(k // 2 for k in lam)
        diff = 2 ** len(nu) * cl.sym_char(a, nu) * cl.split_sign(w)
        return (full + s * diff) // 2

    def mul(self, a, b):
        return a * b

    @property
    def w0(self):
        return SignedPerm.longest(self.rank)

    @property
    def identity(self):
        return SignedPerm.identity(self.rank)

    def symbol(self, e: int):
        a, b, _s = self.irreducibles[e].key
        return cl.symbol_of_bipartition(a, b, "D")

    @cached_property
    def simple_reflections(self) -> list[SignedPerm]:
        """Reflections in ``e_i - e_{i+1}`` and in ``e_{n-2} + e_{n-1}``."""
        n = self.rank
        out = [_transposition(n, i) for i in range(n - 1)]
        out.append(SignedPerm(out[-1].images, (1,) * (n - 2) + (-1, -1)))
        return out

    def length(self, w: SignedPerm) -> int:
        return _signed_length(w, "D")
