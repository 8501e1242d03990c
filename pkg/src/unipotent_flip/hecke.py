"""Iwahori-Hecke algebra of W with parameter ``q = v^2``, through its regular
representation on the basis ``{T_w}`` with exact polynomial entries.

    T_s T_w = T_{sw}                         if l(sw) > l(w)
    T_s T_w = (v^2 - 1) T_w + v^2 T_{sw}     otherwise

Matrices are column-sparse: ``M[j]`` maps a row index to a nonzero RatPoly.

>>> from unipotent_flip.weyl import weyl_group
>>> H = build_regular_rep(weyl_group("B", 2))
>>> H.size, H.check_quadratic(), H.check_braid()
(8, True, True)
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

import numpy as np

from .exact_arith import RatPoly
from .weyl.core import WeylError, WeylGroup

DEFAULT_GATE = 400
GATE_ENV = "UNIPOTENT_FLIP_HECKE_GATE"

Q = RatPoly.monomial(2)
ONE = RatPoly.constant(1)

Matrix = list  # list[dict[int, RatPoly]], one dict per column


class HeckeGateError(WeylError):
    pass


def default_gate() -> int:
    return int(os.environ.get(GATE_ENV, DEFAULT_GATE))


# sparse polynomial matrices


def _axpy(acc: dict, col: dict, c: RatPoly) -> None:
    for i, x in col.items():
        y = acc.get(i)
        y = x * c if y is None else y + x * c
        if y:
            acc[i] = y
        else:
            acc.pop(i, None)


def matmul(A: Matrix, B: Matrix) -> Matrix:
    out = []
    for col in B:
        acc: dict = {}
        for k, c in col.items():
            _axpy(acc, A[k], c)
        out.append(acc)
    return out


def identity(n: int) -> Matrix:
    return [{j: ONE} for j in range(n)]


def add(A: Matrix, B: Matrix, b: RatPoly = ONE) -> Matrix:
    out = []
    for ca, cb in zip(A, B):
        acc = dict(ca)
        _axpy(acc, cb, b)
        out.append(acc)
    return out


def is_zero(A: Matrix) -> bool:
    return all(not col for col in A)


def evaluate(A: Matrix, v0) -> np.ndarray:
    """Specialise ``v = v0``; entries become Python ints (or Fractions) in an object array."""
    n = len(A)
    M = np.zeros((n, n), dtype=object)
    M[:] = 0
    for j, col in enumerate(A):
        for i, p in col.items():
            x = p(v0)
            M[i, j] = int(x) if x.denominator == 1 else x
    return M


# the algebra


@dataclass
class HeckeAlgebra:
    W: WeylGroup
    elements: list
    lengths: list[int]
    words: list[tuple[int, ...]]  # a reduced word for each element
    gens: list[Matrix]

    @property
    def size(self) -> int:
        return len(self.elements)

    @cached_property
    def index(self) -> dict:
        return {w: k for k, w in enumerate(self.elements)}

    def T(self, k: int) -> Matrix:
        """Matrix of ``T_w`` for the ``k``-th element, along its reduced word."""
        M = identity(self.size)
        for s in self.words[k]:
            M = matmul(M, self.gens[s])
        return M

    @cached_property
    def w0_index(self) -> int:
        return max(range(self.size), key=self.lengths.__getitem__)

    def check_quadratic(self) -> bool:
        n = self.size
        for G in self.gens:
            if not is_zero(matmul(add(G, identity(n)), add(G, identity(n), -Q))):
                return False
        return True

    def check_braid(self) -> bool:
        m = coxeter_matrix(self.W)
        r = len(self.gens)
        for i in range(r):
            for j in range(i + 1, r):
                a, b = identity(self.size), identity(self.size)
                for k in range(m[i][j]):
                    a = matmul(a, self.gens[i if k % 2 == 0 else j])
                    b = matmul(b, self.gens[j if k % 2 == 0 else i])
                if a != b:
                    return False
        return True

    @cached_property
    def Tw0(self) -> Matrix:
        return self.T(self.w0_index)

    def check_product_rule(self) -> bool:
        """``T_w T_{w'} = T_{ww'}`` whenever lengths add, on generator pairs."""
        for k, w in enumerate(self.elements):
            for s, g in enumerate(self.W.simple_reflections):
                ws = self.W.mul(w, g)
                j = self.index[ws]
                if self.lengths[j] == self.lengths[k] + 1:
                    if matmul(self.T(k), self.gens[s]) != self.T(j):
                        return False
        return True


def coxeter_matrix(W: WeylGroup) -> list[list[int]]:
    S = W.simple_reflections
    out = [[1] * len(S) for _ in S]
    for i, a in enumerate(S):
        for j, b in enumerate(S):
            if i != j:
                g = W.mul(a, b)
                x, k = g, 1
                while x != W.identity:
                    x, k = W.mul(x, g), k + 1
                out[i][j] = k
    return out


def build_regular_rep(W: WeylGroup, gate: int | None = None) -> HeckeAlgebra:
    """Regular representation; raises :class:`HeckeGateError` when ``|W|`` exceeds ``gate``."""
    gate = default_gate() if gate is None else gate
    if W.order > gate:
        raise HeckeGateError(f"|W({W.name})| = {W.order} exceeds the Hecke gate {gate}")
    S = W.simple_reflections
    elements, lengths, words = [W.identity], [0], [()]
    index = {W.identity: 0}
    frontier = [0]
    while frontier:
        nxt = []
        for k in frontier:
            for s, g in enumerate(S):
                w = W.mul(g, elements[k])
                if w not in index:
                    index[w] = len(elements)
                    elements.append(w)
                    lengths.append(lengths[k] + 1)
                    words.append((s,) + words[k])
                    nxt.append(index[w])
        frontier = nxt
    if len(elements) != W.order:
        raise WeylError(f"generated {len(elements)} elements, expected {W.order}")
    gens = []
    for g in S:
        cols = []
        for k, w in enumerate(elements):
            j = index[W.mul(g, w)]
            if lengths[j] > lengths[k]:
                cols.append({j: ONE})
            else:
                cols.append({k: Q - 1, j: Q})
        gens.append(cols)
    return HeckeAlgebra(W, elements, lengths, words, gens)


def check_central(H: HeckeAlgebra) -> bool:
    """``T_{w0}`` commutes with every ``T_s`` as an exact polynomial matrix."""
    M = H.Tw0
    return all(matmul(M, G) == matmul(G, M) for G in H.gens)


def predicted_scalars(table, v0: int = 3) -> list[int]:
    """Distinct ``(-1)^{b_E} v0^{2 nu - a_c - A_c}`` over Irr(W), sorted."""
    from .involution import a_A

    W = table.W
    out = set()
    for fam in table:
        a, A = a_A(table, fam)
        for e in fam.members:
            out.add((-1) ** W.b(e) * Fraction(v0) ** (2 * W.nu - a - A))
    return sorted(int(x) if x.denominator == 1 else x for x in out)


def _product(M: np.ndarray, scalars) -> np.ndarray:
    n = M.shape[0]
    P = np.identity(n, dtype=object)
    for lam in scalars:
        P = P.dot(M - lam * np.identity(n, dtype=object))
    return P


def verify_central_scalar(H: HeckeAlgebra, table, v0: int = 3) -> dict:
    """At ``v = v0`` the minimal polynomial of ``T_{w0}`` is the product of
    ``x - lambda`` over the predicted scalars.
    """
    scalars = predicted_scalars(table, v0)
    M = evaluate(H.Tw0, v0)
    annihilates = not _product(M, scalars).any()
    redundant = [lam for lam in scalars if not _product(M, [x for x in scalars if x != lam]).any()]
    return {
        "pass": annihilates and not redundant,
        "v0": v0,
        "scalars": [str(x) for x in scalars],
        "annihilates": annihilates,
        "redundant": [str(x) for x in redundant],
    }


# explicit characters for rank two


# 4 cos^2(pi k / m), rational in the crystallographic cases
_DIHEDRAL_PARAM = {(3, 1): 1, (4, 1): 2, (6, 1): 3, (6, 2): 1}


def dihedral_representations(W: WeylGroup) -> list[tuple[Matrix, Matrix]]:
    """Irreducible representations of the rank-two Hecke algebra as pairs
    ``(T_s, T_t)`` of small matrices, one per element of Irr(W).
    """
    if W.rank != 2:
        raise WeylError("dihedral representations need rank 2")
    m = coxeter_matrix(W)[0][1]
    neg = -ONE
    reps = [([{0: Q}], [{0: Q}]), ([{0: neg}], [{0: neg}])]
    if m % 2 == 0:
        reps += [([{0: Q}], [{0: neg}]), ([{0: neg}], [{0: Q}])]
    for k in range(1, (m - 1) // 2 + 1):
        if (m, k) not in _DIHEDRAL_PARAM:
            raise WeylError(f"irrational dihedral parameter for m = {m}")
        Ts = [{0: neg, 1: ONE}, {1: Q}]
        Tt = [{0: Q}, {0: Q * _DIHEDRAL_PARAM[m, k], 1: neg}]
        reps.append((Ts, Tt))
    return reps


def _trace(M: Matrix) -> RatPoly:
    tot = RatPoly()
    for j, col in enumerate(M):
        if j in col:
            tot = tot + col[j]
    return tot


def dihedral_characters(H: HeckeAlgebra) -> list[dict[int, RatPoly]]:
    """``tr(T_w, E(v))`` for every element (indexed like ``H.elements``), keyed by E."""
    W = H.W
    reps = dihedral_representations(W)
    table = []
    for Ts, Tt in reps:
        gens = (Ts, Tt)
        d = len(Ts)
        row = []
        for k in range(H.size):
            M = identity(d)
            for s in H.words[k]:
                M = matmul(M, gens[s])
            row.append(_trace(M))
        table.append(row)
    labels = {}
    for r, row in enumerate(table):
        spec = [None] * len(W.classes)
        for k, w in enumerate(H.elements):
            spec[W.class_of(w)] = row[k](1)
        hits = [e for e in range(len(W.irreducibles)) if list(W.char_table[e]) == spec]
        if len(hits) != 1:
            raise WeylError(f"cannot match Hecke representation {r} to Irr(W)")
        labels[r] = hits[0]
    if sorted(labels.values()) != list(range(len(W.irreducibles))):
        raise WeylError("dihedral representations do not exhaust Irr(W)")
    return [{labels[r]: table[r][k] for r in labels} for k in range(H.size)]


def hecke_report(table, gate: int | None = None, v0: int = 3) -> dict:
    H = build_regular_rep(table.W, gate)
    rep = {
        "type": table.W.name,
        "size": H.size,
        "quadratic": H.check_quadratic(),
        "braid": H.check_braid(),
        "central": check_central(H),
        "spectrum": verify_central_scalar(H, table, v0),
    }
    rep["pass"] = rep["quadratic"] and rep["braid"] and rep["central"] and rep["spectrum"]["pass"]
    return rep
