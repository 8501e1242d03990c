"""W(G2) and W(F4) built from Cartan matrices as permutation groups on roots.

Character tables come from the generic engine in :mod:`unipotent_flip.groups`;
labels ``phi{d},{b}`` (with ``'``/``''`` for coincident pairs) are attached by
matching against the embedded data file, see :mod:`.exceptional_data`.
"""

from __future__ import annotations

from fractions import Fraction
from functools import cached_property
from itertools import permutations

from ..exact_arith import RatPoly
from ..groups import PermGroup, pinv, pmul
from .core import IrrW, WClass, WeylError, WeylGroup

CARTAN = {
    "G2": ((2, -1), (-3, 2)),
    "F4": ((2, -1, 0, 0), (-1, 2, -2, 0), (0, -1, 2, -1), (0, 0, -1, 2)),
}
DEGREES = {"G2": (2, 6), "F4": (2, 6, 8, 12)}


def _reflect(A, i: int, v: tuple[int, ...]) -> tuple[int, ...]:
    # s_i(alpha_j) = alpha_j - A[i][j] alpha_i
    c = sum(A[i][j] * v[j] for j in range(len(v)))
    out = list(v)
    out[i] -= c
    return tuple(out)


def root_system(A) -> list[tuple[int, ...]]:
    """All roots in the simple-root basis: positives (by height) then negatives."""
    r = len(A)
    simple = [tuple(int(i == j) for j in range(r)) for i in range(r)]
    seen = set(simple)
    frontier = list(simple)
    while frontier:
        nxt = []
        for v in frontier:
            for i in range(r):
                w = _reflect(A, i, v)
                if w not in seen:
                    seen.add(w)
                    nxt.append(w)
        frontier = nxt
    pos = sorted((v for v in seen if min(v) >= 0), key=lambda v: (sum(v), v))
    neg = [tuple(-x for x in v) for v in pos]
    return pos + neg


def _det_one_minus_q(M: list[list[int]]) -> RatPoly:
    """``det(1 - q M)`` by Laplace expansion over RatPoly entries."""
    r = len(M)
    ent = [[RatPoly({0: int(i == j)}) - RatPoly({1: M[i][j]}) for j in range(r)] for i in range(r)]
    tot = RatPoly()
    for p in permutations(range(r)):
        sgn = 1
        for i in range(r):
            for j in range(i + 1, r):
                if p[i] > p[j]:
                    sgn = -sgn
        term = RatPoly.constant(sgn)
        for i in range(r):
            term = term * ent[i][p[i]]
        tot = tot + term
    return tot


class Exceptional(WeylGroup):
    def __init__(self, name: str):
        if name not in CARTAN:
            raise WeylError(f"unsupported exceptional type {name!r}")
        self.kind, self.rank = name[0], int(name[1:])
        self.degrees = DEGREES[name]
        A = CARTAN[name]
        self.cartan = A
        self.roots = root_system(A)
        self.n_pos = len(self.roots) // 2
        idx = {v: k for k, v in enumerate(self.roots)}
        self._root_index = idx
        self.simple_reflections = [
            tuple(idx[_reflect(A, i, v)] for v in self.roots) for i in range(self.rank)
        ]
        self.group = PermGroup(self.simple_reflections, degree=len(self.roots), name=name)
        if self.group.order != self.order:
            raise WeylError(f"{name}: generated {self.group.order} elements, expected {self.order}")
        table = self.group.character_table()
        self._table = table.integer_rows()
        self.classes = []
        for k, c in enumerate(self.group.conjugacy_classes()):
            self.classes.append(WClass(f"C{k}", c.size, c.rep, _det_one_minus_q(self.matrix(c.rep))))
        self.irreducibles = [IrrW("", k, row[0]) for k, row in enumerate(self._table)]
        from .exceptional_data import attach_labels

        attach_labels(self)

    @property
    def name(self) -> str:
        return f"{self.kind}{self.rank}"

    def reorder_irreducibles(self, order: list[int]) -> None:
        self.irreducibles = [self.irreducibles[e] for e in order]
        for attr in ("char_table", "_fake_degrees"):
            self.__dict__.pop(attr, None)

    def matrix(self, w) -> list[list[int]]:
        """Matrix of ``w`` on the simple-root basis (columns are images of simple roots)."""
        r = self.rank
        cols = [self.roots[w[self._root_index[tuple(int(i == j) for j in range(r))]]] for i in range(r)]
        return [[cols[j][i] for j in range(r)] for i in range(r)]

    def _char(self, e, c):
        return self._table[self.irreducibles[e].key][c]

    def class_of(self, w) -> int:
        return self.group.class_index(w)

    def mul(self, a, b):
        return pmul(a, b)

    def inverse(self, a):
        return pinv(a)

    def length(self, w) -> int:
        return sum(1 for k in range(self.n_pos) if w[k] >= self.n_pos)

    @cached_property
    def w0(self):
        return max(self.group.elements, key=self.length)

    @property
    def identity(self):
        return tuple(range(len(self.roots)))

    def root_norms(self) -> list[Fraction]:
        """Squared lengths of the simple roots, scaled so the longest is 1."""
        A = self.cartan
        norms: list[Fraction | None] = [None] * self.rank
        norms[0] = Fraction(1)
        stack = [0]
        while stack:
            a = stack.pop()
            for b in range(self.rank):
                if A[a][b] and norms[b] is None:
                    norms[b] = norms[a] * A[a][b] / A[b][a]
                    stack.append(b)
        top = max(norms)
        return [x / top for x in norms]

    def reflection_class(self, long: bool) -> int:
        norms = self.root_norms()
        for i, x in enumerate(norms):
            if (x == 1) == long:
                return self.class_of(self.simple_reflections[i])
        raise WeylError(f"{self.name} has no {'long' if long else 'short'} simple root")
