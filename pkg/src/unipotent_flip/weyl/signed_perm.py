"""Signed permutations: elements of W(B_n), with W(D_n) the even ones."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property


@dataclass(frozen=True)
class SignedPerm:
    """``w(e_i) = signs[i] * e_{images[i]}`` with 0-based coordinates."""

    images: tuple[int, ...]
    signs: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(len(self.images))):
            raise ValueError(f"not a permutation: {self.images}")
        if len(self.signs) != len(self.images) or any(s not in (1, -1) for s in self.signs):
            raise ValueError(f"bad sign vector: {self.signs}")

    @classmethod
    def identity(cls, n: int) -> "SignedPerm":
        return cls(tuple(range(n)), (1,) * n)

    @classmethod
    def longest(cls, n: int) -> "SignedPerm":
        """``w0 = -1``."""
        return cls(tuple(range(n)), (-1,) * n)

    @classmethod
    def from_cycles(cls, n: int, cycles) -> "SignedPerm":
        """Build from ``[(coords, negative), ...]``; a negative cycle carries one sign flip."""
        images = list(range(n))
        signs = [1] * n
        for coords, negative in cycles:
            for a, b in zip(coords, list(coords[1:]) + [coords[0]]):
                images[a] = b
            if negative:
                signs[coords[-1]] = -1
        return cls(tuple(images), tuple(signs))

    @property
    def n(self) -> int:
        return len(self.images)

    def __mul__(self, other: "SignedPerm") -> "SignedPerm":
        """Composition: apply ``other`` first."""
        imgs = tuple(self.images[j] for j in other.images)
        sgns = tuple(other.signs[i] * self.signs[other.images[i]] for i in range(self.n))
        return SignedPerm(imgs, sgns)

    def inverse(self) -> "SignedPerm":
        imgs = [0] * self.n
        sgns = [1] * self.n
        for i, (j, s) in enumerate(zip(self.images, self.signs)):
            imgs[j] = i
            sgns[j] = s
        return SignedPerm(tuple(imgs), tuple(sgns))

    def is_even(self) -> bool:
        """Membership in W(D_n)."""
        return self.signs.count(-1) % 2 == 0

    def cycles(self) -> list[tuple[tuple[int, ...], int]]:
        """Cycles as ``(coords, sign product)``."""
        seen = [False] * self.n
        out = []
        for i in range(self.n):
            if seen[i]:
                continue
            coords, prod, j = [], 1, i
            while not seen[j]:
                seen[j] = True
                coords.append(j)
                prod *= self.signs[j]
                j = self.images[j]
            out.append((tuple(coords), prod))
        return out

    @cached_property
    def signed_cycle_type(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        """``(positive cycle lengths, negative cycle lengths)``, each descending."""
        pos, neg = [], []
        for coords, prod in self.cycles():
            (pos if prod == 1 else neg).append(len(coords))
        return tuple(sorted(pos, reverse=True)), tuple(sorted(neg, reverse=True))

    def apply(self, v: tuple[int, ...]) -> tuple[int, ...]:
        out = [0] * self.n
        for i, x in enumerate(v):
            if x:
                out[self.images[i]] += self.signs[i] * x
        return tuple(out)

    def as_matrix(self) -> list[list[int]]:
        m = [[0] * self.n for _ in range(self.n)]
        for i, (j, s) in enumerate(zip(self.images, self.signs)):
            m[j][i] = s
        return m

    def __str__(self):
        parts = []
        for coords, prod in self.cycles():
            body = " ".join(str(c + 1) for c in coords)
            parts.append(f"({body}){'-' if prod == -1 else ''}")
        return "".join(parts)


def positive_roots(kind: str, n: int) -> list[tuple[int, ...]]:
    roots = []
    for i in range(n):
        for j in range(i + 1, n):
            for s in (-1, 1):
                v = [0] * n
                v[i], v[j] = 1, s
                roots.append(tuple(v))
        if kind == "B":
            v = [0] * n
            v[i] = 1
            roots.append(tuple(v))
    return roots


def _is_positive(v) -> bool:
    for x in v:
        if x:
            return x > 0
    raise ValueError("zero vector")


def length(w: SignedPerm, kind: str = "B") -> int:
    """Number of positive roots sent to negative roots."""
    return sum(1 for r in positive_roots(kind, w.n) if not _is_positive(w.apply(r)))
