"""Characters of W(B_n) and W(D_n) from bipartitions.

Irreducibles of W(B_n) are labelled by bipartitions ``(alpha, beta)``, with
``((n), ())`` the trivial character and ``((), (1^n))`` the sign. Values come
from the Murnaghan-Nakayama rule for the wreath product: removing a rim hook
from ``beta`` picks up the sign of the cycle being removed.

Classes of W(B_n) are signed cycle types ``(lambda, mu)`` (positive and
negative cycle lengths). In W(D_n) a class with ``mu = ()`` and all parts of
``lambda`` even splits in two; irreducibles ``{alpha, alpha}`` split into
``(alpha, +)`` and ``(alpha, -)`` whose difference on the split class
containing the all-positive standard representative is
``2^len(nu) * chi_alpha(nu)`` with ``lambda = 2 nu``.
"""

from __future__ import annotations

import math
from collections import Counter
from functools import lru_cache

from .signed_perm import SignedPerm

Partition = tuple[int, ...]


@lru_cache(maxsize=None)
def partitions(n: int, max_part: int | None = None) -> tuple[Partition, ...]:
    """Partitions of ``n`` as descending tuples, in reverse-lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        return ((),)
    out = []
    for k in range(min(n, max_part), 0, -1):
        for rest in partitions(n - k, k):
            out.append((k,) + rest)
    return tuple(out)


def bipartitions(n: int) -> list[tuple[Partition, Partition]]:
    return [(a, b) for k in range(n, -1, -1) for a in partitions(k) for b in partitions(n - k)]


def n_of(p: Partition) -> int:
    """``sum (i-1) p_i`` for a descending partition."""
    return sum(i * x for i, x in enumerate(p))


def _beta_set(p: Partition, length: int) -> tuple[int, ...]:
    parts = list(p) + [0] * (length - len(p))
    return tuple(parts[i] + length - 1 - i for i in range(length))


def _from_beta(beta: list[int]) -> Partition:
    beta = sorted(beta, reverse=True)
    L = len(beta)
    return tuple(x for x in (beta[i] - (L - 1 - i) for i in range(L)) if x > 0)


def rim_hooks(p: Partition, k: int) -> list[tuple[Partition, int]]:
    """All ways to remove a ``k``-rim hook: ``(remaining partition, (-1)^height)``."""
    L = len(p) + k
    beta = _beta_set(p, L)
    bset = set(beta)
    out = []
    for x in beta:
        y = x - k
        if y >= 0 and y not in bset:
            between = sum(1 for z in beta if y < z < x)
            new = [z for z in beta if z != x] + [y]
            out.append((_from_beta(new), (-1) ** between))
    return out


@lru_cache(maxsize=None)
def sym_char(p: Partition, cycle_type: Partition) -> int:
    """Character of S_n labelled ``p`` at cycle type ``cycle_type``."""
    if not cycle_type:
        return 1 if not p else 0
    k, rest = cycle_type[0], cycle_type[1:]
    return sum(s * sym_char(q, rest) for q, s in rim_hooks(p, k))


@lru_cache(maxsize=None)
def _b_char(alpha: Partition, beta: Partition, cycles: tuple[tuple[int, int], ...]) -> int:
    if not cycles:
        return 1 if not alpha and not beta else 0
    (k, sign), rest = cycles[0], cycles[1:]
    tot = 0
    for q, s in rim_hooks(alpha, k):
        tot += s * _b_char(q, beta, rest)
    for q, s in rim_hooks(beta, k):
        tot += sign * s * _b_char(alpha, q, rest)
    return tot


def b_char(alpha: Partition, beta: Partition, lam: Partition, mu: Partition) -> int:
    """Character ``(alpha, beta)`` of W(B_n) on signed cycle type ``(lam, mu)``."""
    cycles = tuple(sorted([(k, 1) for k in lam] + [(k, -1) for k in mu], reverse=True))
    return _b_char(tuple(alpha), tuple(beta), cycles)


def b_order(n: int) -> int:
    return 2 ** n * math.factorial(n)


def b_centralizer_order(lam: Partition, mu: Partition) -> int:
    z = 1
    for parts in (lam, mu):
        for k, m in Counter(parts).items():
            z *= (2 * k) ** m * math.factorial(m)
    return z


def class_rep(lam: Partition, mu: Partition) -> SignedPerm:
    """All-positive-sign representative (one sign flip per negative cycle)."""
    n = sum(lam) + sum(mu)
    cycles, start = [], 0
    for k, neg in [(k, False) for k in lam] + [(k, True) for k in mu]:
        cycles.append((tuple(range(start, start + k)), neg))
        start += k
    return SignedPerm.from_cycles(n, cycles)


def is_split_class(lam: Partition, mu: Partition) -> bool:
    return not mu and all(k % 2 == 0 for k in lam)


def split_sign(w: SignedPerm) -> int:
    """+1 if ``w`` is D_n-conjugate to the all-positive representative of its class, else -1.

    ``w`` must lie in a split class. A diagonal sign change ``eps`` making all
    signs positive conjugates ``w`` to a permutation; the class is ``+`` iff
    ``eps`` has an even number of ``-1`` entries.
    """
    lam, mu = w.signed_cycle_type
    if not is_split_class(lam, mu):
        raise ValueError("element is not in a split class")
    flips = 0
    for coords, _prod in w.cycles():
        eps = 1
        for c in coords:
            if eps == -1:
                flips += 1
            eps *= w.signs[c]
    return 1 if flips % 2 == 0 else -1


def symbol_of_bipartition(alpha: Partition, beta: Partition, kind: str):
    """Reduced symbol attached to a bipartition (``alpha`` on the top row)."""
    from ..symbols import Symbol

    a = sorted(alpha)
    b = sorted(beta)
    if kind == "B":
        m = max(len(a) - 1, len(b), 0)
        a = [0] * (m + 1 - len(a)) + a
        b = [0] * (m - len(b)) + b
    else:
        m = max(len(a), len(b))
        a = [0] * (m - len(a)) + a
        b = [0] * (m - len(b)) + b
    top = tuple(x + i for i, x in enumerate(a))
    bot = tuple(x + i for i, x in enumerate(b))
    return Symbol(top, bot).reduced()
