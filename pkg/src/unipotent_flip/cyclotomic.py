"""Exact arithmetic in the cyclotomic field Q(zeta_N).

Elements are stored in the power basis ``1, z, ..., z^(phi(N)-1)`` reduced
modulo the N-th cyclotomic polynomial, as integer numerators over one common
positive denominator, so equality is structural.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Mapping


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_n, ascending, monic."""
    num = [-1] + [0] * (n - 1) + [1]  # x^n - 1
    for d in range(1, n):
        if n % d == 0:
            num = _exact_div(num, list(cyclotomic_poly(d)))
    return tuple(num)


def _exact_div(num: list[int], den: list[int]) -> list[int]:
    num = list(num)
    dn = len(den) - 1
    out = [0] * (len(num) - dn)
    for k in range(len(num) - 1, dn - 1, -1):
        c = num[k]  # den is monic
        out[k - dn] = c
        if c:
            for i, b in enumerate(den):
                num[k - dn + i] -= c * b
    assert not any(num), "non-exact cyclotomic division"
    return out


def _reduce(coeffs: list[int], n: int) -> list[int]:
    phi = cyclotomic_poly(n)
    deg = len(phi) - 1
    c = list(coeffs) + [0] * max(0, deg - len(coeffs))
    for k in range(len(c) - 1, deg - 1, -1):
        a = c[k]
        if a:
            for i, b in enumerate(phi):
                c[k - deg + i] -= a * b
    return c[:deg]


class Cyc:
    """An element of Q(zeta_N) for a fixed conductor N."""

    __slots__ = ("n", "num", "den")

    def __init__(self, n: int, num: tuple[int, ...], den: int = 1):
        g = math.gcd(den, *num) if any(num) else den
        if den < 0:
            g = -g
        self.n = n
        self.num = tuple(a // g for a in num)
        self.den = den // g

    @classmethod
    def from_powers(cls, n: int, powers: Mapping[int, int | Fraction]) -> "Cyc":
        """Build ``sum powers[j] * zeta_n**j``."""
        den = 1
        for a in powers.values():
            den = den * Fraction(a).denominator // math.gcd(den, Fraction(a).denominator)
        coeffs = [0] * n
        for j, a in powers.items():
            coeffs[j % n] += int(Fraction(a) * den)
        return cls(n, tuple(_reduce(coeffs, n)), den)

    @classmethod
    def rational(cls, n: int, a: int | Fraction) -> "Cyc":
        return cls.from_powers(n, {0: a})

    @classmethod
    def root_of_unity(cls, n: int, j: int) -> "Cyc":
        return cls.from_powers(n, {j: 1})

    def _check(self, other: "Cyc"):
        if self.n != other.n:
            raise ValueError(f"conductor mismatch: {self.n} vs {other.n}")

    def _lift(self, other):
        if isinstance(other, Cyc):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return Cyc.rational(self.n, other)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        den = self.den * other.den
        return Cyc(self.n, tuple(a * other.den + b * self.den for a, b in zip(self.num, other.num)), den)

    __radd__ = __add__

    def __neg__(self):
        return Cyc(self.n, tuple(-a for a in self.num), self.den)

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        prod = [0] * (len(self.num) + len(other.num))
        for i, a in enumerate(self.num):
            if a:
                for j, b in enumerate(other.num):
                    if b:
                        prod[i + j] += a * b
        return Cyc(self.n, tuple(_reduce(prod, self.n)), self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, k):
        if isinstance(k, (int, Fraction)):
            k = Fraction(k)
            return Cyc(self.n, tuple(a * k.denominator for a in self.num), self.den * k.numerator)
        return NotImplemented

    def conj(self) -> "Cyc":
        """Complex conjugation ``zeta -> zeta^-1``."""
        return Cyc.from_powers(self.n, {-j: Fraction(a, self.den) for j, a in enumerate(self.num) if a})

    def is_rational(self) -> bool:
        return not any(self.num[1:])

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"value {self!r} is not rational")
        return Fraction(self.num[0] if self.num else 0, self.den)

    def __complex__(self):
        z = complex(math.cos(2 * math.pi / self.n), math.sin(2 * math.pi / self.n))
        return sum(a * z**j for j, a in enumerate(self.num)) / self.den

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Cyc.rational(self.n, other)
        if not isinstance(other, Cyc):
            return NotImplemented
        return self.n == other.n and self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.n, self.num, self.den))

    def __bool__(self):
        return any(self.num)

    def __repr__(self):
        if self.is_rational():
            return f"Cyc({self.to_fraction()})"
        terms = [f"{Fraction(a, self.den)}*z{j}" for j, a in enumerate(self.num) if a]
        return f"Cyc[{self.n}](" + " + ".join(terms) + ")"


def cyclotomic_factorization(p, max_index: int = 60):
    """Write a polynomial as ``c * u^a * prod Phi_d(u)^k_d``.

    Returns ``(c, a, {d: k_d})`` or ``None`` when ``p`` has another
    irreducible factor (or a factor ``Phi_d`` with ``d > max_index``).
    """
    from .exact_arith import RatPoly

    if p.is_zero() or not p.is_polynomial():
        return None
    a = p.valuation()
    rest = p.shift(-a)
    exps: dict[int, int] = {}
    for d in range(1, max_index + 1):
        if rest.degree() == 0:
            break
        phi = RatPoly(dict(enumerate(cyclotomic_poly(d))))
        while rest.degree() >= phi.degree():
            q, r = rest.divmod(phi)
            if not r.is_zero():
                break
            rest = q
            exps[d] = exps.get(d, 0) + 1
    if rest.degree() != 0:
        return None
    return rest.coeff(0), a, exps
