"""Exact rationals and univariate Laurent polynomials over Q.

Rationals are :class:`fractions.Fraction`; they are always reduced and carry
arbitrary-precision integers, which is all the identity checks here need.

>>> u = RatPoly.monomial(1)
>>> (u + 1) * (u - 1)
RatPoly('u^2 - 1')
>>> p = u * (u**2 + 1) / 2
>>> p.substitute_neg()
RatPoly('-1/2*u^3 - 1/2*u')
>>> p.degree_and_valuation()
(3, 1)
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Union

Rat = Fraction

Scalar = Union[int, Fraction]


def parse_rat(text: str) -> Fraction:
    """Parse ``"num/den"`` or ``"num"`` into a reduced rational."""
    return Fraction(text)


def format_rat(x: Scalar) -> str:
    """Canonical ``"num/den"`` string; integers keep a ``/1`` denominator."""
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


class RatPoly:
    """Sparse Laurent polynomial in one variable with rational coefficients.

    Stored as a mapping ``exponent -> nonzero Fraction``. Instances are
    treated as immutable values; every operation returns a new, canonical
    polynomial, so ``==`` is structural.
    """

    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs: Mapping[int, Scalar] | Iterable[tuple[int, Scalar]] = ()):
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        c: dict[int, Fraction] = {}
        for e, a in items:
            if a:
                c[int(e)] = c.get(int(e), Fraction(0)) + Fraction(a)
        self._c = {e: a for e, a in sorted(c.items()) if a}
        self._hash = None

    # construction

    @classmethod
    def constant(cls, a: Scalar) -> "RatPoly":
        return cls({0: a})

    @classmethod
    def monomial(cls, e: int, a: Scalar = 1) -> "RatPoly":
        return cls({e: a})

    @classmethod
    def from_list(cls, coeffs: Iterable[Scalar], start: int = 0) -> "RatPoly":
        """Dense ascending coefficient list beginning at exponent ``start``."""
        return cls((start + i, a) for i, a in enumerate(coeffs))

    @staticmethod
    def _coerce(x) -> "RatPoly":
        if isinstance(x, RatPoly):
            return x
        if isinstance(x, (int, Fraction)):
            return RatPoly.constant(x)
        return NotImplemented

    # inspection

    @property
    def coeffs(self) -> dict[int, Fraction]:
        return dict(self._c)

    def coeff(self, e: int) -> Fraction:
        return self._c.get(e, Fraction(0))

    def is_zero(self) -> bool:
        return not self._c

    def exponents(self) -> list[int]:
        return list(self._c)

    def degree_and_valuation(self) -> tuple[int, int]:
        if not self._c:
            raise ValueError("undefined degree: zero polynomial")
        exps = list(self._c)
        return exps[-1], exps[0]

    def degree(self) -> int:
        return self.degree_and_valuation()[0]

    def valuation(self) -> int:
        return self.degree_and_valuation()[1]

    def is_polynomial(self) -> bool:
        return all(e >= 0 for e in self._c)

    def __call__(self, x: Scalar) -> Fraction:
        x = Fraction(x)
        return sum((a * x**e for e, a in self._c.items()), Fraction(0))

    # ring operations

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        c = dict(self._c)
        for e, a in other._c.items():
            c[e] = c.get(e, 0) + a
        return RatPoly(c)

    __radd__ = __add__

    def __neg__(self):
        return RatPoly({e: -a for e, a in self._c.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, RatPoly):
            return NotImplemented
        c: dict[int, Fraction] = {}
        for e1, a1 in self._c.items():
            for e2, a2 in other._c.items():
                c[e1 + e2] = c.get(e1 + e2, 0) + a1 * a2
        return RatPoly(c)

    __rmul__ = __mul__

    def scale(self, k: Scalar) -> "RatPoly":
        return RatPoly({e: a * k for e, a in self._c.items()})

    def __truediv__(self, k):
        if isinstance(k, (int, Fraction)):
            return self.scale(Fraction(1) / Fraction(k))
        if isinstance(k, RatPoly):
            q, r = self.divmod(k)
            if not r.is_zero():
                raise ArithmeticError("polynomial division is not exact")
            return q
        return NotImplemented

    def __pow__(self, n: int) -> "RatPoly":
        if n < 0:
            if len(self._c) != 1:
                raise ValueError("negative powers only for monomials")
            (e, a), = self._c.items()
            return RatPoly({e * n: Fraction(a) ** n})
        out = RatPoly.constant(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def shift(self, k: int) -> "RatPoly":
        """Multiply by ``u**k``."""
        return RatPoly({e + k: a for e, a in self._c.items()})

    def divmod(self, d: "RatPoly") -> tuple["RatPoly", "RatPoly"]:
        """Euclidean division of ordinary polynomials (nonnegative exponents)."""
        if d.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        if not (self.is_polynomial() and d.is_polynomial()):
            raise ValueError("divmod needs ordinary polynomials")
        dd, lead = d.degree(), d._c[d.degree()]
        rem = dict(self._c)
        quot: dict[int, Fraction] = {}
        while rem:
            top = max(rem)
            if top < dd:
                break
            k = rem[top] / lead
            quot[top - dd] = k
            for e, a in d._c.items():
                v = rem.get(e + top - dd, 0) - k * a
                if v:
                    rem[e + top - dd] = v
                else:
                    rem.pop(e + top - dd, None)
        return RatPoly(quot), RatPoly(rem)

    def substitute_neg(self) -> "RatPoly":
        """``p(u) -> p(-u)``."""
        return RatPoly({e: (-a if e % 2 else a) for e, a in self._c.items()})

    def substitute_inverse(self) -> "RatPoly":
        """``p(u) -> p(1/u)``."""
        return RatPoly({-e: a for e, a in self._c.items()})

    # value semantics

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = RatPoly.constant(other)
        if not isinstance(other, RatPoly):
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(tuple(self._c.items()))
        return self._hash

    def __bool__(self):
        return bool(self._c)

    def to_json(self) -> list[list]:
        return [[e, format_rat(a)] for e, a in self._c.items()]

    @classmethod
    def from_json(cls, data: Iterable) -> "RatPoly":
        return cls((int(e), parse_rat(a)) for e, a in data)

    def to_str(self, var: str = "u") -> str:
        if not self._c:
            return "0"
        parts = []
        for e, a in sorted(self._c.items(), reverse=True):
            mag = abs(a)
            if e == 0:
                mono = str(mag)
            else:
                power = var if e == 1 else f"{var}^{e}"
                mono = power if mag == 1 else f"{mag}*{power}"
            sign = "-" if a < 0 else "+"
            parts.append((sign, mono))
        head_sign, head = parts[0]
        out = ("-" if head_sign == "-" else "") + head
        for sign, mono in parts[1:]:
            out += f" {sign} {mono}"
        return out

    def __str__(self):
        return self.to_str()

    def __repr__(self):
        return f"RatPoly({self.to_str()!r})"


def poly_add(p: RatPoly, q: RatPoly) -> RatPoly:
    return p + q


def poly_mul(p: RatPoly, q: RatPoly) -> RatPoly:
    return p * q


def poly_scale(p: RatPoly, k: Scalar | RatPoly) -> RatPoly:
    return p * k


def substitute_neg(p: RatPoly) -> RatPoly:
    return p.substitute_neg()


def degree_and_valuation(p: RatPoly) -> tuple[int, int]:
    return p.degree_and_valuation()


def q_integer(k: int) -> RatPoly:
    """``1 + u + ... + u^(k-1)``."""
    return RatPoly.from_list([1] * k)
