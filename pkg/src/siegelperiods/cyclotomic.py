"""Exact arithmetic in cyclotomic fields Q(zeta_m).

Elements are coordinate vectors in the power basis 1, zeta, ..., zeta^(phi(m)-1),
kept canonically reduced modulo the m-th cyclotomic polynomial.  Coordinates are
Python ints or Fractions, so equality and zero-testing are exact coefficient
comparisons.  m = 1 degenerates to plain rationals.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd

from .arith import divisors


def _poly_divmod_int(num: list[int], den: list[int]) -> tuple[list[int], list[int]]:
    """Quotient and remainder of integer polynomials (ascending coefficients)."""
    num = list(num)
    dn = len(den) - 1
    assert den[dn] == 1, "divisor must be monic"
    if len(num) - 1 < dn:
        return [0], num
    quot = [0] * (len(num) - dn)
    for i in range(len(num) - 1, dn - 1, -1):
        c = num[i]
        if c:
            quot[i - dn] = c
            for j, d in enumerate(den):
                num[i - dn + j] -= c * d
    while len(num) > 1 and num[-1] == 0:
        num.pop()
    return quot, num


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m: int) -> tuple[int, ...]:
    """Coefficients (ascending, monic) of the m-th cyclotomic polynomial."""
    if m < 1:
        raise ValueError("order must be >= 1")
    poly = [-1] + [0] * (m - 1) + [1]  # x^m - 1
    for d in divisors(m):
        if d < m:
            poly, rem = _poly_divmod_int(poly, list(cyclotomic_polynomial(d)))
            assert rem == [0]
    return tuple(poly)


@lru_cache(maxsize=None)
def _phi_degree(m: int) -> int:
    return len(cyclotomic_polynomial(m)) - 1


class Cyclotomic:
    """An element of Q(zeta_m), reduced mod the m-th cyclotomic polynomial."""

    __slots__ = ("m", "coeffs")

    def __init__(self, m: int, coeffs):
        phi = _phi_degree(m)
        vec = list(coeffs)
        if len(vec) > phi:
            # substitute zeta^phi = -(lower terms of Phi_m) until degree < phi
            rel = cyclotomic_polynomial(m)
            for i in range(len(vec) - 1, phi - 1, -1):
                c = vec[i]
                if c:
                    vec[i] = 0
                    for j in range(phi):
                        vec[i - phi + j] -= c * rel[j]
            vec = vec[:phi]
        elif len(vec) < phi:
            vec = vec + [0] * (phi - len(vec))
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "coeffs", tuple(vec))

    def __setattr__(self, name, value):
        raise AttributeError("Cyclotomic elements are immutable")

    @classmethod
    def zero(cls, m: int = 1) -> "Cyclotomic":
        return cls(m, [])

    @classmethod
    def one(cls, m: int = 1) -> "Cyclotomic":
        return cls(m, [1])

    @classmethod
    def root(cls, m: int, exponent: int = 1) -> "Cyclotomic":
        """zeta_m ** exponent."""
        e = exponent % m
        vec = [0] * (e + 1)
        vec[e] = 1
        return cls(m, vec)

    @classmethod
    def from_rational(cls, value, m: int = 1) -> "Cyclotomic":
        return cls(m, [value])

    # -- predicates ------------------------------------------------------

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def is_integral(self) -> bool:
        return all(Fraction(c).denominator == 1 for c in self.coeffs)

    def rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self!r} is not rational")
        return Fraction(self.coeffs[0]) if self.coeffs else Fraction(0)

    # -- arithmetic ------------------------------------------------------

    def _coerce(self, other) -> "Cyclotomic | None":
        if isinstance(other, Cyclotomic):
            if other.m == self.m:
                return other
            if other.is_rational():
                return Cyclotomic.from_rational(other.rational(), self.m)
            if self.is_rational():
                return None  # handled by caller promoting self
            raise ValueError(f"incompatible cyclotomic orders {self.m} and {other.m}")
        if isinstance(other, (int, Fraction)):
            return Cyclotomic.from_rational(other, self.m)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            if isinstance(other, Cyclotomic) and self.is_rational():
                return other + self.rational()
            return NotImplemented
        return Cyclotomic(self.m, [a + b for a, b in zip(self.coeffs, o.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic(self.m, [-a for a in self.coeffs])

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            if isinstance(other, Cyclotomic) and self.is_rational():
                return -(other - self.rational())
            return NotImplemented
        return Cyclotomic(self.m, [a - b for a, b in zip(self.coeffs, o.coeffs)])

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Cyclotomic(self.m, [a * other for a in self.coeffs])
        o = self._coerce(other)
        if o is None:
            if isinstance(other, Cyclotomic) and self.is_rational():
                return other * self.rational()
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        prod = [0] * (len(a) + len(b) - 1) if a and b else [0]
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        prod[i + j] += ai * bj
        return Cyclotomic(self.m, prod)

    __rmul__ = __mul__

    def conjugate(self) -> "Cyclotomic":
        """Complex conjugation, zeta -> zeta^(-1)."""
        vec = [0] * self.m
        for j, c in enumerate(self.coeffs):
            vec[(-j) % self.m] += c
        return Cyclotomic(self.m, vec)

    def inverse(self) -> "Cyclotomic":
        """Multiplicative inverse in Q(zeta_m) via the extended Euclidean algorithm."""
        if self.is_zero():
            raise ZeroDivisionError("cyclotomic division by zero")

        def trim(p):
            while len(p) > 1 and p[-1] == 0:
                p.pop()
            return p

        def divmod_poly(num, den):
            num = list(num)
            dn = len(den) - 1
            quot = [Fraction(0)] * max(1, len(num) - dn)
            for i in range(len(num) - 1, dn - 1, -1):
                c = num[i] / den[dn]
                if c:
                    quot[i - dn] = c
                    for j, d in enumerate(den):
                        num[i - dn + j] -= c * d
            return quot, trim(num)

        def combine(p, q, quot):
            # p - quot * q
            out = list(p) + [Fraction(0)] * max(0, len(quot) + len(q) - 1 - len(p))
            for i, qc in enumerate(quot):
                if qc:
                    for j, c in enumerate(q):
                        out[i + j] -= qc * c
            return trim(out)

        # invariant: s_i * self == r_i (mod Phi_m); Phi_m is irreducible over Q
        r0 = [Fraction(c) for c in cyclotomic_polynomial(self.m)]
        r1 = trim([Fraction(c) for c in self.coeffs])
        s0, s1 = [Fraction(0)], [Fraction(1)]
        while len(r1) > 1:
            quot, rem = divmod_poly(r0, r1)
            r0, r1 = r1, rem
            s0, s1 = s1, combine(s0, s1, quot)
        c = r1[0]
        assert c != 0, "unreachable: Phi_m is irreducible"
        return Cyclotomic(self.m, [x / c for x in s1])

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError
            return self * (1 / Fraction(other))
        if isinstance(other, Cyclotomic):
            o = self._coerce(other)
            if o is None:
                return Cyclotomic.from_rational(self.rational(), other.m) / other
            return self * o.inverse()
        return NotImplemented

    # -- comparisons -----------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, Cyclotomic):
            if other.m == self.m:
                return self.coeffs == other.coeffs
            if self.is_rational() and other.is_rational():
                return self.rational() == other.rational()
            return False
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.rational() == other
        return NotImplemented

    def __hash__(self):
        if self.is_rational():
            return hash(self.rational())
        return hash((self.m, tuple(Fraction(c) for c in self.coeffs)))

    def __repr__(self):
        return f"Cyclotomic(m={self.m}, {list(self.coeffs)})"

    def __str__(self):
        if self.is_rational():
            return str(self.rational())
        terms = []
        for j, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if j == 0:
                terms.append(str(c))
            else:
                z = f"z{self.m}" if j == 1 else f"z{self.m}^{j}"
                terms.append(z if c == 1 else f"-{z}" if c == -1 else f"{c}*{z}")
        return " + ".join(terms).replace("+ -", "- ")
