"""
Exact scalars: residues mod a small prime, big integers and rationals.

Rationals are plain :class:`fractions.Fraction` (always reduced, positive
denominator); big counts are plain Python ``int``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

ExactRational = Fraction
BigCount = int

MAX_PRIME = 97


class ZeroInverse(ZeroDivisionError):
    pass


def is_small_prime(p: int) -> bool:
    if p < 2 or p > MAX_PRIME:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def check_prime(p: int) -> int:
    if not is_small_prime(p):
        raise ValueError("modulus must be a prime <= %d, got %r" % (MAX_PRIME, p))
    return p


def inv_mod(a: int, p: int) -> int:
    """Inverse of a mod p by the extended Euclidean algorithm."""
    a %= p
    if a == 0:
        raise ZeroInverse("0 has no inverse mod %d" % p)
    r0, r1 = p, a
    s0, s1 = 0, 1
    while r1:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
    assert r0 == 1, "modulus not prime?"
    return s0 % p


@dataclass(frozen=True)
class FieldScalar:
    value: int
    modulus: int

    def __post_init__(self):
        check_prime(self.modulus)
        object.__setattr__(self, "value", self.value % self.modulus)

    def _coerce(self, other):
        if isinstance(other, FieldScalar):
            if other.modulus != self.modulus:
                raise ValueError("mixed moduli %d, %d" % (self.modulus, other.modulus))
            return other.value
        if isinstance(other, int):
            return other
        return NotImplemented

    def __add__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return FieldScalar(self.value + b, self.modulus)

    __radd__ = __add__

    def __sub__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return FieldScalar(self.value - b, self.modulus)

    def __rsub__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return FieldScalar(b - self.value, self.modulus)

    def __mul__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return FieldScalar(self.value * b, self.modulus)

    __rmul__ = __mul__

    def __neg__(self):
        return FieldScalar(-self.value, self.modulus)

    def __truediv__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return self * inv_mod(b, self.modulus)

    def __pow__(self, e: int):
        if e < 0:
            return fp_inverse(self) ** (-e)
        return FieldScalar(pow(self.value, e, self.modulus), self.modulus)

    def __int__(self):
        return self.value

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return "%d (mod %d)" % (self.value, self.modulus)


def fp_inverse(x: FieldScalar) -> FieldScalar:
    return FieldScalar(inv_mod(x.value, x.modulus), x.modulus)


def rational_eval_poly(coeffs: Sequence, x) -> Fraction:
    """Evaluate ``coeffs[0] + coeffs[1] t + ...`` at ``t = x`` by Horner."""
    if not len(coeffs):
        raise ValueError("empty coefficient list")
    x = Fraction(x)
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * x + Fraction(c)
    return acc


def poly_from_roots(roots: Sequence, exponents: Sequence[int]) -> list[Fraction]:
    """Coefficients (constant term first) of prod (t - r)^k."""
    coeffs = [Fraction(1)]
    for r, k in zip(roots, exponents):
        r = Fraction(r)
        for _ in range(k):
            nxt = [Fraction(0)] * (len(coeffs) + 1)
            for i, c in enumerate(coeffs):
                nxt[i + 1] += c
                nxt[i] -= r * c
            coeffs = nxt
    return coeffs
