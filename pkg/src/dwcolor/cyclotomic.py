"""Exact arithmetic in the cyclotomic field Q(zeta_n) for odd n >= 3.

Elements are stored as a length-n coefficient vector over the power basis
1, zeta, ..., zeta^(n-1), i.e. modulo x^n - 1.  That representation is not
unique (the zeta^k sum to zero), so equality, hashing and integer extraction
go through the remainder modulo the n-th cyclotomic polynomial.

Coefficients are kept as integer numerators over one positive common
denominator; ``coeffs`` exposes them as :class:`fractions.Fraction`.
"""
from __future__ import annotations

import cmath
import math
from fractions import Fraction
from functools import lru_cache
from numbers import Rational

from .errors import EvenOrder, InvalidOrder, NonInvertibleDenominator

__all__ = [
    "CycloNumber",
    "check_order",
    "cyclotomic_poly",
    "canonicalize",
    "as_integer",
    "zeta_pow",
    "zeta_half_pow",
    "zeta_frac_pow",
    "half",
]


def check_order(n):
    if isinstance(n, bool) or not isinstance(n, int):
        raise InvalidOrder(f"order must be an integer, got {n!r}")
    if n % 2 == 0:
        raise EvenOrder(f"order must be odd and >= 3, got {n}")
    if n < 3:
        raise InvalidOrder(f"order must be odd and >= 3, got {n}")
    return n


def half(n):
    """Inverse of 2 modulo the odd integer n."""
    return (n + 1) // 2


def _poly_divexact(num, den):
    # exact division of integer polynomials (low degree first), den monic
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for i in range(len(out) - 1, -1, -1):
        c = num[i + len(den) - 1]
        out[i] = c
        if c:
            for k, d in enumerate(den):
                num[i + k] -= c * d
    if any(num):
        raise ArithmeticError("polynomial division is not exact")
    return out


@lru_cache(maxsize=None)
def cyclotomic_poly(n):
    """Coefficients (lowest degree first) of the n-th cyclotomic polynomial.

    Built by dividing x^n - 1 by Phi_d for every proper divisor d of n.
    """
    if n < 1:
        raise ValueError("n must be positive")
    poly = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            poly = _poly_divexact(poly, cyclotomic_poly(d))
    return tuple(poly)


@lru_cache(maxsize=None)
def _phi_degree(n):
    return len(cyclotomic_poly(n)) - 1


def _reduce(num, n):
    """Remainder of an integer vector (mod x^n - 1 form) modulo Phi_n."""
    poly = cyclotomic_poly(n)
    deg = len(poly) - 1
    rem = list(num)
    for top in range(len(rem) - 1, deg - 1, -1):
        c = rem[top]
        if c:
            base = top - deg
            for k in range(deg):
                rem[base + k] -= c * poly[k]
            rem[top] = 0
    return tuple(rem[:deg])


class CycloNumber:
    """An element of Q(zeta_n), zeta = exp(2*pi*i/n), n odd."""

    __slots__ = ("order", "_num", "_den", "_canon")

    def __init__(self, order, coeffs=None):
        check_order(order)
        self.order = order
        if coeffs is None:
            coeffs = ()
        coeffs = list(coeffs)
        if len(coeffs) > order:
            raise ValueError(f"at most {order} coefficients expected, got {len(coeffs)}")
        coeffs += [0] * (order - len(coeffs))
        fracs = [Fraction(c) for c in coeffs]
        den = 1
        for f in fracs:
            den = den * f.denominator // math.gcd(den, f.denominator)
        self._set(tuple(f.numerator * (den // f.denominator) for f in fracs), den)

    def _set(self, num, den):
        g = den
        for c in num:
            if c:
                g = math.gcd(g, c)
                if g == 1:
                    break
        if not any(num):
            den, g = 1, 1
        if g != 1:
            num = tuple(c // g for c in num)
            den //= g
        self._num = num
        self._den = den
        self._canon = None

    @classmethod
    def _raw(cls, order, num, den=1):
        obj = cls.__new__(cls)
        obj.order = order
        if den < 0:
            num = tuple(-c for c in num)
            den = -den
        obj._set(tuple(num), den)
        return obj

    @classmethod
    def zero(cls, n):
        return cls._raw(check_order(n), (0,) * n)

    @classmethod
    def from_rational(cls, n, value):
        value = Fraction(value)
        num = [0] * check_order(n)
        num[0] = value.numerator
        return cls._raw(n, num, value.denominator)

    @classmethod
    def one(cls, n):
        return cls.from_rational(n, 1)

    @classmethod
    def zeta(cls, n, e=1):
        num = [0] * check_order(n)
        num[e % n] = 1
        return cls._raw(n, num)

    @property
    def coeffs(self):
        return tuple(Fraction(c, self._den) for c in self._num)

    @property
    def denominator(self):
        return self._den

    # -- canonical form -------------------------------------------------

    def canonical_coeffs(self):
        """Coefficients of the remainder modulo Phi_n, length phi(n)."""
        if self._canon is None:
            rem = _reduce(self._num, self.order)
            self._canon = tuple(Fraction(c, self._den) for c in rem)
        return self._canon

    def canonicalize(self):
        return CycloNumber(self.order, self.canonical_coeffs())

    def is_zero(self):
        return not any(self.canonical_coeffs())

    def as_integer(self):
        """The rational integer equal to this number, or None."""
        canon = self.canonical_coeffs()
        if any(canon[1:]):
            return None
        c = canon[0] if canon else Fraction(0)
        return c.numerator if c.denominator == 1 else None

    def as_rational(self):
        canon = self.canonical_coeffs()
        if any(canon[1:]):
            return None
        return canon[0]

    def evaluate(self):
        """Complex value at zeta = exp(2*pi*i/n); a test-only cross-check."""
        n = self.order
        total = sum(c * cmath.exp(2j * math.pi * k / n) for k, c in enumerate(self._num) if c)
        return total / self._den

    # -- ring operations ------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, CycloNumber):
            if other.order != self.order:
                raise ValueError(f"order mismatch: {self.order} vs {other.order}")
            return other
        if isinstance(other, (int, Rational)) and not isinstance(other, bool):
            return CycloNumber.from_rational(self.order, other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        da, db = self._den, other._den
        if da == db:
            num = tuple(a + b for a, b in zip(self._num, other._num))
            return CycloNumber._raw(self.order, num, da)
        num = tuple(a * db + b * da for a, b in zip(self._num, other._num))
        return CycloNumber._raw(self.order, num, da * db)

    __radd__ = __add__

    def __neg__(self):
        return CycloNumber._raw(self.order, tuple(-c for c in self._num), self._den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Rational)) and not isinstance(other, bool):
            return self.scale(other)
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        n = self.order
        a = [(i, c) for i, c in enumerate(self._num) if c]
        b = [(i, c) for i, c in enumerate(other._num) if c]
        if len(a) > len(b):
            a, b = b, a
        acc = [0] * n
        for i, ca in a:
            for k, cb in b:
                acc[(i + k) % n] += ca * cb
        return CycloNumber._raw(n, acc, self._den * other._den)

    __rmul__ = __mul__

    def scale(self, value):
        """Multiply by an exact rational."""
        value = Fraction(value)
        num = tuple(c * value.numerator for c in self._num)
        return CycloNumber._raw(self.order, num, self._den * value.denominator)

    def __truediv__(self, other):
        if isinstance(other, (int, Rational)) and not isinstance(other, bool):
            return self.scale(1 / Fraction(other))
        return NotImplemented

    def __pow__(self, e):
        if not isinstance(e, int) or e < 0:
            return NotImplemented
        result = CycloNumber.one(self.order)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def conj(self):
        """Complex conjugate: zeta^k -> zeta^(-k)."""
        n = self.order
        num = [0] * n
        for k, c in enumerate(self._num):
            num[-k % n] = c
        return CycloNumber._raw(n, num, self._den)

    def shift(self, e):
        """Multiply by zeta^e (a cyclic shift of the coefficient vector)."""
        n = self.order
        e %= n
        num = self._num[-e:] + self._num[:-e] if e else self._num
        return CycloNumber._raw(n, num, self._den)

    @staticmethod
    def dot(pairs, order):
        """Sum of products a*b over the given pairs, with a single normalization."""
        pairs = [(a, b) for a, b in pairs if any(a._num) and any(b._num)]
        if not pairs:
            return CycloNumber.zero(order)
        den = 1
        for a, b in pairs:
            d = a._den * b._den
            den = den * d // math.gcd(den, d)
        acc = [0] * order
        for a, b in pairs:
            m = den // (a._den * b._den)
            xs = [(i, c * m) for i, c in enumerate(a._num) if c]
            ys = [(k, c) for k, c in enumerate(b._num) if c]
            for i, ca in xs:
                for k, cb in ys:
                    acc[(i + k) % order] += ca * cb
        return CycloNumber._raw(order, acc, den)

    # -- comparison -----------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, CycloNumber):
            if other.order != self.order:
                return False
        else:
            other = self._coerce(other)
            if other is None:
                return NotImplemented
        return self.canonical_coeffs() == other.canonical_coeffs()

    def __hash__(self):
        return hash((self.order, self.canonical_coeffs()))

    def __bool__(self):
        return not self.is_zero()

    def __repr__(self):
        terms = []
        for k, c in enumerate(self.canonical_coeffs()):
            if c:
                terms.append(f"{c}" if k == 0 else f"{c}*z^{k}")
        return f"CycloNumber({self.order}: {' + '.join(terms) or '0'})"


def canonicalize(x):
    return x.canonicalize()


def as_integer(x):
    return x.as_integer()


def zeta_pow(n, e):
    """zeta^e with the exponent reduced modulo n."""
    return CycloNumber.zeta(n, e)


def zeta_half_pow(n, x):
    """The n-th root of unity whose square is zeta^x, i.e. zeta^(x*(n+1)/2)."""
    check_order(n)
    return CycloNumber.zeta(n, x * half(n))


def frac_exponent(n, a, b):
    """Exponent e (mod n) with zeta^e = zeta^(a/b); raises if not resolvable."""
    check_order(n)
    if b == 0:
        raise ZeroDivisionError("zero denominator in fractional exponent")
    f = Fraction(a, b)
    num, den = f.numerator, f.denominator
    if math.gcd(den, n) != 1:
        raise NonInvertibleDenominator(
            f"denominator {den} of exponent {f} is not invertible modulo {n}"
        )
    return num * pow(den, -1, n) % n


def zeta_frac_pow(n, a, b):
    """zeta^(a/b), defined when the reduced denominator is a unit modulo n."""
    return CycloNumber.zeta(n, frac_exponent(n, a, b))


def zeta_scaled_frac_pow(n, g, a, b):
    """zeta^(g*x) where x = a/b in Z/(n/g).

    This is the value of zeta^(g^2 a / (g b)) when g divides n: the factor
    g shared by numerator and denominator is cancelled inside the subgroup
    of (n/g)-th roots of unity instead of in the rationals.
    """
    check_order(n)
    if g <= 0 or n % g:
        raise ValueError(f"{g} does not divide {n}")
    m = n // g
    f = Fraction(a, b)
    if math.gcd(f.denominator, m) != 1:
        raise NonInvertibleDenominator(
            f"denominator {f.denominator} of exponent {f} is not invertible modulo {m}"
        )
    x = f.numerator * pow(f.denominator, -1, m) % m if m > 1 else 0
    return CycloNumber.zeta(n, g * x)
