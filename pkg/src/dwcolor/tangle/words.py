"""Arborescent tangle words and the rational/Montesinos constructions.

A word is built from integral tangles with two operations: the vertical
composite ``upper * lower`` (the lower tangle is read first, tangles are
read bottom to top) and the quarter turn ``rt`` (counterclockwise).
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from ..errors import IllFormedExpansion, ZeroTangle

__all__ = [
    "Frac",
    "IntegralTangle",
    "VComp",
    "Rot",
    "TangleWord",
    "MontesinosSpec",
    "eval_cf",
    "neg_cf",
    "word_from_expansion",
    "rational_word",
    "montesinos_word",
    "mu",
    "crossing_count",
]


@dataclass(frozen=True)
class Frac:
    """Reduced nonzero fraction num/den with den > 0."""

    num: int
    den: int = 1

    def __post_init__(self):
        if self.den == 0:
            raise ZeroDivisionError("fraction with zero denominator")
        if self.num == 0:
            raise ZeroTangle("the 0 tangle is not allowed")
        if self.den < 0 or math.gcd(self.num, self.den) != 1:
            raise ValueError(f"{self.num}/{self.den} is not in lowest terms with positive denominator")

    @classmethod
    def of(cls, value, den=None):
        """Normalize any rational (or a num/den pair) into a Frac."""
        f = Fraction(value) if den is None else Fraction(value, den)
        return cls(f.numerator, f.denominator)

    def as_fraction(self):
        return Fraction(self.num, self.den)

    def __neg__(self):
        return Frac(-self.num, self.den)

    def __str__(self):
        return f"{self.num}/{self.den}"


@dataclass(frozen=True)
class IntegralTangle:
    twists: int


@dataclass(frozen=True)
class VComp:
    upper: "TangleWord"
    lower: "TangleWord"


@dataclass(frozen=True)
class Rot:
    inner: "TangleWord"


TangleWord = IntegralTangle | VComp | Rot
MontesinosSpec = tuple  # tuple[Frac, ...], at least one entry


def eval_cf(terms):
    """Negative continued fraction [[s1, ..., sk]] = sk - 1/[[s1, ..., s(k-1)]]."""
    terms = list(terms)
    if not terms:
        raise IllFormedExpansion("empty expansion")
    value = Fraction(terms[0])
    for s in terms[1:]:
        if value == 0:
            raise IllFormedExpansion(f"intermediate value 0 in expansion {terms}")
        value = s - 1 / value
    if value == 0:
        raise ZeroTangle(f"expansion {terms} evaluates to 0")
    return Frac.of(value)


def _round_step(x, strategy):
    if strategy == "ceil":
        return math.ceil(x)
    if strategy == "floor":
        return math.floor(x)
    if strategy == "nearest":
        return round(x)
    raise ValueError(f"unknown expansion strategy {strategy!r}")


def neg_cf(f, strategy="ceil"):
    """An expansion [s1, ..., sk] with eval_cf(...) == f.

    Each step picks s_k by the given rounding of p/q and recurses on
    1/(s_k - p/q); the denominators strictly decrease, so k <= q.
    """
    x = f.as_fraction() if isinstance(f, Frac) else Fraction(f)
    if x == 0:
        raise ZeroTangle("the 0 tangle has no expansion")
    out = []
    while True:
        if x.denominator == 1:
            out.append(x.numerator)
            break
        s = _round_step(x, strategy)
        out.append(s)
        x = 1 / (s - x)
    out.reverse()
    return out


def word_from_expansion(terms):
    """rt(s_k * rt(... rt(s_2 * rt(s_1)) ...)) for the expansion [s_1, ..., s_k]."""
    terms = list(terms)
    if not terms:
        raise IllFormedExpansion("empty expansion")
    word = Rot(IntegralTangle(terms[0]))
    for s in terms[1:]:
        word = Rot(VComp(IntegralTangle(s), word))
    return word


def rational_word(f, expansion=None, strategy="ceil"):
    if expansion is None:
        expansion = neg_cf(f, strategy)
    elif eval_cf(expansion) != (f if isinstance(f, Frac) else Frac.of(f)):
        raise IllFormedExpansion(f"expansion {expansion} does not evaluate to {f}")
    return word_from_expansion(expansion)


def montesinos_word(spec, strategy="ceil"):
    """T(p_m/q_m) * ... * T(p_1/q_1); the first entry of ``spec`` sits at the bottom."""
    spec = list(spec)
    if not spec:
        raise ValueError("a Montesinos spec needs at least one fraction")
    words = [rational_word(f, strategy=strategy) for f in reversed(spec)]
    word = words[0]
    for w in words[1:]:
        word = VComp(word, w)
    return word


def mu(expansion):
    return sum(expansion)


def crossing_count(word):
    if isinstance(word, IntegralTangle):
        return abs(word.twists)
    if isinstance(word, VComp):
        return crossing_count(word.upper) + crossing_count(word.lower)
    return crossing_count(word.inner)
