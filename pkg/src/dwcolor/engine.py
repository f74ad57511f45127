"""Evaluation of tangle words in the block algebra, and the coloring counts.

A word is evaluated by substitution: each integral tangle becomes a power
of the braiding, the vertical composite becomes composition (an entrywise
product of block vectors) and the quarter turn becomes the ROT matrix.  The
quantum trace closes the tangle.

Three independent routes give the Fox coloring count of a Montesinos knot:
the block engine, the closed gcd/lcm formula, and the Smith-normal-form
count in :mod:`dwcolor.fox_oracle`.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, reduce

from . import dihedral_block
from .cyclotomic import check_order
from .dihedral_block import phi_R, quantum_trace
from .errors import MultiComponentClosure, NonIntegerN, NonIntegerTrace, NotAKnot
from .tangle.diagram import closure_trace
from .tangle.words import Frac, IntegralTangle, Rot, VComp, montesinos_word, mu, neg_cf, rational_word

__all__ = [
    "InvariantReport",
    "eval_word",
    "rt_invariant",
    "invariant_report",
    "coloring_count_engine",
    "coloring_count_formula",
    "montesinos_invariant_closed",
    "closure_of",
    "rational_block_vector",
]


@dataclass(frozen=True)
class InvariantReport:
    word: object
    n: int
    value_plus: int
    value_minus: int
    writhe_parity: int
    cn: int


@lru_cache(maxsize=256)
def closure_of(word):
    """Cached planar diagram of the closure of ``word``."""
    return closure_trace(word)


def _require_knot(word, allow_links):
    diagram = closure_of(word)
    if diagram.n_components != 1 and not allow_links:
        raise MultiComponentClosure(
            f"the closure has {diagram.n_components} components; only knots are supported"
        )
    return diagram


def _eval(word, n, sign, rot):
    if isinstance(word, IntegralTangle):
        return phi_R(n, sign, word.twists)
    if isinstance(word, VComp):
        return _eval(word.upper, n, sign, rot) * _eval(word.lower, n, sign, rot)
    if isinstance(word, Rot):
        return rot @ _eval(word.inner, n, sign, rot)
    raise TypeError(f"not a tangle word: {word!r}")


def eval_word(word, n, sign, allow_links=False):
    """Block vector of ``word`` with every strand colored by V_sign."""
    check_order(n)
    _require_knot(word, allow_links)
    # looked up at call time so a replaced matrix is picked up
    rot = dihedral_block.rot_matrix(n, sign)
    return _eval(word, n, sign, rot)


def _trace_integer(vec):
    value = quantum_trace(vec).as_integer()
    if value is None:
        raise NonIntegerTrace(f"quantum trace {quantum_trace(vec)!r} is not a rational integer")
    return value


def rt_invariant(word, n, sign, allow_links=False):
    """F(K, V_sign): the quantum trace of the evaluated word."""
    return _trace_integer(eval_word(word, n, sign, allow_links))


def _assemble(n, writhe, f_plus, f_minus):
    """Average over the n reflections of the framing-corrected reflection characters."""
    total = Fraction(0)
    for _ in range(n):
        for sign, f in ((1, f_plus), (-1, f_minus)):
            theta = sign ** (writhe % 2)
            chi_e, chi_self = 1, sign
            total += theta * f * (chi_e + chi_self)
    total /= 2 * n
    if total.denominator != 1:
        raise NonIntegerTrace(f"coloring count {total} is not an integer")
    return total.numerator


def invariant_report(word, n, allow_links=False):
    diagram = _require_knot(word, allow_links)
    plus = rt_invariant(word, n, 1, allow_links)
    minus = rt_invariant(word, n, -1, allow_links)
    if diagram.n_components == 1:
        parity = diagram.writhe % 2
        cn = _assemble(n, diagram.writhe, plus, minus)
    else:
        # no single writhe for a link; every component carries V_+, whose twist is 1
        parity = len(diagram.crossings) % 2
        cn = plus
    return InvariantReport(word, n, plus, minus, parity, cn)


def coloring_count_engine(word, n, allow_links=False):
    """Number of Fox n-colorings of the closure, from the block engine."""
    return invariant_report(word, n, allow_links).cn


def _as_spec(spec):
    spec = tuple(f if isinstance(f, Frac) else Frac.of(f) for f in spec)
    if not spec:
        raise ValueError("a Montesinos spec needs at least one fraction")
    return spec


def _formula_magnitude(spec, n):
    ps = [abs(f.num) for f in spec]
    lcm = reduce(lambda a, b: a * b // math.gcd(a, b), ps)
    big_n = lcm * sum(Fraction(f.den, f.num) for f in spec)
    if big_n.denominator != 1:
        raise NonIntegerN(f"N = {big_n} is not an integer")
    g = math.gcd(n, lcm)
    value = n * math.prod(math.gcd(n, p) for p in ps) * math.gcd(n // g, big_n.numerator)
    return value // g


def coloring_count_formula(spec, n, allow_links=False):
    """Closed gcd/lcm count of n-colorings of the Montesinos knot with parameters ``spec``."""
    check_order(n)
    spec = _as_spec(spec)
    if not allow_links:
        diagram = closure_of(montesinos_word(spec))
        if diagram.n_components != 1:
            raise NotAKnot(f"the Montesinos closure of {spec} has {diagram.n_components} components")
    return _formula_magnitude(spec, n)


def montesinos_invariant_closed(spec, n, sign, allow_links=False):
    """Signed closed form of F(K, V_sign); the sign is (+-1)^(sum of mu)."""
    spec = _as_spec(spec)
    value = coloring_count_formula(spec, n, allow_links)
    if sign == -1 and sum(mu(neg_cf(f)) for f in spec) % 2:
        value = -value
    return value


def rational_block_vector(f, n, sign, strategy="ceil"):
    """Engine block vector of the rational tangle T(f)."""
    return eval_word(rational_word(f, strategy=strategy), n, sign, allow_links=True)

