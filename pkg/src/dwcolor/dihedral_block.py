"""Block algebra of V_s (x) V_s for the quantum double of the dihedral group D_n.

``V_s`` (s = +1 or -1) is the n-dimensional simple object spanned by the
reflections a^k b.  Its tensor square splits multiplicity-free into

* ``Unit``           the unit object (dimension 1),
* ``TwoDim(r)``      r = 1..(n-1)/2, two-dimensional, supported at e,
* ``Mixed(j, t)``    j = 1..(n-1)/2, t = 1..n, supported at a^j and a^-j,

so an endomorphism of V_s (x) V_s commuting with D_n is one scalar per
summand (a :class:`BlockVector`).  Half exponents zeta^(x/2) always mean
zeta^(x*(n+1)/2).

The raw side works with the full n^2 x n^2 matrices in the basis
a^k b (x) a^k' b and is used only to cross-check the block formulas.
"""
from __future__ import annotations

import random
from math import gcd
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .cyclotomic import CycloNumber, check_order, half, zeta_half_pow, zeta_scaled_frac_pow
from .errors import NotEquivariant
from .tangle.words import Frac, neg_cf

__all__ = [
    "Unit",
    "TwoDim",
    "Mixed",
    "BlockVector",
    "RotMatrix",
    "RawMorphism",
    "block_indices",
    "qdim",
    "phi_R",
    "rot_matrix",
    "quantum_trace",
    "raw_R",
    "raw_rot",
    "phi_forward",
    "phi_inverse",
    "rot_phi_power_closed",
    "rational_closed_form",
    "random_block_vector",
]


@dataclass(frozen=True)
class Unit:
    pass


@dataclass(frozen=True)
class TwoDim:
    r: int


@dataclass(frozen=True)
class Mixed:
    j: int
    t: int


def _check_sign(sign):
    if sign not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, got {sign!r}")
    return sign


@lru_cache(maxsize=None)
def block_indices(n):
    check_order(n)
    m = (n - 1) // 2
    out = [Unit()]
    out += [TwoDim(r) for r in range(1, m + 1)]
    out += [Mixed(j, t) for j in range(1, m + 1) for t in range(1, n + 1)]
    return tuple(out)


@lru_cache(maxsize=None)
def _position(n):
    return {idx: i for i, idx in enumerate(block_indices(n))}


def qdim(index):
    return 1 if isinstance(index, Unit) else 2


class BlockVector:
    """Diagonal endomorphism of V_s (x) V_s: one cyclotomic scalar per summand."""

    __slots__ = ("order", "sign", "entries")

    def __init__(self, order, sign, entries):
        check_order(order)
        self.order = order
        self.sign = _check_sign(sign)
        if isinstance(entries, dict):
            pos = _position(order)
            if set(entries) != set(pos):
                raise ValueError("entries must cover every block index exactly once")
            entries = [entries[idx] for idx in block_indices(order)]
        entries = tuple(
            e if isinstance(e, CycloNumber) else CycloNumber.from_rational(order, e) for e in entries
        )
        if len(entries) != len(block_indices(order)):
            raise ValueError(f"expected {len(block_indices(order))} entries, got {len(entries)}")
        self.entries = entries

    @classmethod
    def constant(cls, n, sign, value):
        c = CycloNumber.from_rational(n, value)
        return cls(n, sign, [c] * len(block_indices(n)))

    @classmethod
    def ones(cls, n, sign=1):
        return cls.constant(n, sign, 1)

    def __getitem__(self, index):
        return self.entries[_position(self.order)[index]]

    def items(self):
        return zip(block_indices(self.order), self.entries)

    def _check(self, other):
        if not isinstance(other, BlockVector) or other.order != self.order:
            raise ValueError("block vectors of different orders")

    def __mul__(self, other):
        """Composition of diagonal morphisms (entrywise product)."""
        if isinstance(other, (int, Fraction)):
            return BlockVector(self.order, self.sign, [e.scale(other) for e in self.entries])
        self._check(other)
        return BlockVector(self.order, self.sign, [a * b for a, b in zip(self.entries, other.entries)])

    __rmul__ = __mul__

    def __add__(self, other):
        self._check(other)
        return BlockVector(self.order, self.sign, [a + b for a, b in zip(self.entries, other.entries)])

    def __eq__(self, other):
        if not isinstance(other, BlockVector):
            return NotImplemented
        return self.order == other.order and self.entries == other.entries

    def __hash__(self):
        return hash((self.order, self.entries))

    def __repr__(self):
        shown = ", ".join(f"{idx}: {e!r}" for idx, e in list(self.items())[:4])
        return f"BlockVector(n={self.order}, sign={self.sign:+d}, {shown}, ...)"


def _cos2(n, x):
    """zeta^(x/2) + zeta^(-x/2)."""
    return zeta_half_pow(n, x) + zeta_half_pow(n, -x)


class RotMatrix:
    """Matrix of the quarter rotation on block vectors; ``rows[out][in]``."""

    __slots__ = ("order", "sign", "rows")

    def __init__(self, order, sign, rows):
        self.order = order
        self.sign = sign
        self.rows = rows

    def entry(self, out_index, in_index):
        pos = _position(self.order)
        return self.rows[pos[out_index]][pos[in_index]]

    def __matmul__(self, v):
        if not isinstance(v, BlockVector):
            return NotImplemented
        if v.order != self.order:
            raise ValueError("order mismatch")
        out = [CycloNumber.dot(zip(row, v.entries), self.order) for row in self.rows]
        return BlockVector(self.order, v.sign, out)

    def with_entry(self, out_index, in_index, value):
        """Copy with one entry replaced (used to inject faults in tests)."""
        pos = _position(self.order)
        rows = [list(r) for r in self.rows]
        rows[pos[out_index]][pos[in_index]] = value
        return RotMatrix(self.order, self.sign, tuple(tuple(r) for r in rows))


def phi_R(n, sign, l):
    """Image of the l-th power of the braiding: (+-1)^l on Unit/TwoDim, (+-zeta^(jt/2))^l on Mixed."""
    check_order(n)
    _check_sign(sign)
    s = sign**l if l >= 0 else sign ** (-l)
    out = []
    for idx in block_indices(n):
        if isinstance(idx, Mixed):
            out.append(zeta_half_pow(n, idx.j * idx.t * l).scale(s))
        else:
            out.append(CycloNumber.from_rational(n, s))
    return BlockVector(n, sign, out)


@lru_cache(maxsize=None)
def _rot_rows(n):
    inv_n = Fraction(1, n)
    idxs = block_indices(n)
    rows = []
    for a in idxs:
        row = []
        for b in idxs:
            if isinstance(b, Unit):
                val = CycloNumber.from_rational(n, inv_n)
            elif isinstance(a, Unit):
                val = CycloNumber.from_rational(n, 2 * inv_n)
            elif isinstance(a, TwoDim) and isinstance(b, TwoDim):
                val = CycloNumber.from_rational(n, 2 * inv_n)
            elif isinstance(a, TwoDim):
                val = _cos2(n, b.j * a.r).scale(inv_n)
            elif isinstance(b, TwoDim):
                val = _cos2(n, a.j * b.r).scale(inv_n)
            else:
                val = _cos2(n, a.j * b.t + b.j * a.t).scale(inv_n)
            row.append(val)
        rows.append(tuple(row))
    return tuple(rows)


def rot_matrix(n, sign=1):
    """The rotation matrix; it does not depend on the sign."""
    check_order(n)
    return RotMatrix(n, _check_sign(sign), _rot_rows(n))


def quantum_trace(v):
    """Sum over summands of quantum dimension times the scalar."""
    return CycloNumber.dot(
        ((CycloNumber.from_rational(v.order, qdim(idx)), e) for idx, e in v.items()), v.order
    )


# -- raw n^2 x n^2 matrices -----------------------------------------------


class RawMorphism:
    """Endomorphism of V_s (x) V_s as a sparse tensor.

    ``entries[(k, k2, s, s2)]`` is the coefficient of a^s b (x) a^s2 b in the
    image of a^k b (x) a^k2 b.
    """

    __slots__ = ("order", "sign", "entries")

    def __init__(self, order, sign, entries):
        self.order = check_order(order)
        self.sign = _check_sign(sign)
        self.entries = {key: val for key, val in entries.items() if not val.is_zero()}

    @classmethod
    def identity(cls, n, sign=1):
        one = CycloNumber.one(n)
        return cls(n, sign, {(k, k2, k, k2): one for k in range(n) for k2 in range(n)})

    def __getitem__(self, key):
        return self.entries.get(key) or CycloNumber.zero(self.order)

    def __matmul__(self, other):
        """Composition self o other."""
        n = self.order
        by_input = {}
        for (k, k2, s, s2), val in self.entries.items():
            by_input.setdefault((k, k2), []).append(((s, s2), val))
        acc = {}
        for (k, k2, m, m2), val in other.entries.items():
            for out, val2 in by_input.get((m, m2), ()):
                acc.setdefault((k, k2) + out, []).append((val2, val))
        return RawMorphism(n, self.sign, {key: CycloNumber.dot(p, n) for key, p in acc.items()})

    def __pow__(self, l):
        n = self.order
        if l < 0:
            return self.inverse_permutation() ** (-l)
        result = RawMorphism.identity(n, self.sign)
        for _ in range(l):
            result = self @ result
        return result

    def inverse_permutation(self):
        """Inverse of a signed permutation matrix."""
        inv = {}
        for (k, k2, s, s2), val in self.entries.items():
            c = val.as_rational()
            if c not in (1, -1) or (s, s2, k, k2) in inv:
                raise ValueError("not a signed permutation matrix")
            inv[(s, s2, k, k2)] = val
        if len(inv) != self.order**2:
            raise ValueError("not a signed permutation matrix")
        return RawMorphism(self.order, self.sign, inv)

    def is_equivariant(self):
        n = self.order
        for (k, k2, s, s2), val in self.entries.items():
            if (s - s2 - k + k2) % n:
                return False
            if self[((k + 2) % n, (k2 + 2) % n, (s + 2) % n, (s2 + 2) % n)] != val:
                return False
            if self[(-k % n, -k2 % n, -s % n, -s2 % n)] != val:
                return False
        return True

    def __eq__(self, other):
        if not isinstance(other, RawMorphism):
            return NotImplemented
        keys = set(self.entries) | set(other.entries)
        return self.order == other.order and all(self[k] == other[k] for k in keys)

    __hash__ = None


def raw_R(n, sign=1):
    """Braiding on V_s (x) V_s: a^k b (x) a^k' b -> s * a^(2k-k') b (x) a^k b."""
    check_order(n)
    val = CycloNumber.from_rational(n, _check_sign(sign))
    return RawMorphism(
        n, sign, {(k, k2, (2 * k - k2) % n, k): val for k in range(n) for k2 in range(n)}
    )


def raw_rot(F):
    """Rotation by an index shuffle, V_s* identified with V_s through the real basis.

    With ``(in1, in2) -> (out1, out2)`` the rotated morphism has
    ``T'[(l, j) -> (k', k)] = T[(j, k) -> (l, k')]``.
    """
    out = {}
    for (j, k, l, k2), val in F.entries.items():
        out[(l, j, k2, k)] = val
    return RawMorphism(F.order, F.sign, out)


def phi_forward(F):
    """Block scalars of an equivariant morphism (discrete Fourier transform)."""
    if not F.is_equivariant():
        raise NotEquivariant("morphism does not commute with the D_n action")
    n = F.order
    h = half(n)
    diag = [F[(d, d, 0, 0)] for d in range(n)]
    out = []
    for idx in block_indices(n):
        if isinstance(idx, Unit):
            out.append(CycloNumber.dot(((CycloNumber.one(n), c) for c in diag), n))
        elif isinstance(idx, TwoDim):
            # diag[d] == diag[-d], so half of zeta^(dr/2) + zeta^(-dr/2) suffices
            terms = ((_cos2(n, d * idx.r).scale(Fraction(1, 2)), diag[d]) for d in range(n))
            out.append(CycloNumber.dot(terms, n))
        else:
            j, t = idx.j, idx.t
            terms = (
                (CycloNumber.zeta(n, -d * t * h), F[((d + j) % n, d, j, 0)]) for d in range(n)
            )
            out.append(CycloNumber.dot(terms, n))
    return BlockVector(n, F.sign, out)


def phi_inverse(v):
    """The equivariant raw morphism with block scalars ``v`` (inverse Fourier transform)."""
    n = v.order
    h = half(n)
    m = (n - 1) // 2
    inv_n = Fraction(1, n)
    lam = v[Unit()]
    diag = []
    for d in range(n):
        terms = [(CycloNumber.one(n), lam)]
        terms += [(_cos2(n, d * r), v[TwoDim(r)]) for r in range(1, m + 1)]
        diag.append(CycloNumber.dot(terms, n).scale(inv_n))
    plus, minus = {}, {}
    for j in range(1, m + 1):
        nus = [v[Mixed(j, t)] for t in range(1, n + 1)]
        for d in range(n):
            plus[(j, d)] = CycloNumber.dot(
                ((CycloNumber.zeta(n, d * t * h), nu) for t, nu in zip(range(1, n + 1), nus)), n
            ).scale(inv_n)
            minus[(j, d)] = CycloNumber.dot(
                ((CycloNumber.zeta(n, -d * t * h), nu) for t, nu in zip(range(1, n + 1), nus)), n
            ).scale(inv_n)
    entries = {}
    for k in range(n):
        for k2 in range(n):
            g = (k - k2) % n
            for s in range(n):
                s2 = (s - g) % n
                d = (k2 - s2) % n  # shift so the output is (g, 0)
                if g == 0:
                    val = diag[d]
                elif g <= m:
                    val = plus[(g, d)]
                else:
                    val = minus[(n - g, d)]
                entries[(k, k2, s, s2)] = val
    return RawMorphism(n, v.sign, entries)


# -- closed forms -----------------------------------------------------------


def rot_phi_power_closed(n, sign, l):
    """Closed form of ROT applied to the l-th braiding power (l != 0).

    With g = gcd(n, l) the result is (+-1)^l * g times: 1 on Unit, 1 on
    TwoDim(r) when g | r, and zeta^(-jt/2l) on Mixed(j, t) when g | j and
    g | t (zero elsewhere).  The fractional power is taken in the subgroup
    of (n/g)-th roots of unity, where 2l/g is invertible; reducing jt/2l in
    the rationals first gives wrong values when g > 1 (e.g. n=15, l=9).
    """
    check_order(n)
    _check_sign(sign)
    if l == 0:
        raise ValueError("l must be nonzero")
    g = gcd(n, abs(l))
    factor = (sign ** abs(l)) * g
    zero = CycloNumber.zero(n)
    out = []
    for idx in block_indices(n):
        if isinstance(idx, Unit):
            out.append(CycloNumber.from_rational(n, factor))
        elif isinstance(idx, TwoDim):
            out.append(CycloNumber.from_rational(n, factor) if idx.r % g == 0 else zero)
        elif idx.j % g == 0 and idx.t % g == 0:
            jt = (idx.j // g) * (idx.t // g)
            out.append(zeta_scaled_frac_pow(n, g, -jt, 2 * l // g).scale(factor))
        else:
            out.append(zero)
    return BlockVector(n, sign, out)


def rational_closed_form(n, sign, f, expansion=None):
    """Closed-form block vector of the rational tangle T(p/q).

    Same pattern as :func:`rot_phi_power_closed` with g = gcd(n, p), Mixed
    entries zeta^(-q*jt/2p), and prefactor (+-1)^mu for the expansion used.
    """
    check_order(n)
    _check_sign(sign)
    if not isinstance(f, Frac):
        f = Frac.of(f)
    if expansion is None:
        expansion = neg_cf(f)
    p, q = f.num, f.den
    g = gcd(n, abs(p))
    factor = (sign ** (sum(expansion) % 2)) * g
    zero = CycloNumber.zero(n)
    out = []
    for idx in block_indices(n):
        if isinstance(idx, Unit):
            out.append(CycloNumber.from_rational(n, factor))
        elif isinstance(idx, TwoDim):
            out.append(CycloNumber.from_rational(n, factor) if idx.r % g == 0 else zero)
        elif idx.j % g == 0 and idx.t % g == 0:
            jt = (idx.j // g) * (idx.t // g)
            out.append(zeta_scaled_frac_pow(n, g, -q * jt, 2 * p // g).scale(factor))
        else:
            out.append(zero)
    return BlockVector(n, sign, out)


def random_block_vector(n, sign=1, rng=None, spread=3):
    """Block vector with small random integer coefficients (for property checks)."""
    rng = rng or random.Random()
    out = []
    for _ in block_indices(n):
        coeffs = [Fraction(rng.randint(-spread, spread), rng.choice((1, 1, 2, 3))) for _ in range(n)]
        out.append(CycloNumber(n, coeffs))
    return BlockVector(n, sign, out)
