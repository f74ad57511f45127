"""Fox n-colorings of planar diagrams, counted by integer linear algebra.

This is the independent check on the block engine: it never touches the
quantum-double machinery, only the crossing relations
``under_in + under_out - 2*over = 0 (mod n)``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .cyclotomic import check_order
from .errors import BudgetExceeded

__all__ = [
    "SNFResult",
    "coloring_matrix",
    "smith_normal_form",
    "count_colorings",
    "count_colorings_naive",
]

NAIVE_BUDGET = 10**7


@dataclass(frozen=True)
class SNFResult:
    diagonal: tuple  # nonzero invariant factors d1 | d2 | ... | dr
    rank: int
    columns: int


def coloring_matrix(diagram):
    """One row per crossing, one column per arc (columns follow ``diagram.arcs``)."""
    col = {a: i for i, a in enumerate(diagram.arcs)}
    rows = []
    for x in diagram.crossings:
        row = [0] * len(col)
        row[col[x.under_in]] += 1
        row[col[x.under_out]] += 1
        row[col[x.over_in]] -= 2
        rows.append(row)
    return rows


def _identity(k):
    return [[int(i == j) for j in range(k)] for i in range(k)]


def _matmul(a, b):
    return [[sum(x * y for x, y in zip(row, colm)) for colm in zip(*b)] for row in a]


def smith_normal_form(matrix, columns=None, verify=False):
    """Invariant factors of an integer matrix.

    Smallest-absolute-value pivoting with full row/column reduction.  With
    ``verify=True`` the unimodular transforms U, V are tracked and
    ``U @ M @ V == D`` is asserted.
    """
    m = [list(map(int, row)) for row in matrix]
    rows = len(m)
    cols = columns if columns is not None else (len(m[0]) if m else 0)
    if any(len(r) != cols for r in m):
        raise ValueError("ragged matrix")
    a = [r[:] for r in m]
    u = _identity(rows) if verify else None
    v = _identity(cols) if verify else None

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        if verify:
            u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for r in a:
            r[i], r[j] = r[j], r[i]
        if verify:
            for r in v:
                r[i], r[j] = r[j], r[i]

    def add_row(dst, src, k):  # row dst += k * row src
        a[dst] = [x + k * y for x, y in zip(a[dst], a[src])]
        if verify:
            u[dst] = [x + k * y for x, y in zip(u[dst], u[src])]

    def add_col(dst, src, k):
        for r in a:
            r[dst] += k * r[src]
        if verify:
            for r in v:
                r[dst] += k * r[src]

    t = 0
    while t < min(rows, cols):
        best = None
        for i in range(t, rows):
            for j in range(t, cols):
                if a[i][j] and (best is None or abs(a[i][j]) < abs(a[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        swap_rows(t, best[0])
        swap_cols(t, best[1])
        while True:
            p = a[t][t]
            dirty = False
            for i in range(t + 1, rows):
                if a[i][t]:
                    add_row(i, t, -(a[i][t] // p))
                    if a[i][t]:
                        dirty = True
            for j in range(t + 1, cols):
                if a[t][j]:
                    add_col(j, t, -(a[t][j] // p))
                    if a[t][j]:
                        dirty = True
            if dirty:
                # a smaller remainder appeared in the pivot row/column
                i_best, j_best = t, t
                for i in range(t, rows):
                    if a[i][t] and abs(a[i][t]) < abs(a[i_best][j_best]):
                        i_best, j_best = i, t
                for j in range(t, cols):
                    if a[t][j] and abs(a[t][j]) < abs(a[i_best][j_best]):
                        i_best, j_best = t, j
                swap_rows(t, i_best)
                swap_cols(t, j_best)
                continue
            bad = next(
                (i for i in range(t + 1, rows) for j in range(t + 1, cols) if a[i][j] % p),
                None,
            )
            if bad is None:
                break
            add_row(t, bad, 1)
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            if verify:
                u[t] = [-x for x in u[t]]
        t += 1

    diag = tuple(a[i][i] for i in range(t))
    if verify:
        produced = _matmul(_matmul(u, m), v) if rows and cols else a
        assert produced == a, "U*M*V does not reproduce the diagonal form"
        assert all(a[i][j] == 0 for i in range(rows) for j in range(cols) if i != j)
        assert all(d > 0 for d in diag)
        assert all(diag[i + 1] % diag[i] == 0 for i in range(len(diag) - 1))
    return SNFResult(diag, len(diag), cols)


def count_colorings(diagram, n):
    """Number of solutions of the coloring system modulo n: n^(c-r) * prod gcd(d_i, n)."""
    check_order(n)
    snf = smith_normal_form(coloring_matrix(diagram), columns=len(diagram.arcs))
    count = n ** (snf.columns - snf.rank)
    for d in snf.diagonal:
        count *= math.gcd(d, n)
    return count


def count_colorings_naive(diagram, n, budget=NAIVE_BUDGET):
    """Exhaustive count over all n^arcs assignments."""
    check_order(n)
    narcs = len(diagram.arcs)
    total = n**narcs
    if total > budget:
        raise BudgetExceeded(f"{n}^{narcs} = {total} assignments exceeds the budget {budget}")
    mat = np.array(coloring_matrix(diagram), dtype=np.int64).reshape(len(diagram.crossings), narcs)
    if narcs == 0:
        return 1
    radix = n ** np.arange(narcs, dtype=np.int64)
    count = 0
    chunk = 1 << 18
    for lo in range(0, total, chunk):
        idx = np.arange(lo, min(total, lo + chunk), dtype=np.int64)
        colors = (idx[:, None] // radix[None, :]) % n
        residues = (colors @ mat.T) % n
        count += int(np.count_nonzero(~residues.any(axis=1)))
    return count
