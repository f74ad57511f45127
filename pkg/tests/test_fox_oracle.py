import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dwcolor.errors import BudgetExceeded, EvenOrder
from dwcolor.fox_oracle import (
    coloring_matrix,
    count_colorings,
    count_colorings_naive,
    smith_normal_form,
)
from dwcolor.tangle import Crossing, Frac, IntegralTangle, PlanarDiagram, closure_trace, montesinos_word, rational_word

from .conftest import CORPUS


def _unknot():
    return closure_trace(rational_word(Frac(1)))


def _unlink():
    return closure_trace(IntegralTangle(0))


def _trefoil():
    return closure_trace(rational_word(Frac(1, 3), [-3, 0]))


def test_coloring_matrix_shapes():
    unknot = _unknot()
    assert len(unknot.arcs) == 1
    unlink = _unlink()
    assert coloring_matrix(unlink) == [] and len(unlink.arcs) == 2
    m = coloring_matrix(_trefoil())
    assert len(m) == 3 and all(sorted(row) == [-2, 1, 1] for row in m)


@pytest.mark.parametrize("spec", CORPUS)
def test_coloring_matrix_rows(spec):
    for row in coloring_matrix(closure_trace(montesinos_word(spec))):
        assert sum(row) == 0
        assert set(row) <= {-2, -1, 0, 1, 2}


def test_snf_examples():
    r = smith_normal_form([[2, 0], [0, 3]], verify=True)
    assert (r.diagonal, r.rank, r.columns) == ((1, 6), 2, 2)
    assert smith_normal_form([[0, 0], [0, 0]], verify=True).rank == 0
    assert smith_normal_form([[1, 0, 0], [0, 1, 0], [0, 0, 1]], verify=True).diagonal == (1, 1, 1)
    r = smith_normal_form([[12, 6, 4, 8], [3, 9, 6, 12], [2, 16, 14, 28], [20, 10, 10, 20]], verify=True)
    assert r.diagonal == (1, 10, 30)
    assert smith_normal_form([], columns=3).columns == 3
    with pytest.raises(ValueError):
        smith_normal_form([[1, 2], [3]])


int_matrices = st.integers(1, 5).flatmap(
    lambda c: st.lists(st.lists(st.integers(-30, 30), min_size=c, max_size=c), min_size=0, max_size=5)
    .map(lambda rows: (rows, c))
)


@settings(max_examples=150)
@given(int_matrices)
def test_snf_invariants(case):
    rows, cols = case
    # verify=True asserts U*M*V = D, the divisibility chain and positivity
    r = smith_normal_form(rows, columns=cols, verify=True)
    assert r.rank <= min(len(rows), cols)


def test_snf_big_integers():
    m = [[10**30 + 1, 2 * 10**30], [3, 7 * 10**25]]
    r = smith_normal_form(m, verify=True)
    det = m[0][0] * m[1][1] - m[0][1] * m[1][0]
    assert r.diagonal[0] * r.diagonal[1] == abs(det)


def test_count_examples():
    for n in (3, 5, 7, 9):
        assert count_colorings(_unknot(), n) == n
        assert count_colorings(_unlink(), n) == n * n
    assert count_colorings(_trefoil(), 3) == 9 == count_colorings_naive(_trefoil(), 3)
    d = closure_trace(montesinos_word([Frac(3)] * 3))
    assert count_colorings(d, 3) == 27 == count_colorings_naive(d, 3)


def test_even_order_rejected():
    with pytest.raises(EvenOrder):
        count_colorings(_trefoil(), 4)
    with pytest.raises(EvenOrder):
        count_colorings_naive(_trefoil(), 4)


def test_naive_budget():
    d = closure_trace(montesinos_word([Frac(3), Frac(5), Frac(7)]))
    with pytest.raises(BudgetExceeded):
        count_colorings_naive(d, 15)


def _relabel(d, rng):
    perm = list(d.arcs)
    rng.shuffle(perm)
    relabel = dict(zip(d.arcs, perm))
    crossings = [
        Crossing(relabel[x.over_in], relabel[x.over_out], relabel[x.under_in], relabel[x.under_out], x.sign)
        for x in d.crossings
    ]
    rng.shuffle(crossings)
    arcs = list(d.arcs)
    rng.shuffle(arcs)
    return PlanarDiagram(tuple(crossings), tuple(arcs), d.components, d.writhe)


@pytest.mark.parametrize("spec", CORPUS)
def test_count_is_invariant_under_relabelling(spec):
    rng = random.Random(str(spec))
    d = closure_trace(montesinos_word(spec))
    for n in (3, 5, 9, 15):
        base = count_colorings(d, n)
        assert base % n == 0
        for _ in range(3):
            assert count_colorings(_relabel(d, rng), n) == base


@pytest.mark.parametrize("spec", CORPUS)
def test_snf_matches_naive(spec):
    d = closure_trace(montesinos_word(spec))
    for n in (3, 5):
        if n ** len(d.arcs) <= 10**7:
            assert count_colorings(d, n) == count_colorings_naive(d, n)
