import json
from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given
from hypothesis import strategies as st

from dwcolor.errors import IllFormedExpansion, ParseError, SchemaError, ZeroTangle
from dwcolor.tangle import (
    Frac,
    IntegralTangle,
    Rot,
    VComp,
    closure_trace,
    crossing_count,
    eval_cf,
    format_montesinos,
    format_word,
    from_pd_json,
    montesinos_word,
    mu,
    neg_cf,
    parse_montesinos,
    parse_word,
    rational_word,
    to_pd_json,
)

from .conftest import CORPUS, RATIONALS

STRATEGIES = ("ceil", "floor", "nearest")


def fractions_upto(k):
    return st.tuples(st.integers(-k, k).filter(bool), st.integers(1, k)).filter(
        lambda pq: gcd(*pq) == 1
    ).map(lambda pq: Frac(*pq))


# -- fractions and continued fractions ---------------------------------------


def test_frac_validation():
    assert Frac.of(Fraction(-4, 6)) == Frac(-2, 3)
    assert str(-Frac(2, 3)) == "-2/3"
    with pytest.raises(ZeroTangle):
        Frac(0, 1)
    with pytest.raises(ValueError):
        Frac(2, 4)
    with pytest.raises(ValueError):
        Frac(1, -3)


def test_eval_cf_examples():
    assert eval_cf([3]) == Frac(3)
    assert eval_cf([2, 4]) == Frac(7, 2)
    assert eval_cf([-3, 0]) == Frac(1, 3)


def test_eval_cf_errors():
    with pytest.raises(IllFormedExpansion):
        eval_cf([0, 0, 1])
    with pytest.raises(IllFormedExpansion):
        eval_cf([])
    with pytest.raises(ZeroTangle):
        eval_cf([1, 1])


def test_neg_cf_examples():
    assert neg_cf(Frac(3)) == [3]
    assert eval_cf(neg_cf(Frac(7, 2))) == Frac(7, 2)
    assert eval_cf(neg_cf(Frac(1, 3))) == Frac(1, 3)
    with pytest.raises(ValueError):
        neg_cf(Frac(1, 3), strategy="sideways")


@given(fractions_upto(50), st.sampled_from(STRATEGIES))
def test_neg_cf_round_trip(f, strategy):
    e = neg_cf(f, strategy)
    assert eval_cf(e) == f
    assert len(e) <= 2 * (abs(f.num) + f.den)


def test_mu():
    assert mu([3]) == 3
    assert mu([-3, 0]) == -3
    assert mu([2, 4]) == 6


def test_mu_parity_depends_on_the_expansion():
    # two expansions of 2/5 with opposite parities of mu
    a, b = [3, 2, 1], [-2, -3, 0]
    assert eval_cf(a) == eval_cf(b) == Frac(2, 5)
    assert mu(a) % 2 != mu(b) % 2


@given(fractions_upto(20).filter(lambda f: f.den % 2), st.sampled_from(STRATEGIES))
def test_mu_parity_matches_writhe_of_closure(f, strategy):
    e = neg_cf(f, strategy)
    d = closure_trace(rational_word(f, e))
    assert d.n_components == 1
    assert (mu(e) - d.writhe) % 2 == 0


# -- words ----------------------------------------------------------------------


def test_rational_words():
    assert rational_word(Frac(3)) == Rot(IntegralTangle(3))
    assert rational_word(Frac(1, 3), [-3, 0]) == Rot(VComp(IntegralTangle(0), Rot(IntegralTangle(-3))))
    w = rational_word(Frac(-1, 2))
    assert isinstance(w, Rot)
    with pytest.raises(IllFormedExpansion):
        rational_word(Frac(1, 3), [2, 4])


def test_montesinos_words():
    assert montesinos_word([Frac(2, 5)]) == rational_word(Frac(2, 5))
    r3 = Rot(IntegralTangle(3))
    assert montesinos_word([Frac(3)] * 3) == VComp(VComp(r3, r3), r3)
    a, b = Frac(1, 3), Frac(2, 5)
    assert montesinos_word([a, b]) == VComp(rational_word(b), rational_word(a))
    with pytest.raises(ValueError):
        montesinos_word([])


# -- parser ---------------------------------------------------------------------


def test_parse_examples():
    assert parse_word("3") == IntegralTangle(3)
    assert parse_word("rt(-3)") == Rot(IntegralTangle(-3))
    assert parse_word("rt(2)*rt(3)") == VComp(Rot(IntegralTangle(2)), Rot(IntegralTangle(3)))
    assert parse_word(" rt( 2 * rt( −3 ) ) ") == Rot(VComp(IntegralTangle(2), Rot(IntegralTangle(-3))))


def test_star_is_left_associative():
    a, b, c = (IntegralTangle(k) for k in (1, 2, 3))
    assert parse_word("1*2*3") == VComp(VComp(a, b), c)
    assert parse_word("1*(2*3)") == VComp(a, VComp(b, c))


@pytest.mark.parametrize(
    "text, position",
    [("", 0), ("rt(3", 4), ("3*", 2), ("rt 3", 3), ("3 4", 2), ("x", 0), ("rt()", 3), ("(3))", 3)],
)
def test_parse_errors_carry_positions(text, position):
    with pytest.raises(ParseError) as info:
        parse_word(text)
    assert info.value.position == position


words = st.recursive(
    st.integers(-6, 6).map(IntegralTangle),
    lambda inner: st.one_of(inner.map(Rot), st.tuples(inner, inner).map(lambda p: VComp(*p))),
    max_leaves=8,
)


@given(words)
def test_format_parse_round_trip(w):
    assert parse_word(format_word(w)) == w


def test_montesinos_specs():
    assert parse_montesinos("1/3,-2,5/2") == (Frac(1, 3), Frac(-2), Frac(5, 2))
    assert parse_montesinos("1/3, −2/1, 10/4") == (Frac(1, 3), Frac(-2), Frac(5, 2))
    assert parse_montesinos("3/-7") == (Frac(-3, 7),)
    assert format_montesinos(parse_montesinos("1/3,-2")) == "1/3,-2/1"
    with pytest.raises(ZeroTangle):
        parse_montesinos("1/3,0")
    with pytest.raises(ParseError):
        parse_montesinos("1/0")
    with pytest.raises(ParseError):
        parse_montesinos("1/3,,2")
    with pytest.raises(ParseError):
        parse_montesinos("")


# -- diagrams -------------------------------------------------------------------


def test_closure_examples():
    d = closure_trace(IntegralTangle(0))
    assert (d.n_components, len(d.crossings), d.writhe) == (2, 0, None)
    d = closure_trace(rational_word(Frac(1, 3), [-3, 0]))
    assert (d.n_components, len(d.crossings)) == (1, 3)
    d = closure_trace(montesinos_word([Frac(3)] * 3))
    assert (d.n_components, len(d.crossings)) == (1, 9)


def test_crossing_signs():
    assert closure_trace(IntegralTangle(3)).writhe == 3
    assert closure_trace(IntegralTangle(-3)).writhe == -3
    assert closure_trace(Rot(IntegralTangle(1))).writhe == -1


@given(fractions_upto(15), st.sampled_from(STRATEGIES))
def test_rational_closures(f, strategy):
    e = neg_cf(f, strategy)
    d = closure_trace(rational_word(f, e))
    assert d.n_components == (1 if f.den % 2 else 2)
    assert len(d.crossings) == sum(abs(s) for s in e)


@pytest.mark.parametrize("spec", CORPUS)
def test_crossing_count_of_montesinos_closure(spec):
    d = closure_trace(montesinos_word(spec))
    assert len(d.crossings) == sum(abs(s) for f in spec for s in neg_cf(f))
    assert len(d.crossings) == crossing_count(montesinos_word(spec))
    ends = sorted([x.under_in for x in d.crossings] + [x.under_out for x in d.crossings])
    # every arc starts and ends at an undercrossing exactly once
    assert ends == sorted(list(d.arcs) * 2)


@pytest.mark.parametrize("spec", CORPUS)
def test_pd_json_round_trip(spec):
    d = closure_trace(montesinos_word(spec))
    text = to_pd_json(d)
    assert from_pd_json(text) == d
    assert list(json.loads(text)) == ["n_components", "writhe", "arcs", "crossings"]


def test_pd_json_of_empty_closure():
    d = closure_trace(IntegralTangle(0))
    data = json.loads(to_pd_json(d))
    assert data["crossings"] == [] and data["n_components"] == 2
    assert from_pd_json(to_pd_json(d)) == d


def _trefoil_payload():
    return json.loads(to_pd_json(closure_trace(IntegralTangle(3))))


@pytest.mark.parametrize(
    "mutate",
    [
        lambda d: d.pop("arcs"),
        lambda d: d.update(n_components=2),
        lambda d: d.update(writhe=1),
        lambda d: d["crossings"][0].update(sign=0),
        lambda d: d["crossings"][0].update(over_in=99),
        lambda d: d["crossings"][0].pop("under_out"),
        lambda d: d["crossings"][0].update(over_out=d["crossings"][0]["over_in"] + 1),
        lambda d: d.update(arcs=[0, 0, 1]),
        lambda d: d.update(crossings="none"),
    ],
)
def test_pd_json_schema_errors(mutate):
    data = _trefoil_payload()
    mutate(data)
    with pytest.raises(SchemaError):
        from_pd_json(json.dumps(data))


def test_pd_json_rejects_non_json():
    with pytest.raises(SchemaError):
        from_pd_json("{not json")
    with pytest.raises(SchemaError):
        from_pd_json("[1, 2]")


def test_rational_corpus_components():
    links = {str(f) for f in RATIONALS if closure_trace(rational_word(f)).n_components == 2}
    assert links == {"5/2", "7/2"}
