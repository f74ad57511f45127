"""Tangle words, the word DSL, and closure diagrams."""
from .diagram import Crossing, PlanarDiagram, closure_trace, from_pd_json, to_pd_json
from .parser import format_montesinos, format_word, parse_montesinos, parse_word
from .words import (
    Frac,
    IntegralTangle,
    MontesinosSpec,
    Rot,
    TangleWord,
    VComp,
    crossing_count,
    eval_cf,
    mu,
    montesinos_word,
    neg_cf,
    rational_word,
    word_from_expansion,
)
