"""Dihedral quantum-double invariants and Fox colorings of arborescent knots."""
from .cyclotomic import CycloNumber, zeta_frac_pow, zeta_half_pow, zeta_pow
from .dihedral_block import BlockVector, phi_R, quantum_trace, rot_matrix
from .engine import (
    InvariantReport,
    coloring_count_engine,
    coloring_count_formula,
    eval_word,
    invariant_report,
    montesinos_invariant_closed,
    rt_invariant,
)
from .errors import DWColorError
from .fox_oracle import count_colorings, count_colorings_naive
from .tangle import (
    Frac,
    closure_trace,
    montesinos_word,
    parse_montesinos,
    parse_word,
    rational_word,
)

__version__ = "0.1.0"

__all__ = [
    "BlockVector",
    "CycloNumber",
    "DWColorError",
    "Frac",
    "InvariantReport",
    "closure_trace",
    "coloring_count_engine",
    "coloring_count_formula",
    "count_colorings",
    "count_colorings_naive",
    "eval_word",
    "invariant_report",
    "montesinos_invariant_closed",
    "montesinos_word",
    "parse_montesinos",
    "parse_word",
    "phi_R",
    "quantum_trace",
    "rational_word",
    "rot_matrix",
    "rt_invariant",
    "zeta_frac_pow",
    "zeta_half_pow",
    "zeta_pow",
]
