"""heckewalk: exact Hecke-algebra product expansion, tight sequences, and
the matching random walks on the symmetric group.

Everything is exact: polynomial coefficients are unbounded integers,
probabilities are rationals, and the Monte Carlo sampler is deterministic
for a fixed seed (with a compiled kernel when available and a pure-Python
fallback otherwise; see heckewalk.walk.KERNEL_COMPILED).
"""

from .qpoly import QPoly, q_int
from .perm import (
    apply_adjacent,
    check_perm,
    identity,
    inv_sequence,
    inverse,
    length,
    longest_element,
    pad,
    reduced_word,
)
from .seq import (
    TightClass,
    check_sequence,
    classify,
    counts,
    downset,
    enumerate_tight,
    foata_normal_form,
    is_tight,
    staircase,
)
from .hecke import HeckeElt, expand, generator, one
from .closedform import AlphaReport, alpha, alpha_table, verify
from .walk import (
    Distribution,
    WalkConfig,
    exact_distribution,
    exact_distribution_q1,
    simulate,
    step_probs,
    total_variation,
)

__version__ = "0.1.0"

__all__ = [
    "QPoly", "q_int",
    "apply_adjacent", "check_perm", "identity", "inv_sequence", "inverse",
    "length", "longest_element", "pad", "reduced_word",
    "TightClass", "check_sequence", "classify", "counts", "downset",
    "enumerate_tight", "foata_normal_form", "is_tight", "staircase",
    "HeckeElt", "expand", "generator", "one",
    "AlphaReport", "alpha", "alpha_table", "verify",
    "Distribution", "WalkConfig", "exact_distribution", "exact_distribution_q1",
    "simulate", "step_probs", "total_variation",
]
