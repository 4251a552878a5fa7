"""The Grigorchuk group: word problem, tree action and co-word witnesses."""

from .tree import TreeAutomorphismAction, acts_trivially, generator_permutations, tree_action
from .witness import EquivalenceReport, coword_language_equivalence, derive_witness
from .words import (
    LETTERS,
    PHI_L,
    PHI_R,
    contraction_check,
    in_G1,
    in_seed_language,
    is_reduced,
    is_trivial,
    nontrivial_branch,
    phi,
    reduce,
    reduction_steps,
    syllables,
)

__all__ = [
    "EquivalenceReport",
    "LETTERS",
    "PHI_L",
    "PHI_R",
    "TreeAutomorphismAction",
    "acts_trivially",
    "contraction_check",
    "coword_language_equivalence",
    "derive_witness",
    "generator_permutations",
    "in_G1",
    "in_seed_language",
    "is_reduced",
    "is_trivial",
    "nontrivial_branch",
    "phi",
    "reduce",
    "reduction_steps",
    "syllables",
    "tree_action",
]
