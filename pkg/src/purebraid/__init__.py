"""Computations in the pure braid group P_n.

Words in the generators p_{a,b}, a word-problem solver, strand deletion,
supports, commutator trees, the support-graded collection process, and
membership tests for Brunnian and related subgroups.
"""

from .artin import are_equal, is_trivial
from .braid import BraidWord, PureGenerator, concat, free_cancel, identity, invert, make_generator
from .brunnian import (
    ConstraintFamily,
    enumerate_generators,
    in_commutator_subgroup,
    in_intersection,
    is_brunnian,
    is_k_decomposable,
    linking_number,
)
from .collection import collect, evaluate_decomposition, express_in_generators, prune, subset_order
from .commutator import Bracket, Leaf, evaluate, is_monic, leaf, leaf_support
from .expr import lower_to_word, parse
from .retraction import StrandSet, in_P, in_Q, phi, support
