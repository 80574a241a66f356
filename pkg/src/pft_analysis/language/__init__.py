"""Language Package

Block languages of presented shifts and the decision procedures built on
them:
- Block sets B_n(S)
- Canonical block automata (subset construction + Hopcroft)
- Shift equality / containment with separating blocks
- Follower-set merging of deterministic presentations
"""

from .blocks import BlockSet, iter_block_sets, blocks_of_length, blocks_agree_up_to
from .dfa import BlockDfa, hopcroft_classes, canonical_form, subset_automaton, minimize, block_dfa
from .equality import shifts_equal, separating_word, subshift_contains, follower_minimize

__all__ = [
    # Blocks
    "BlockSet",
    "iter_block_sets",
    "blocks_of_length",
    "blocks_agree_up_to",

    # Automata
    "BlockDfa",
    "hopcroft_classes",
    "canonical_form",
    "subset_automaton",
    "minimize",
    "block_dfa",

    # Decisions
    "shifts_equal",
    "separating_word",
    "subshift_contains",
    "follower_minimize",
]
