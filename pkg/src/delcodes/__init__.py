"""Deletion-correcting binary codes: word primitives, dominant-pair
characterization and verification, code predicates, and exact search."""

from .codes import (
    Code,
    are_equivalent,
    code_deletion_distance,
    dominant_codewords,
    find_ball_collision,
    is_basic,
    is_perfect,
    is_t_deletion_correcting,
    replace_dominant,
    vt_code,
)
from .dominance import (
    BRUTE_FORCE_CAP,
    CharacterizationReport,
    DominancePair,
    FilteredInstance,
    GenerationResult,
    PatternPair,
    closed_form_generation,
    dominators_of,
    enumerate_dominant_pairs,
    equivalence_closure,
    generate_closed_form,
    is_dominant,
    subordinates_of,
    verify_characterization,
)
from .search import (
    ConflictGraph,
    SearchBudgetExceeded,
    SearchConfig,
    SearchResult,
    build_candidates,
    build_conflict_graph,
    enumerate_optimal_codes,
    max_code_size,
)
from .words import (
    MAX_LEN,
    Word,
    WordSet,
    complement,
    delete_at,
    deletion_ball,
    deletion_distance,
    hamming_distance,
    is_subsequence,
    lcs_length,
    levenshtein_indel,
    reverse,
    reverse_complement,
    run_length_encode,
    weight,
)

__all__ = [
    "BRUTE_FORCE_CAP",
    "CharacterizationReport",
    "Code",
    "ConflictGraph",
    "DominancePair",
    "FilteredInstance",
    "GenerationResult",
    "MAX_LEN",
    "PatternPair",
    "SearchBudgetExceeded",
    "SearchConfig",
    "SearchResult",
    "Word",
    "WordSet",
    "are_equivalent",
    "build_candidates",
    "build_conflict_graph",
    "closed_form_generation",
    "code_deletion_distance",
    "complement",
    "delete_at",
    "deletion_ball",
    "deletion_distance",
    "dominant_codewords",
    "dominators_of",
    "enumerate_dominant_pairs",
    "enumerate_optimal_codes",
    "equivalence_closure",
    "find_ball_collision",
    "generate_closed_form",
    "hamming_distance",
    "is_basic",
    "is_dominant",
    "is_perfect",
    "is_subsequence",
    "is_t_deletion_correcting",
    "lcs_length",
    "levenshtein_indel",
    "max_code_size",
    "replace_dominant",
    "reverse",
    "reverse_complement",
    "run_length_encode",
    "subordinates_of",
    "verify_characterization",
    "vt_code",
    "weight",
]
