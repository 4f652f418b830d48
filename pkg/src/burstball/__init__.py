"""Fixed-length burst Levenshtein balls of unit radius: exact sizes, bounds,
expectations and brute-force oracles."""

from .closed_forms import (
    BallParams,
    expected_ball_size,
    expected_f,
    expected_g,
    expected_run_count,
    explicit_ball_size,
    h_value,
    insertion_ball_size,
    max_bound_general,
    max_bound_refined,
    min_ball_size,
    sala_dolecek_size,
)
from .errors import (
    AlphabetError,
    BudgetExceeded,
    BurstBallError,
    DomainError,
    EmptyWordError,
    UnsupportedError,
)
from .oracle import (
    WordSet,
    burst_delete,
    burst_insert,
    commutativity_check,
    deletion_ball,
    insertion_ball,
    insertion_intersection_oracle,
    levenshtein_ball,
)
from .run_structure import (
    IntersectionWitness,
    RunDecomposition,
    ab_witness,
    claim1_check,
    claim2_claim3_check,
    deletion_representatives,
    lemma4_intersection,
    run_decomposition,
)
from .word import (
    SizeBreakdown,
    Word,
    alternating_segments,
    b_run_count,
    f_stat,
    g_stat,
    is_periodic,
    max_periodic_substring_length,
    parse_word,
    size_breakdown,
)

__version__ = "0.1.0"

__all__ = [
    "AlphabetError",
    "BallParams",
    "BudgetExceeded",
    "BurstBallError",
    "DomainError",
    "EmptyWordError",
    "IntersectionWitness",
    "RunDecomposition",
    "SizeBreakdown",
    "UnsupportedError",
    "Word",
    "WordSet",
    "ab_witness",
    "alternating_segments",
    "b_run_count",
    "burst_delete",
    "burst_insert",
    "claim1_check",
    "claim2_claim3_check",
    "commutativity_check",
    "deletion_ball",
    "deletion_representatives",
    "expected_ball_size",
    "expected_f",
    "expected_g",
    "expected_run_count",
    "explicit_ball_size",
    "f_stat",
    "g_stat",
    "h_value",
    "insertion_ball",
    "insertion_ball_size",
    "insertion_intersection_oracle",
    "is_periodic",
    "lemma4_intersection",
    "levenshtein_ball",
    "max_bound_general",
    "max_bound_refined",
    "max_periodic_substring_length",
    "min_ball_size",
    "parse_word",
    "run_decomposition",
    "sala_dolecek_size",
    "size_breakdown",
]
