from .construct import (
    DEFAULT_ENUM_CAP,
    DEFAULT_RETRIES,
    CertifiedDraw,
    SeedLike,
    RankMaxMatrix,
    as_seed_sequence,
    draw_certified,
    max_rank_by_enumeration,
    rank_maximize,
    rank_maximize_exhaustive,
    subset_ranks,
)
from .pattern import PatternMatrix, SubmatrixCollection, maximum_matching, term_rank

__all__ = [
    "DEFAULT_ENUM_CAP",
    "DEFAULT_RETRIES",
    "CertifiedDraw",
    "PatternMatrix",
    "RankMaxMatrix",
    "SeedLike",
    "SubmatrixCollection",
    "as_seed_sequence",
    "draw_certified",
    "max_rank_by_enumeration",
    "maximum_matching",
    "rank_maximize",
    "rank_maximize_exhaustive",
    "subset_ranks",
    "term_rank",
]
