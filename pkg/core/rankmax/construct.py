"""
Randomized rank maximization under a zero pattern, and its exhaustive oracle.

Every 1-position of the pattern receives an i.i.d. uniform element of F_q
(zero included); each subset's rank is then compared against its term rank.
A draw is kept only when every subset reaches its term rank.
"""

import itertools
import logging
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

import numpy as np

from core.errors import NoSimultaneousMaximizer, RetriesExhausted, TooLarge
from core.field import Field, Matrix, mat_rank

from .pattern import PatternMatrix, SubmatrixCollection, term_rank


logger = logging.getLogger(__name__)

DEFAULT_RETRIES = 64
DEFAULT_ENUM_CAP = 10 ** 7

SeedLike = Union[int, np.random.SeedSequence]


@dataclass(frozen=True, eq=False)
class RankMaxMatrix:
    matrix: Matrix
    pattern: PatternMatrix
    collection: SubmatrixCollection
    ranks: Tuple[int, ...]
    attempts: int = 1

    @property
    def q(self) -> int:
        return self.matrix.p


@dataclass(frozen=True, eq=False)
class CertifiedDraw:
    matrix: Matrix
    ranks: Tuple[int, ...]
    term_ranks: Tuple[int, ...]
    failures: Tuple[int, ...] = ()

    @property
    def certified(self) -> bool:
        return not self.failures


def as_seed_sequence(seed: SeedLike) -> np.random.SeedSequence:
    if isinstance(seed, np.random.SeedSequence):
        return seed
    return np.random.SeedSequence(seed)


def subset_ranks(matrix: Matrix, collection: SubmatrixCollection) -> Tuple[int, ...]:
    return tuple(mat_rank(matrix.take_rows(subset)) for subset in collection)


def draw_certified(
    pattern: PatternMatrix,
    collection: SubmatrixCollection,
    field: Field,
    rng: np.random.Generator,
    term_ranks: Optional[Sequence[int]] = None,
) -> CertifiedDraw:
    """One draw of the random assignment, checked subset by subset."""
    if term_ranks is None:
        term_ranks = [term_rank(pattern, subset) for subset in collection]
    values = field.random(rng, pattern.a, pattern.b).data * pattern.bits.astype(field.dtype)
    matrix = Matrix(values, field.p)
    ranks = subset_ranks(matrix, collection)
    failures = tuple(k for k, (got, want) in enumerate(zip(ranks, term_ranks)) if got != want)
    return CertifiedDraw(matrix, ranks, tuple(term_ranks), failures)


def rank_maximize(
    pattern: PatternMatrix,
    collection: SubmatrixCollection,
    q: int,
    seed: SeedLike = 0,
    retries: int = DEFAULT_RETRIES,
) -> RankMaxMatrix:
    field = Field(q)
    threshold = len(collection) * pattern.a * pattern.b
    if q <= threshold:
        logger.warning(
            "q=%d is not above |U|ab=%d; certification may need many redraws", q, threshold,
        )
    term_ranks = tuple(term_rank(pattern, subset) for subset in collection)

    best = [0] * len(collection)
    misses = [0] * len(collection)
    for attempt, child in enumerate(as_seed_sequence(seed).spawn(retries), start=1):
        draw = draw_certified(pattern, collection, field, np.random.default_rng(child), term_ranks)
        if draw.certified:
            logger.debug("rank maximization certified on attempt %d (q=%d)", attempt, q)
            return RankMaxMatrix(draw.matrix, pattern, collection, draw.ranks, attempts=attempt)
        for k in draw.failures:
            misses[k] += 1
        best = [max(old, new) for old, new in zip(best, draw.ranks)]
        logger.debug("attempt %d: %d subsets below term rank", attempt, len(draw.failures))

    diagnostics: List[Dict[str, Any]] = [
        {"subset": list(subset), "term_rank": want, "best_rank": got, "misses": miss}
        for subset, want, got, miss in zip(collection, term_ranks, best, misses)
        if miss
    ]
    raise RetriesExhausted(
        f"no certified rank-maximized matrix over F_{q} after {retries} draws; q is likely too small",
        diagnostics=diagnostics,
    )


def rank_maximize_exhaustive(
    pattern: PatternMatrix,
    collection: SubmatrixCollection,
    q: int,
    enum_cap: int = DEFAULT_ENUM_CAP,
) -> RankMaxMatrix:
    """Enumerate every assignment of the 1-positions and keep the lexicographically best rank vector.

    A simultaneous maximizer dominates every other vector, so it is the
    lexicographic maximum whenever it exists.
    """
    field = Field(q)
    ones = pattern.ones
    space = q ** len(ones)
    if space > enum_cap:
        raise TooLarge(f"{q}^{len(ones)} = {space} assignments exceeds the enumeration cap {enum_cap}")

    ceiling = tuple(term_rank(pattern, subset) for subset in collection)
    maxima = [0] * len(collection)
    best_vector: Optional[Tuple[int, ...]] = None
    best_matrix: Optional[Matrix] = None
    enumerated = 0
    rows = [i for i, _ in ones]
    cols = [j for _, j in ones]
    for values in itertools.product(range(q), repeat=len(ones)):
        data = np.zeros((pattern.a, pattern.b), dtype=field.dtype)
        data[rows, cols] = values
        enumerated += 1
        matrix = Matrix(data, q)
        vector = subset_ranks(matrix, collection)
        maxima = [max(old, new) for old, new in zip(maxima, vector)]
        if best_vector is None or vector > best_vector:
            best_vector, best_matrix = vector, matrix
        if vector == ceiling:
            break

    if list(best_vector) != maxima:
        raise NoSimultaneousMaximizer(
            f"over F_{q} the per-subset maxima {maxima} are not reached by a single assignment "
            f"(best {list(best_vector)})"
        )
    return RankMaxMatrix(best_matrix, pattern, collection, best_vector, attempts=enumerated)


def max_rank_by_enumeration(
    pattern: PatternMatrix,
    rows: Sequence[int],
    q: int,
    enum_cap: int = DEFAULT_ENUM_CAP,
) -> int:
    """The largest rank any pattern-respecting assignment gives the submatrix on `rows`."""
    sub = pattern.submatrix(rows)
    if not rows:
        return 0
    collection = SubmatrixCollection((tuple(range(len(rows))),), len(rows))
    return rank_maximize_exhaustive(sub, collection, q, enum_cap=enum_cap).ranks[0]
