"""
Zero-pattern matrices and their term rank.

The term rank of a 0/1 pattern (largest set of 1s with no two in a row or
column) equals the largest rank any assignment respecting the zeros can
reach, which is what the randomized construction is certified against.
"""

from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Tuple

import networkx as nx
import numpy as np

from core.errors import InputError


@dataclass(frozen=True, eq=False)
class PatternMatrix:
    bits: np.ndarray
    labels: Tuple[str, ...]

    def __post_init__(self):
        bits = np.array(self.bits, dtype=np.int64)
        if bits.size == 0 and bits.ndim != 2:
            bits = bits.reshape(len(self.labels), 0)
        if bits.ndim != 2:
            raise InputError(f"pattern must be 2-dimensional, got shape {bits.shape}")
        if bits.shape[0] != len(self.labels):
            raise InputError(f"pattern has {bits.shape[0]} rows but {len(self.labels)} labels")
        if not np.isin(bits, (0, 1)).all():
            raise InputError("pattern entries must be 0 or 1")
        bits.flags.writeable = False
        object.__setattr__(self, "bits", bits)
        object.__setattr__(self, "labels", tuple(self.labels))

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], labels: Optional[Sequence[str]] = None,
                  cols: Optional[int] = None) -> "PatternMatrix":
        labels = tuple(labels) if labels is not None else tuple(f"r{i}" for i in range(len(rows)))
        width = cols if cols is not None else (len(rows[0]) if rows else 0)
        bits = np.array(rows, dtype=np.int64).reshape(len(rows), width)
        return cls(bits, labels)

    @property
    def a(self) -> int:
        return self.bits.shape[0]

    @property
    def b(self) -> int:
        return self.bits.shape[1]

    @property
    def ones(self) -> List[Tuple[int, int]]:
        return [(int(i), int(j)) for i, j in zip(*np.nonzero(self.bits))]

    def submatrix(self, rows: Sequence[int]) -> "PatternMatrix":
        rows = list(rows)
        return PatternMatrix(self.bits[rows, :].reshape(len(rows), self.b), tuple(self.labels[i] for i in rows))

    def __eq__(self, other) -> bool:
        if not isinstance(other, PatternMatrix):
            return NotImplemented
        return self.labels == other.labels and np.array_equal(self.bits, other.bits)

    __hash__ = None

    def tolist(self) -> List[List[int]]:
        return self.bits.tolist()


@dataclass(frozen=True)
class SubmatrixCollection:
    """Row subsets of one pattern; each stands for those rows across all columns."""

    subsets: Tuple[Tuple[int, ...], ...]
    n_rows: int

    def __post_init__(self):
        subsets = tuple(tuple(int(i) for i in subset) for subset in self.subsets)
        for subset in subsets:
            if not subset:
                raise InputError("submatrix collection contains an empty subset")
            if min(subset) < 0 or max(subset) >= self.n_rows:
                raise InputError(f"subset {subset} out of range for {self.n_rows} rows")
        object.__setattr__(self, "subsets", subsets)

    @classmethod
    def of(cls, pattern: PatternMatrix, subsets: Iterable[Iterable[int]]) -> "SubmatrixCollection":
        return cls(tuple(tuple(subset) for subset in subsets), pattern.a)

    def __len__(self) -> int:
        return len(self.subsets)

    def __iter__(self):
        return iter(self.subsets)


def maximum_matching(pattern: PatternMatrix, rows: Optional[Sequence[int]] = None) -> List[Tuple[int, int]]:
    """A maximum set of independent 1-positions among `rows`, as (row, col) pairs sorted by row."""
    rows = list(range(pattern.a)) if rows is None else list(rows)
    graph = nx.Graph()
    graph.add_nodes_from(rows, bipartite=0)
    graph.add_nodes_from((pattern.a + j for j in range(pattern.b)), bipartite=1)
    for i in rows:
        for j in np.flatnonzero(pattern.bits[i]):
            graph.add_edge(i, pattern.a + int(j))
    if graph.number_of_edges() == 0:
        return []
    matching = nx.bipartite.hopcroft_karp_matching(graph, top_nodes=rows)
    return sorted((i, matching[i] - pattern.a) for i in rows if i in matching)


def term_rank(pattern: PatternMatrix, rows: Optional[Sequence[int]] = None) -> int:
    return len(maximum_matching(pattern, rows))
