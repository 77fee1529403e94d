"""
Block labeling of a wiretap submatrix and the resulting edge partition.

Given the 0/1 rows U_A of a wiretap set and its term rank r, the rows are
split as A = A1 + A2 with |f_A1| + |A2| == r, where f_A1 is the set of
backward signals touching A1. The labeling places r independent 1s on the
counter-diagonal of the top-left r x r block and then peels the lower-left
block column by column, recursing on the columns whose lower part is zero.
"""

import itertools
import logging
from typing import Collection, List, Sequence, Set, Tuple

import numpy as np

from core.errors import MaximalityViolated
from core.field import Field, mat_rank
from core.rankmax import PatternMatrix, maximum_matching

from .reports import BlockLabel, PartitionCertificate


logger = logging.getLogger(__name__)


def _block(work: np.ndarray, label: BlockLabel) -> np.ndarray:
    return work[label.rows[0]:label.rows[1], label.cols[0]:label.cols[1]]


class _Labeler:
    """Mutable state of one labeling run: the permuted matrix and the label list."""

    def __init__(self, bits: np.ndarray):
        self.work = bits.copy()
        self.row_order = list(range(bits.shape[0]))
        self.col_order = list(range(bits.shape[1]))
        self.labels: List[BlockLabel] = []

    def add(self, label: str, rows: Tuple[int, int], cols: Tuple[int, int]) -> None:
        if rows[0] < rows[1] and cols[0] < cols[1]:
            self.labels.append(BlockLabel(label=label, rows=rows, cols=cols))

    def permute_rows(self, order: Sequence[int]) -> None:
        """Row at new position i is the row previously at position order[i]."""
        self.work = self.work[list(order), :]
        self.row_order = [self.row_order[i] for i in order]

    def permute_cols(self, order: Sequence[int]) -> None:
        self.work = self.work[:, list(order)]
        self.col_order = [self.col_order[i] for i in order]

    def place_matching(self, matching: List[Tuple[int, int]]) -> None:
        n, y = self.work.shape
        r = len(matching)
        matched_rows = [i for i, _ in matching]
        matched_cols = [j for _, j in matching]
        rows = list(reversed(matched_rows)) + [i for i in range(n) if i not in matched_rows]
        cols = matched_cols + [j for j in range(y) if j not in matched_cols]
        self.permute_rows(rows)
        self.permute_cols(cols)
        if self.work[r:, r:].any():
            raise MaximalityViolated(f"lower-right block beyond rank {r} is nonzero; {r} is not the term rank")
        self.add("zero", (r, n), (r, y))

    def run(self, r: int) -> int:
        n, y = self.work.shape
        window, offset, k = n, 0, r
        while True:
            lower_left = self.work[k:window, offset:offset + k]
            if lower_left.size == 0 or not lower_left.any():
                self.add("zero", (k, window), (offset, offset + k))
                self.add("counter-diagonal", (0, k), (offset, offset + k))
                self.add("arbitrary", (0, k), (offset + k, y))
                return k

            nonzero = [c for c in range(k) if lower_left[:, c].any()]
            if len(nonzero) == k:
                self.add("non-zero", (k, window), (offset, offset + k))
                self.add("counter-diagonal", (0, k), (offset, offset + k))
                self.add("zero*", (0, k), (offset + k, y))
                return 0

            zero = [c for c in range(k) if c not in nonzero]
            u, v = len(nonzero), len(zero)
            new_local = nonzero + zero
            position = {old: new for new, old in enumerate(new_local)}

            cols = list(range(y))
            cols[offset:offset + k] = [offset + c for c in new_local]
            self.permute_cols(cols)

            # old row k-1-i moves to k-1-position[i], keeping the counter-diagonal
            rows = list(range(n))
            for i in range(k):
                rows[k - 1 - position[i]] = k - 1 - i
            self.permute_rows(rows)

            self.add("non-zero", (k, window), (offset, offset + u))
            self.add("zero", (k, window), (offset + u, offset + k))
            self.add("counter-diagonal", (k - u, k), (offset, offset + u))
            self.add("arbitrary", (0, k - u), (offset, offset + u))
            self.add("zero*", (k - u, k), (offset + k, y))
            logger.debug("labeling split k=%d into %d nonzero / %d zero columns", k, u, v)
            window, offset, k = k, offset + u, v


def _nonzero_columns(bits: np.ndarray) -> List[int]:
    if bits.size == 0:
        return []
    return [int(j) for j in np.flatnonzero(bits.any(axis=0))]


def label_partition(u_a: PatternMatrix, r: int, forward: Collection[str] = ()) -> PartitionCertificate:
    """Run the block labeling on the wiretap rows `u_a` with term rank `r`.

    `forward` names the rows that are forward edges; the rest are backward.
    Raises MaximalityViolated when a block that maximality forces to zero is not.
    """
    matching = maximum_matching(u_a)
    if len(matching) != r:
        raise MaximalityViolated(f"given rank {r} differs from the term rank {len(matching)}")

    labeler = _Labeler(u_a.bits)
    if r == 0:
        labeler.add("zero", (0, u_a.a), (0, u_a.b))
        t = 0
    else:
        labeler.place_matching(matching)
        t = labeler.run(r)

    for label in labeler.labels:
        if label.label == "zero*" and _block(labeler.work, label).any():
            raise MaximalityViolated(f"zero* block {label.rows}x{label.cols} is nonzero")

    forward = set(forward)
    ordered = [u_a.labels[i] for i in labeler.row_order]
    a2 = ordered[:t]
    a1 = ordered[t:]
    signals = sorted(labeler.col_order[j] for j in _nonzero_columns(labeler.work[t:, :]))
    cert = PartitionCertificate(
        wiretap=list(u_a.labels),
        rank=r,
        row_order=labeler.row_order,
        col_order=labeler.col_order,
        labels=labeler.labels,
        t=t,
        a1_forward=[e for e in a1 if e in forward],
        a1_backward=[e for e in a1 if e not in forward],
        a2=a2,
        signals=signals,
    )
    cert.verified = verify_certificate(cert, u_a)
    if not cert.verified:
        logger.warning("certificate for %s failed verification", cert.wiretap)
    return cert


def verify_certificate(cert: PartitionCertificate, u_a: PatternMatrix) -> bool:
    """Re-check a certificate against the pattern it was computed from."""
    n, y = u_a.a, u_a.b
    if sorted(cert.row_order) != list(range(n)) or sorted(cert.col_order) != list(range(y)):
        return False
    work = u_a.bits[cert.row_order, :][:, cert.col_order]

    cover = np.zeros((n, y), dtype=np.int64)
    for label in cert.labels:
        block = _block(work, label)
        cover[label.rows[0]:label.rows[1], label.cols[0]:label.cols[1]] += 1
        if label.label in ("zero", "zero*") and block.any():
            return False
        if label.label == "non-zero" and not block.any(axis=0).all():
            return False
        if label.label == "counter-diagonal":
            size = block.shape[0]
            if block.shape != (size, size) or not all(block[size - 1 - i, i] == 1 for i in range(size)):
                return False
    if not (cover == 1).all():
        return False

    a1_rows = [i for i in range(n) if u_a.labels[cert.row_order[i]] in set(cert.a1)]
    if a1_rows != list(range(cert.t, n)) or len(cert.a2) != cert.t:
        return False
    signals = sorted(cert.col_order[j] for j in _nonzero_columns(work[cert.t:, :]))
    return signals == cert.signals and len(signals) + cert.t == cert.rank


def signal_sets(u_a: PatternMatrix, edges: Sequence[str]) -> Set[int]:
    """Union of the backward signals on the given rows of the wiretap pattern."""
    index = {label: i for i, label in enumerate(u_a.labels)}
    rows = [index[e] for e in edges]
    return set(_nonzero_columns(u_a.bits[rows, :].reshape(len(rows), u_a.b)))


def check_key_entropy_bound(cert: PartitionCertificate, u_a: PatternMatrix, q: int) -> bool:
    """H(f_AF | f_AB) <= rank - |A_B| - |A2| for uniform backward keys, in units of log q.

    The conditional entropy of key coordinates is rank([I_f_AF u f_AB]) - rank([I_f_AB]).
    """
    field = Field(q)
    f_forward = signal_sets(u_a, cert.a1_forward)
    f_backward = signal_sets(u_a, cert.a1_backward)
    identity = field.identity(u_a.b)
    joint = mat_rank(identity.take_rows(sorted(f_forward | f_backward)))
    given = mat_rank(identity.take_rows(sorted(f_backward)))
    return joint - given <= cert.rank - len(cert.a1_backward) - cert.t


def exhaustive_partition_minimum(u_a: PatternMatrix) -> int:
    """min over A2 subset of A of |f_(A minus A2)| + |A2|, by enumeration."""
    n = u_a.a
    best = n
    for size in range(n + 1):
        for a2 in itertools.combinations(range(n), size):
            rest = [i for i in range(n) if i not in a2]
            value = len(_nonzero_columns(u_a.bits[rest, :].reshape(len(rest), u_a.b))) + size
            best = min(best, value)
    return best
