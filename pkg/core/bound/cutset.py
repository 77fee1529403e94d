"""
Reverse-edge cut-set bound on secrecy capacity.

For a cut with x forward and y backward edges the stacked pattern
C = [C_{b->f}; I_y] has one row per crossing edge. A wiretap set A sees the
rows U_A of C, and the cut bounds the secrecy rate by

    x + min over A of (rank(U_A) - |A|)

where rank is taken on a rank-maximized instantiation of C. Ranks are read
off as term ranks, which the certified instantiation provably reaches, so
the reported values do not depend on the random draw.
"""

import itertools
import logging
from typing import FrozenSet, Iterable, List, Optional, Sequence, Tuple

import galois

from core.errors import NetworkValidationError, NotACutEdge, ZTooLarge
from core.network import (
    DEFAULT_NODE_CAP,
    Cut,
    Network,
    UniformWiretap,
    WiretapModel,
    enumerate_cuts,
    restrict_wiretap_sets,
)
from core.rankmax import (
    DEFAULT_RETRIES,
    PatternMatrix,
    SeedLike,
    SubmatrixCollection,
    rank_maximize,
    term_rank,
)

from .partition import label_partition
from .reports import BestBound, CutBoundReport, CutSummary, WiretapRecord


logger = logging.getLogger(__name__)


def stacked_pattern(cut: Cut) -> PatternMatrix:
    """Rows: forward edges (their connectivity rows) then backward edges (identity rows)."""
    rows = [list(map(int, row)) for row in cut.connectivity.tolist()]
    rows += [[1 if j == i else 0 for j in range(cut.y)] for i in range(cut.y)]
    return PatternMatrix.from_rows(rows, labels=[edge.id for edge in cut.edges], cols=cut.y)


def edge_signals(cut: Cut, edge_id: str) -> FrozenSet[int]:
    """Indices j of the backward signals B_j carried by (or feeding) the edge."""
    row = cut.row_of(edge_id)
    if row is None:
        raise NotACutEdge(f"edge `{edge_id}` does not cross the cut {sorted(cut.side)}")
    if row >= cut.x:
        return frozenset({row - cut.x})
    return frozenset(int(j) for j, bit in enumerate(cut.connectivity[row]) if bit)


def signals_of(cut: Cut, edges: Iterable[str]) -> FrozenSet[int]:
    signals: FrozenSet[int] = frozenset()
    for edge_id in edges:
        signals |= edge_signals(cut, edge_id)
    return signals


def _rows_of(cut: Cut, wiretap: Sequence[str]) -> Tuple[int, ...]:
    rows = []
    for edge_id in wiretap:
        row = cut.row_of(edge_id)
        if row is None:
            raise NotACutEdge(f"edge `{edge_id}` does not cross the cut {sorted(cut.side)}")
        rows.append(row)
    return tuple(rows)


def _collection(cut: Cut, row_sets: List[Tuple[int, ...]]) -> SubmatrixCollection:
    """Wiretap subsets plus the backward rows, which must stay independent for decoding."""
    subsets = list(row_sets)
    if cut.y:
        subsets.append(tuple(range(cut.x, cut.x + cut.y)))
    return SubmatrixCollection(tuple(subsets), cut.x + cut.y)


def forward_keys_needed(pattern: PatternMatrix, row_sets: List[Tuple[int, ...]]) -> int:
    return max((len(rows) - term_rank(pattern, rows) for rows in row_sets), default=0)


def default_field_size(cut: Cut, sets: List[Sequence[str]]) -> int:
    """Smallest prime above both |U|ab (rank maximization) and |A| k_f (x+y) (code security)."""
    pattern = stacked_pattern(cut)
    row_sets = [_rows_of(cut, wiretap) for wiretap in sets]
    collection = _collection(cut, row_sets)
    k_f = forward_keys_needed(pattern, row_sets)
    threshold = max(len(collection) * pattern.a * pattern.b, len(row_sets) * k_f * (cut.x + cut.y), 1)
    return int(galois.next_prime(threshold))


def _report(cut: Cut, net_order: Optional[Sequence[str]], records: List[WiretapRecord], q: Optional[int],
            raw: int) -> CutBoundReport:
    order = net_order if net_order is not None else sorted(cut.side)
    bound = max(raw, 0)
    if raw < 0:
        logger.warning("cut %s: raw bound %d clamped to 0", sorted(cut.side), raw)
    return CutBoundReport(
        cut=cut.sorted_nodes(order),
        mask=cut.mask,
        x=cut.x,
        y=cut.y,
        q=q,
        forward=[edge.id for edge in cut.forward],
        backward=[edge.id for edge in cut.backward],
        connectivity=cut.connectivity.tolist(),
        records=records,
        raw_bound=raw,
        bound=bound,
        clamped=raw < 0,
    )


def cut_bound(
    cut: Cut,
    sets: List[Sequence[str]],
    q: Optional[int] = None,
    seed: SeedLike = 0,
    retries: int = DEFAULT_RETRIES,
    certificates: bool = True,
    node_order: Optional[Sequence[str]] = None,
) -> CutBoundReport:
    pattern = stacked_pattern(cut)
    row_sets = [_rows_of(cut, wiretap) for wiretap in sets]
    q = q if q is not None else default_field_size(cut, sets)
    rankmax = rank_maximize(pattern, _collection(cut, row_sets), q, seed=seed, retries=retries)

    forward_ids = {edge.id for edge in cut.forward}
    records = []
    for wiretap, rows, rank in zip(sets, row_sets, rankmax.ranks):
        cert = label_partition(pattern.submatrix(rows), rank, forward_ids) if certificates else None
        records.append(
            WiretapRecord(edges=list(wiretap), rows=list(rows), size=len(rows), rank=rank,
                          slack=rank - len(rows), certificate=cert)
        )
    raw = cut.x + min((record.slack for record in records), default=0)
    report = _report(cut, node_order, records, q, raw)
    report.cbar = rankmax.matrix.tolist()
    report._rankmax = rankmax
    logger.info("cut %s (x=%d, y=%d): bound %d over %d wiretap sets", report.cut, cut.x, cut.y, report.bound,
                len(records))
    return report


def uniform_bound(
    cut: Cut,
    z: int,
    q: Optional[int] = None,
    seed: SeedLike = 0,
    retries: int = DEFAULT_RETRIES,
    node_order: Optional[Sequence[str]] = None,
) -> CutBoundReport:
    """x + k_b - z, with k_b the smallest rank among the z-row submatrices of the rank-maximized C."""
    if z > cut.x + cut.y:
        raise ZTooLarge(f"z={z} exceeds the {cut.x + cut.y} edges crossing the cut")
    edge_ids = [edge.id for edge in cut.edges]
    sets = [list(combo) for combo in itertools.combinations(edge_ids, z)] if z else []
    report = cut_bound(cut, sets, q=q, seed=seed, retries=retries, certificates=False, node_order=node_order)
    return annotate_k_b(report, z)


def annotate_k_b(report: CutBoundReport, z: int) -> CutBoundReport:
    """Fill k_b and its rows from the report's largest Uniform(z) wiretap sets."""
    size = min(z, report.x + report.y)
    candidates = [record for record in report.records if record.size == size]
    if not candidates:
        report.k_b, report.k_b_rows = 0, []
        return report
    best = min(candidates, key=lambda record: record.rank)
    report.k_b = best.rank
    report.k_b_rows = best.edges
    return report


def _term_rank_bound(cut: Cut, sets: List[Sequence[str]]) -> int:
    pattern = stacked_pattern(cut)
    slacks = [term_rank(pattern, rows) - len(rows) for rows in (_rows_of(cut, wiretap) for wiretap in sets)]
    return cut.x + min(slacks, default=0)


def best_bound(
    net: Network,
    model: WiretapModel,
    q: Optional[int] = None,
    seed: SeedLike = 0,
    node_cap: int = DEFAULT_NODE_CAP,
    retries: int = DEFAULT_RETRIES,
) -> BestBound:
    """Minimum of the per-cut bounds; ties go to the lowest cut bitmask.

    Cuts crossed by an unbounded edge have infinite capacity and are skipped.
    Only the minimizing cut is instantiated over F_q.
    """
    summaries: List[CutSummary] = []
    best_cut, best_value, best_sets = None, None, None
    for cut in enumerate_cuts(net, node_cap=node_cap):
        summary = CutSummary(cut=cut.sorted_nodes(net.nodes), mask=cut.mask, x=cut.x, y=cut.y)
        if cut.unbounded:
            summary.skipped = True
            summaries.append(summary)
            continue
        sets = restrict_wiretap_sets(model, cut)
        raw = _term_rank_bound(cut, sets)
        summary.raw_bound, summary.bound = raw, max(raw, 0)
        summaries.append(summary)
        if best_value is None or raw < best_value:
            best_cut, best_value, best_sets = cut, raw, sets

    if best_cut is None:
        raise NetworkValidationError("every cut is crossed by an unbounded edge")
    report = cut_bound(best_cut, best_sets, q=q, seed=seed, retries=retries, node_order=net.nodes)
    if isinstance(model, UniformWiretap):
        annotate_k_b(report, model.z)
    logger.info("best bound %d at cut %s", report.bound, report.cut)
    return BestBound(value=report.bound, raw=report.raw_bound, argmin=report, cuts=summaries)
