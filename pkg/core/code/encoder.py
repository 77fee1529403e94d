"""
Scalar linear code on the upper-bounding network.

Inputs are (m_1..m_Rs, K_S^1..K_S^kf, K_D^1..K_D^y) and outputs are the
cut signals (F_1..F_x, B_1..B_y), related by

    E = [[G, C_f],
         [0, C_b]]

where G is a uniform x-by-x matrix and [C_f; C_b] is the rank-maximized
stacked pattern of the cut. A wiretap set learns nothing about the message
when the rows of E it sees, with the message columns removed, have full
row rank.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np
from pydantic import BaseModel, Field as PydanticField

from core.bound import CutBoundReport
from core.errors import DimensionMismatch, InputError, NothingToAchieve, NotACutEdge, RetriesExhausted
from core.field import Field, Matrix, mat_inverse, mat_rank, row_space_intersection_trivial
from core.rankmax import DEFAULT_RETRIES, RankMaxMatrix, SeedLike, as_seed_sequence


logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class LinearCode:
    q: int
    R_s: int
    k_f: int
    E: Matrix
    forward: Tuple[str, ...]
    backward: Tuple[str, ...]

    def __post_init__(self):
        n = len(self.forward) + len(self.backward)
        if self.E.shape != (n, n):
            raise DimensionMismatch(f"E is {self.E.rows}x{self.E.cols}, expected {n}x{n} for the cut edges")
        if self.R_s < 0 or self.k_f < 0 or self.R_s + self.k_f != self.x:
            raise InputError(f"R_s={self.R_s} and k_f={self.k_f} must be non-negative and sum to x={self.x}")
        if self.E.p != self.q:
            raise DimensionMismatch(f"E lives in F_{self.E.p}, code declares q={self.q}")

    @property
    def x(self) -> int:
        return len(self.forward)

    @property
    def y(self) -> int:
        return len(self.backward)

    @property
    def n(self) -> int:
        return self.x + self.y

    @property
    def input_layout(self) -> List[str]:
        return (
            [f"m{i + 1}" for i in range(self.R_s)]
            + [f"K_S{i + 1}" for i in range(self.k_f)]
            + [f"K_D{j + 1}" for j in range(self.y)]
        )

    @property
    def output_layout(self) -> List[str]:
        return list(self.forward) + list(self.backward)

    @property
    def e_r(self) -> Matrix:
        """E without its message columns."""
        return self.E.take_cols(range(self.R_s, self.n))

    @property
    def e_message(self) -> Matrix:
        return Matrix(np.eye(self.R_s, self.n, dtype=np.int64), self.q)

    def rows_of(self, wiretap: Sequence[str]) -> List[int]:
        index = {edge_id: i for i, edge_id in enumerate(self.output_layout)}
        missing = [edge_id for edge_id in wiretap if edge_id not in index]
        if missing:
            raise NotACutEdge(f"edges {missing} are not outputs of the code")
        return [index[edge_id] for edge_id in wiretap]

    def encode(self, message: Sequence[int], source_keys: Sequence[int], sink_keys: Sequence[int]) -> List[int]:
        inputs = list(message) + list(source_keys) + list(sink_keys)
        if len(inputs) != self.n:
            raise DimensionMismatch(f"expected {self.n} input symbols, got {len(inputs)}")
        column = Matrix.from_rows([[value] for value in inputs], self.q, cols=1)
        return [row[0] for row in (self.E @ column).tolist()]


@dataclass(frozen=True)
class Decoded:
    message: List[int]
    source_keys: List[int]
    sink_keys: List[int]


class SetVerdict(BaseModel):
    edges: List[str]
    full_row_rank: bool
    independent: bool
    exhaustive: Optional[bool] = None


class CodeVerdict(BaseModel):
    decodable: bool
    secure_algebraic: bool
    secure_exhaustive: Optional[bool] = None
    sets: List[SetVerdict] = PydanticField(default_factory=list)
    failure_probability_bound: str

    @property
    def failure_fraction(self) -> Fraction:
        return Fraction(self.failure_probability_bound)

    @property
    def failing_sets(self) -> List[List[str]]:
        return [record.edges for record in self.sets if not record.independent or record.exhaustive is False]


class CodeDocument(BaseModel):
    q: int
    R_s: int
    k_f: int
    x: int
    y: int
    input_layout: List[str]
    output_layout: List[str]
    E: List[List[int]]
    verdict: Optional[CodeVerdict] = None
    cut: List[str] = PydanticField(default_factory=list)
    wiretap_sets: List[List[str]] = PydanticField(default_factory=list)


def forward_key_count(report: CutBoundReport) -> int:
    """k_f = max over wiretap sets of |A| - rank(U_A); zero when there are no sets."""
    return -report.min_slack


def failure_probability_bound(n_sets: int, k_f: int, n: int, q: int) -> Fraction:
    return Fraction(n_sets * k_f * n, q)


def assemble_encoder(g: Matrix, cbar: Matrix) -> Matrix:
    x = g.rows
    y = cbar.cols
    if g.shape != (x, x) or cbar.rows != x + y:
        raise DimensionMismatch(f"G is {g.rows}x{g.cols} and C is {cbar.rows}x{cbar.cols}")
    lower = np.zeros((y, x), dtype=g.data.dtype)
    left = np.concatenate([g.data, lower], axis=0)
    return Matrix(np.concatenate([left, cbar.data], axis=1), g.p)


def full_row_rank(code: LinearCode, rows: Sequence[int]) -> bool:
    return mat_rank(code.e_r.take_rows(rows)) == len(rows)


def is_decodable(code: LinearCode) -> bool:
    return mat_rank(code.E) == code.n


def verify_code(code: LinearCode, sets: Sequence[Sequence[str]]) -> CodeVerdict:
    """Algebraic verdict: decodability plus, per set, full row rank and trivial row-space intersection."""
    records = []
    for wiretap in sets:
        rows = code.rows_of(wiretap)
        observed = code.E.take_rows(rows)
        records.append(
            SetVerdict(
                edges=list(wiretap),
                full_row_rank=full_row_rank(code, rows),
                independent=row_space_intersection_trivial(code.e_message, observed),
            )
        )
    return CodeVerdict(
        decodable=is_decodable(code),
        secure_algebraic=all(record.independent for record in records),
        sets=records,
        failure_probability_bound=str(failure_probability_bound(len(sets), code.k_f, code.n, code.q)),
    )


def _wiretap_edges(report: CutBoundReport) -> List[List[str]]:
    return [list(record.edges) for record in report.records]


def construct_code(
    report: CutBoundReport,
    rankmax: Optional[RankMaxMatrix] = None,
    q: Optional[int] = None,
    seed: SeedLike = 0,
    retries: int = DEFAULT_RETRIES,
) -> Tuple[LinearCode, CodeVerdict]:
    """Draw G until E is invertible and every wiretap view of E^r has full row rank."""
    rankmax = rankmax if rankmax is not None else report.rankmax
    if rankmax is None:
        raise InputError(f"cut {report.cut} carries no rank-maximized matrix; run cut_bound first")
    if q is not None and q != rankmax.q:
        raise InputError(f"q={q} differs from the field F_{rankmax.q} of the rank-maximized matrix")
    q = rankmax.q

    k_f = forward_key_count(report)
    r_s = report.x - k_f
    if r_s <= 0:
        raise NothingToAchieve(
            f"cut {report.cut} leaves R_s = x - k_f = {report.x} - {k_f} = {r_s} message symbols; no code to construct"
        )

    sets = _wiretap_edges(report)
    n = report.x + report.y
    threshold = len(sets) * k_f * n
    if q <= threshold:
        logger.warning("q=%d is not above |A|k_f(x+y)=%d; the code may need many redraws", q, threshold)

    field = Field(q)
    singular = 0
    misses: Dict[int, int] = {}
    for attempt, child in enumerate(as_seed_sequence(seed).spawn(retries), start=1):
        g = field.random(np.random.default_rng(child), report.x, report.x)
        code = LinearCode(q, r_s, k_f, assemble_encoder(g, rankmax.matrix), tuple(report.forward),
                          tuple(report.backward))
        ok = True
        if not is_decodable(code):
            singular += 1
            ok = False
        for k, record in enumerate(report.records):
            if not full_row_rank(code, record.rows):
                misses[k] = misses.get(k, 0) + 1
                ok = False
        if ok:
            logger.info("code for cut %s: R_s=%d k_f=%d over F_%d after %d draws", report.cut, r_s, k_f, q, attempt)
            return code, verify_code(code, sets)

    diagnostics = [{"wiretap": sets[k], "misses": count} for k, count in sorted(misses.items())]
    if singular:
        diagnostics.append({"wiretap": None, "singular": singular})
    raise RetriesExhausted(
        f"no secure decodable code over F_{q} after {retries} draws of G; "
        f"q is likely below the |A|k_f(x+y)={threshold} threshold",
        diagnostics=diagnostics,
    )


def decode(code: LinearCode, received: Sequence[int]) -> Decoded:
    """Recover (m, K_S, K_D) from the cut signals (F, B)."""
    if len(received) != code.n:
        raise DimensionMismatch(f"expected {code.n} received symbols, got {len(received)}")
    column = Matrix.from_rows([[value] for value in received], code.q, cols=1)
    values = [row[0] for row in (mat_inverse(code.E) @ column).tolist()]
    return Decoded(
        message=values[:code.R_s],
        source_keys=values[code.R_s:code.x],
        sink_keys=values[code.x:],
    )


def code_to_document(
    code: LinearCode,
    verdict: Optional[CodeVerdict] = None,
    sets: Optional[Sequence[Sequence[str]]] = None,
    cut: Optional[Sequence[str]] = None,
) -> CodeDocument:
    return CodeDocument(
        q=code.q,
        R_s=code.R_s,
        k_f=code.k_f,
        x=code.x,
        y=code.y,
        input_layout=code.input_layout,
        output_layout=code.output_layout,
        E=code.E.tolist(),
        verdict=verdict,
        cut=list(cut or []),
        wiretap_sets=[list(wiretap) for wiretap in (sets or [])],
    )


def code_from_document(doc: CodeDocument) -> LinearCode:
    if len(doc.output_layout) != doc.x + doc.y:
        raise InputError(f"output layout has {len(doc.output_layout)} edges, expected x+y={doc.x + doc.y}")
    return LinearCode(
        q=doc.q,
        R_s=doc.R_s,
        k_f=doc.k_f,
        E=Field(doc.q).matrix(doc.E, cols=doc.x + doc.y),
        forward=tuple(doc.output_layout[:doc.x]),
        backward=tuple(doc.output_layout[doc.x:]),
    )
