"""
Unit-delay operation of a code on the upper-bounding network.

Backward signals reach the forward edges one slot late, so the source waits
one round: F[1] = 0, then for t >= 2

    F[t] = G (m[t], K_S[t]) + C_f K_D[t-1]
    B[t] = C_b K_D[t]

with fresh sink keys every round. T rounds deliver (T-1) R_s message symbols.
"""

import logging
from fractions import Fraction
from typing import Dict, List, Optional, Sequence

import numpy as np
from pydantic import BaseModel, Field as PydanticField

from core.errors import InputError
from core.field import Matrix, row_space_intersection_trivial
from core.network import Network, canonical_cut
from core.rankmax import SeedLike, as_seed_sequence

from .encoder import LinearCode, decode


logger = logging.getLogger(__name__)


class RoundRecord(BaseModel):
    t: int
    forward: Dict[str, int]
    backward: Dict[str, int]
    message: List[int] = PydanticField(default_factory=list)
    decoded: Optional[bool] = None


class DelayTrace(BaseModel):
    T: int
    q: int
    R_s: int
    rate: str
    rate_value: float
    causal: bool
    decoded: bool
    secure: bool
    insecure_sets: List[List[str]] = PydanticField(default_factory=list)
    rounds: List[RoundRecord] = PydanticField(default_factory=list)

    @property
    def rate_fraction(self) -> Fraction:
        return Fraction(self.rate)


class TimeExpandedEncoder:
    """Maps all T rounds of inputs to all T rounds of cut signals.

    Columns: (m[t], K_S[t]) for t = 2..T, then K_D[t] for t = 1..T.
    Rows: (F[t], B[t]) for t = 1..T.
    """

    def __init__(self, code: LinearCode, T: int):
        self.code = code
        self.T = T
        x, y, n = code.x, code.y, code.n
        data = np.zeros((T * n, (T - 1) * x + T * y), dtype=code.E.data.dtype)
        g = code.E.data[:x, :x]
        c_f = code.E.data[:x, x:]
        c_b = code.E.data[x:, x:]
        for t in range(1, T + 1):
            f_rows = slice(self.row(t), self.row(t) + x)
            b_rows = slice(self.row(t) + x, self.row(t) + n)
            data[b_rows, self.sink_keys(t)] = c_b
            if t >= 2:
                data[f_rows, self.source_inputs(t)] = g
                data[f_rows, self.sink_keys(t - 1)] = c_f
        self.matrix = Matrix(data, code.q)

    @property
    def width(self) -> int:
        return self.matrix.cols

    def row(self, t: int) -> int:
        return (t - 1) * self.code.n

    def source_inputs(self, t: int) -> slice:
        start = (t - 2) * self.code.x
        return slice(start, start + self.code.x)

    def sink_keys(self, t: int) -> slice:
        start = (self.T - 1) * self.code.x + (t - 1) * self.code.y
        return slice(start, start + self.code.y)

    def message_columns(self) -> List[int]:
        return [self.source_inputs(t).start + i for t in range(2, self.T + 1) for i in range(self.code.R_s)]

    def rows_of(self, wiretap: Sequence[str]) -> List[int]:
        local = self.code.rows_of(wiretap)
        return [self.row(t) + i for t in range(1, self.T + 1) for i in local]

    def is_causal(self) -> bool:
        """No forward symbol depends on a sink key generated in the same round or later."""
        x = self.code.x
        data = self.matrix.data
        for t in range(1, self.T + 1):
            forward = data[self.row(t):self.row(t) + x, :]
            for s in range(t, self.T + 1):
                if forward[:, self.sink_keys(s)].any():
                    return False
        return True

    def leaks(self, wiretap: Sequence[str]) -> bool:
        messages = self.message_columns()
        if not messages:
            return False
        selector = np.zeros((len(messages), self.width), dtype=np.int64)
        selector[np.arange(len(messages)), messages] = 1
        observed = self.matrix.take_rows(self.rows_of(wiretap))
        return not row_space_intersection_trivial(Matrix(selector, self.code.q), observed)


def _check_layout(code: LinearCode, gbar: Network) -> None:
    cut = canonical_cut(gbar)
    forward = tuple(edge.id for edge in cut.forward)
    backward = tuple(edge.id for edge in cut.backward)
    if (forward, backward) != (code.forward, code.backward):
        raise InputError(
            f"code outputs {code.output_layout} do not match the cut edges {list(forward + backward)} of the network"
        )


def simulate_with_delay(
    code: LinearCode,
    gbar: Network,
    T: int,
    seed: SeedLike = 0,
    sets: Sequence[Sequence[str]] = (),
) -> DelayTrace:
    if T < 2:
        raise InputError(f"T must be at least 2 (one warm-up round), got {T}")
    _check_layout(code, gbar)
    expanded = TimeExpandedEncoder(code, T)
    rng = np.random.default_rng(as_seed_sequence(seed))
    inputs = rng.integers(0, code.q, size=(expanded.width, 1), dtype=np.int64)
    outputs = [row[0] for row in (expanded.matrix @ Matrix(inputs, code.q)).tolist()]
    inputs = [int(value) for value in inputs[:, 0]]

    x, n = code.x, code.n
    rounds: List[RoundRecord] = []
    for t in range(1, T + 1):
        signals = outputs[expanded.row(t):expanded.row(t) + n]
        record = RoundRecord(
            t=t,
            forward=dict(zip(code.forward, signals[:x])),
            backward=dict(zip(code.backward, signals[x:])),
        )
        if t >= 2:
            sent = inputs[expanded.source_inputs(t)]
            previous_b = outputs[expanded.row(t - 1) + x:expanded.row(t - 1) + n]
            got = decode(code, signals[:x] + previous_b)
            record.message = sent[:code.R_s]
            record.decoded = (
                got.message + got.source_keys == sent
                and got.sink_keys == inputs[expanded.sink_keys(t - 1)]
            )
        rounds.append(record)

    insecure = [list(wiretap) for wiretap in sets if expanded.leaks(wiretap)]
    rate = Fraction((T - 1) * code.R_s, T)
    logger.info("delay simulation over %d rounds: rate %s, %d insecure sets", T, rate, len(insecure))
    return DelayTrace(
        T=T,
        q=code.q,
        R_s=code.R_s,
        rate=str(rate),
        rate_value=float(rate),
        causal=expanded.is_causal(),
        decoded=all(record.decoded for record in rounds[1:]),
        secure=not insecure,
        insecure_sets=insecure,
        rounds=rounds,
    )
