"""
Secrecy checks that do not trust linear algebra.

`exhaustive_secrecy_check` enumerates every message and key tuple and
compares the distribution of a wiretap set's observations across messages.
`empirical_failure_rate` redraws G many times and counts the draws the
construction would have rejected.
"""

import logging
import math
from fractions import Fraction
from typing import List, Optional, Sequence

import numpy as np
from pydantic import BaseModel

from core.bound import CutBoundReport
from core.errors import InputError, TooLarge
from core.field import Field
from core.rankmax import DEFAULT_ENUM_CAP, RankMaxMatrix, SeedLike, as_seed_sequence

from .encoder import (
    LinearCode,
    full_row_rank,
    assemble_encoder,
    failure_probability_bound,
    forward_key_count,
    is_decodable,
)


logger = logging.getLogger(__name__)


class FailureRate(BaseModel):
    q: int
    trials: int
    security_failures: int
    decode_failures: int
    failures: int
    frequency: float
    bound: str
    bound_value: float
    envelope: float

    @property
    def security_frequency(self) -> float:
        return self.security_failures / self.trials


def binomial_envelope(bound: Fraction, trials: int) -> float:
    """The bound plus three binomial standard deviations at p = min(bound, 1)."""
    capped = min(float(bound), 1.0)
    return float(bound) + 3 * math.sqrt(capped * (1 - capped) / trials)


def _all_vectors(q: int, k: int) -> np.ndarray:
    """Every vector of F_q^k as a column of a k x q^k array."""
    if k == 0:
        return np.zeros((0, 1), dtype=np.int64)
    return np.array(np.unravel_index(np.arange(q ** k), (q,) * k), dtype=np.int64)


def _histogram(observations: np.ndarray, q: int):
    weights = q ** np.arange(observations.shape[0], dtype=np.int64)
    codes = weights @ observations if observations.shape[0] else np.zeros(observations.shape[1], dtype=np.int64)
    values, counts = np.unique(codes, return_counts=True)
    return values, counts


def exhaustive_secrecy_check(
    code: LinearCode,
    sets: Sequence[Sequence[str]],
    enum_cap: int = DEFAULT_ENUM_CAP,
) -> List[bool]:
    """Per set: is X(A) exactly independent of the message under uniform inputs?"""
    q = code.q
    states = q ** code.n
    if states > enum_cap:
        raise TooLarge(f"q^(x+y) = {q}^{code.n} = {states} input tuples exceeds the cap {enum_cap}")
    if code.R_s == 0:
        return [True] * len(sets)

    data = np.array(code.E.data, dtype=np.int64)
    messages = _all_vectors(q, code.R_s)
    keys = _all_vectors(q, code.n - code.R_s)
    verdicts = []
    for wiretap in sets:
        rows = code.rows_of(wiretap)
        from_keys = (data[rows, code.R_s:] @ keys) % q
        from_message = (data[rows, :code.R_s] @ messages) % q
        reference = None
        independent = True
        for m in range(messages.shape[1]):
            values, counts = _histogram((from_keys + from_message[:, m:m + 1]) % q, q)
            if reference is None:
                reference = (values, counts)
            elif not (np.array_equal(values, reference[0]) and np.array_equal(counts, reference[1])):
                independent = False
                break
        logger.debug("exhaustive check of %s: %s", list(wiretap), "independent" if independent else "leaks")
        verdicts.append(independent)
    return verdicts


def empirical_failure_rate(
    report: CutBoundReport,
    rankmax: Optional[RankMaxMatrix] = None,
    trials: int = 10 ** 4,
    seed: SeedLike = 0,
) -> FailureRate:
    """Frequency of draws of G that leave E singular or some E^r_A rank deficient."""
    if trials < 1:
        raise InputError(f"trials must be at least 1, got {trials}")
    rankmax = rankmax if rankmax is not None else report.rankmax
    if rankmax is None:
        raise InputError(f"cut {report.cut} carries no rank-maximized matrix; run cut_bound first")
    q = rankmax.q
    k_f = forward_key_count(report)
    field = Field(q)
    n = report.x + report.y
    r_s = report.x - k_f

    security = decoding = failures = 0
    for child in as_seed_sequence(seed).spawn(trials):
        g = field.random(np.random.default_rng(child), report.x, report.x)
        code = LinearCode(q, max(r_s, 0), report.x - max(r_s, 0), assemble_encoder(g, rankmax.matrix),
                          tuple(report.forward), tuple(report.backward))
        insecure = not all(full_row_rank(code, record.rows) for record in report.records)
        singular = not is_decodable(code)
        security += insecure
        decoding += singular
        failures += insecure or singular

    bound = failure_probability_bound(len(report.records), k_f, n, q)
    envelope = binomial_envelope(bound, trials)
    logger.info("F_%d: %d/%d draws failed (bound %s)", q, failures, trials, bound)
    return FailureRate(
        q=q,
        trials=trials,
        security_failures=security,
        decode_failures=decoding,
        failures=failures,
        frequency=failures / trials,
        bound=str(bound),
        bound_value=float(bound),
        envelope=envelope,
    )
