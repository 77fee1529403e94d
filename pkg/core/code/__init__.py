from .delay import DelayTrace, RoundRecord, TimeExpandedEncoder, simulate_with_delay
from .encoder import (
    CodeDocument,
    CodeVerdict,
    Decoded,
    LinearCode,
    SetVerdict,
    assemble_encoder,
    code_from_document,
    code_to_document,
    construct_code,
    decode,
    failure_probability_bound,
    forward_key_count,
    full_row_rank,
    is_decodable,
    verify_code,
)
from .secrecy import FailureRate, binomial_envelope, empirical_failure_rate, exhaustive_secrecy_check

__all__ = [
    "CodeDocument",
    "CodeVerdict",
    "Decoded",
    "DelayTrace",
    "FailureRate",
    "LinearCode",
    "RoundRecord",
    "SetVerdict",
    "TimeExpandedEncoder",
    "assemble_encoder",
    "binomial_envelope",
    "code_from_document",
    "code_to_document",
    "construct_code",
    "decode",
    "empirical_failure_rate",
    "exhaustive_secrecy_check",
    "failure_probability_bound",
    "forward_key_count",
    "full_row_rank",
    "is_decodable",
    "simulate_with_delay",
    "verify_code",
]
