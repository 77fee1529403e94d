from .cutset import (
    annotate_k_b,
    best_bound,
    cut_bound,
    default_field_size,
    edge_signals,
    forward_keys_needed,
    signals_of,
    stacked_pattern,
    uniform_bound,
)
from .partition import (
    check_key_entropy_bound,
    exhaustive_partition_minimum,
    label_partition,
    signal_sets,
    verify_certificate,
)
from .reports import BestBound, BlockLabel, CutBoundReport, CutSummary, PartitionCertificate, WiretapRecord

__all__ = [
    "BestBound",
    "BlockLabel",
    "CutBoundReport",
    "CutSummary",
    "PartitionCertificate",
    "WiretapRecord",
    "annotate_k_b",
    "best_bound",
    "check_key_entropy_bound",
    "cut_bound",
    "default_field_size",
    "edge_signals",
    "exhaustive_partition_minimum",
    "forward_keys_needed",
    "label_partition",
    "signal_sets",
    "signals_of",
    "stacked_pattern",
    "uniform_bound",
    "verify_certificate",
]
