#!/usr/bin/env python3
"""Regression tests for the block-labeling partition certificates."""
import os
import sys

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.dirname(os.path.abspath(__file__)))))

import numpy as np
import pytest

from core.bound import (
    check_key_entropy_bound,
    exhaustive_partition_minimum,
    label_partition,
    stacked_pattern,
    verify_certificate,
)
from core.errors import MaximalityViolated
from core.network import enumerate_cuts, load_fixture, restrict_wiretap_sets
from core.rankmax import PatternMatrix, term_rank


FIXTURES = ("feedback", "deadend", "twonode", "line4", "keyed2")


def _tiles(cert, shape):
    cover = np.zeros(shape, dtype=int)
    for label in cert.labels:
        cover[label.rows[0]:label.rows[1], label.cols[0]:label.cols[1]] += 1
    return (cover == 1).all()


def _permuted(cert, pattern):
    return pattern.bits[cert.row_order, :][:, cert.col_order]


def _check_certificate(pattern, forward, q=101):
    r = term_rank(pattern)
    cert = label_partition(pattern, r, forward)
    assert cert.verified
    assert _tiles(cert, pattern.bits.shape)
    work = _permuted(cert, pattern)
    for label in cert.labels:
        if label.label in ("zero", "zero*"):
            assert not work[label.rows[0]:label.rows[1], label.cols[0]:label.cols[1]].any()
    assert len(cert.signals) + len(cert.a2) == r
    assert sorted(cert.a1 + cert.a2) == sorted(pattern.labels)
    assert check_key_entropy_bound(cert, pattern, q)
    return cert


def _random_wiretap_pattern(rng):
    """Rows of a stacked [C_bf; I_y] pattern: random forward rows plus distinct identity rows."""
    y = int(rng.integers(1, 6))
    n_backward = int(rng.integers(0, min(y, 5) + 1))
    n_forward = int(rng.integers(0 if n_backward else 1, 5 - n_backward + 1))
    rows, labels = [], []
    for i in range(n_forward):
        rows.append((rng.random(y) < 0.5).astype(int).tolist())
        labels.append(f"f{i}")
    for j in sorted(rng.choice(y, size=n_backward, replace=False).tolist()):
        rows.append([1 if c == j else 0 for c in range(y)])
        labels.append(f"b{j}")
    forward = {label for label in labels if label.startswith("f")}
    return PatternMatrix.from_rows(rows, labels=labels, cols=y), forward


def test_identity_ends_with_every_row_in_a2():
    pattern = PatternMatrix.from_rows([[1, 0], [0, 1]], labels=["b1", "b2"])
    cert = label_partition(pattern, 2)
    assert cert.t == 2
    assert sorted(cert.a2) == ["b1", "b2"]
    assert cert.signals == []
    assert cert.verified


def test_zero_lower_left_returns_full_window():
    pattern = PatternMatrix.from_rows([[1, 1], [0, 0]], labels=["f1", "f2"])
    cert = label_partition(pattern, 1, forward={"f1", "f2"})
    assert cert.t == 1
    assert cert.a2 == ["f1"]
    assert cert.signals == []
    assert check_key_entropy_bound(cert, pattern, 5)


def test_nonzero_lower_left_returns_empty_a2():
    pattern = PatternMatrix.from_rows([[1], [1]], labels=["f1", "b1"])
    cert = label_partition(pattern, 1, forward={"f1"})
    assert cert.t == 0
    assert cert.a2 == []
    assert cert.signals == [0]
    assert [label.label for label in cert.labels].count("non-zero") == 1
    assert cert.verified


def test_mixed_lower_left_recurses():
    pattern = PatternMatrix.from_rows([[1, 0], [0, 1], [1, 0]], labels=["f1", "b2", "b1"])
    cert = _check_certificate(pattern, {"f1"})
    assert cert.t == 1
    assert cert.a2 == ["b2"]
    assert cert.signals == [0]
    kinds = {label.label for label in cert.labels}
    assert {"non-zero", "zero", "counter-diagonal", "arbitrary"} <= kinds


def test_zero_rank_gives_trivial_certificate():
    pattern = PatternMatrix.from_rows([[0, 0], [0, 0]], labels=["f1", "f2"])
    cert = label_partition(pattern, 0, forward={"f1", "f2"})
    assert cert.t == 0 and cert.a2 == [] and cert.signals == []
    assert cert.verified
    assert check_key_entropy_bound(cert, pattern, 3)


def test_wrong_rank_is_rejected():
    pattern = PatternMatrix.from_rows([[1, 0], [0, 1]], labels=["b1", "b2"])
    with pytest.raises(MaximalityViolated):
        label_partition(pattern, 1)


def test_tampered_certificate_fails_verification():
    pattern = PatternMatrix.from_rows([[1, 0], [0, 1], [1, 0]], labels=["f1", "b2", "b1"])
    cert = label_partition(pattern, 2, forward={"f1"})
    tampered = cert.model_copy(update={"t": cert.t + 1})
    assert not verify_certificate(tampered, pattern)
    tampered = cert.model_copy(update={"labels": cert.labels[:-1]})
    assert not verify_certificate(tampered, pattern)


def test_fixture_wiretap_sets_certify():
    for name in FIXTURES:
        net, model = load_fixture(name)
        for cut in enumerate_cuts(net):
            pattern = stacked_pattern(cut)
            forward = {edge.id for edge in cut.forward}
            for wiretap in restrict_wiretap_sets(model, cut):
                rows = [cut.row_of(edge_id) for edge_id in wiretap]
                _check_certificate(pattern.submatrix(rows), forward)


def test_random_wiretap_patterns_certify():
    rng = np.random.default_rng(314)
    for _ in range(200):
        pattern, forward = _random_wiretap_pattern(rng)
        cert = _check_certificate(pattern, forward)
        assert exhaustive_partition_minimum(pattern) == cert.rank


def test_arbitrary_patterns_certify():
    rng = np.random.default_rng(2718)
    for _ in range(200):
        a, b = int(rng.integers(1, 6)), int(rng.integers(1, 6))
        pattern = PatternMatrix.from_rows((rng.random((a, b)) < 0.4).astype(int).tolist())
        r = term_rank(pattern)
        cert = label_partition(pattern, r)
        assert cert.verified
        assert _tiles(cert, (a, b))
        assert exhaustive_partition_minimum(pattern) == r


if __name__ == "__main__":
    failed = 0
    for name, fn in list(globals().items()):
        if name.startswith("test_") and callable(fn):
            try:
                fn()
            except Exception as exc:  # noqa: BLE001
                failed += 1
                print(f"  [FAIL] {name}: {exc!r}")
            else:
                print(f"  [PASS] {name}")
    sys.exit(1 if failed else 0)
