#!/usr/bin/env python3
"""Regression tests for prime-field arithmetic and matrix rank/inverse."""
import itertools
import os
import sys

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.dirname(os.path.abspath(__file__)))))

import numpy as np
import pytest

from core.errors import DimensionMismatch, NotPrime, NotSquare, SingularMatrix
from core.field import (
    Field,
    field_new,
    mat_inverse,
    mat_mul,
    mat_rank,
    rank_by_enumeration,
    row_space_intersection_trivial,
)


def test_field_new_accepts_primes_and_rejects_composites():
    assert field_new(2).p == 2
    assert field_new(101).p == 101
    with pytest.raises(NotPrime):
        field_new(4)
    with pytest.raises(NotPrime):
        field_new(1)


def test_field_elem_arithmetic():
    f = field_new(7)
    a, b = f.elem(3), f.elem(5)
    assert (a + b).value == 1
    assert (a - b).value == 5
    assert (a * b).value == 1
    assert a.inverse().value == 5
    assert (a / b).value == (3 * 3) % 7
    assert (-a).value == 4
    with pytest.raises(ZeroDivisionError):
        f.elem(0).inverse()


def test_rank_examples():
    f5 = field_new(5)
    assert mat_rank(f5.identity(3)) == 3
    assert mat_rank(f5.zeros(2, 4)) == 0
    assert mat_rank(f5.matrix([[1, 2], [2, 4]])) == 1
    assert mat_rank(f5.zeros(0, 3)) == 0
    assert mat_rank(f5.zeros(3, 0)) == 0


def test_inverse_examples():
    f7 = field_new(7)
    assert mat_inverse(f7.identity(3)) == f7.identity(3)
    with pytest.raises(SingularMatrix):
        mat_inverse(f7.zeros(2, 2))
    with pytest.raises(NotSquare):
        mat_inverse(f7.zeros(2, 3))

    f2 = field_new(2)
    m = f2.matrix([[1, 1], [0, 1]])
    assert mat_inverse(m) == m
    assert mat_mul(m, mat_inverse(m)) == f2.identity(2)


def test_inverse_succeeds_iff_full_rank():
    f = field_new(3)
    for values in itertools.product(range(3), repeat=4):
        m = f.matrix([values[:2], values[2:]])
        try:
            inv = mat_inverse(m)
        except SingularMatrix:
            assert mat_rank(m) < 2
        else:
            assert mat_rank(m) == 2
            assert m @ inv == f.identity(2)


def test_row_space_intersection():
    f3 = field_new(3)
    assert row_space_intersection_trivial(f3.matrix([[1, 0]]), f3.matrix([[0, 1]]))
    assert not row_space_intersection_trivial(f3.matrix([[1, 1]]), f3.matrix([[2, 2]]))
    assert row_space_intersection_trivial(f3.zeros(0, 2), f3.matrix([[1, 2]]))
    with pytest.raises(DimensionMismatch):
        row_space_intersection_trivial(f3.matrix([[1, 0]]), f3.matrix([[1, 0, 0]]))


def test_rank_matches_enumeration_on_small_matrices():
    for p in (2, 3):
        f = field_new(p)
        rng = np.random.default_rng(p)
        for _ in range(60):
            rows, cols = rng.integers(1, 4, size=2)
            m = f.random(rng, int(rows), int(cols))
            assert mat_rank(m) == rank_by_enumeration(m), m


def test_rank_is_permutation_invariant_and_subadditive():
    f = field_new(11)
    rng = np.random.default_rng(7)
    for _ in range(30):
        a = f.random(rng, 3, 4)
        b = f.random(rng, 2, 4)
        perm_rows = rng.permutation(3)
        perm_cols = rng.permutation(4)
        assert mat_rank(a.take_rows(perm_rows).take_cols(perm_cols)) == mat_rank(a)
        stacked = mat_rank(a.stack(b))
        assert stacked <= mat_rank(a) + mat_rank(b)
        assert (stacked == mat_rank(a) + mat_rank(b)) == row_space_intersection_trivial(a, b)


def test_large_modulus_uses_object_arithmetic():
    p = 4294967311  # first prime above 2^32
    f = Field(p)
    m = f.matrix([[p - 1, p - 2], [p - 2, p - 4]])
    assert mat_rank(m) == 1
    inv = mat_inverse(f.matrix([[p - 1, 1], [0, p - 1]]))
    assert inv.tolist() == [[p - 1, p - 1], [0, p - 1]]


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
