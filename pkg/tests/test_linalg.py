"""Exact linear algebra tests.

Oracle: sympy's rational Matrix (independent implementation).  Random cases
are checked against it; hand cases are frozen from pencil-and-paper row
reduction.
"""
from __future__ import annotations

import random
from fractions import Fraction

import sympy

from tautilt.fields import QQ, PrimeField
from tautilt.linalg import (SpanGF, SpanQQ, kernel, kernel_int_rows, primitive,
                            rank, _kernel_exact)


def test_primitive_hand_cases():
    assert primitive([Fraction(1, 2), Fraction(1, 3)]) == (3, 2)
    assert primitive([-2, -4, 6]) == (1, 2, -3)
    assert primitive([0, 0]) == (0, 0)
    assert primitive([Fraction(0), Fraction(-5, 7)]) == (0, 1)


def test_kernel_hand_case():
    # x + y + z = 0, x - z = 0  ->  span{(1, -2, 1)}
    ker = kernel_int_rows([(1, 1, 1), (1, 0, -1)], 3)
    assert ker == [(1, -2, 1)]


def test_kernel_empty_system():
    assert kernel_int_rows([], 3) == [(1, 0, 0), (0, 1, 0), (0, 0, 1)]


def test_span_rank_and_membership():
    s = SpanQQ(3)
    assert s.add([1, 2, 3])
    assert s.add([0, 1, 1])
    assert not s.add([1, 3, 4])
    assert s.dim == 2
    assert s.contains([2, 5, 7])
    assert not s.contains([0, 0, 1])


def test_span_coords_exact():
    s = SpanQQ(3, track=True)
    s.add([Fraction(1, 2), 0, 1])
    s.add([0, 3, 0])
    c = s.coords([1, 1, 2])
    # 1*(1/2,0,1)... solve: a*(1/2,0,1) + b*(0,3,0) = (1,1,2) -> a=2, b=1/3
    assert c == [Fraction(2), Fraction(1, 3)]
    assert s.coords([1, 0, 0]) is None


def test_span_gf_basic():
    s = SpanGF(3, 5)
    assert s.add([1, 2, 3])
    assert s.add([2, 4, 7])  # reduces to (0,0,1)
    assert s.dim == 2
    assert s.contains([3, 6, 14])
    c_span = SpanGF(2, 3, track=True)
    c_span.add([1, 1])
    c_span.add([0, 2])
    c = c_span.coords([2, 1])
    # 2*(1,1) + b*(0,2) = (2,1) mod 3 -> b = (1-2)/2 = (-1)*2 = 1 mod 3
    assert c == [2, 1]


def _random_matrix(rng, nrows, ncols, scale=9):
    return [[rng.randint(-scale, scale) for _ in range(ncols)]
            for _ in range(nrows)]


def test_kernel_against_sympy_random():
    rng = random.Random(20260823)
    for _ in range(40):
        nrows = rng.randint(0, 6)
        ncols = rng.randint(1, 7)
        rows = _random_matrix(rng, nrows, ncols)
        ker = kernel_int_rows(rows, ncols)
        M = sympy.Matrix(rows) if rows else sympy.zeros(0, ncols)
        null = M.nullspace()
        assert len(ker) == len(null)
        # every returned vector really is in the kernel
        for v in ker:
            for r in rows:
                assert sum(a * b for a, b in zip(r, v)) == 0
        # and they are independent
        if ker:
            assert sympy.Matrix([list(v) for v in ker]).rank() == len(ker)


def test_kernel_fallback_matches_fast_path():
    rng = random.Random(7)
    for _ in range(25):
        nrows = rng.randint(1, 5)
        ncols = rng.randint(1, 6)
        rows = _random_matrix(rng, nrows, ncols, scale=30)
        fast = kernel_int_rows(rows, ncols)
        slow = _kernel_exact(rows, ncols)
        assert fast == slow


def test_rank_against_sympy_random():
    rng = random.Random(99)
    for _ in range(30):
        nrows = rng.randint(0, 6)
        ncols = rng.randint(1, 6)
        rows = _random_matrix(rng, nrows, ncols)
        assert rank(rows, ncols, QQ) == (sympy.Matrix(rows).rank()
                                         if rows else 0)


def test_gf_kernel_dimension():
    F = PrimeField(5)
    rows = [[1, 2, 3], [2, 4, 2]]
    ker = kernel(rows, 3, F)
    # rank 2 mod 5 (second row minus twice the first is (0,0,-4)), nullity 1
    assert len(ker) == 1
    v = ker[0]
    for r in rows:
        assert sum(a * b for a, b in zip(r, v)) % 5 == 0


def test_rational_rows_kernel():
    rows = [[Fraction(1, 2), Fraction(1, 3)]]
    ker = kernel(rows, 2, QQ)
    assert ker == [(2, -3)] or ker == [(-2, 3)]


def test_span_coords_with_rational_generators():
    # generators handed in as raw rationals; coords must refer to the raw ones
    s = SpanQQ(2, track=True)
    s.add([Fraction(2, 3), 0])
    s.add([Fraction(1, 5), Fraction(1, 5)])
    c = s.coords([1, 1])
    assert c is not None
    a, b = c
    assert a * Fraction(2, 3) + b * Fraction(1, 5) == 1
    assert b * Fraction(1, 5) == 1
