import itertools
from fractions import Fraction

import pytest

from mldeg.exact import N, PolyQ, binom
from mldeg.indexsets import enumerate_indexsets
from mldeg.qschur import (
    b_poly,
    b_value,
    d_poly,
    d_value,
    q_onerow,
    q_onerow_at,
    q_strict,
    q_strict_at,
    q_tworow,
)


def test_q_onerow_small():
    assert q_onerow(0) == 1
    assert q_onerow(1) == N
    assert q_onerow(2) == N * N * Fraction(1, 2)
    assert q_onerow(3) == N ** 3 * Fraction(1, 6) + N * Fraction(1, 12)
    assert q_onerow(2, order=5) == q_onerow(2)
    with pytest.raises(ValueError):
        q_onerow(6, order=5)


def _series_mul(a, b, order):
    out = [Fraction(0)] * (order + 1)
    for i, x in enumerate(a):
        if i > order:
            break
        for j, y in enumerate(b):
            if i + j > order:
                break
            out[i + j] += x * y
    return out


def test_q_onerow_against_series_oracle():
    # literal expansion of ((1 + t/2)/(1 - t/2))^n with Fraction series
    order = 8
    half_geo = [Fraction(1, 2 ** k) for k in range(order + 1)]  # 1/(1 - t/2)
    numer = [Fraction(1), Fraction(1, 2)] + [Fraction(0)] * (order - 1)
    base = _series_mul(numer, half_geo, order)
    for n in range(7):
        power = [Fraction(1)] + [Fraction(0)] * order
        for _ in range(n):
            power = _series_mul(power, base, order)
        for a in range(order + 1):
            assert q_onerow(a)(n) == power[a], (a, n)
            assert q_onerow_at(a, n) == power[a]


def test_q_tworow():
    assert q_tworow(1, 0) == N
    expected = q_onerow(2) * q_onerow(1) - 2 * q_onerow(3)
    assert q_tworow(2, 1) == expected
    assert q_tworow(2, 1) == PolyQ.binomial(3, shift=1)  # (n^3 - n)/6
    with pytest.raises(ValueError):
        q_tworow(1, 1)
    with pytest.raises(ValueError):
        q_tworow(0, 1)


def test_q_strict():
    assert q_strict(()) == 1
    assert q_strict((1,)) == N
    assert q_strict((2, 1)) == q_tworow(2, 1)
    assert q_strict_at((3, 2, 1), 3) == 1
    with pytest.raises(AssertionError):
        q_strict((1, 2))
    with pytest.raises(AssertionError):
        q_strict((2, 0))


def test_q_strict_poly_vs_point():
    shapes = [(), (1,), (3,), (2, 1), (4, 1), (3, 2), (4, 3, 1), (5, 2)]
    for parts in shapes:
        poly = q_strict(parts)
        for n in range(9):
            assert poly(n) == q_strict_at(parts, n), (parts, n)


def test_b_poly():
    assert b_poly(()) == 1
    assert b_poly((0,)) == N
    assert b_poly((1,)) == N * N * Fraction(1, 2)
    assert b_poly((0, 1)) == PolyQ.binomial(3, shift=1)
    for size in range(4):
        for total in range(9):
            for I in enumerate_indexsets(size, total):
                p = b_poly(I)
                assert p.degree == sum(I) + len(I), I
                for n in range(21):
                    assert p(n) >= 0, (I, n)
                for n in range(6):
                    assert b_value(I, n) == p(n)


def test_d_poly():
    assert d_poly(()) == 1
    assert d_poly((0,)) == 1
    assert d_poly((1,)) == N * Fraction(1, 2)
    assert d_poly((0, 1)) == N * Fraction(1, 2)


def test_d_value_parity():
    assert d_value((0,), 2) == 0
    assert d_value((0,), 3) == 1
    assert d_value((0, 5), 4) == Fraction(45, 8)
    assert d_value((0, 5), 3) == 0
    for n in range(10):
        assert d_value((1,), n) == Fraction(n, 2)
        # no member 0: point value equals the polynomial at every n
        assert d_value((1, 3), n) == d_poly((1, 3))(n)


def _shifted_tableau_count(shape, n):
    """Marked shifted tableaux: weak rows/columns, primed strict in rows,
    unprimed strict in columns; entries use codes 2k-1 (primed), 2k."""
    cells = []
    for i, length in enumerate(shape):
        for c in range(i, i + length):
            cells.append((i, c))
    index = {cell: k for k, cell in enumerate(cells)}
    values = list(range(1, 2 * n + 1))
    count = 0
    assignment = [0] * len(cells)

    def ok(k, v):
        i, c = cells[k]
        left = index.get((i, c - 1))
        if left is not None:
            lv = assignment[left]
            if v < lv:
                return False
            if v == lv and v % 2 == 1:
                return False
        top = index.get((i - 1, c))
        if top is not None:
            tv = assignment[top]
            if v < tv:
                return False
            if v == tv and v % 2 == 0:
                return False
        return True

    def rec(k):
        nonlocal count
        if k == len(cells):
            count += 1
            return
        for v in values:
            if ok(k, v):
                assignment[k] = v
                rec(k + 1)
        assignment[k] = 0

    rec(0)
    return count


def test_q_strict_against_tableau_oracle():
    shapes = []
    for r in range(1, 4):
        for parts in itertools.combinations(range(1, 7), r):
            shape = tuple(sorted(parts, reverse=True))
            if sum(shape) <= 6:
                shapes.append(shape)
    assert (2, 1) in shapes and (3, 2, 1) in shapes
    for shape in shapes:
        weight = sum(shape)
        for n in range(6):
            count = _shifted_tableau_count(shape, n)
            assert q_strict_at(shape, n) == Fraction(count, 2 ** weight), (shape, n)


def test_q_onerow_binomial_identity():
    # one-row count identity at n = 1: the single variable 1/2 gives 2^(1-a)...
    # Q_a(1/2) = coefficient of t^a in (1+t/2)/(1-t/2) = 2/2^a for a >= 1
    for a in range(1, 8):
        assert q_onerow(a)(1) == Fraction(2, 2 ** a)
    assert q_onerow(0)(1) == 1
    # and the degree matches the index
    for a in range(8):
        assert q_onerow(a).degree == a
    assert binom(3, 2) == 3
