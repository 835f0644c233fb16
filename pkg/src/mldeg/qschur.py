"""Half-argument specializations of Schur Q- and P-functions.

Setting every variable to 1/2 turns Q_lambda(x_1..x_n) into a
polynomial in n.  One-row values come from the coefficient recurrence
of ((1+t/2)/(1-t/2))^n, two-row values from the classical reduction,
and general strict shapes from the Pfaffian expansion over pairs of
parts.  Both exact polynomials in n and fast point values at integer n
are provided; the point route is what the degree sweeps hit.
"""

from __future__ import annotations

from fractions import Fraction

from .exact import N, PolyQ
from .indexsets import check_indexset

_onerow_poly = {}
_onerow_val = {}
_qpf_poly = {}
_qpf_val = {}


def q_onerow(a, order=None):
    """Coefficient of t^a in ((1+t/2)/(1-t/2))^n as a PolyQ in n.

    The generating function is exp(n*L) with L = log((1+t/2)/(1-t/2))
    = sum over odd j of t^j/(j*2^(j-1)); differentiating gives the
    recurrence a*F_a = n * sum over odd j <= a of F_(a-j)/2^(j-1).
    """
    assert a >= 0
    if order is not None and a > order:
        raise ValueError(f"q_onerow: index {a} above truncation order {order}")
    if a in _onerow_poly:
        return _onerow_poly[a]
    if a == 0:
        result = PolyQ((1,))
    else:
        acc = PolyQ()
        for j in range(1, a + 1, 2):
            acc = acc + q_onerow(a - j) * Fraction(1, 1 << (j - 1))
        result = N * acc * Fraction(1, a)
    _onerow_poly[a] = result
    return result


def q_onerow_at(a, n):
    """Value of q_onerow(a) at integer n, by the same recurrence."""
    assert a >= 0
    key = (a, n)
    if key in _onerow_val:
        return _onerow_val[key]
    if a == 0:
        result = Fraction(1)
    else:
        acc = Fraction(0)
        for j in range(1, a + 1, 2):
            acc += q_onerow_at(a - j, n) / (1 << (j - 1))
        result = n * acc / a
    _onerow_val[key] = result
    return result


def q_tworow(a, b):
    """Two-row specialization via the classical reduction to one-row."""
    if not a > b >= 0:
        raise ValueError(f"q_tworow: need a > b >= 0, got ({a}, {b})")
    if b == 0:
        return q_onerow(a)
    acc = q_onerow(a) * q_onerow(b)
    for k in range(1, b + 1):
        term = q_onerow(a + k) * q_onerow(b - k)
        acc = acc - 2 * term if k % 2 else acc + 2 * term
    return acc


def _tworow_at(a, b, n):
    if b == 0:
        return q_onerow_at(a, n)
    acc = q_onerow_at(a, n) * q_onerow_at(b, n)
    for k in range(1, b + 1):
        term = q_onerow_at(a + k, n) * q_onerow_at(b - k, n)
        acc = acc - 2 * term if k % 2 else acc + 2 * term
    return acc


def _check_strict(parts):
    parts = tuple(parts)
    for k, p in enumerate(parts):
        assert p > 0, f"strict partition with nonpositive part: {parts}"
        assert k == 0 or parts[k - 1] > p, f"parts not strictly decreasing: {parts}"
    return parts


def _pad(parts):
    return parts if len(parts) % 2 == 0 else parts + (0,)


def _qpf(parts):
    """Pfaffian expansion along the first row, exact polynomials."""
    if parts in _qpf_poly:
        return _qpf_poly[parts]
    if not parts:
        return PolyQ((1,))
    first = parts[0]
    acc = PolyQ()
    for j in range(1, len(parts)):
        rest = parts[1:j] + parts[j + 1:]
        second = parts[j]
        term = (q_onerow(first) if second == 0 else q_tworow(first, second)) * _qpf(rest)
        acc = acc - term if j % 2 == 0 else acc + term
    _qpf_poly[parts] = acc
    return acc


def _qpf_at(parts, n):
    """Pfaffian expansion with scalar values; the sweep workhorse.

    Memoized globally on the part tuple so sub-Pfaffians are shared
    across all index sets of a sweep.
    """
    key = (parts, n)
    if key in _qpf_val:
        return _qpf_val[key]
    if not parts:
        return Fraction(1)
    first = parts[0]
    acc = Fraction(0)
    for j in range(1, len(parts)):
        rest = parts[1:j] + parts[j + 1:]
        term = _tworow_at(first, parts[j], n) * _qpf_at(rest, n)
        acc = acc - term if j % 2 == 0 else acc + term
    _qpf_val[key] = acc
    return acc


def q_strict(parts):
    """Q specialization of a strict partition as a PolyQ in n."""
    parts = _check_strict(parts)
    return _qpf(_pad(parts))


def q_strict_at(parts, n):
    """Value of q_strict(parts) at integer n."""
    parts = _check_strict(parts)
    return _qpf_at(_pad(parts), n)


def b_poly(I):
    """Shift every element of I up by one and specialize; degree ΣI + #I."""
    I = check_indexset(I)
    return q_strict(tuple(i + 1 for i in reversed(I)))


def b_value(I, n):
    I = check_indexset(I)
    return q_strict_at(tuple(i + 1 for i in reversed(I)), n)


def _nonzero_parts(I):
    return tuple(i for i in reversed(I) if i > 0)


def d_poly(I):
    """P specialization: Q of the nonzero elements over 2 per nonzero part.

    A member 0 contributes no part and no factor of 2.
    """
    I = check_indexset(I)
    parts = _nonzero_parts(I)
    return q_strict(parts) * Fraction(1, 1 << len(parts))


def d_value(I, n):
    """Point value of the set-indexed P specialization at integer n.

    When 0 is a member, the value is the d_poly evaluation only for
    n = #I mod 2 and vanishes for the opposite parity.  (The skew NRS
    sum never sees the vanishing branch: it evaluates at even argument
    with even-size sets.)
    """
    I = check_indexset(I)
    if I and I[0] == 0 and (n - len(I)) % 2:
        return Fraction(0)
    parts = _nonzero_parts(I)
    return q_strict_at(parts, n) / (1 << len(parts))
